//! Exhaustive enumeration of strongly stable ideals.
//!
//! In each degree `d` the monomials are listed in descending lex order, which
//! is a linear extension of the Borel order: every upper cover `x_{j-1} m / x_j`
//! of `m` comes before `m`. A Borel-closed subset of `S_d` is then built by
//! deciding each monomial in turn, and a monomial may be taken only when all
//! of its upper covers were.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Signed;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::hilbert::{lex_segment, HilbertTarget, TargetTail};
use crate::ring::{count_of_degree, monomials_of_degree_lex, Monomial, Ring, UniPoly};

/// Default cap on search nodes.
pub const DEFAULT_NODE_CAP: u64 = 1_000_000;

/// Strongly stable ideals with a prescribed Hilbert function.
#[derive(Clone, Debug)]
pub struct BorelEnumeration {
    /// Target `dim I_d` for `d <= degree_bound`.
    pub hilbert_function: Vec<u64>,
    /// Ideals are searched among those generated in degrees `<= degree_bound`.
    pub degree_bound: u32,
    /// Sorted by decreasing regularity, then by generators.
    pub ideals: Vec<MonomialIdeal>,
    /// `false` when the node cap stopped the search.
    pub complete: bool,
}

/// Saturated strongly stable ideals with a prescribed Hilbert polynomial.
#[derive(Clone, Debug)]
pub struct SaturatedEnumeration {
    pub polynomial: UniPoly,
    pub degree_bound: u32,
    pub ideals: Vec<MonomialIdeal>,
    pub complete: bool,
    pub nodes: u64,
}

/// Monomials of one degree with their upper covers.
struct Layer {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    covers: Vec<Vec<usize>>,
}

impl Layer {
    fn new(nvars: usize, d: u32) -> Self {
        let monos = monomials_of_degree_lex(nvars, d);
        let index: HashMap<Monomial, usize> = monos
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, m)| (m, k))
            .collect();
        let covers = monos
            .iter()
            .map(|m| super::upper_covers(m).iter().map(|c| index[c]).collect())
            .collect();
        Layer {
            monos,
            index,
            covers,
        }
    }

    fn len(&self) -> usize {
        self.monos.len()
    }

    /// Indicator of `S_1 * B` where `B` is a subset of the previous layer.
    fn products(&self, prev: &Layer, chosen: &[bool]) -> Vec<bool> {
        let n = self.monos.first().map(|m| m.nvars()).unwrap_or(0);
        let mut out = vec![false; self.len()];
        for (k, &c) in chosen.iter().enumerate() {
            if c {
                for i in 0..n {
                    out[self.index[&prev.monos[k].mul_var(i)]] = true;
                }
            }
        }
        out
    }
}

struct Budget {
    nodes: u64,
    cap: u64,
}

impl Budget {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.cap
    }
}

/// All Borel-closed `B` with `required <= B <= allowed` and, if given, `|B| = size`.
/// Returns `false` if the budget ran out.
fn borel_filters(
    layer: &Layer,
    required: &[bool],
    allowed: Option<&[bool]>,
    size: Option<usize>,
    budget: &mut Budget,
    out: &mut Vec<Vec<bool>>,
) -> bool {
    fn rec(
        k: usize,
        count: usize,
        cur: &mut Vec<bool>,
        layer: &Layer,
        required: &[bool],
        allowed: Option<&[bool]>,
        size: Option<usize>,
        budget: &mut Budget,
        out: &mut Vec<Vec<bool>>,
    ) -> bool {
        if !budget.tick() {
            return false;
        }
        let n = layer.len();
        if let Some(s) = size {
            if count > s || count + (n - k) < s {
                return true;
            }
        }
        if k == n {
            out.push(cur.clone());
            return true;
        }
        let can_take = allowed.is_none_or(|a| a[k]) && layer.covers[k].iter().all(|&c| cur[c]);
        if can_take {
            cur[k] = true;
            if !rec(
                k + 1,
                count + 1,
                cur,
                layer,
                required,
                allowed,
                size,
                budget,
                out,
            ) {
                return false;
            }
            cur[k] = false;
        }
        if !required[k]
            && !rec(
                k + 1,
                count,
                cur,
                layer,
                required,
                allowed,
                size,
                budget,
                out,
            )
        {
            return false;
        }
        true
    }
    let mut cur = vec![false; layer.len()];
    rec(0, 0, &mut cur, layer, required, allowed, size, budget, out)
}

fn sort_ideals(ideals: &mut Vec<MonomialIdeal>) {
    ideals.sort_by(|a, b| {
        b.max_generator_degree()
            .cmp(&a.max_generator_degree())
            .then_with(|| a.sort_key().cmp(&b.sort_key()))
    });
    ideals.dedup();
}

/// Degree by which the lex-segment ideal of `target` is generated.
pub(crate) fn lex_generation_degree(ring: &Ring, target: &HilbertTarget) -> Result<u32> {
    let mut top = target.prefix().len().saturating_sub(1) as u32;
    match target.tail() {
        TargetTail::LexGenerated(l) => return Ok(l.max_generator_degree()),
        TargetTail::Polynomial(p) => {
            top = top.max(crate::hilbert::gotzmann_bound(p)?);
        }
    }
    for _ in 0..32 {
        let lex = lex_segment(ring, &target.values(top + 1))?;
        if lex.max_generator_degree() <= top {
            return Ok(lex.max_generator_degree());
        }
        top += 1;
    }
    Err(Error::Inadmissible(
        "lex-segment ideal is not generated in low degree".into(),
    ))
}

/// Strongly stable ideals generated in degrees `<= bound` whose Hilbert
/// function matches `target` through `bound + 2`, optionally contained in `within`.
fn search(
    ring: &Ring,
    target: &HilbertTarget,
    bound: u32,
    within: Option<&MonomialIdeal>,
    cap: u64,
) -> (Vec<MonomialIdeal>, bool) {
    let n = ring.nvars();
    let layers: Vec<Layer> = (0..=bound).map(|d| Layer::new(n, d)).collect();
    let allowed: Vec<Option<Vec<bool>>> = layers
        .iter()
        .map(|l| within.map(|w| l.monos.iter().map(|m| w.contains(m)).collect()))
        .collect();
    let mut budget = Budget { nodes: 0, cap };
    let mut found = Vec::new();
    let mut chosen: Vec<Vec<bool>> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        d: usize,
        ring: &Ring,
        target: &HilbertTarget,
        layers: &[Layer],
        allowed: &[Option<Vec<bool>>],
        chosen: &mut Vec<Vec<bool>>,
        budget: &mut Budget,
        found: &mut Vec<MonomialIdeal>,
    ) -> bool {
        if d == layers.len() {
            let mut gens = Vec::new();
            for (e, set) in chosen.iter().enumerate() {
                let req = if e == 0 {
                    vec![false; set.len()]
                } else {
                    layers[e].products(&layers[e - 1], &chosen[e - 1])
                };
                for (k, &c) in set.iter().enumerate() {
                    if c && !req[k] {
                        gens.push(layers[e].monos[k].clone());
                    }
                }
            }
            let ideal = MonomialIdeal::new(ring.clone(), gens);
            let top = layers.len() as u32 - 1;
            if (top + 1..=top + 2).all(|e| ideal.count_in_degree(e) == target.value(e)) {
                found.push(ideal);
            }
            return true;
        }
        let required = if d == 0 {
            vec![false; layers[0].len()]
        } else {
            layers[d].products(&layers[d - 1], &chosen[d - 1])
        };
        let want = target.value(d as u32) as usize;
        let mut sets = Vec::new();
        if !borel_filters(
            &layers[d],
            &required,
            allowed[d].as_deref(),
            Some(want),
            budget,
            &mut sets,
        ) {
            return false;
        }
        for s in sets {
            chosen.push(s);
            let ok = rec(d + 1, ring, target, layers, allowed, chosen, budget, found);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    let complete = rec(
        0,
        ring,
        target,
        &layers,
        &allowed,
        &mut chosen,
        &mut budget,
        &mut found,
    );
    (found, complete)
}

/// All strongly stable ideals with Hilbert function `target`, among those
/// generated in degrees `<= bound`. The default bound is one more than the
/// generation degree of the lex-segment ideal.
pub fn enumerate_borel_with_hf(
    ring: &Ring,
    target: &HilbertTarget,
    bound: Option<u32>,
) -> Result<BorelEnumeration> {
    let lex_degree = lex_generation_degree(ring, target)?;
    let bound = bound.unwrap_or(lex_degree + 1);
    if bound < lex_degree {
        return Err(Error::PrefixTooShort(format!(
            "degree bound {bound} is below the generation degree {lex_degree} of the lex-segment ideal"
        )));
    }
    let (mut ideals, complete) = search(ring, target, bound, None, DEFAULT_NODE_CAP);
    sort_ideals(&mut ideals);
    Ok(BorelEnumeration {
        hilbert_function: target.values(bound),
        degree_bound: bound,
        ideals,
        complete,
    })
}

/// Strongly stable `J` with `J^sat = saturated` and Hilbert function `target`
/// through `bound`: the ideals obtained from `saturated` by removing
/// Borel-minimal monomials degree by degree.
pub fn nonsat_expansions(
    saturated: &MonomialIdeal,
    target: &HilbertTarget,
    bound: u32,
) -> Result<Vec<MonomialIdeal>> {
    if !saturated.is_strongly_stable() || !saturated.is_saturated() {
        return Err(Error::NotStronglyStable(format!(
            "{saturated} must be strongly stable and saturated"
        )));
    }
    for d in 0..=bound {
        if target.value(d) > saturated.count_in_degree(d) {
            return Err(Error::Inadmissible(format!(
                "target exceeds dim of {saturated} in degree {d}"
            )));
        }
    }
    let (found, _) = search(
        saturated.ring(),
        target,
        bound,
        Some(saturated),
        DEFAULT_NODE_CAP,
    );
    let mut out: Vec<MonomialIdeal> = found
        .into_iter()
        .filter(|j| j.saturate() == *saturated)
        .collect();
    sort_ideals(&mut out);
    Ok(out)
}

/// Quotient Hilbert polynomial of `S/J` where `J` is the extension of a
/// strongly stable ideal `j` of the first `m` variables generated in degrees
/// `<= d`: `h_{S/J}(e) = sum_{k <= e} h_{S'/J'}(k)`.
fn cone_polynomial(layers: &[Layer], j: &MonomialIdeal, counts: &[usize], d: usize) -> UniPoly {
    let m = layers[0].monos.first().map(|x| x.nvars()).unwrap_or(0);
    let mut acc: i64 = 0;
    let mut points = Vec::new();
    for k in 0..=d + m {
        let inside = if k < counts.len() {
            counts[k]
        } else {
            layers[k].monos.iter().filter(|x| j.contains(x)).count()
        };
        acc += (count_of_degree(m, k as u32) as usize - inside) as i64;
        if k >= d {
            points.push((k as i64, BigRational::from_integer(acc.into())));
        }
    }
    UniPoly::interpolate(&points)
}

/// Saturated strongly stable ideals with Hilbert polynomial `p` and
/// generators of degree `<= bound`.
///
/// Such ideals have no generator involving the last variable, so the search
/// runs over strongly stable ideals of the first `n` variables; a branch is
/// abandoned as soon as its Hilbert polynomial drops below `p`, since adding
/// generators only lowers it further.
pub fn enumerate_saturated_borel_with_hp(
    ring: &Ring,
    p: &UniPoly,
    bound: u32,
    cap: u64,
) -> Result<SaturatedEnumeration> {
    let n = ring.nvars();
    if n < 2 || bound == 0 {
        return Err(Error::Inadmissible(
            "need at least two variables and a positive degree bound".into(),
        ));
    }
    let m = n - 1;
    let layers: Vec<Layer> = (0..=bound as usize + m)
        .map(|d| Layer::new(m, d as u32))
        .collect();
    let sub = Ring::with_vars(m);
    let mut budget = Budget { nodes: 0, cap };
    let mut found: Vec<MonomialIdeal> = Vec::new();

    struct Ctx<'a> {
        layers: &'a [Layer],
        sub: &'a Ring,
        p: &'a UniPoly,
        bound: usize,
    }

    fn rec(
        d: usize,
        ctx: &Ctx,
        chosen: &mut Vec<Vec<bool>>,
        gens: &mut Vec<Monomial>,
        budget: &mut Budget,
        found: &mut Vec<MonomialIdeal>,
    ) -> bool {
        let layer = &ctx.layers[d];
        let required = layer.products(&ctx.layers[d - 1], &chosen[d - 1]);
        let mut sets = Vec::new();
        if !borel_filters(layer, &required, None, None, budget, &mut sets) {
            return false;
        }
        for s in sets {
            let added: Vec<Monomial> = s
                .iter()
                .enumerate()
                .filter(|&(k, &c)| c && !required[k])
                .map(|(k, _)| layer.monos[k].clone())
                .collect();
            let before = gens.len();
            gens.extend(added);
            let j = MonomialIdeal::new(ctx.sub.clone(), gens.clone());
            chosen.push(s);
            let counts: Vec<usize> = chosen
                .iter()
                .map(|c| c.iter().filter(|&&x| x).count())
                .collect();
            let diff = cone_polynomial(ctx.layers, &j, &counts, d).sub(ctx.p);
            let keep_going = match diff.leading_coeff() {
                None => {
                    found.push(j);
                    true
                }
                Some(c) if c.is_negative() => true,
                Some(_) => d >= ctx.bound || rec(d + 1, ctx, chosen, gens, budget, found),
            };
            chosen.pop();
            gens.truncate(before);
            if !keep_going {
                return false;
            }
        }
        true
    }

    let ctx = Ctx {
        layers: &layers,
        sub: &sub,
        p,
        bound: bound as usize,
    };
    let mut chosen = vec![vec![false; 1]];
    let mut gens = Vec::new();
    let complete = rec(1, &ctx, &mut chosen, &mut gens, &mut budget, &mut found);

    let mut ideals: Vec<MonomialIdeal> = found
        .into_iter()
        .map(|j| {
            let lifted = j
                .generators()
                .iter()
                .map(|g| {
                    let mut e = g.exps().to_vec();
                    e.push(0);
                    Monomial::new(&e)
                })
                .collect();
            MonomialIdeal::new(ring.clone(), lifted)
        })
        .collect();
    sort_ideals(&mut ideals);
    Ok(SaturatedEnumeration {
        polynomial: p.clone(),
        degree_bound: bound,
        ideals,
        complete,
        nodes: budget.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MonomialOrder;

    fn mideal(ring: &Ring, text: &str) -> MonomialIdeal {
        let gens = text
            .split(',')
            .map(|s| {
                crate::parse::parse_polynomial(ring, s.trim(), &MonomialOrder::Grevlex)
                    .unwrap()
                    .leading_monomial()
                    .unwrap()
                    .clone()
            })
            .collect();
        MonomialIdeal::new(ring.clone(), gens)
    }

    fn target(nvars: usize, prefix: &[u64], p: &[i64]) -> HilbertTarget {
        HilbertTarget::with_polynomial(nvars, prefix.to_vec(), UniPoly::from_ints(p)).unwrap()
    }

    #[test]
    fn layer_covers_precede() {
        let l = Layer::new(4, 4);
        for (k, cs) in l.covers.iter().enumerate() {
            assert!(cs.iter().all(|&c| c < k));
        }
    }

    #[test]
    fn filter_count_matches_brute_force() {
        // all Borel-closed subsets of degree-3 monomials in three variables
        let l = Layer::new(3, 3);
        let mut budget = Budget {
            nodes: 0,
            cap: u64::MAX,
        };
        let mut out = Vec::new();
        borel_filters(&l, &vec![false; l.len()], None, None, &mut budget, &mut out);
        let n = l.len();
        let brute = (0u32..1 << n)
            .filter(|mask| {
                (0..n).all(|k| {
                    mask & (1 << k) == 0 || l.covers[k].iter().all(|&c| mask & (1 << c) != 0)
                })
            })
            .count();
        assert_eq!(out.len(), brute);
    }

    #[test]
    fn first_list() {
        let r = Ring::xyzt();
        let e = enumerate_borel_with_hf(&r, &target(4, &[0, 0, 3, 9, 19, 36, 60], &[0, 4]), None)
            .unwrap();
        assert!(e.complete);
        assert_eq!(e.degree_bound, 7);
        assert_eq!(
            e.ideals,
            vec![
                mideal(&r, "x^2, x*y, x*z, x*t^4, y^5, y^4*z^2"),
                mideal(&r, "x^2, x*y, x*z, y^5, y^4*z")
            ]
        );
    }

    #[test]
    fn nonsat_unique() {
        let r = Ring::xyzt();
        let t = target(4, &[0, 0, 3, 9, 19, 36, 60], &[0, 4]);
        let out = nonsat_expansions(&mideal(&r, "x, y^5, y^4*z^2"), &t, 7).unwrap();
        assert_eq!(out, vec![mideal(&r, "x^2, x*y, x*z, x*t^4, y^5, y^4*z^2")]);
        let isat = mideal(&r, "x^2, x*y, x*z, y^5, y^4*z");
        let out = nonsat_expansions(&isat, &t, 7).unwrap();
        assert_eq!(out, vec![isat]);
    }

    #[test]
    fn saturated_plane() {
        let r = Ring::with_vars(3);
        let e =
            enumerate_saturated_borel_with_hp(&r, &UniPoly::from_ints(&[4]), 4, DEFAULT_NODE_CAP)
                .unwrap();
        assert!(e.complete);
        assert_eq!(
            e.ideals,
            vec![mideal(&r, "x, y^4"), mideal(&r, "x^2, x*y, y^3")]
        );
    }

    #[test]
    fn saturated_cap_reported() {
        let r = Ring::xyzt();
        let e = enumerate_saturated_borel_with_hp(&r, &UniPoly::from_ints(&[0, 4]), 6, 5).unwrap();
        assert!(!e.complete);
    }
}

use std::cmp::Ordering;

use super::intpoly::{reduce, IntPoly};
use crate::ring::{Monomial, MonomialOrder};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Homogeneous Buchberger algorithm.
///
/// Pairs are selected by smallest `lcm` (degree first, then the order), which
/// for homogeneous input processes the ideal degree by degree. Both criteria
/// are applied: coprime leading monomials, and the chain criterion.
/// Returns the reduced basis with primitive integer coefficients.
pub(crate) fn groebner(gens: &[IntPoly], ord: &MonomialOrder) -> Vec<IntPoly> {
    let mut basis: Vec<IntPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    // `done[i][j]` (i < j): pair no longer pending.
    let mut pending: Vec<Vec<bool>> = Vec::new();

    let mut queue: Vec<IntPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    queue.sort_by(|a, b| {
        a.lm()
            .degree()
            .cmp(&b.lm().degree())
            .then_with(|| ord.cmp(a.lm(), b.lm()))
    });
    for g in queue {
        let r = reduce(&g, &basis, ord, false).remainder;
        if !r.is_zero() {
            add_element(r, &mut basis, &mut pairs, &mut pending);
        }
    }

    while let Some(k) = select(&pairs, ord) {
        let Pair { i, j, lcm } = pairs.swap_remove(k);
        pending[i][j] = false;
        if basis[i].lm().is_coprime(basis[j].lm()) {
            continue;
        }
        if chain_criterion(i, j, &lcm, &basis, &pending) {
            continue;
        }
        let s = IntPoly::s_poly(&basis[i], &basis[j], ord);
        let r = reduce(&s, &basis, ord, false).remainder;
        if !r.is_zero() {
            add_element(r, &mut basis, &mut pairs, &mut pending);
        }
    }
    interreduce(basis, ord)
}

fn add_element(
    g: IntPoly,
    basis: &mut Vec<IntPoly>,
    pairs: &mut Vec<Pair>,
    pending: &mut Vec<Vec<bool>>,
) {
    let k = basis.len();
    for row in pending.iter_mut() {
        row.push(false);
    }
    pending.push(vec![false; k + 1]);
    for i in 0..k {
        pairs.push(Pair {
            i,
            j: k,
            lcm: basis[i].lm().lcm(g.lm()),
        });
        pending[i][k] = true;
    }
    basis.push(g);
}

fn select(pairs: &[Pair], ord: &MonomialOrder) -> Option<usize> {
    (0..pairs.len()).min_by(|&a, &b| {
        let (x, y) = (&pairs[a].lcm, &pairs[b].lcm);
        x.degree()
            .cmp(&y.degree())
            .then_with(|| ord.cmp(x, y))
            .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
    })
}

/// Skip `(i, j)` when some `k` has `lm(k) | lcm(i, j)` and neither `(i, k)`
/// nor `(j, k)` is still pending.
fn chain_criterion(
    i: usize,
    j: usize,
    lcm: &Monomial,
    basis: &[IntPoly],
    pending: &[Vec<bool>],
) -> bool {
    let is_pending = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pending[a][b]
    };
    (0..basis.len()).any(|k| {
        k != i && k != j && basis[k].lm().divides(lcm) && !is_pending(i, k) && !is_pending(j, k)
    })
}

/// Minimal and reduced basis, sorted by leading monomial (ascending).
pub(crate) fn interreduce(mut basis: Vec<IntPoly>, ord: &MonomialOrder) -> Vec<IntPoly> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| {
        a.lm()
            .degree()
            .cmp(&b.lm().degree())
            .then_with(|| ord.cmp(a.lm(), b.lm()))
    });
    let mut minimal: Vec<IntPoly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<IntPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, g)| g.clone())
            .collect();
        let head = IntPoly {
            terms: vec![minimal[k].terms[0].clone()],
        };
        let tail = IntPoly {
            terms: minimal[k].terms[1..].to_vec(),
        };
        // lc * tail is reduced with a scale; recombine as scale*lc*lm + rem.
        let red = reduce(&tail, &others, ord, true);
        let mut g = scale_combine(&head, &red.remainder, &red.scale, ord);
        g.make_primitive();
        out.push(g);
    }
    out.sort_by(|a, b| {
        a.lm()
            .degree()
            .cmp(&b.lm().degree())
            .then_with(|| ord.cmp(a.lm(), b.lm()))
    });
    debug_assert!(out
        .windows(2)
        .all(|w| ord.cmp(w[0].lm(), w[1].lm()) != Ordering::Equal));
    out
}

/// `scale * head + rem` with `scale` rational, returned as an integer multiple.
fn scale_combine(
    head: &IntPoly,
    rem: &IntPoly,
    scale: &num_rational::BigRational,
    ord: &MonomialOrder,
) -> IntPoly {
    // scale = n/d: n*head + d*rem, up to content.
    let n = scale.numer().clone();
    let d = scale.denom().clone();
    let h = IntPoly {
        terms: head
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c * &n))
            .collect(),
    };
    let one = Monomial::one(head.lm().nvars());
    let mut out = rem.combine(&d, &num_bigint::BigInt::from(-1), &one, &h, ord);
    out.make_primitive();
    out
}

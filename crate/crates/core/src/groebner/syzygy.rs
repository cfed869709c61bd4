//! Generators of the first syzygy module of a list of homogeneous polynomials.

use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SyzygySource {
    /// Pairwise lcm relations of monomial generators.
    Taylor,
    /// S-pair relations from a Buchberger run with tracked cofactors.
    Schreyer,
}

impl SyzygySource {
    pub fn name(self) -> &'static str {
        match self {
            SyzygySource::Taylor => "taylor",
            SyzygySource::Schreyer => "schreyer",
        }
    }
}

/// Vectors `(a_1, ..., a_r)` with `sum a_i g_i = 0`.
#[derive(Clone, Debug)]
pub struct SyzygyList {
    pub generator_count: usize,
    pub syzygies: Vec<Vec<Polynomial>>,
    pub source: SyzygySource,
}

impl SyzygyList {
    pub fn len(&self) -> usize {
        self.syzygies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syzygies.is_empty()
    }

    /// Every vector is a homogeneous relation among `gens`.
    pub fn verify(&self, gens: &[Polynomial]) -> bool {
        self.syzygies.iter().all(|s| is_relation(s, gens))
    }
}

fn is_relation(s: &[Polynomial], gens: &[Polynomial]) -> bool {
    if s.len() != gens.len() {
        return false;
    }
    let ord = gens[0].order().clone();
    let mut acc = Polynomial::zero(gens[0].nvars(), ord);
    let mut degree = None;
    for (a, g) in s.iter().zip(gens) {
        if a.is_zero() {
            continue;
        }
        let d = a.homogeneous_degree().unwrap() + g.homogeneous_degree().unwrap();
        if *degree.get_or_insert(d) != d {
            return false;
        }
        acc = &acc + &(a * g);
    }
    acc.is_zero()
}

/// Taylor relations `(L/m_i) e_i - (L/m_j) e_j` for term generators `c_i m_i`.
pub fn taylor_syzygies(gens: &[Polynomial], ord: &MonomialOrder) -> SyzygyList {
    assert!(
        gens.iter().all(|g| g.is_monomial()),
        "Taylor relations need term generators"
    );
    let n = gens.first().map(|g| g.nvars()).unwrap_or(0);
    let terms: Vec<(Monomial, Coeff)> = gens.iter().map(|g| g.terms()[0].clone()).collect();
    let mut syzygies = Vec::new();
    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            let l = terms[i].0.lcm(&terms[j].0);
            let mut v: Vec<Polynomial> = (0..terms.len())
                .map(|_| Polynomial::zero(n, ord.clone()))
                .collect();
            v[i] = Polynomial::term(l.div(&terms[i].0).unwrap(), terms[i].1.recip(), ord.clone());
            v[j] = Polynomial::term(
                l.div(&terms[j].0).unwrap(),
                -terms[j].1.recip(),
                ord.clone(),
            );
            syzygies.push(v);
        }
    }
    let list = SyzygyList {
        generator_count: gens.len(),
        syzygies,
        source: SyzygySource::Taylor,
    };
    assert!(list.verify(gens), "Taylor relation failed to vanish");
    list
}

struct Tracked {
    g: Polynomial,
    rep: Vec<Polynomial>,
}

/// Schreyer relations. Buchberger's algorithm is run on `gens` while keeping
/// every new element's expression in terms of `gens`; each S-pair of the final
/// basis that reduces to zero yields a relation, and these generate all
/// relations among `gens` because the basis starts with `gens` themselves.
pub fn schreyer_syzygies(gens: &[Polynomial], ord: &MonomialOrder) -> SyzygyList {
    let r = gens.len();
    let n = gens.first().map(|g| g.nvars()).unwrap_or(0);
    let gens: Vec<Polynomial> = gens.iter().map(|g| g.with_order(ord)).collect();
    let zero = Polynomial::zero(n, ord.clone());
    let one = Polynomial::term(Monomial::one(n), Coeff::from_integer(1.into()), ord.clone());

    let mut basis: Vec<Tracked> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut rep = vec![zero.clone(); r];
            rep[i] = one.clone();
            Tracked { g: g.clone(), rep }
        })
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut syzygies: Vec<Vec<Polynomial>> = Vec::new();

    while !pairs.is_empty() {
        // smallest lcm first
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = pair_lcm(&basis, pairs[a]);
                let lb = pair_lcm(&basis, pairs[b]);
                la.degree()
                    .cmp(&lb.degree())
                    .then_with(|| ord.cmp(&la, &lb))
                    .then_with(|| pairs[a].cmp(&pairs[b]))
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(k);
        let l = pair_lcm(&basis, (i, j));
        let (gi, gj) = (&basis[i], &basis[j]);
        let mi = l.div(gi.g.leading_monomial().unwrap()).unwrap();
        let mj = l.div(gj.g.leading_monomial().unwrap()).unwrap();
        let ci = gi.g.leading_coeff().unwrap().recip();
        let cj = -gj.g.leading_coeff().unwrap().recip();
        let mut s = &gi.g.mul_term(&mi, &ci) + &gj.g.mul_term(&mj, &cj);
        let mut rep: Vec<Polynomial> = (0..r)
            .map(|t| &gi.rep[t].mul_term(&mi, &ci) + &gj.rep[t].mul_term(&mj, &cj))
            .collect();

        // full division, remainder collected in `rem`
        let mut rem = zero.clone();
        while !s.is_zero() {
            let (m, c) = s.terms()[0].clone();
            match basis
                .iter()
                .find(|b| b.g.leading_monomial().unwrap().divides(&m))
            {
                Some(b) => {
                    let q = m.div(b.g.leading_monomial().unwrap()).unwrap();
                    let f = c / b.g.leading_coeff().unwrap();
                    s = &s - &b.g.mul_term(&q, &f);
                    for t in 0..r {
                        if !b.rep[t].is_zero() {
                            rep[t] = &rep[t] - &b.rep[t].mul_term(&q, &f);
                        }
                    }
                }
                None => {
                    let t = Polynomial::term(m, c, ord.clone());
                    s = &s - &t;
                    rem = &rem + &t;
                }
            }
        }
        if rem.is_zero() {
            if rep.iter().any(|a| !a.is_zero()) {
                syzygies.push(rep);
            }
        } else {
            let new = basis.len();
            basis.push(Tracked { g: rem, rep });
            for i in 0..new {
                pairs.push((i, new));
            }
        }
    }

    let list = SyzygyList {
        generator_count: r,
        syzygies,
        source: SyzygySource::Schreyer,
    };
    assert!(list.verify(&gens), "Schreyer relation failed to vanish");
    list
}

fn pair_lcm(basis: &[Tracked], (i, j): (usize, usize)) -> Monomial {
    basis[i]
        .g
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].g.leading_monomial().unwrap())
}

/// Taylor relations for term generators, Schreyer relations otherwise.
pub fn syzygy_generators(gens: &[Polynomial], ord: &MonomialOrder) -> SyzygyList {
    if !gens.is_empty() && gens.iter().all(|g| g.is_monomial()) {
        taylor_syzygies(gens, ord)
    } else {
        schreyer_syzygies(gens, ord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_generators;
    use crate::ring::Ring;

    fn gens(text: &str) -> Vec<Polynomial> {
        parse_generators(&Ring::xyzt(), text, &MonomialOrder::Grevlex).unwrap()
    }

    fn show(v: &[Polynomial]) -> Vec<String> {
        let r = Ring::xyzt();
        v.iter().map(|p| r.fmt_polynomial(p)).collect()
    }

    #[test]
    fn koszul_pair() {
        let s = syzygy_generators(&gens("x^2, x*y"), &MonomialOrder::Grevlex);
        assert_eq!(s.len(), 1);
        assert_eq!(show(&s.syzygies[0]), ["y", "-x"]);
    }

    #[test]
    fn principal_has_none() {
        assert!(syzygy_generators(&gens("x^2 - y*t"), &MonomialOrder::Grevlex).is_empty());
        assert!(syzygy_generators(&gens("x^3"), &MonomialOrder::Grevlex).is_empty());
    }

    #[test]
    fn taylor_list_for_conic_powers() {
        let s = taylor_syzygies(&gens("x^2, x*y, y^2"), &MonomialOrder::Grevlex);
        let all: Vec<Vec<String>> = s.syzygies.iter().map(|v| show(v)).collect();
        assert_eq!(
            all,
            vec![
                vec!["y".to_string(), "-x".into(), "0".into()],
                vec!["y^2".to_string(), "0".into(), "-x^2".into()],
                vec!["0".to_string(), "y".into(), "-x".into()],
            ]
        );
    }

    #[test]
    fn schreyer_on_non_basis_input() {
        let g = gens("x^2, x*y, x*z^2 - y^3");
        let s = schreyer_syzygies(&g, &MonomialOrder::Grevlex);
        assert!(s.verify(&g));
        assert!(s.len() >= 3);
    }

    #[test]
    fn schreyer_generates_relations_of_twisted_cubic() {
        // three quadrics with two linear relations
        let g = gens("x*z - y^2, x*t - y*z, y*t - z^2");
        let s = schreyer_syzygies(&g, &MonomialOrder::Grevlex);
        assert!(s.verify(&g));
        let degree_one = s
            .syzygies
            .iter()
            .filter(|v| v.iter().any(|a| a.homogeneous_degree() == Some(1)))
            .count();
        assert!(degree_one >= 2);
    }
}

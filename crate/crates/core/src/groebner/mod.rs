//! Gröbner bases of homogeneous ideals, normal forms, initial ideals,
//! syzygies and linear changes of coordinates.

mod buchberger;
mod coords;
mod intpoly;
mod syzygy;

pub use coords::CoordinateChange;
pub use syzygy::{schreyer_syzygies, syzygy_generators, taylor_syzygies, SyzygyList, SyzygySource};

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial, Ring};
use intpoly::{reduce, IntPoly};

/// A homogeneous ideal given by generators.
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl GradedIdeal {
    /// Zero generators are dropped; all others must be homogeneous.
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.nvars() != ring.nvars() {
                return Err(Error::ContextMismatch(ring.nvars(), g.nvars()));
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(ring.fmt_polynomial(&g)));
            }
            gens.push(g);
        }
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(GradedIdeal {
            ring,
            generators: gens,
        })
    }

    pub fn from_monomials(ring: Ring, gens: &[Monomial]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|m| Polynomial::from_monomial(m.clone(), MonomialOrder::Grevlex))
            .collect();
        Self::new(ring, polys)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(|g| g.max_degree())
            .max()
            .unwrap_or(0)
    }

    /// The monomial ideal spanned by the generators if every generator is a term.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if self.generators.iter().all(|g| g.is_monomial()) {
            let ms: Vec<Monomial> = self
                .generators
                .iter()
                .map(|g| g.leading_monomial().unwrap().clone())
                .collect();
            Some(MonomialIdeal::new(self.ring.clone(), ms))
        } else {
            None
        }
    }

    /// Reduced Gröbner basis under `ord`.
    pub fn groebner_basis(&self, ord: &MonomialOrder) -> GroebnerBasis {
        let gens: Vec<IntPoly> = self
            .generators
            .iter()
            .map(|g| IntPoly::from_poly(g, ord))
            .collect();
        let ints = buchberger::groebner(&gens, ord);
        GroebnerBasis::from_ints(self.ring.clone(), ord.clone(), ints)
    }

    pub fn initial_ideal(&self, ord: &MonomialOrder) -> MonomialIdeal {
        self.groebner_basis(ord).initial_ideal()
    }

    pub fn contains(&self, p: &Polynomial, ord: &MonomialOrder) -> bool {
        self.groebner_basis(ord).contains(p)
    }

    /// Equality as ideals, by mutual containment.
    pub fn equals(&self, other: &GradedIdeal) -> bool {
        if self.nvars() != other.nvars() {
            return false;
        }
        let ord = MonomialOrder::Grevlex;
        let a = self.groebner_basis(&ord);
        let b = other.groebner_basis(&ord);
        other.generators.iter().all(|g| a.contains(g))
            && self.generators.iter().all(|g| b.contains(g))
    }

    /// `gamma . I`, generators substituted `x_j -> sum_i gamma_ij x_i` and made primitive.
    pub fn apply(&self, gamma: &CoordinateChange) -> Result<GradedIdeal> {
        if gamma.size() != self.nvars() {
            return Err(Error::ContextMismatch(self.nvars(), gamma.size()));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| gamma.apply(g).primitive())
            .collect();
        GradedIdeal::new(self.ring.clone(), gens)
    }

    /// Generators rendered in canonical order: ascending degree, then
    /// descending grevlex of leading monomials; integer coefficients.
    pub fn generator_strings(&self) -> Vec<String> {
        let ord = MonomialOrder::Grevlex;
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.with_order(&ord).primitive())
            .collect();
        gens.sort_by(|a, b| {
            canonical_cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
        });
        gens.iter().map(|g| self.ring.fmt_polynomial(g)).collect()
    }
}

/// Ascending degree, then descending grevlex.
pub(crate) fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| MonomialOrder::Grevlex.cmp(b, a))
}

/// A reduced Gröbner basis: monic elements sorted by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    reduced: bool,
    ints: Vec<IntPoly>,
}

impl GroebnerBasis {
    fn from_ints(ring: Ring, order: MonomialOrder, ints: Vec<IntPoly>) -> Self {
        let n = ring.nvars();
        let elements = ints.iter().map(|g| g.to_monic(n, &order)).collect();
        GroebnerBasis {
            ring,
            order,
            elements,
            reduced: true,
            ints,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.ints.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.clone(), self.leading_monomials())
    }

    /// The ideal generated by the basis elements.
    pub fn ideal(&self) -> GradedIdeal {
        GradedIdeal::new(self.ring.clone(), self.elements.clone())
            .expect("basis of a nonzero ideal")
    }

    /// Remainder of `p` on division by the basis; `p` must be sorted under the basis order.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.nvars() != self.ring.nvars() {
            return Err(Error::ContextMismatch(self.ring.nvars(), p.nvars()));
        }
        if *p.order() != self.order {
            return Err(Error::OrderMismatch {
                expected: self.order.to_string(),
                found: p.order().to_string(),
            });
        }
        Ok(self.reduce_unchecked(p))
    }

    pub(crate) fn reduce_unchecked(&self, p: &Polynomial) -> Polynomial {
        if p.is_zero() {
            return p.with_order(&self.order);
        }
        let q = IntPoly::from_poly(p, &self.order);
        // p = factor * q
        let factor: Coeff = p.with_order(&self.order).leading_coeff().unwrap()
            / Coeff::from_integer(q.lc().clone());
        let red = reduce(&q, &self.ints, &self.order, true);
        let scale = factor / red.scale;
        red.remainder
            .to_poly(self.ring.nvars(), &self.order)
            .scale(&scale)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        let q = IntPoly::from_poly(p, &self.order);
        reduce(&q, &self.ints, &self.order, false)
            .remainder
            .is_zero()
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        for i in 0..self.ints.len() {
            for j in i + 1..self.ints.len() {
                if self.ints[i].lm().is_coprime(self.ints[j].lm()) {
                    continue;
                }
                let s = IntPoly::s_poly(&self.ints[i], &self.ints[j], &self.order);
                if !reduce(&s, &self.ints, &self.order, false)
                    .remainder
                    .is_zero()
                {
                    return false;
                }
            }
        }
        true
    }

    /// Coefficients of the normal form of a polynomial, as rationals keyed by monomial.
    pub(crate) fn normal_form_terms(&self, p: &Polynomial) -> Vec<(Monomial, Coeff)> {
        let r = self.reduce_unchecked(p);
        r.into_terms()
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_generators;

    fn ideal(text: &str) -> GradedIdeal {
        let r = Ring::xyzt();
        GradedIdeal::new(
            r.clone(),
            parse_generators(&r, text, &MonomialOrder::Grevlex).unwrap(),
        )
        .unwrap()
    }

    fn poly(text: &str, ord: &MonomialOrder) -> Polynomial {
        crate::parse::parse_polynomial(&Ring::xyzt(), text, ord).unwrap()
    }

    fn lms(gb: &GroebnerBasis) -> Vec<String> {
        let r = gb.ring().clone();
        let mut v: Vec<String> = gb
            .leading_monomials()
            .iter()
            .map(|m| r.fmt_monomial(m))
            .collect();
        v.sort();
        v
    }

    fn sorted(xs: &[&str]) -> Vec<String> {
        let mut v: Vec<String> = xs.iter().map(|s| s.to_string()).collect();
        v.sort();
        v
    }

    /// Division by hand: repeatedly cancel leading terms using any divisor.
    fn naive_remainder(p: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
        let ord = p.order().clone();
        let mut p = p.clone();
        let mut rem = Polynomial::zero(p.nvars(), ord.clone());
        while !p.is_zero() {
            let (m, c) = p.terms()[0].clone();
            match divisors
                .iter()
                .find(|g| g.leading_monomial().unwrap().divides(&m))
            {
                Some(g) => {
                    let q = m.div(g.leading_monomial().unwrap()).unwrap();
                    let f = c / g.leading_coeff().unwrap();
                    p = &p - &g.mul_term(&q, &f);
                }
                None => {
                    let t = Polynomial::term(m, c, ord.clone());
                    rem = &rem + &t;
                    p = &p - &t;
                }
            }
        }
        rem
    }

    #[test]
    fn normal_form_examples() {
        let g = ord_gb("x^2", &MonomialOrder::Grevlex);
        assert!(g.normal_form(&poly("x^2*t", g.order())).unwrap().is_zero());
        let g = ord_gb("x^2, x*y, x*z", &MonomialOrder::Grevlex);
        let y5 = poly("y^5", g.order());
        assert_eq!(g.normal_form(&y5).unwrap(), y5);
        let g = ord_gb("x^2, x*y, x*z, y^4*z - x*t^4, y^5", &MonomialOrder::Grevlex);
        let p = poly("x*y^4*z", g.order());
        assert!(g.normal_form(&p).unwrap().is_zero());
        assert!(naive_remainder(&p, g.elements()).is_zero());
    }

    fn ord_gb(text: &str, ord: &MonomialOrder) -> GroebnerBasis {
        ideal(text).groebner_basis(ord)
    }

    #[test]
    fn normal_form_rejects_foreign_order() {
        let g = ord_gb("x^2", &MonomialOrder::Grevlex);
        let p = poly("x*y", &MonomialOrder::Lex);
        assert!(matches!(
            g.normal_form(&p),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        for ord in [
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::weight_grevlex(&[5, 1, 1, 1]),
        ] {
            let g = ord_gb("x^2, x*y", &ord);
            assert_eq!(lms(&g), sorted(&["x^2", "x*y"]));
            assert!(g.elements().iter().all(|e| e.is_monomial()));
        }
    }

    #[test]
    fn weight_basis_gains_s_pair() {
        let w = MonomialOrder::weight_grevlex(&[5, 1, 1, 1]);
        let g = ord_gb("x^2, x*y, x*z, x*t^4 - y^4*z, y^5", &w);
        assert_eq!(
            lms(&g),
            sorted(&["x^2", "x*y", "x*z", "x*t^4", "y^5", "y^4*z^2"])
        );
        // z*(x*t^4 - y^4*z) - t^4*(x*z) = -y^4*z^2
        let s = &poly("z", &w) * &poly("x*t^4 - y^4*z", &w);
        let s = &s - &(&poly("t^4", &w) * &poly("x*z", &w));
        assert_eq!(s, poly("-y^4*z^2", &w));
    }

    #[test]
    fn lex_initial_ideal_of_transformed_k2() {
        let i = ideal(
            "x*y + x*z - x*t + y*t + z*t - t^2, x^2 - x*z + 2*x*t - z*t + t^2, \
             x*z^2 - 2*x*z*t + z^2*t + x*t^2 - 2*z*t^2 + t^3, \
             y^4 - 4*y^3*t + 6*y^2*t^2 - 3*x*z*t^2 + 2*x*t^3 - 4*y*t^3 - 3*z*t^3 + 3*t^4",
        );
        let g = i.groebner_basis(&MonomialOrder::Lex);
        assert!(g.is_groebner());
        assert_eq!(
            g.initial_ideal().generators().to_vec(),
            ideal("x^2, x*y, x*z^2, x*z*t^2, x*t^4, y^5, y^4*z^2")
                .as_monomial_ideal()
                .unwrap()
                .generators()
                .to_vec()
        );
    }

    #[test]
    fn initial_ideals() {
        let g = ord_gb("x^2 - x*t, x*y, x*z, y^4*z, y^5", &MonomialOrder::Grevlex);
        assert_eq!(lms(&g), sorted(&["x^2", "x*y", "x*z", "y^4*z", "y^5"]));
        let g = ord_gb("x^2, x*y, x*z^2 - y^3", &MonomialOrder::Grevlex);
        assert_eq!(lms(&g), sorted(&["x^2", "x*y", "y^3"]));
        assert!(g.is_groebner());
    }

    #[test]
    fn basis_is_idempotent_and_reduced() {
        let ord = MonomialOrder::Grevlex;
        let g = ord_gb("x^2 - x*t, x*y - y*z, x*z^2 + 3*y^3, y^4 - z*t^3", &ord);
        assert!(g.is_groebner());
        let again = g.ideal().groebner_basis(&ord);
        assert_eq!(g.elements(), again.elements());
        let lm = g.leading_monomials();
        for (k, e) in g.elements().iter().enumerate() {
            assert!(e.leading_coeff().unwrap() == &Coeff::from_integer(1.into()));
            for (m, _) in e.terms() {
                for (j, l) in lm.iter().enumerate() {
                    assert!(j == k && m == l || !l.divides(m));
                }
            }
        }
    }

    #[test]
    fn membership_and_equality() {
        let ord = MonomialOrder::Grevlex;
        let i = ideal("x^2, x*y, x*z, x*t^4 - y^4*z, y^5");
        assert!(i.contains(&poly("y^4*z^2", &ord), &ord));
        assert!(!ideal("x^2, x*y").contains(&poly("x", &ord), &ord));
        assert!(ideal("x^2, x*y, x*z^2 - y^3").equals(&ideal("x^2, x*y, x*z^2 - y^3, y^4")));
        assert!(!ideal("x^2, x*y").equals(&ideal("x^2")));
    }

    #[test]
    fn normal_form_is_exact_remainder() {
        let ord = MonomialOrder::Grevlex;
        let i = ideal("3*x^2 - 2*x*t, x*y + 5*z^2, y^3 - 7*x*z*t");
        let g = i.groebner_basis(&ord);
        let p = poly("x^3*y + 1/3*y^4 - z^4 + 2*x*y*z*t", &ord);
        let r = g.normal_form(&p).unwrap();
        assert!(i.contains(&(&p - &r), &ord));
        let lm = g.leading_monomials();
        assert!(r
            .terms()
            .iter()
            .all(|(m, _)| lm.iter().all(|l| !l.divides(m))));
    }

    #[test]
    fn rejects_inhomogeneous_and_zero() {
        let r = Ring::xyzt();
        let ord = MonomialOrder::Grevlex;
        let p = poly("x^2 + y", &ord);
        assert!(matches!(
            GradedIdeal::new(r.clone(), vec![p]),
            Err(Error::NotHomogeneous(_))
        ));
        assert!(matches!(
            GradedIdeal::new(r.clone(), vec![Polynomial::zero(4, ord)]),
            Err(Error::ZeroIdeal)
        ));
    }
}

//! Integer-coefficient polynomials used inside the Buchberger loop.
//!
//! Reduction is fraction-free: `r <- a*r - b*m*g` with `a, b` coprime, and
//! contents are divided out so coefficients stay primitive.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub terms: Vec<(Monomial, BigInt)>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { terms: Vec::new() }
    }

    /// Primitive integer multiple of a rational polynomial, re-sorted under `ord`.
    pub fn from_poly(p: &Polynomial, ord: &MonomialOrder) -> Self {
        let p = p.with_order(ord).primitive();
        IntPoly {
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| (m.clone(), c.to_integer()))
                .collect(),
        }
    }

    pub fn to_poly(&self, nvars: usize, ord: &MonomialOrder) -> Polynomial {
        Polynomial::from_sorted(
            nvars,
            ord.clone(),
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Coeff::from_integer(c.clone())))
                .collect(),
        )
    }

    /// Monic rational version.
    pub fn to_monic(&self, nvars: usize, ord: &MonomialOrder) -> Polynomial {
        match self.terms.first() {
            None => Polynomial::zero(nvars, ord.clone()),
            Some((_, lc)) => Polynomial::from_sorted(
                nvars,
                ord.clone(),
                self.terms
                    .iter()
                    .map(|(m, c)| (m.clone(), BigRational::new(c.clone(), lc.clone())))
                    .collect(),
            ),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = self.content();
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &g;
            }
        }
    }

    /// `a*self - b*m*g`.
    pub fn combine(
        &self,
        a: &BigInt,
        b: &BigInt,
        m: &Monomial,
        g: &IntPoly,
        ord: &MonomialOrder,
    ) -> IntPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &g.terms);
        let mut ym: Option<Monomial> = y.first().map(|t| t.0.mul(m));
        while i < x.len() && j < y.len() {
            let yj = ym.as_ref().unwrap();
            match ord.cmp(&x[i].0, yj) {
                Ordering::Greater => {
                    out.push((x[i].0.clone(), &x[i].1 * a));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((ym.take().unwrap(), -(&y[j].1 * b)));
                    j += 1;
                    ym = y.get(j).map(|t| t.0.mul(m));
                }
                Ordering::Equal => {
                    let c = &x[i].1 * a - &y[j].1 * b;
                    if !c.is_zero() {
                        out.push((x[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                    ym = y.get(j).map(|t| t.0.mul(m));
                }
            }
        }
        for t in &x[i..] {
            out.push((t.0.clone(), &t.1 * a));
        }
        while j < y.len() {
            out.push((ym.take().unwrap(), -(&y[j].1 * b)));
            j += 1;
            ym = y.get(j).map(|t| t.0.mul(m));
        }
        IntPoly { terms: out }
    }

    /// Scaled S-polynomial `lc(g)*(L/lm(f))*f - lc(f)*(L/lm(g))*g` up to content.
    pub fn s_poly(f: &IntPoly, g: &IntPoly, ord: &MonomialOrder) -> IntPoly {
        let l = f.lm().lcm(g.lm());
        let mf = l.div(f.lm()).unwrap();
        let mg = l.div(g.lm()).unwrap();
        let gg = f.lc().gcd(g.lc());
        let (a, b) = (g.lc() / &gg, f.lc() / &gg);
        let fm = IntPoly {
            terms: f
                .terms
                .iter()
                .map(|(t, c)| (t.mul(&mf), c.clone()))
                .collect(),
        };
        let mut s = fm.combine(&a, &b, &mg, g, ord);
        s.make_primitive();
        s
    }
}

/// Result of a fraction-free reduction: `scale * p - remainder` lies in the ideal.
pub(crate) struct Reduction {
    pub remainder: IntPoly,
    pub scale: BigRational,
}

/// Fully reduce `p` against `basis` (no remainder term divisible by any leading monomial).
pub(crate) fn reduce(
    p: &IntPoly,
    basis: &[IntPoly],
    ord: &MonomialOrder,
    track_scale: bool,
) -> Reduction {
    let mut r = p.clone();
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    let mut scale = BigRational::one();
    let mut steps = 0usize;
    while !r.is_zero() {
        let (m, c) = &r.terms[0];
        let hit = basis.iter().find(|g| !g.is_zero() && g.lm().divides(m));
        match hit {
            Some(g) => {
                let q = m.div(g.lm()).unwrap();
                let gg = g.lc().gcd(c);
                let a = g.lc() / &gg;
                let b = c / &gg;
                r = r.combine(&a, &b, &q, g, ord);
                if !a.is_one() {
                    for (_, x) in rem.iter_mut() {
                        *x *= &a;
                    }
                    if track_scale {
                        scale *= BigRational::from_integer(a.clone());
                    }
                }
                steps += 1;
                if steps.is_multiple_of(8) {
                    divide_joint_content(&mut r, &mut rem, &mut scale, track_scale);
                }
            }
            None => {
                let t = r.terms.remove(0);
                rem.push(t);
            }
        }
    }
    let mut remainder = IntPoly { terms: rem };
    if track_scale {
        let mut empty = IntPoly::zero();
        divide_joint_content(&mut empty, &mut remainder.terms, &mut scale, true);
    } else {
        remainder.make_primitive();
    }
    Reduction { remainder, scale }
}

fn divide_joint_content(
    r: &mut IntPoly,
    rem: &mut [(Monomial, BigInt)],
    scale: &mut BigRational,
    track: bool,
) {
    let mut g = BigInt::zero();
    for (_, c) in r.terms.iter().chain(rem.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, c) in r.terms.iter_mut().chain(rem.iter_mut()) {
        *c /= &g;
    }
    if track {
        *scale /= BigRational::from_integer(g);
    }
}

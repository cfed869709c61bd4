//! Monomial ideals: minimal generators, membership, counting, colon ideals,
//! saturation and the strongly stable (Borel-fixed) machinery.

mod borel;
mod enumerate;

pub use borel::{borel_leq, borel_leq_by_moves, upper_covers};
pub use enumerate::{
    enumerate_borel_with_hf, enumerate_saturated_borel_with_hp, nonsat_expansions,
    BorelEnumeration, SaturatedEnumeration, DEFAULT_NODE_CAP,
};

use std::cmp::Ordering;
use std::fmt;

use crate::groebner::{canonical_cmp, GradedIdeal};
use crate::ring::{monomials_of_degree_lex, Monomial, MonomialOrder, Polynomial, Ring};

/// A monomial ideal stored by its minimal generators, sorted by ascending
/// degree and then descending grevlex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            ring,
            gens: minimalize(gens),
        }
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `dim I_d`.
    pub fn count_in_degree(&self, d: u32) -> u64 {
        if self.gens.is_empty() {
            return 0;
        }
        monomials_of_degree_lex(self.nvars(), d)
            .iter()
            .filter(|m| self.contains(m))
            .count() as u64
    }

    /// `(dim I_0, ..., dim I_top)`.
    pub fn hilbert_prefix(&self, top: u32) -> Vec<u64> {
        (0..=top).map(|d| self.count_in_degree(d)).collect()
    }

    /// Degree-`d` monomials of the ideal, lex descending.
    pub fn monomials_in_degree(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree_lex(self.nvars(), d)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// Standard monomials of degree `d` (those outside the ideal), lex descending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree_lex(self.nvars(), d)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// The generator ideal degree by degree: only generators of degree `<= d`.
    pub fn truncate_generators(&self, d: u32) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: self
                .gens
                .iter()
                .filter(|g| g.degree() <= d)
                .cloned()
                .collect(),
        }
    }

    /// `I : x_i^infinity`: drop `x_i` from every generator.
    pub fn colon_var_power(&self, i: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            self.ring.clone(),
            self.gens.iter().map(|g| g.with_exp(i, 0)).collect(),
        )
    }

    /// `I : x_i`.
    pub fn colon_var(&self, i: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            self.ring.clone(),
            self.gens
                .iter()
                .map(|g| g.div_var(i).unwrap_or_else(|| g.clone()))
                .collect(),
        )
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.ring.clone(), out)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.ring.clone(), gens)
    }

    /// `I^sat = (I : m^infinity) = intersection of I : x_i^infinity`.
    pub fn saturate(&self) -> MonomialIdeal {
        if self.is_zero() {
            return self.clone();
        }
        let mut acc = self.colon_var_power(0);
        for i in 1..self.nvars() {
            acc = acc.intersect(&self.colon_var_power(i));
        }
        acc
    }

    /// `I : x_n^infinity`, which equals the saturation for strongly stable `I`.
    pub fn saturate_by_last(&self) -> MonomialIdeal {
        self.colon_var_power(self.nvars() - 1)
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    /// A monomial `x_i m / x_j` (`i < j`, `m` a generator) outside the ideal, if any.
    pub fn stability_witness(&self) -> Option<Monomial> {
        for g in &self.gens {
            for j in 1..self.nvars() {
                if g.exp(j) == 0 {
                    continue;
                }
                let base = g.div_var(j).unwrap();
                for i in 0..j {
                    let m = base.mul_var(i);
                    if !self.contains(&m) {
                        return Some(m);
                    }
                }
            }
        }
        None
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.stability_witness().is_none()
    }

    pub fn to_graded_ideal(&self) -> GradedIdeal {
        GradedIdeal::from_monomials(self.ring.clone(), &self.gens).expect("nonzero monomial ideal")
    }

    pub fn generator_polynomials(&self, ord: &MonomialOrder) -> Vec<Polynomial> {
        self.gens
            .iter()
            .map(|g| Polynomial::from_monomial(g.clone(), ord.clone()))
            .collect()
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| self.ring.fmt_monomial(g))
            .collect()
    }

    /// Key for deterministic sorting of lists of ideals.
    pub fn sort_key(&self) -> Vec<(u32, std::cmp::Reverse<Vec<u16>>)> {
        self.gens
            .iter()
            .map(|g| (g.degree(), std::cmp::Reverse(g.exps().to_vec())))
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.generator_strings().join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Remove non-minimal and duplicate generators and sort canonically.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(canonical_cmp);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // divisors have degree <= deg g and so come earlier
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    debug_assert!(out
        .windows(2)
        .all(|w| canonical_cmp(&w[0], &w[1]) == Ordering::Less));
    out
}

//! Hilbert functions and polynomials, lex-segment ideals, regularity and the
//! Gotzmann number.

mod gotzmann;
mod lex;
mod target;

pub use gotzmann::gotzmann_bound;
pub use lex::lex_segment;
pub use target::{HilbertTarget, TargetTail};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::{count_of_degree, MonomialOrder, UniPoly};

/// Degree-wise dimensions of an ideal and its quotient.
///
/// `h_ideal[d] = dim I_d`; the quotient values are always derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    nvars: usize,
    h_ideal: Vec<u64>,
    polynomial: Option<UniPoly>,
    stable_from: Option<u32>,
    regularity: Option<u32>,
}

impl HilbertData {
    pub fn from_prefix(nvars: usize, h_ideal: Vec<u64>) -> Self {
        HilbertData {
            nvars,
            h_ideal,
            polynomial: None,
            stable_from: None,
            regularity: None,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn top_degree(&self) -> u32 {
        self.h_ideal.len() as u32 - 1
    }

    pub fn h_ideal(&self) -> &[u64] {
        &self.h_ideal
    }

    pub fn h_quotient(&self) -> Vec<u64> {
        self.h_ideal
            .iter()
            .enumerate()
            .map(|(d, &h)| count_of_degree(self.nvars, d as u32) - h)
            .collect()
    }

    pub fn polynomial(&self) -> Option<&UniPoly> {
        self.polynomial.as_ref()
    }

    pub fn stable_from(&self) -> Option<u32> {
        self.stable_from
    }

    pub fn regularity(&self) -> Option<u32> {
        self.regularity
    }

    /// Fill in the Hilbert polynomial and the degree from which it agrees.
    pub fn with_polynomial(mut self) -> Result<Self> {
        let (p, from) = hilbert_polynomial(&self)?;
        self.polynomial = Some(p);
        self.stable_from = Some(from);
        Ok(self)
    }

    pub fn with_regularity(mut self, reg: u32) -> Self {
        self.regularity = Some(reg);
        self
    }
}

/// `dim I_d` for `d <= top`, counted on the grevlex initial ideal.
pub fn hilbert_function(ideal: &GradedIdeal, top: u32) -> HilbertData {
    let init = ideal.initial_ideal(&MonomialOrder::Grevlex);
    HilbertData::from_prefix(ideal.nvars(), init.hilbert_prefix(top))
}

pub fn monomial_hilbert_function(ideal: &MonomialIdeal, top: u32) -> HilbertData {
    HilbertData::from_prefix(ideal.nvars(), ideal.hilbert_prefix(top))
}

/// Interpolate the quotient values on the top `n+1` degrees and confirm the
/// result on the two degrees just below. Returns the polynomial and the least
/// degree from which the whole prefix agrees with it.
pub fn hilbert_polynomial(hd: &HilbertData) -> Result<(UniPoly, u32)> {
    let q = hd.h_quotient();
    let k = hd.nvars;
    if q.len() < k + 2 {
        return Err(Error::PrefixTooShort(format!(
            "{} values given, at least {} needed",
            q.len(),
            k + 2
        )));
    }
    let top = q.len() - 1;
    let points: Vec<(i64, BigRational)> = (top + 1 - k..=top)
        .map(|d| (d as i64, BigRational::from_integer(q[d].into())))
        .collect();
    let p = UniPoly::interpolate(&points);
    let agrees = |d: usize| p.eval(d as i64) == BigRational::from_integer(q[d].into());
    if !(agrees(top - k) && agrees(top - k - 1)) {
        return Err(Error::PrefixTooShort(
            "values have not reached their polynomial by the end of the prefix".into(),
        ));
    }
    let mut from = top - k - 1;
    while from > 0 && agrees(from - 1) {
        from -= 1;
    }
    Ok((p, from as u32))
}

/// Degree from which `h_{S/I}` is certainly polynomial: the largest generator
/// degree for strongly stable ideals, the degree of the lcm of all
/// generators otherwise.
pub fn stabilization_bound(ideal: &MonomialIdeal) -> u32 {
    if ideal.is_strongly_stable() {
        ideal.max_generator_degree()
    } else {
        let n = ideal.nvars();
        let mut l = crate::ring::Monomial::one(n);
        for g in ideal.generators() {
            l = l.lcm(g);
        }
        l.degree()
    }
}

/// Hilbert data of a monomial ideal over a prefix long enough to certify the polynomial.
pub fn monomial_hilbert_data(ideal: &MonomialIdeal) -> HilbertData {
    let top = stabilization_bound(ideal) + ideal.nvars() as u32 + 1;
    let mut hd = monomial_hilbert_function(ideal, top)
        .with_polynomial()
        .expect("prefix past the bound");
    if ideal.is_strongly_stable() {
        hd.regularity = Some(ideal.max_generator_degree());
    }
    hd
}

/// Hilbert polynomial of `S/I` for a monomial ideal.
pub fn monomial_hilbert_polynomial(ideal: &MonomialIdeal) -> UniPoly {
    monomial_hilbert_data(ideal).polynomial.unwrap()
}

/// Hilbert polynomial of `S/I`, through the grevlex initial ideal.
pub fn ideal_hilbert_polynomial(ideal: &GradedIdeal) -> UniPoly {
    monomial_hilbert_polynomial(&ideal.initial_ideal(&MonomialOrder::Grevlex))
}

/// Regularity of a strongly stable monomial ideal: its largest generator degree.
pub fn monomial_regularity(ideal: &MonomialIdeal) -> Result<u32> {
    match ideal.stability_witness() {
        None => Ok(ideal.max_generator_degree()),
        Some(m) => Err(Error::NotStronglyStable(ideal.ring().fmt_monomial(&m))),
    }
}

/// Regularity of a homogeneous ideal: read off directly for strongly stable
/// monomial ideals, otherwise taken from the grevlex generic initial ideal.
pub fn regularity(ideal: &GradedIdeal, seed: u64, trials: usize) -> Result<u32> {
    if let Some(m) = ideal.as_monomial_ideal() {
        if m.is_strongly_stable() {
            return Ok(m.max_generator_degree());
        }
    }
    let g = crate::geometry::gin(ideal, &MonomialOrder::Grevlex, seed, trials);
    if !g.agreed {
        return Err(Error::GinDisagreement(g.trials));
    }
    monomial_regularity(&g.ideal)
}

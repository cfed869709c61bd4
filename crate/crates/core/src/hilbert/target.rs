use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::lex_segment;
use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::{count_of_degree, Ring, UniPoly};

/// How a Hilbert function continues past its stated prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetTail {
    /// `dim I_d = C(n+d, n) - p(d)`.
    Polynomial(UniPoly),
    /// The values of the lex-segment ideal generated by the prefix.
    LexGenerated(MonomialIdeal),
}

/// A full Hilbert function `d -> dim I_d`: a prefix plus a rule for larger degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTarget {
    nvars: usize,
    prefix: Vec<u64>,
    tail: TargetTail,
}

impl HilbertTarget {
    /// Prefix continued by a Hilbert polynomial of `S/I`.
    pub fn with_polynomial(nvars: usize, prefix: Vec<u64>, p: UniPoly) -> Result<Self> {
        // integer valued on nvars+1 consecutive integers means integer valued everywhere
        let start = prefix.len() as i64;
        for d in start..start + nvars as i64 + 1 {
            let v = p.eval(d);
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Inadmissible(format!(
                    "p({d}) = {v} is not a dimension"
                )));
            }
            if v > BigRational::from_integer(count_of_degree(nvars, d as u32).into()) {
                return Err(Error::Inadmissible(format!(
                    "p({d}) = {v} exceeds dim S_{d}"
                )));
            }
        }
        Ok(HilbertTarget {
            nvars,
            prefix,
            tail: TargetTail::Polynomial(p),
        })
    }

    /// Prefix continued as the lex-segment ideal it generates.
    pub fn lex_generated(ring: &Ring, prefix: Vec<u64>) -> Result<Self> {
        let lex = lex_segment(ring, &prefix)?;
        Ok(HilbertTarget {
            nvars: ring.nvars(),
            prefix,
            tail: TargetTail::LexGenerated(lex),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn tail(&self) -> &TargetTail {
        &self.tail
    }

    pub fn polynomial(&self) -> Option<&UniPoly> {
        match &self.tail {
            TargetTail::Polynomial(p) => Some(p),
            TargetTail::LexGenerated(_) => None,
        }
    }

    /// `dim I_d`.
    pub fn value(&self, d: u32) -> u64 {
        if let Some(&v) = self.prefix.get(d as usize) {
            return v;
        }
        match &self.tail {
            TargetTail::Polynomial(p) => {
                let q = p.eval(d as i64).to_integer().to_u64().unwrap_or(u64::MAX);
                count_of_degree(self.nvars, d).saturating_sub(q)
            }
            TargetTail::LexGenerated(lex) => lex.count_in_degree(d),
        }
    }

    pub fn values(&self, top: u32) -> Vec<u64> {
        (0..=top).map(|d| self.value(d)).collect()
    }
}

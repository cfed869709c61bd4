//! Weight-vector degenerations. For a weight `w`, the family
//! `x_i -> a^{w_i} x_i` has flat limit `in_w(I)` (refined by the tie-break
//! order) as `a -> 0`, so `in_w(I)` lies in the closure of the orbit of `I`.

use num_integer::Integer;

use super::tangent_dimension;
use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;
use crate::hilbert::stabilization_bound;
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::MonomialOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub weights: Vec<i64>,
    pub tie_break: MonomialOrder,
}

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector {
            weights,
            tie_break: MonomialOrder::Grevlex,
        }
    }

    pub fn with_tie_break(weights: Vec<i64>, tie_break: MonomialOrder) -> Self {
        WeightVector { weights, tie_break }
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::weight(self.weights.clone(), self.tie_break.clone())
    }
}

pub fn weight_initial_ideal(ideal: &GradedIdeal, w: &WeightVector) -> Result<MonomialIdeal> {
    if w.weights.len() != ideal.nvars() {
        return Err(Error::ContextMismatch(ideal.nvars(), w.weights.len()));
    }
    Ok(ideal.initial_ideal(&w.order()))
}

/// Weight vectors with entries in `[0, max_entry]`, by increasing entry sum and
/// then lexicographically. Vectors that are a shift `w + c(1,...,1)` or a
/// multiple `k w` of an earlier one induce the same order on each degree and
/// are skipped.
pub fn weight_scan(nvars: usize, max_entry: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; nvars];
    fn rec(i: usize, cur: &mut Vec<i64>, max: i64, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max {
            cur[i] = v;
            rec(i + 1, cur, max, out);
        }
        cur[i] = 0;
    }
    if nvars > 0 {
        rec(0, &mut cur, max_entry, &mut out);
    }
    out.retain(|w| {
        let min = *w.iter().min().unwrap();
        let g = w.iter().fold(0i64, |g, &x| g.gcd(&x));
        min == 0 && g <= 1
    });
    out.sort_by(|a, b| {
        a.iter()
            .sum::<i64>()
            .cmp(&b.iter().sum::<i64>())
            .then_with(|| a.cmp(b))
    });
    out
}

/// The first weight in the scan whose initial ideal is `target`.
pub fn find_specialization_weight(
    ideal: &GradedIdeal,
    target: &MonomialIdeal,
    max_entry: i64,
    tie_break: &MonomialOrder,
) -> Result<WeightVector> {
    for w in weight_scan(ideal.nvars(), max_entry) {
        let wv = WeightVector::with_tie_break(w, tie_break.clone());
        let ord = wv.order();
        // leading monomials of the generators must already lie in the target
        let plausible = ideal
            .generators()
            .iter()
            .all(|g| target.contains(g.with_order(&ord).leading_monomial().unwrap()));
        if plausible && ideal.initial_ideal(&ord) == *target {
            return Ok(wv);
        }
    }
    Err(Error::WeightNotFound(max_entry))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationCheck {
    pub initial_matches: bool,
    pub hilbert_matches: bool,
    /// Degrees compared for the Hilbert function, `0..=hilbert_degree`.
    pub hilbert_degree: u32,
    pub tangent_source: usize,
    pub tangent_target: usize,
}

impl SpecializationCheck {
    /// The limit is the target, the Hilbert functions agree and the tangent
    /// dimension does not drop at the limit.
    pub fn holds(&self) -> bool {
        self.initial_matches && self.hilbert_matches && self.tangent_target >= self.tangent_source
    }
}

pub fn verify_specialization(
    ideal: &GradedIdeal,
    target: &MonomialIdeal,
    w: &WeightVector,
) -> Result<SpecializationCheck> {
    let init = weight_initial_ideal(ideal, w)?;
    let grevlex = ideal.initial_ideal(&MonomialOrder::Grevlex);
    let top =
        stabilization_bound(&grevlex).max(stabilization_bound(target)) + ideal.nvars() as u32 + 1;
    let hilbert_matches = grevlex.hilbert_prefix(top) == target.hilbert_prefix(top);
    Ok(SpecializationCheck {
        initial_matches: init == *target,
        hilbert_matches,
        hilbert_degree: top,
        tangent_source: tangent_dimension(ideal).dimension,
        tangent_target: tangent_dimension(&target.to_graded_ideal()).dimension,
    })
}

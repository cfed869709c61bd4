use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::groebner::{CoordinateChange, GradedIdeal};
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::MonomialOrder;

/// Entries of random coordinate changes are drawn from `[-GIN_ENTRY_BOUND, GIN_ENTRY_BOUND]`.
pub const GIN_ENTRY_BOUND: i64 = 99;
pub const DEFAULT_GIN_TRIALS: usize = 3;

#[derive(Clone, Debug)]
pub struct GinResult {
    /// The common initial ideal when `agreed`, otherwise the first trial's.
    pub ideal: MonomialIdeal,
    pub order: MonomialOrder,
    pub trials: usize,
    pub seed: u64,
    /// All trials gave the same ideal and it is strongly stable.
    pub agreed: bool,
    pub per_trial: Vec<MonomialIdeal>,
}

/// Generic initial ideal: the initial ideal after random dense changes of
/// coordinates, accepted only when every trial agrees.
pub fn gin(ideal: &GradedIdeal, ord: &MonomialOrder, seed: u64, trials: usize) -> GinResult {
    let trials = trials.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let changes: Vec<CoordinateChange> = (0..trials)
        .map(|_| CoordinateChange::random(&mut rng, ideal.nvars(), GIN_ENTRY_BOUND))
        .collect();
    let per_trial: Vec<MonomialIdeal> = changes
        .par_iter()
        .map(|g| {
            ideal
                .apply(g)
                .expect("random change has full size")
                .initial_ideal(ord)
        })
        .collect();
    let first = per_trial[0].clone();
    let agreed = per_trial.iter().all(|i| *i == first) && first.is_strongly_stable();
    GinResult {
        ideal: first,
        order: ord.clone(),
        trials,
        seed,
        agreed,
        per_trial,
    }
}

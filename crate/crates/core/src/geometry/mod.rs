//! Generic initial ideals, tangent spaces and weight degenerations.

mod gin;
mod specialize;
mod tangent;

pub use gin::{gin, GinResult, DEFAULT_GIN_TRIALS, GIN_ENTRY_BOUND};
pub use specialize::{
    find_specialization_weight, verify_specialization, weight_initial_ideal, weight_scan,
    SpecializationCheck, WeightVector,
};
pub use tangent::{
    monomial_tangent_dimension, tangent_dimension, tangent_dimension_with, TangentReport,
};

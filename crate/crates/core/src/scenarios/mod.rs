//! Built-in scenarios: five standard-graded Hilbert schemes with their
//! Borel-fixed ideals, tangent dimensions, specializations and component
//! dimensions, and the engine that checks them.

mod dataset;
mod families;
mod run;

pub use dataset::{
    builtin_case, builtin_cases, parse_dataset, BorelEntry, FamilySpec, Limit, Origin,
    SaturatedEntry, ScenarioCase, SpecializationEntry, TangentEntry, BUILTIN_DATASET,
};
pub use families::{sample_family_member, FAMILY_ATTEMPTS, FAMILY_COEFF_BOUND};
pub use run::{run_case, run_case_with, run_cases, Check, RunOptions, VerificationReport};

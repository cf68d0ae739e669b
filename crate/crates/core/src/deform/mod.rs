//! Explicit deformations between strata, their fiberwise verification, and
//! the binomial identities behind them.

mod coefficients;
mod family;
mod lemmas;
mod suite;
mod verify;

pub use coefficients::{solve_coefficient_system, CoefficientSolution};
pub use family::{build_family, AuxiliaryB, Family, FamilySpec, Fiber, FiberOutcome};
pub use lemmas::{
    alt_binom_sum, binom, binom_mod, check_type1_nondiv, check_type1_params, lucas_binom_check,
    osss_dimension, round_up_multiple, squared_binomial_poly, type1_quantities, AltBinomSum,
    Type1Quantities,
};
pub use suite::{seeded_rng, standard_suite, OSS_DRAWS};
pub use verify::{
    sample_points, verify_all, verify_family, verify_family_with, SampleResult, SkippedSample,
    SpecialResult, Verdict, VerificationReport, VerifyOptions, MIN_FIELDS, MIN_SUCCESSES,
};

//! The exponent `r(q)`, random-subset expectations, and gap verifiers for
//! inequalities about general nonnegative cube functions.

mod exponent;
mod noise;
mod sobolev;
mod subsets;

pub use exponent::{r_exponent, RExponent};
pub use noise::{
    hypercontractive_gap, hypercontractive_rhs, ln_conditional_norm, ln_conditional_norm_table,
    main_inequality_gap, noisy_entropy_gap,
};
pub use sobolev::{
    derivative_check, log_sobolev_equality_expected, log_sobolev_gap, two_point_constant_large_q,
    two_point_equality_expected, two_point_gap, two_point_gap_at, DerivativeCheck,
    DERIVATIVE_STEP,
};
pub(crate) use subsets::check_probability;
pub use subsets::{
    cardinality_weights, sample_subset, subset_expectation, subset_expectation_exact,
    subset_expectation_mc, Estimate, SubsetMode,
};

//! Binary linear codes: rank functions, weight distributions, the `F(λ, q)`
//! family and the weight bounds derived from it.

mod bounds;
mod code;
mod fvalue;
mod weights;

pub use bounds::{
    alpha_reversal, bec_bound_dual_side, bec_bound_dual_side_log2, bec_bound_primal_side,
    bec_bound_primal_side_log2, dual_weight_bound, dual_weight_bound_log2, k_star, sberlo_bound,
    sberlo_bound_log2, SBERLO_CONSTANT,
};
pub use code::LinearCode;
pub use fvalue::{
    cond_exp_norm_exponent, dual_weights, f_from_cube, f_value, lemma13_values, primal_sum,
    rank_deficiency, rank_deficiency_from_profile, rank_deficiency_gap, sample_deficiency, theta,
    weight_pair, FMethod, FValue, Lemma13Values,
};
pub(crate) use weights::binomial_table;
pub use weights::{
    krawtchouk, macwilliams_transform, weight_distribution, weight_distribution_with_caps,
    WeightDistribution,
};

//! Binary and graphic matroids: rank functions, the Tutte polynomial, and
//! the rank-deficiency inequality with its tail bound.

mod binary;
mod graph;
mod tail;
mod tutte;

pub use binary::{matroid_rank, BinaryMatroid};
pub use graph::{connected_components, graphic_matroid, Graph};
pub use tail::{
    bounded_diff_tail, bounded_diff_value, graph_inequality_gap, lemma17_gap, lemma17_t, mu,
    mu_curve, tail_bound_check, tail_probability, uniform_grid, TailProbability,
};
pub use tutte::{basis_count, tutte_identity_check, tutte_polynomial, TutteIdentityCheck, TuttePolynomial};

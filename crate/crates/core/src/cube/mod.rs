//! Functions on the boolean cube and the operators acting on them.

mod fourier;
mod function;
mod ops;

pub use fourier::{wht_forward, wht_inverse, FourierSpectrum};
pub use function::CubeFunction;
pub use ops::{
    conditional_expectation, dirichlet_form, entropy, lq_norm, noise_operator, renyi_entropy,
};
pub(crate) use ops::{ln_norm, power_mean};

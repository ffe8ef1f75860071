//! Scalar special functions: log-gamma, multivariate gammas, Bessel J, and
//! the log-domain value type every gamma-product in the crate is carried in.

mod bessel;
mod gamma;
mod logvalue;

pub use bessel::{bessel_j, bessel_j_row, BESSEL_MAX_X};
pub use gamma::{log_factorial, log_gamma, multivariate_gamma_complex, multivariate_gamma_real};
pub use logvalue::{LogValue, MAX_SAFE_LOG};

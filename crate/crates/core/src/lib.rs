//! Numerical toolkit for the volumes of compact matrix groups (orthogonal,
//! unitary, Stiefel, flag) and of quantum state sets, the Selberg integral
//! family, Haar-measure sampling from first principles, and the metric-ball
//! volume on the unitary group — each closed form paired with an independent
//! Monte Carlo or quadrature oracle.

pub mod ballvol;
pub mod error;
pub mod estimators;
pub mod linalg;
pub mod sampling;
pub mod selberg;
pub mod special;
pub mod verify;
pub mod volumes;

pub use error::{Error, Result};
pub use special::LogValue;

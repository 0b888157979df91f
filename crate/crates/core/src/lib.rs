//! Exact computer algebra for the compact quantum group SU_q(2).
//!
//! The crate realizes the dense *-Hopf algebra SU_q^0(2) over the field
//! `Q(u)`, `q = u^2`, together with its dual convolution algebra, its
//! corepresentation theory and the classical sl(2) ladder construction.

pub mod algebra;
pub mod corep;
pub mod dual;
pub mod error;
pub mod hopf;
pub mod infinitesimal;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod scalars;
pub mod su2;

pub use algebra::{AlgMatrix, AlgebraElement, BasisIndex, Gen, Tensor, TensorElement};
pub use error::{Error, Result, ScalarError};
pub use matrix::Matrix;
pub use scalars::{rat, Rational, Scalar, UPoly};

//! Exact computations for the dual pair `GL(n) × O(p,q)`: the polynomial Fock model,
//! pluriharmonic polynomials and principal minors, cocycle values on the
//! Vogan–Zuckerman vector, Littlewood–Richardson and orthogonal branching
//! combinatorics, Euler forms, θ-stable Levi bookkeeping and the archimedean
//! Arthur-parameter calculus.
//!
//! All arithmetic is exact over `Q` or `Q(i)`.

pub mod arthur;
pub mod cli;
pub mod cocycles;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod partitions;
pub mod polyfock;
pub mod scalar;
pub mod verify;
pub mod vz;

pub use error::{Error, Result};
pub use scalar::{GaussianRational, Rational};

//! Exact computer algebra for the quantum group `C_q[SU_N]`, its quantum
//! homogeneous space `C_q[CP^{N-1}]` and the covariant differential calculus
//! on it, including the degree-two relations of the maximal prolongation and
//! the covariant complex structure.
//!
//! Scalars live in `Q(q^(1/N))` and every computation is exact.

pub mod ncpoly;
pub mod qscalar;
pub mod rewrite;
mod text;
pub mod linalg;
pub mod rform;
pub mod cotangent;
pub mod prolong;
pub mod holomorphic;
pub mod verify;
pub mod session;

//! Exact computational kernel for the split Cayley algebra Ca′, the
//! pseudo-Euclidean space ℝ^{3,4} of its imaginary elements, and the Cayley
//! almost complex / almost para-complex structures on the pseudospheres
//! S^{2,4} and S^{3,3}.
//!
//! The crate is `no_std` and needs only `alloc`. All algebra runs over exact
//! rationals (ℚ(√2) in [`g2star`]); the stereographic and ℝ^{8±} modules
//! also offer `f64` paths for points where square roots are irrational.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod linalg;
pub mod forms;
pub mod g2star;
pub mod imspace;
pub mod octonion;
pub mod r8;
pub mod report;
pub mod sampling;
pub mod scalars;
pub mod spheres;

pub use octonion::SplitOctonion;
pub use report::{Check, Report, Status};
pub use scalars::{Poly7, QuadExt, Rational};

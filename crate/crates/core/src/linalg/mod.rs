//! Exact integer linear algebra: dense unbounded-integer matrices, Smith
//! normal form with unimodular transforms, kernel bases, cokernel
//! presentations, and an independent determinantal-divisor oracle.

mod divisors;
mod group;
mod matrix;
mod snf;

pub use divisors::{determinantal_divisors, diagonal_from_divisors};
pub use group::AbelianGroup;
pub use matrix::IntMatrix;
pub use snf::{cokernel, kernel_basis, smith_normal_form, SmithDecomposition};

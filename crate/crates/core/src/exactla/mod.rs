//! Exact dense linear algebra over Q(ζ₁₂) and integer Smith normal form.

mod eigen;
mod elim;
mod matrix;
mod poly;
mod signature;
mod snf;

pub use eigen::{roots_of_unity, simultaneous_eigensplit, JointEigenspace};
pub use elim::{intersect, inverse, kernel, kernel_of_echelon, rank, rref, solve, Echelon};
pub use matrix::{axpy, is_zero_vec, scale_vec, unit_vec, ExactMatrix};
pub use poly::{minimal_polynomial, Poly};
pub use signature::{Inertia, SymmetricForm};
pub use snf::{int_mat_mul, lattice_basis, smith_normal_form, IntMatrix, Snf};

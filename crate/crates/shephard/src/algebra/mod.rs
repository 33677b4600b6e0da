//! Exact arithmetic: real cyclotomic numbers, matrices over their integer rings,
//! and integer Smith normal form.

pub mod cyclotomic;
pub mod matrix;
pub mod poly;
pub mod snf;

pub use cyclotomic::{sign_of, CyclotomicReal, RealCyclotomicField};
pub use matrix::{ExactMatrix, MatrixRing};
pub use snf::{kernel_basis, smith_normal_form, IntegerMatrix, SmithForm};

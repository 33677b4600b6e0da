pub mod algebra;
pub mod complex;
pub mod dihedral;
pub mod error;
pub mod graph;
pub mod report;
pub mod triangle;

pub use error::{Error, Result};

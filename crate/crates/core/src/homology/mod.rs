//! Exact integer homological algebra: Smith normal form, homology of chain
//! complexes, tensor products and the Künneth formula, Alexander duality, and
//! the exactness and divisibility checks used by the torus invariants.

mod complex;
mod duality;
mod exact;
mod group;
mod matrix;
mod smith;

pub use complex::{homology, tensor, ChainComplex};
pub use duality::{alexander_duality, kunneth_predict};
pub use exact::{divisibility, is_exact, is_primitive};
pub use group::{FgAbGroup, GradedGroup};
pub use matrix::Matrix;
pub use smith::{smith_normal_form, smith_normal_form_with, SmithForm};

/// Cokernel of a relation matrix (rows are relations, columns generators).
pub fn group_from_presentation<T: crate::Scalar>(a: &Matrix<T>) -> FgAbGroup<T> {
    FgAbGroup::from_presentation(a)
}

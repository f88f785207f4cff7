//! Element-level algebra for the octonions and split-octonions: the two
//! Cayley tables, exact products, conjugation, the bilinear form, commutator /
//! associator / Jacobian, the Malcev identity, and subalgebra classification.

mod element;
mod subalgebra;
mod table;

pub use element::{
    associator, bilinear_form, commutator, conjugate, jacobian_element, jacobian_nested,
    malcev_check, multiply, Element, MalcevOutcome, COMMUTATOR_NORMALIZATION,
};
pub use subalgebra::{
    classify_subalgebras, FourDimSubalgebra, SubalgebraClass, SubalgebraReport, TwoDimSubalgebra,
};
pub use table::{basis_product, AlgebraKind, CayleyTable, SignedBasis, TableViolation};

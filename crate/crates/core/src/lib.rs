//! Exact-arithmetic octonion and split-octonion algebra.
//!
//! Everything in this crate is driven by the two 8x8 Cayley tables (octonion
//! and split-octonion). From the tables we derive the diagonal metric gamma,
//! the totally antisymmetric structure tensor b, its rank-4 dual B, the
//! inner-derivation 3-bracket with its structure constants f, and an exact
//! Fourier-mode realization of the N=1 super-affine extension. Every algebraic
//! law the library claims (Malcev identity, generalized Lie 3-algebra axioms,
//! the structure-tensor identity suite) is checked by exhaustive enumeration
//! over the 8-element basis in exact rational arithmetic; there is no floating
//! point and no tolerance anywhere in the core.
//!
//! The scalar type is generic: any [`Scalar`] (a signed `num-traits` field
//! with exact or inexact semantics) works. The crate-root aliases pin the
//! canonical exact instantiations:
//!
//! * [`Coeff`] / [`Elem`] — machine-word rationals, used by all verification
//!   sweeps (every quantity they touch stays far below the `i64` range);
//! * [`BigCoeff`] / [`BigElem`] — arbitrary-precision rationals for callers
//!   that feed in large inputs.
//!
//! ```
//! use octonion_algebra::{algebra::{multiply, AlgebraKind}, Elem};
//!
//! // Table product E_1 E_2 = E_4 ...
//! let product = multiply(AlgebraKind::Octonion, &Elem::basis(1), &Elem::basis(2));
//! assert_eq!(product, Elem::basis(4));
//!
//! // ... and a zero divisor of the split algebra.
//! let u = &Elem::basis(0) + &Elem::basis(1);
//! let v = &Elem::basis(0) - &Elem::basis(1);
//! assert!(multiply(AlgebraKind::SplitOctonion, &u, &v).is_zero());
//! ```

// Index loops over the fixed 0..8 / 1..8 basis ranges read as the math does;
// rewriting them with iterator adapters obscures the index bookkeeping.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod random;
pub mod scalar;
pub mod superaffine;
pub mod tensor;
pub mod triple;

pub use algebra::{
    associator, basis_product, bilinear_form, commutator, conjugate, jacobian_element,
    jacobian_nested, malcev_check, multiply, AlgebraKind, CayleyTable, Element, SignedBasis,
};
pub use scalar::{ratio, Scalar};

/// Canonical exact scalar for verification work.
pub type Coeff = num_rational::Rational64;
/// Arbitrary-precision rational scalar.
pub type BigCoeff = num_rational::BigRational;
/// Element of (split-)octonion space over [`Coeff`].
pub type Elem = Element<Coeff>;
/// Element of (split-)octonion space over [`BigCoeff`].
pub type BigElem = Element<BigCoeff>;

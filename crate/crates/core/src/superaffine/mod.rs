//! Exact graded Fourier-mode realization of the N=1 super-affinization:
//! odd generators `psi_mu^m`, even generators `phi_mu^m`, a central element
//! K, graded brackets with the sign/pairing conventions the source leaves
//! open, the super-Jacobian, and the graded Malcev sweep.

mod bracket;
mod checks;
mod generator;

pub use bracket::{mode_bracket, BracketConvention, CentralPairing, ModeAlgebra};
pub use checks::{
    convention_search, graded_antisymmetry_check, mode0_even_subalgebra_check, super_jacobian,
    super_malcev_check, ConventionReport, SuperMalcevReport,
};
pub use generator::{GradedElement, ModeGenerator, Species};

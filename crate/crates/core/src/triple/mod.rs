//! The inner-derivation operator, the 3-bracket it defines, the generalized
//! Lie 3-algebra axiom suite, and the 4-index structure constants f with
//! their (t, p) decomposition and coset combinatorics.

mod bracket;
mod derivation;
mod ftensor;

pub use bracket::{
    additional_symmetry_pair_exchange, additional_symmetry_printed, fundamental_identity_check,
    lemma_double_product, lemma_left_adjoint, lemma_product_printed, lemma_right_adjoint,
    metric_compatibility_check, sweep_additional_symmetry, sweep_fundamental_identity,
    sweep_lemmas, sweep_metric_compatibility, three_bracket, LemmaSweep, PairCheck,
};
pub use derivation::{
    derivation_apply, derivation_closed_form, derivation_span_dimension, leibniz_check,
    ll_closed_form, ll_commutator, lr_closed_form, lr_commutator, rr_closed_form, rr_commutator,
    sweep_derivation_dual_path, sweep_leibniz, sweep_lr_closed_forms, Derivation,
    DerivationTensors,
};
pub use ftensor::{
    coset_correspondence, decompose_f, extract_f, printed_f_comparison, CosetReport, FDecomposition,
    PrintedFComparison, FTensor, FTensorError,
};

use serde::Serialize;

use crate::algebra::AlgebraKind;

/// Outcome of one exhaustive basis sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    pub kind: AlgebraKind,
    pub checked: u64,
    pub failures: u64,
    /// Index tuple of the first failing case, if any.
    pub first_failure: Option<Vec<usize>>,
}

impl SweepOutcome {
    pub fn new(kind: AlgebraKind) -> Self {
        SweepOutcome {
            kind,
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn record(&mut self, idx: &[usize], ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(idx.to_vec());
            }
        }
    }

    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

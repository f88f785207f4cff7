//! Mode generators and formal rational linear combinations of them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::scalar::Scalar;

/// Species of a non-central generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Species {
    /// Fermionic, grading 1.
    Psi,
    /// Bosonic, grading 0.
    Phi,
}

/// One generator of the mode algebra: `psi_mu^m`, `phi_mu^m`, or the central
/// element K (which carries no index or mode).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ModeGenerator {
    K,
    Psi { index: usize, mode: i64 },
    Phi { index: usize, mode: i64 },
}

impl ModeGenerator {
    pub fn psi(index: usize, mode: i64) -> Self {
        assert!(index < 8);
        ModeGenerator::Psi { index, mode }
    }

    pub fn phi(index: usize, mode: i64) -> Self {
        assert!(index < 8);
        ModeGenerator::Phi { index, mode }
    }

    /// Grading: 1 for psi, 0 for phi and K.
    pub fn parity(self) -> u8 {
        matches!(self, ModeGenerator::Psi { .. }) as u8
    }

    pub fn species(self) -> Option<Species> {
        match self {
            ModeGenerator::K => None,
            ModeGenerator::Psi { .. } => Some(Species::Psi),
            ModeGenerator::Phi { .. } => Some(Species::Phi),
        }
    }

    pub fn mode(self) -> i64 {
        match self {
            ModeGenerator::K => 0,
            ModeGenerator::Psi { mode, .. } | ModeGenerator::Phi { mode, .. } => mode,
        }
    }
}

impl std::fmt::Display for ModeGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModeGenerator::K => write!(f, "K"),
            ModeGenerator::Psi { index, mode } => write!(f, "psi_{index}^{mode}"),
            ModeGenerator::Phi { index, mode } => write!(f, "phi_{index}^{mode}"),
        }
    }
}

/// A finite formal sum of generators with exact coefficients. No zero
/// coefficient is ever stored, so equality is exact map equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement<S> {
    terms: BTreeMap<ModeGenerator, S>,
}

impl<S: Scalar> Default for GradedElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> GradedElement<S> {
    pub fn zero() -> Self {
        GradedElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(g: ModeGenerator) -> Self {
        let mut e = Self::zero();
        e.add_term(g, S::one());
        e
    }

    pub fn add_term(&mut self, g: ModeGenerator, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &GradedElement<S>) {
        for (g, c) in &other.terms {
            self.add_term(*g, c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &GradedElement<S>, factor: &S) {
        if factor.is_zero() {
            return;
        }
        for (g, c) in &other.terms {
            self.add_term(*g, c.clone() * factor.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ModeGenerator, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &ModeGenerator) -> Option<&S> {
        self.terms.get(g)
    }

    /// Grading of a homogeneous element; `None` for zero. Every bracket of
    /// generators is homogeneous, which the debug assertion enforces.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys();
        let first = it.next()?.parity();
        debug_assert!(it.all(|g| g.parity() == first), "mixed-parity element");
        Some(first)
    }
}

//! The diagonal metric gamma read off the Cayley diagonal.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraKind, CayleyTable};

/// `gamma_{mu nu}`: diagonal, entries +-1, self-inverse (so `gamma^{mu nu}`
/// has the same signs and raising then lowering an index is the identity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metric {
    pub kind: AlgebraKind,
    pub diag: [i64; 8],
}

impl Metric {
    /// `gamma_{mu mu}` (equally `gamma^{mu mu}`).
    pub fn sign(&self, mu: usize) -> i64 {
        self.diag[mu]
    }

    /// `gamma_{mu nu}` as a full (diagonal) matrix entry.
    pub fn at(&self, mu: usize, nu: usize) -> i64 {
        if mu == nu {
            self.diag[mu]
        } else {
            0
        }
    }
}

/// Reads `gamma_{mu nu} = Re(E_mu E_nu)` off the table diagonal;
/// `gamma_{00} = +1`.
pub fn metric_from_table(kind: AlgebraKind) -> Metric {
    let diag = CayleyTable::new(kind).metric_diagonal();
    Metric { kind, diag }
}

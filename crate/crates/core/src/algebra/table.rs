//! The two Cayley tables. They are the single source of truth: the metric,
//! the structure tensors, and every product in the crate derive from them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which of the two composition algebras we are working in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    Octonion,
    SplitOctonion,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 2] = [AlgebraKind::Octonion, AlgebraKind::SplitOctonion];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Octonion => "octonion",
            AlgebraKind::SplitOctonion => "split-octonion",
        }
    }
}

impl std::fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A signed basis element `sign * E_index`, or the zero marker (`sign == 0`).
///
/// Basis products of the two tables are always `+-1` times a basis element;
/// the zero marker only appears where an operation is defined to vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedBasis {
    pub sign: i8,
    pub index: usize,
}

impl SignedBasis {
    pub const ZERO: SignedBasis = SignedBasis { sign: 0, index: 0 };

    pub const fn pos(index: usize) -> Self {
        SignedBasis { sign: 1, index }
    }

    pub const fn neg(index: usize) -> Self {
        SignedBasis { sign: -1, index }
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn negated(self) -> Self {
        SignedBasis {
            sign: -self.sign,
            index: self.index,
        }
    }
}

use SignedBasis as SB;

const fn p(index: usize) -> SB {
    SB::pos(index)
}
const fn n(index: usize) -> SB {
    SB::neg(index)
}

/// Octonion table, row `i` column `j` holding `E_i * E_j`.
const OCTONION_ENTRIES: [[SB; 8]; 8] = [
    [p(0), p(1), p(2), p(3), p(4), p(5), p(6), p(7)],
    [p(1), n(0), p(4), p(7), n(2), p(6), n(5), n(3)],
    [p(2), n(4), n(0), p(5), p(1), n(3), p(7), n(6)],
    [p(3), n(7), n(5), n(0), p(6), p(2), n(4), p(1)],
    [p(4), p(2), n(1), n(6), n(0), p(7), p(3), n(5)],
    [p(5), n(6), p(3), n(2), n(7), n(0), p(1), p(4)],
    [p(6), p(5), n(7), p(4), n(3), n(1), n(0), p(2)],
    [p(7), p(3), p(6), n(1), p(5), n(4), n(2), n(0)],
];

/// Split-octonion table.
const SPLIT_ENTRIES: [[SB; 8]; 8] = [
    [p(0), p(1), p(2), p(3), p(4), p(5), p(6), p(7)],
    [p(1), p(0), p(4), n(7), p(2), n(6), n(5), n(3)],
    [p(2), n(4), n(0), p(5), p(1), n(3), p(7), n(6)],
    [p(3), p(7), n(5), p(0), n(6), n(2), n(4), p(1)],
    [p(4), n(2), n(1), p(6), p(0), n(7), p(3), n(5)],
    [p(5), p(6), p(3), p(2), p(7), p(0), p(1), p(4)],
    [p(6), p(5), n(7), p(4), n(3), n(1), n(0), p(2)],
    [p(7), p(3), p(6), n(1), p(5), n(4), n(2), n(0)],
];

/// A consistency violation found by [`CayleyTable::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum TableViolation {
    #[error("E_0 row/column is not the identity at entry ({i}, {j})")]
    IdentityBroken { i: usize, j: usize },
    #[error("off-diagonal antisymmetry fails at pair ({i}, {j})")]
    Antisymmetry { i: usize, j: usize },
    #[error("diagonal entry ({i}, {i}) is not +-E_0")]
    DiagonalNotReal { i: usize },
}

/// The signed 8x8 basis-product table of one algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    pub kind: AlgebraKind,
    pub entries: [[SignedBasis; 8]; 8],
}

impl CayleyTable {
    pub fn new(kind: AlgebraKind) -> Self {
        let entries = match kind {
            AlgebraKind::Octonion => OCTONION_ENTRIES,
            AlgebraKind::SplitOctonion => SPLIT_ENTRIES,
        };
        CayleyTable { kind, entries }
    }

    pub fn entry(&self, i: usize, j: usize) -> SignedBasis {
        self.entries[i][j]
    }

    /// `Re(E_mu E_mu)` along the diagonal: the metric signs gamma_{mu mu}.
    pub fn metric_diagonal(&self) -> [i64; 8] {
        let mut diag = [0i64; 8];
        for (i, d) in diag.iter_mut().enumerate() {
            let e = self.entries[i][i];
            debug_assert_eq!(e.index, 0);
            *d = e.sign as i64;
        }
        diag
    }

    /// Machine-checks the structural invariants the whole crate relies on:
    /// `E_0` is a two-sided identity, the imaginary off-diagonal block is
    /// antisymmetric, and every diagonal entry is `+-E_0`.
    pub fn validate(&self) -> Result<(), TableViolation> {
        for j in 0..8 {
            if self.entries[0][j] != SB::pos(j) {
                return Err(TableViolation::IdentityBroken { i: 0, j });
            }
            if self.entries[j][0] != SB::pos(j) {
                return Err(TableViolation::IdentityBroken { i: j, j: 0 });
            }
        }
        for i in 1..8 {
            for j in 1..8 {
                if i == j {
                    if self.entries[i][i].index != 0 || self.entries[i][i].sign == 0 {
                        return Err(TableViolation::DiagonalNotReal { i });
                    }
                } else if self.entries[i][j] != self.entries[j][i].negated() {
                    return Err(TableViolation::Antisymmetry { i, j });
                }
            }
        }
        Ok(())
    }

    /// Copy of the table with the sign of one entry flipped. Negative-path
    /// fixture for exercising [`CayleyTable::validate`].
    pub fn with_sign_flipped(&self, i: usize, j: usize) -> CayleyTable {
        let mut t = *self;
        t.entries[i][j] = t.entries[i][j].negated();
        t
    }
}

/// Table lookup for `E_i * E_j`. Total and deterministic.
pub fn basis_product(kind: AlgebraKind, i: usize, j: usize) -> SignedBasis {
    assert!(i < 8 && j < 8, "basis index out of range");
    match kind {
        AlgebraKind::Octonion => OCTONION_ENTRIES[i][j],
        AlgebraKind::SplitOctonion => SPLIT_ENTRIES[i][j],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_table_spot_values() {
        // Table I row 1: E_1 E_2 = E_4.
        assert_eq!(basis_product(AlgebraKind::Octonion, 1, 2), SB::pos(4));
        // Table II row 1 col 1: E_1^2 = +E_0.
        assert_eq!(basis_product(AlgebraKind::SplitOctonion, 1, 1), SB::pos(0));
        for kind in AlgebraKind::ALL {
            for j in 0..8 {
                assert_eq!(basis_product(kind, 0, j), SB::pos(j));
            }
        }
    }

    #[test]
    fn both_tables_validate() {
        for kind in AlgebraKind::ALL {
            CayleyTable::new(kind).validate().unwrap();
        }
    }

    #[test]
    fn off_diagonal_antisymmetry_is_machine_checked() {
        for kind in AlgebraKind::ALL {
            for i in 1..8 {
                for j in 1..8 {
                    if i != j {
                        assert_eq!(
                            basis_product(kind, i, j),
                            basis_product(kind, j, i).negated(),
                            "{kind} pair ({i},{j})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn corrupted_table_names_the_violating_pair() {
        let bad = CayleyTable::new(AlgebraKind::Octonion).with_sign_flipped(1, 2);
        assert_eq!(
            bad.validate(),
            Err(TableViolation::Antisymmetry { i: 1, j: 2 })
        );
        let bad0 = CayleyTable::new(AlgebraKind::SplitOctonion).with_sign_flipped(0, 3);
        assert_eq!(
            bad0.validate(),
            Err(TableViolation::IdentityBroken { i: 0, j: 3 })
        );
    }

    #[test]
    fn metric_diagonals_match_the_table() {
        assert_eq!(
            CayleyTable::new(AlgebraKind::Octonion).metric_diagonal(),
            [1, -1, -1, -1, -1, -1, -1, -1]
        );
        assert_eq!(
            CayleyTable::new(AlgebraKind::SplitOctonion).metric_diagonal(),
            [1, 1, -1, 1, 1, 1, -1, -1]
        );
    }
}

//! Enumeration and classification of the canonical 2- and 4-dimensional
//! subalgebras `{E_0, E_mu}` and `{E_0, E_mu, E_mu+1, E_mu+3}` (imaginary
//! indices cycle with period 7).

use serde::{Deserialize, Serialize};

use super::table::{basis_product, AlgebraKind};

/// Isomorphism class of a subalgebra, decided by the signs of the squares of
/// its imaginary units (given closure).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubalgebraClass {
    Real,
    Complex,
    SplitComplex,
    Quaternion,
    SplitQuaternion,
}

impl std::fmt::Display for SubalgebraClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SubalgebraClass::Real => "R",
            SubalgebraClass::Complex => "C",
            SubalgebraClass::SplitComplex => "split-C",
            SubalgebraClass::Quaternion => "H",
            SubalgebraClass::SplitQuaternion => "split-H",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoDimSubalgebra {
    pub mu: usize,
    pub class: SubalgebraClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourDimSubalgebra {
    /// Generating index: the set is `{0, mu, mu+1, mu+3}` mod the 7-cycle.
    pub mu: usize,
    pub indices: [usize; 4],
    pub class: SubalgebraClass,
    /// A pair whose product left the set, if closure failed (which would
    /// signal a table transcription error).
    pub closure_violation: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraReport {
    pub kind: AlgebraKind,
    pub two_dim: Vec<TwoDimSubalgebra>,
    pub four_dim: Vec<FourDimSubalgebra>,
}

fn wrap(i: usize) -> usize {
    (i - 1) % 7 + 1
}

fn square_sign(kind: AlgebraKind, mu: usize) -> i8 {
    basis_product(kind, mu, mu).sign
}

/// Classifies the seven `{E_0, E_mu}` and seven `{E_0, E_mu, E_mu+1, E_mu+3}`
/// subalgebras of the given table.
pub fn classify_subalgebras(kind: AlgebraKind) -> SubalgebraReport {
    let two_dim = (1..8)
        .map(|mu| TwoDimSubalgebra {
            mu,
            class: if square_sign(kind, mu) < 0 {
                SubalgebraClass::Complex
            } else {
                SubalgebraClass::SplitComplex
            },
        })
        .collect();

    let four_dim = (1..8)
        .map(|mu| {
            let indices = [0, mu, wrap(mu + 1), wrap(mu + 3)];
            let mut closure_violation = None;
            'outer: for &i in &indices {
                for &j in &indices {
                    let prod = basis_product(kind, i, j);
                    if !indices.contains(&prod.index) {
                        closure_violation = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let all_negative = indices[1..].iter().all(|&m| square_sign(kind, m) < 0);
            let class = if all_negative {
                SubalgebraClass::Quaternion
            } else {
                SubalgebraClass::SplitQuaternion
            };
            FourDimSubalgebra {
                mu,
                indices,
                class,
                closure_violation,
            }
        })
        .collect();

    SubalgebraReport {
        kind,
        two_dim,
        four_dim,
    }
}

//! The graded mode brackets under an explicit sign/pairing convention.
//!
//! The continuum component brackets fix the structure only up to a Fourier
//! transcription: the delta function becomes the mode constraint
//! `delta_{m+n,0}`, its derivative a factor linear in the mode, and the
//! central pairing is printed as `delta_{mu nu}` in the component display but
//! as the real-part projection (= gamma) in the superfield bracket. The
//! surviving freedoms are exactly the four toggles of
//! [`BracketConvention`]; every check in this module is run per convention.

use serde::Serialize;

use super::generator::{GradedElement, ModeGenerator};
use crate::algebra::{basis_product, AlgebraKind};
use crate::scalar::Scalar;
use crate::tensor::metric_from_table;

/// Which diagonal pairing multiplies the central terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentralPairing {
    /// `gamma_{mu nu}` (the real-part projection of `E_mu E_nu`).
    Gamma,
    /// The literal `delta_{mu nu}` of the printed component brackets.
    Delta,
}

/// The sign and pairing freedoms the source leaves open.
///
/// * `psi_phi_sign` (s1) multiplies the `[psi, phi]` structure term;
/// * `phi_phi_sign` (s2) multiplies the `[phi, phi]` structure term;
/// * `central_mode_sign` (s3) multiplies the mode-weighted central term of
///   `[phi, phi]` (the Fourier image of the delta-derivative);
/// * `pairing` selects the central pairing.
///
/// The printed component brackets correspond to
/// `(pairing=Delta, s1=+1, s2=-1, s3=+1)`; the superfield form with the
/// real-part projection corresponds to `pairing=Gamma` with the same signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BracketConvention {
    pub pairing: CentralPairing,
    pub psi_phi_sign: i64,
    pub phi_phi_sign: i64,
    pub central_mode_sign: i64,
}

impl BracketConvention {
    /// All 16 conventions in a fixed deterministic order.
    pub fn all() -> Vec<BracketConvention> {
        let mut out = Vec::with_capacity(16);
        for pairing in [CentralPairing::Gamma, CentralPairing::Delta] {
            for s1 in [1, -1] {
                for s2 in [1, -1] {
                    for s3 in [1, -1] {
                        out.push(BracketConvention {
                            pairing,
                            psi_phi_sign: s1,
                            phi_phi_sign: s2,
                            central_mode_sign: s3,
                        });
                    }
                }
            }
        }
        out
    }

    /// The transcription closest to the printed component brackets.
    pub fn printed() -> BracketConvention {
        BracketConvention {
            pairing: CentralPairing::Delta,
            psi_phi_sign: 1,
            phi_phi_sign: -1,
            central_mode_sign: 1,
        }
    }
}

impl std::fmt::Display for BracketConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "pairing={} s1={:+} s2={:+} s3={:+}",
            match self.pairing {
                CentralPairing::Gamma => "gamma",
                CentralPairing::Delta => "delta",
            },
            self.psi_phi_sign,
            self.phi_phi_sign,
            self.central_mode_sign
        )
    }
}

/// The mode algebra of one (kind, convention) pair, with the structure data
/// cached for sweeping.
pub struct ModeAlgebra {
    pub kind: AlgebraKind,
    pub convention: BracketConvention,
    /// Diagonal central pairing `P(mu, mu)`.
    pairing: [i64; 8],
    /// `f_{mu nu}^lambda` as the unique `(lambda, sign)` per pair, if any.
    /// These are the half-commutator structure constants `b_{mu nu}^kappa`
    /// read off the table, with `f_{0 nu} = 0`.
    structure: [[Option<(usize, i64)>; 8]; 8],
}

impl ModeAlgebra {
    pub fn new(kind: AlgebraKind, convention: BracketConvention) -> Self {
        let metric = metric_from_table(kind);
        let mut pairing = [0i64; 8];
        for (mu, p) in pairing.iter_mut().enumerate() {
            *p = match convention.pairing {
                CentralPairing::Gamma => metric.sign(mu),
                CentralPairing::Delta => 1,
            };
        }
        let mut structure = [[None; 8]; 8];
        for mu in 1..8 {
            for nu in 1..8 {
                if mu == nu {
                    continue;
                }
                let sb = basis_product(kind, mu, nu);
                structure[mu][nu] = Some((sb.index, sb.sign as i64));
            }
        }
        ModeAlgebra {
            kind,
            convention,
            pairing,
            structure,
        }
    }

    fn central_pairing(&self, mu: usize, nu: usize) -> i64 {
        if mu == nu {
            self.pairing[mu]
        } else {
            0
        }
    }

    /// Graded bracket of two generators.
    pub fn bracket_generators<S: Scalar>(
        &self,
        g1: ModeGenerator,
        g2: ModeGenerator,
    ) -> GradedElement<S> {
        use ModeGenerator::{Phi, Psi, K};
        let conv = &self.convention;
        let mut out = GradedElement::zero();
        match (g1, g2) {
            (K, _) | (_, K) => {}
            (
                Psi {
                    index: m1,
                    mode: md1,
                },
                Psi {
                    index: m2,
                    mode: md2,
                },
            ) => {
                if md1 + md2 == 0 {
                    out.add_term(K, S::from_int(self.central_pairing(m1, m2)));
                }
            }
            (
                Psi {
                    index: m1,
                    mode: md1,
                },
                Phi {
                    index: m2,
                    mode: md2,
                },
            )
            | (
                Phi {
                    index: m1,
                    mode: md1,
                },
                Psi {
                    index: m2,
                    mode: md2,
                },
            ) => {
                if let Some((lam, sign)) = self.structure[m1][m2] {
                    out.add_term(
                        ModeGenerator::psi(lam, md1 + md2),
                        S::from_int(conv.psi_phi_sign * sign),
                    );
                }
            }
            (
                Phi {
                    index: m1,
                    mode: md1,
                },
                Phi {
                    index: m2,
                    mode: md2,
                },
            ) => {
                if let Some((lam, sign)) = self.structure[m1][m2] {
                    out.add_term(
                        ModeGenerator::phi(lam, md1 + md2),
                        S::from_int(conv.phi_phi_sign * sign),
                    );
                }
                if md1 + md2 == 0 {
                    out.add_term(
                        K,
                        S::from_int(conv.central_mode_sign * md1 * self.central_pairing(m1, m2)),
                    );
                }
            }
        }
        out
    }

    /// Bilinear extension to formal sums.
    pub fn bracket<S: Scalar>(
        &self,
        e1: &GradedElement<S>,
        e2: &GradedElement<S>,
    ) -> GradedElement<S> {
        let mut out = GradedElement::zero();
        for (g1, c1) in e1.terms() {
            for (g2, c2) in e2.terms() {
                let b = self.bracket_generators::<S>(*g1, *g2);
                let factor = c1.clone() * c2.clone();
                out.add_scaled(&b, &factor);
            }
        }
        out
    }
}

/// One-shot generator bracket; sweeps should build [`ModeAlgebra`] once.
pub fn mode_bracket<S: Scalar>(
    kind: AlgebraKind,
    convention: BracketConvention,
    g1: ModeGenerator,
    g2: ModeGenerator,
) -> GradedElement<S> {
    ModeAlgebra::new(kind, convention).bracket_generators(g1, g2)
}

//! Graded antisymmetry, the super-Jacobian, the graded Malcev sweep, and the
//! convention search.

use num_traits::Zero;

use rayon::prelude::*;
use serde::Serialize;

use super::bracket::{BracketConvention, ModeAlgebra};
use super::generator::{GradedElement, ModeGenerator};
use crate::algebra::{commutator, AlgebraKind, Element};
use crate::scalar::Scalar;
use crate::triple::SweepOutcome;
use crate::Elem;

/// All generators with |mode| <= bound, plus K, in deterministic order.
fn generators(bound: i64) -> Vec<ModeGenerator> {
    let mut out = vec![ModeGenerator::K];
    for index in 0..8 {
        for mode in -bound..=bound {
            out.push(ModeGenerator::psi(index, mode));
        }
    }
    for index in 0..8 {
        for mode in -bound..=bound {
            out.push(ModeGenerator::phi(index, mode));
        }
    }
    out
}

/// Super-Jacobian
/// `J(x,y,z) = (-1)^{e_x e_z}[x,[y,z]] + (-1)^{e_z e_y}[z,[x,y]]
///           + (-1)^{e_y e_x}[y,[z,x]]`
/// over homogeneous elements (zero arguments contribute nothing).
pub fn super_jacobian<S: Scalar>(
    alg: &ModeAlgebra,
    x: &GradedElement<S>,
    y: &GradedElement<S>,
    z: &GradedElement<S>,
) -> GradedElement<S> {
    let px = x.parity().unwrap_or(0) as i64;
    let py = y.parity().unwrap_or(0) as i64;
    let pz = z.parity().unwrap_or(0) as i64;
    let sign = |p: i64| S::from_int(if p % 2 == 0 { 1 } else { -1 });
    let mut out = GradedElement::zero();
    out.add_scaled(&alg.bracket(x, &alg.bracket(y, z)), &sign(px * pz));
    out.add_scaled(&alg.bracket(z, &alg.bracket(x, y)), &sign(pz * py));
    out.add_scaled(&alg.bracket(y, &alg.bracket(z, x)), &sign(py * px));
    out
}

/// Checks `bracket(g1, g2) = (-1)^{e1 e2 + 1} bracket(g2, g1)` for every
/// generator pair with |mode| <= bound.
pub fn graded_antisymmetry_check(
    kind: AlgebraKind,
    convention: BracketConvention,
    mode_bound: i64,
) -> SweepOutcome {
    let alg = ModeAlgebra::new(kind, convention);
    let gens = generators(mode_bound);
    let mut out = SweepOutcome::new(kind);
    for (i, &g1) in gens.iter().enumerate() {
        for (j, &g2) in gens.iter().enumerate() {
            let fwd: GradedElement<i64> = alg.bracket_generators(g1, g2);
            let mut rev: GradedElement<i64> = GradedElement::zero();
            let sign = if (g1.parity() * g2.parity() + 1) % 2 == 0 {
                1
            } else {
                -1
            };
            rev.add_scaled(&alg.bracket_generators(g2, g1), &sign);
            out.record(&[i, j], fwd == rev);
        }
    }
    out
}

/// Result of one graded Malcev sweep for one convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperMalcevReport {
    pub kind: AlgebraKind,
    pub convention: BracketConvention,
    pub mode_bound: i64,
    pub triples_checked: u64,
    /// First generator triple violating `J(x,y,[x,z]) = [J(x,y,z),x]`.
    pub counterexample: Option<[ModeGenerator; 3]>,
}

impl SuperMalcevReport {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Verifies the graded transcription of the Malcev identity
/// `J(x,y,[x,z]) = [J(x,y,z),x]` over all generator triples with
/// |mode| <= mode_bound. Integer arithmetic throughout (every structure
/// coefficient is an integer), parallel over the first slot, first
/// counterexample in deterministic generator order.
pub fn super_malcev_check(
    kind: AlgebraKind,
    convention: BracketConvention,
    mode_bound: i64,
) -> SuperMalcevReport {
    assert!(mode_bound >= 1);
    let alg = ModeAlgebra::new(kind, convention);
    let gens = generators(mode_bound);
    let total = (gens.len() as u64).pow(3);

    let counterexample = gens.par_iter().find_map_first(|&x| {
        let ex: GradedElement<i64> = GradedElement::generator(x);
        for &y in &gens {
            let ey: GradedElement<i64> = GradedElement::generator(y);
            for &z in &gens {
                let ez: GradedElement<i64> = GradedElement::generator(z);
                let xz = alg.bracket(&ex, &ez);
                let lhs = super_jacobian(&alg, &ex, &ey, &xz);
                let rhs = alg.bracket(&super_jacobian(&alg, &ex, &ey, &ez), &ex);
                if lhs != rhs {
                    return Some([x, y, z]);
                }
            }
        }
        None
    });

    SuperMalcevReport {
        kind,
        convention,
        mode_bound,
        triples_checked: total,
        counterexample,
    }
}

/// Checks that the mode-0 even subalgebra reproduces the element-level
/// half-commutator algebra exactly: `[phi_mu^0, phi_nu^0]` carries the
/// structure coefficients `s2 * [E_mu, E_nu]` and no central term.
pub fn mode0_even_subalgebra_check(kind: AlgebraKind, convention: BracketConvention) -> bool {
    let alg = ModeAlgebra::new(kind, convention);
    for mu in 0..8 {
        for nu in 0..8 {
            let b: GradedElement<i64> =
                alg.bracket_generators(ModeGenerator::phi(mu, 0), ModeGenerator::phi(nu, 0));
            let comm: Elem = commutator(kind, &Element::basis(mu), &Element::basis(nu));
            let mut expect: GradedElement<i64> = GradedElement::zero();
            for kappa in 0..8 {
                let c = comm.coeff(kappa);
                if !c.is_zero() {
                    debug_assert!(c.is_integer());
                    expect.add_term(
                        ModeGenerator::phi(kappa, 0),
                        convention.phi_phi_sign * c.to_integer(),
                    );
                }
            }
            if b != expect {
                return false;
            }
        }
    }
    true
}

/// Verdict for one convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionReport {
    pub convention: BracketConvention,
    pub antisymmetry: SweepOutcome,
    pub mode0_even_subalgebra: bool,
    pub malcev: SuperMalcevReport,
}

impl ConventionReport {
    pub fn pass(&self) -> bool {
        self.antisymmetry.pass() && self.mode0_even_subalgebra && self.malcev.pass()
    }
}

/// Runs graded antisymmetry, the mode-0 correspondence, and the graded
/// Malcev sweep for all 16 conventions, in deterministic order.
pub fn convention_search(kind: AlgebraKind, mode_bound: i64) -> Vec<ConventionReport> {
    BracketConvention::all()
        .into_iter()
        .map(|convention| ConventionReport {
            convention,
            antisymmetry: graded_antisymmetry_check(kind, convention, mode_bound),
            mode0_even_subalgebra: mode0_even_subalgebra_check(kind, convention),
            malcev: super_malcev_check(kind, convention, mode_bound),
        })
        .collect()
}

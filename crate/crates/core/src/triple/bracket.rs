//! The 3-bracket `[a,b,x] = D_{a,b} x` and the generalized Lie 3-algebra
//! axioms, plus the bilinear-form lemma suite.
//!
//! The "additional symmetry" axiom is printed in the source as
//! `([x,y,a],b) - (a,[x,y,b]) = 0`; measured exhaustively that statement is
//! false (first counterexample `(x,y,a,b) = (E_1,E_2,E_1,E_2)`), while the
//! pair-exchange form `([x,y,a],b) = ([a,b,x],y)` from the definition the
//! source cites holds on all 8^4 tuples for both algebras. Both readings are
//! evaluated and reported.

use num_traits::Zero;

use crate::algebra::{bilinear_form, conjugate, multiply, AlgebraKind, Element};
use crate::scalar::Scalar;
use crate::{Coeff, Elem};

use super::derivation::derivation_apply;
use super::SweepOutcome;

/// The 3-bracket `[a, b, x] = D_{a,b} x`.
pub fn three_bracket<S: Scalar>(
    kind: AlgebraKind,
    a: &Element<S>,
    b: &Element<S>,
    x: &Element<S>,
) -> Element<S> {
    derivation_apply(kind, a, b, x)
}

/// Pass/fail plus exact discrepancy for a two-sided identity.
#[derive(Clone, Debug, PartialEq)]
pub struct PairCheck<S> {
    pub pass: bool,
    pub discrepancy: S,
}

/// Fundamental identity
/// `[x,y,[a,b,c]] = [[x,y,a],b,c] + [a,[x,y,b],c] + [a,b,[x,y,c]]`
/// (the printed middle term drops its third slot; `c` is the reading that
/// type-checks).
pub fn fundamental_identity_check<S: Scalar>(
    kind: AlgebraKind,
    x: &Element<S>,
    y: &Element<S>,
    a: &Element<S>,
    b: &Element<S>,
    c: &Element<S>,
) -> PairCheck<Element<S>> {
    let lhs = three_bracket(kind, x, y, &three_bracket(kind, a, b, c));
    let r1 = three_bracket(kind, &three_bracket(kind, x, y, a), b, c);
    let r2 = three_bracket(kind, a, &three_bracket(kind, x, y, b), c);
    let r3 = three_bracket(kind, a, b, &three_bracket(kind, x, y, c));
    let discrepancy = &lhs - &(&(&r1 + &r2) + &r3);
    PairCheck {
        pass: discrepancy.is_zero(),
        discrepancy,
    }
}

/// Metric compatibility `([a,b,x],y) + (x,[a,b,y]) = 0`.
pub fn metric_compatibility_check<S: Scalar>(
    kind: AlgebraKind,
    a: &Element<S>,
    b: &Element<S>,
    x: &Element<S>,
    y: &Element<S>,
) -> PairCheck<S> {
    let t1 = bilinear_form(kind, &three_bracket(kind, a, b, x), y);
    let t2 = bilinear_form(kind, x, &three_bracket(kind, a, b, y));
    let discrepancy = t1 + t2;
    PairCheck {
        pass: discrepancy.is_zero(),
        discrepancy,
    }
}

/// The additional symmetry axiom exactly as printed:
/// `([x,y,a],b) - (a,[x,y,b]) = 0`. False in general; kept for measurement.
pub fn additional_symmetry_printed<S: Scalar>(
    kind: AlgebraKind,
    x: &Element<S>,
    y: &Element<S>,
    a: &Element<S>,
    b: &Element<S>,
) -> PairCheck<S> {
    let t1 = bilinear_form(kind, &three_bracket(kind, x, y, a), b);
    let t2 = bilinear_form(kind, a, &three_bracket(kind, x, y, b));
    let discrepancy = t1 - t2;
    PairCheck {
        pass: discrepancy.is_zero(),
        discrepancy,
    }
}

/// The pair-exchange reading `([x,y,a],b) - ([a,b,x],y) = 0`, which holds.
pub fn additional_symmetry_pair_exchange<S: Scalar>(
    kind: AlgebraKind,
    x: &Element<S>,
    y: &Element<S>,
    a: &Element<S>,
    b: &Element<S>,
) -> PairCheck<S> {
    let t1 = bilinear_form(kind, &three_bracket(kind, x, y, a), b);
    let t2 = bilinear_form(kind, &three_bracket(kind, a, b, x), y);
    let discrepancy = t1 - t2;
    PairCheck {
        pass: discrepancy.is_zero(),
        discrepancy,
    }
}

/// `(ab, x) + (a, bx)`, the first supporting lemma as printed. False: already
/// `a = b = x = E_0` gives 2.
pub fn lemma_product_printed<S: Scalar>(
    kind: AlgebraKind,
    a: &Element<S>,
    b: &Element<S>,
    x: &Element<S>,
) -> S {
    bilinear_form(kind, &multiply(kind, a, b), x) + bilinear_form(kind, a, &multiply(kind, b, x))
}

/// Left-adjoint lemma `(ax, y) = (x, conj(a) y)`; holds and carries the
/// content the printed lemma was after.
pub fn lemma_left_adjoint<S: Scalar>(
    kind: AlgebraKind,
    a: &Element<S>,
    x: &Element<S>,
    y: &Element<S>,
) -> S {
    bilinear_form(kind, &multiply(kind, a, x), y)
        - bilinear_form(kind, x, &multiply(kind, &conjugate(a), y))
}

/// Right-adjoint lemma `(xa, y) = (x, y conj(a))`; holds.
pub fn lemma_right_adjoint<S: Scalar>(
    kind: AlgebraKind,
    a: &Element<S>,
    x: &Element<S>,
    y: &Element<S>,
) -> S {
    bilinear_form(kind, &multiply(kind, x, a), y)
        - bilinear_form(kind, x, &multiply(kind, y, &conjugate(a)))
}

/// `(ab, xy) - (ba, yx)`, the second printed lemma. Holds on purely imaginary
/// arguments but fails once `E_0` components enter (first basis
/// counterexample `(E_0, E_1, E_2, E_4)`).
pub fn lemma_double_product<S: Scalar>(
    kind: AlgebraKind,
    a: &Element<S>,
    b: &Element<S>,
    x: &Element<S>,
    y: &Element<S>,
) -> S {
    bilinear_form(kind, &multiply(kind, a, b), &multiply(kind, x, y))
        - bilinear_form(kind, &multiply(kind, b, a), &multiply(kind, y, x))
}

fn bases() -> Vec<Elem> {
    (0..8).map(Element::basis).collect()
}

/// Basis-bracket structure constants `[E_a, E_b, E_x] = f_{abx}^s E_s` as an
/// integer table, read off the real operator.
fn f_table(kind: AlgebraKind) -> Vec<[i64; 8]> {
    let e = bases();
    let mut f = Vec::with_capacity(512);
    for a in 0..8 {
        for b in 0..8 {
            for x in 0..8 {
                let v = three_bracket(kind, &e[a], &e[b], &e[x]);
                f.push(std::array::from_fn(|s| {
                    let c = v.coeff(s);
                    debug_assert!(c.is_integer());
                    c.to_integer()
                }));
            }
        }
    }
    f
}

/// Exhaustive fundamental identity over all 8^5 basis quintuples (and all
/// eight output components). Expanded through the basis bracket table, which
/// is exact by multilinearity of the bracket.
pub fn sweep_fundamental_identity(kind: AlgebraKind) -> SweepOutcome {
    let f = f_table(kind);
    let fv = |a: usize, b: usize, x: usize| -> &[i64; 8] { &f[(a * 8 + b) * 8 + x] };
    let mut out = SweepOutcome::new(kind);
    for x in 0..8 {
        for y in 0..8 {
            for a in 0..8 {
                for b in 0..8 {
                    for c in 0..8 {
                        let mut ok = true;
                        'comp: for t in 0..8 {
                            let mut lhs = 0i64;
                            let mut rhs = 0i64;
                            for s in 0..8 {
                                lhs += fv(a, b, c)[s] * fv(x, y, s)[t];
                                rhs += fv(x, y, a)[s] * fv(s, b, c)[t]
                                    + fv(x, y, b)[s] * fv(a, s, c)[t]
                                    + fv(x, y, c)[s] * fv(a, b, s)[t];
                            }
                            if lhs != rhs {
                                ok = false;
                                break 'comp;
                            }
                        }
                        out.record(&[x, y, a, b, c], ok);
                    }
                }
            }
        }
    }
    out
}

/// Exhaustive metric compatibility over all 8^4 basis tuples.
pub fn sweep_metric_compatibility(kind: AlgebraKind) -> SweepOutcome {
    let e = bases();
    let mut out = SweepOutcome::new(kind);
    for a in 0..8 {
        for b in 0..8 {
            for x in 0..8 {
                for y in 0..8 {
                    let c = metric_compatibility_check(kind, &e[a], &e[b], &e[x], &e[y]);
                    out.record(&[a, b, x, y], c.pass);
                }
            }
        }
    }
    out
}

/// Exhaustive additional-symmetry sweep over all 8^4 basis tuples, for both
/// the printed reading and the pair-exchange reading.
pub fn sweep_additional_symmetry(kind: AlgebraKind) -> (SweepOutcome, SweepOutcome) {
    let e = bases();
    let mut printed = SweepOutcome::new(kind);
    let mut exchange = SweepOutcome::new(kind);
    for x in 0..8 {
        for y in 0..8 {
            for a in 0..8 {
                for b in 0..8 {
                    let p = additional_symmetry_printed(kind, &e[x], &e[y], &e[a], &e[b]);
                    printed.record(&[x, y, a, b], p.pass);
                    let q = additional_symmetry_pair_exchange(kind, &e[x], &e[y], &e[a], &e[b]);
                    exchange.record(&[x, y, a, b], q.pass);
                }
            }
        }
    }
    (printed, exchange)
}

/// Verdicts for the supporting-lemma suite, swept over basis tuples.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LemmaSweep {
    pub kind: AlgebraKind,
    /// `(ab,x) + (a,bx) = 0` as printed (false).
    pub product_printed: SweepOutcome,
    /// `(ax,y) = (x, conj(a) y)` (holds).
    pub left_adjoint: SweepOutcome,
    /// `(xa,y) = (x, y conj(a))` (holds).
    pub right_adjoint: SweepOutcome,
    /// `(ab,xy) = (ba,yx)` over all basis tuples (false once E_0 enters).
    pub double_product: SweepOutcome,
    /// Same, restricted to purely imaginary basis tuples (holds).
    pub double_product_imaginary: SweepOutcome,
}

pub fn sweep_lemmas(kind: AlgebraKind) -> LemmaSweep {
    let e = bases();
    let mut product_printed = SweepOutcome::new(kind);
    let mut left_adjoint = SweepOutcome::new(kind);
    let mut right_adjoint = SweepOutcome::new(kind);
    for a in 0..8 {
        for b in 0..8 {
            for x in 0..8 {
                product_printed.record(
                    &[a, b, x],
                    lemma_product_printed(kind, &e[a], &e[b], &e[x]).is_zero(),
                );
                left_adjoint.record(
                    &[a, b, x],
                    lemma_left_adjoint(kind, &e[a], &e[b], &e[x]).is_zero(),
                );
                right_adjoint.record(
                    &[a, b, x],
                    lemma_right_adjoint(kind, &e[a], &e[b], &e[x]).is_zero(),
                );
            }
        }
    }
    let mut double_product = SweepOutcome::new(kind);
    let mut double_product_imaginary = SweepOutcome::new(kind);
    for a in 0..8 {
        for b in 0..8 {
            for x in 0..8 {
                for y in 0..8 {
                    let zero: Coeff = lemma_double_product(kind, &e[a], &e[b], &e[x], &e[y]);
                    double_product.record(&[a, b, x, y], zero.is_zero());
                    if a > 0 && b > 0 && x > 0 && y > 0 {
                        double_product_imaginary.record(&[a, b, x, y], zero.is_zero());
                    }
                }
            }
        }
    }
    LemmaSweep {
        kind,
        product_printed,
        left_adjoint,
        right_adjoint,
        double_product,
        double_product_imaginary,
    }
}

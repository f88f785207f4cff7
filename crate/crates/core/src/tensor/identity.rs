//! The appendix identity suite A1..A18 over b, B, and gamma, evaluated
//! exhaustively in exact integer arithmetic.
//!
//! Each identity is evaluated *as printed*. Where the printed equation is
//! ambiguous or provably corrupted, additional documented readings are
//! evaluated alongside it and the report records which reading holds:
//!
//! * A4 — the gamma^3 block carries a `tau` absent from the left side; both
//!   the free-`tau` reading and the `tau -> lambda` substitution are run
//!   (neither holds: the printed equation is false for both algebras).
//! * A5 — false as printed; flipping the sign of the second metric term
//!   yields the symmetric-pair contraction, which holds.
//! * A9 — false as printed; the corrected mixed contraction
//!   `b_km r b^k_ns = -B_mnrs + g_ms g_nr - g_mn g_rs` holds.
//! * A15 — the printed right side puts three indices on a rank-4 tensor; the
//!   only well-formed reading takes the capital B as the rank-3 b, and that
//!   reading holds.
//! * A17 — well-formed as printed but false for both algebras (the true
//!   one-index B.B contraction needs b.b terms absent from the print).
//!
//! Failures are data: every reading reports its violation count, the maximum
//! residual, and sample violating index tuples.

use serde::Serialize;

use super::epsilon::signed_permutations;
use super::metric::metric_from_table;
use super::structure::{dual_tensor, structure_tensor_from_table};
use crate::algebra::AlgebraKind;
use crate::Coeff;

/// Names of the appendix identities in printed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[allow(clippy::upper_case_acronyms)]
pub enum IdentityId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
    A10,
    A11,
    A12,
    A13,
    A14,
    A15,
    A16,
    A17,
    A18,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        IdentityId::A1,
        IdentityId::A2,
        IdentityId::A3,
        IdentityId::A4,
        IdentityId::A5,
        IdentityId::A6,
        IdentityId::A7,
        IdentityId::A8,
        IdentityId::A9,
        IdentityId::A10,
        IdentityId::A11,
        IdentityId::A12,
        IdentityId::A13,
        IdentityId::A14,
        IdentityId::A15,
        IdentityId::A16,
        IdentityId::A17,
        IdentityId::A18,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IdentityId::A1 => "A1",
            IdentityId::A2 => "A2",
            IdentityId::A3 => "A3",
            IdentityId::A4 => "A4",
            IdentityId::A5 => "A5",
            IdentityId::A6 => "A6",
            IdentityId::A7 => "A7",
            IdentityId::A8 => "A8",
            IdentityId::A9 => "A9",
            IdentityId::A10 => "A10",
            IdentityId::A11 => "A11",
            IdentityId::A12 => "A12",
            IdentityId::A13 => "A13",
            IdentityId::A14 => "A14",
            IdentityId::A15 => "A15",
            IdentityId::A16 => "A16",
            IdentityId::A17 => "A17",
            IdentityId::A18 => "A18",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::A1 => "full contraction b^2 = -42",
            IdentityId::A2 => "full contraction B^2 = 168",
            IdentityId::A3 => "b_mkl b_n^kl = -6 gamma_mn",
            IdentityId::A4 => "three-term antisymmetrized b.b = B.gamma - gamma^3",
            IdentityId::A5 => "symmetric-pair b.b contraction",
            IdentityId::A6 => "b_kmn b^k_rs = B_mnrs - gamma gamma + gamma gamma",
            IdentityId::A7 => "two-index b.B contraction = -4 b",
            IdentityId::A8 => "B_mkle B_n^kle = 24 gamma_mn",
            IdentityId::A9 => "mixed b.b contraction with 1/2 B",
            IdentityId::A10 => "two-index B.B contraction",
            IdentityId::A11 => "antisymmetrized b.B bracket identity (4-bracket vs 3-brackets)",
            IdentityId::A12 => "antisymmetrized b.B = b.gamma bracket identity",
            IdentityId::A13 => "antisymmetrized b.B = -2 b.gamma bracket identity",
            IdentityId::A14 => "b_kmn B^k_res = 3 (b.gamma - b.gamma) brackets",
            IdentityId::A15 => "antisymmetrized b.B = 2 b.gamma (4-brackets)",
            IdentityId::A16 => "pure b.gamma 4-bracket identity with 3/4 weight",
            IdentityId::A17 => "one-index B.B contraction (gamma^3 minus 3 B.gamma)",
            IdentityId::A18 => "antisymmetrized B.B = b.b - B.gamma terms",
        }
    }
}

/// Verdict for one documented reading of one identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReadingReport {
    pub reading: &'static str,
    pub pass: bool,
    pub tuples_checked: u64,
    pub violations: u64,
    /// Largest |LHS - RHS| over all tuples, at unit antisymmetrization weight.
    pub max_abs_residual: Coeff,
    /// Up to five violating tuples with their exact residuals.
    pub sample_violations: Vec<(Vec<usize>, Coeff)>,
    /// The computed full contraction, for the scalar identities A1/A2.
    pub scalar: Option<i64>,
}

/// All evaluated readings of one identity for one algebra.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub kind: AlgebraKind,
    pub readings: Vec<ReadingReport>,
}

impl IdentityCheck {
    /// True if at least one documented reading holds exactly.
    pub fn holds_in_some_reading(&self) -> bool {
        self.readings.iter().any(|r| r.pass)
    }

    /// The as-printed reading (always evaluated first).
    pub fn printed(&self) -> &ReadingReport {
        &self.readings[0]
    }
}

struct Recorder {
    scale: i64,
    checked: u64,
    violations: u64,
    max_abs_scaled: i64,
    samples: Vec<(Vec<usize>, i64)>,
    scalar: Option<i64>,
}

impl Recorder {
    fn new(scale: i64) -> Self {
        Recorder {
            scale,
            checked: 0,
            violations: 0,
            max_abs_scaled: 0,
            samples: Vec::new(),
            scalar: None,
        }
    }

    fn rec(&mut self, idx: &[usize], scaled_residual: i64) {
        self.checked += 1;
        if scaled_residual != 0 {
            self.violations += 1;
            self.max_abs_scaled = self.max_abs_scaled.max(scaled_residual.abs());
            if self.samples.len() < 5 {
                self.samples.push((idx.to_vec(), scaled_residual));
            }
        }
    }

    fn into_report(self, reading: &'static str) -> ReadingReport {
        ReadingReport {
            reading,
            pass: self.violations == 0,
            tuples_checked: self.checked,
            violations: self.violations,
            max_abs_residual: Coeff::new(self.max_abs_scaled, self.scale),
            sample_violations: self
                .samples
                .into_iter()
                .map(|(i, r)| (i, Coeff::new(r, self.scale)))
                .collect(),
            scalar: self.scalar,
        }
    }
}

/// Tensor data with the contraction helpers the identity bodies use.
struct Ctx {
    g: [i64; 8],
    b3: Vec<i64>,
    b4: Vec<i64>,
    perms3: Vec<([usize; 3], i64)>,
    perms4: Vec<([usize; 4], i64)>,
}

impl Ctx {
    fn new(kind: AlgebraKind) -> Self {
        let metric = metric_from_table(kind);
        let b = structure_tensor_from_table(kind).expect("table-derived b");
        let big = dual_tensor(kind, &b).expect("dual of b");
        let mut b3 = vec![0i64; 512];
        let mut b4 = vec![0i64; 4096];
        for m in 0..8 {
            for n in 0..8 {
                for l in 0..8 {
                    b3[(m * 8 + n) * 8 + l] = b.at(m, n, l);
                    for s in 0..8 {
                        b4[((m * 8 + n) * 8 + l) * 8 + s] = big.at(m, n, l, s);
                    }
                }
            }
        }
        Ctx {
            g: metric.diag,
            b3,
            b4,
            perms3: signed_permutations::<3>(),
            perms4: signed_permutations::<4>(),
        }
    }

    #[inline]
    fn b(&self, m: usize, n: usize, l: usize) -> i64 {
        self.b3[(m * 8 + n) * 8 + l]
    }

    #[inline]
    fn bb(&self, m: usize, n: usize, r: usize, s: usize) -> i64 {
        self.b4[((m * 8 + n) * 8 + r) * 8 + s]
    }

    /// gamma_{mn} (diagonal)
    #[inline]
    fn gg(&self, m: usize, n: usize) -> i64 {
        if m == n {
            self.g[m]
        } else {
            0
        }
    }

    /// Signed permutation sum over three slots (24-free unit weight x6).
    fn alt3(&self, v: [usize; 3], f: impl Fn(usize, usize, usize) -> i64) -> i64 {
        let mut acc = 0;
        for (p, s) in &self.perms3 {
            acc += s * f(v[p[0]], v[p[1]], v[p[2]]);
        }
        acc
    }

    /// Signed permutation sum over four slots (unit weight x24).
    fn alt4(&self, v: [usize; 4], f: impl Fn(usize, usize, usize, usize) -> i64) -> i64 {
        let mut acc = 0;
        for (p, s) in &self.perms4 {
            acc += s * f(v[p[0]], v[p[1]], v[p[2]], v[p[3]]);
        }
        acc
    }
}

const IM: std::ops::Range<usize> = 1..8;

/// Evaluates every documented reading of `id` over all free-index
/// assignments in 1..=7, exactly.
pub fn verify_identity(kind: AlgebraKind, id: IdentityId) -> IdentityCheck {
    let ctx = Ctx::new(kind);
    let readings = match id {
        IdentityId::A1 => vec![a1(&ctx)],
        IdentityId::A2 => vec![a2(&ctx)],
        IdentityId::A3 => vec![a3(&ctx)],
        IdentityId::A4 => vec![a4_printed(&ctx), a4_tau_to_lambda(&ctx)],
        IdentityId::A5 => vec![a5(&ctx, false), a5(&ctx, true)],
        IdentityId::A6 => vec![a6(&ctx)],
        IdentityId::A7 => vec![a7(&ctx)],
        IdentityId::A8 => vec![a8(&ctx)],
        IdentityId::A9 => vec![a9_printed(&ctx), a9_corrected(&ctx)],
        IdentityId::A10 => vec![a10(&ctx)],
        IdentityId::A11 => vec![a11(&ctx)],
        IdentityId::A12 => vec![a12(&ctx)],
        IdentityId::A13 => vec![a13(&ctx)],
        IdentityId::A14 => vec![a14(&ctx)],
        IdentityId::A15 => vec![a15(&ctx)],
        IdentityId::A16 => vec![a16(&ctx)],
        IdentityId::A17 => vec![a17(&ctx)],
        IdentityId::A18 => vec![a18(&ctx)],
    };
    IdentityCheck { id, kind, readings }
}

fn a1(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(1);
    let mut scalar = 0i64;
    for m in IM {
        for n in IM {
            for l in IM {
                scalar += ctx.b(m, n, l) * ctx.g[m] * ctx.g[n] * ctx.g[l] * ctx.b(m, n, l);
            }
        }
    }
    rec.scalar = Some(scalar);
    rec.rec(&[], scalar + 42);
    rec.into_report("as printed")
}

fn a2(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(1);
    let mut scalar = 0i64;
    for m in IM {
        for n in IM {
            for r in IM {
                for s in IM {
                    scalar += ctx.bb(m, n, r, s)
                        * ctx.g[m]
                        * ctx.g[n]
                        * ctx.g[r]
                        * ctx.g[s]
                        * ctx.bb(m, n, r, s);
                }
            }
        }
    }
    rec.scalar = Some(scalar);
    rec.rec(&[], scalar - 168);
    rec.into_report("as printed")
}

fn a3(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(1);
    for m in IM {
        for n in IM {
            let mut lhs = 0;
            for k in IM {
                for l in IM {
                    lhs += ctx.b(m, k, l) * ctx.g[k] * ctx.g[l] * ctx.b(n, k, l);
                }
            }
            rec.rec(&[m, n], lhs + 6 * ctx.gg(m, n));
        }
    }
    rec.into_report("as printed")
}

fn a4_lhs_and_bterms(
    ctx: &Ctx,
    r: usize,
    m: usize,
    n: usize,
    l: usize,
    e: usize,
    s: usize,
) -> (i64, i64) {
    let lhs = ctx.alt3([m, n, l], |x1, x2, x3| {
        ctx.b(r, x1, x2) * ctx.b(x3, e, s)
            + ctx.b(s, x1, x2) * ctx.b(x3, r, e)
            + ctx.b(e, x1, x2) * ctx.b(x3, s, r)
    });
    let bterms = ctx.alt3([m, n, l], |x1, x2, x3| {
        ctx.bb(r, e, x1, x2) * ctx.gg(x3, s)
            + ctx.bb(e, s, x1, x2) * ctx.gg(x3, r)
            + ctx.bb(s, r, x1, x2) * ctx.gg(x3, e)
    });
    (lhs, bterms)
}

fn a4_printed(ctx: &Ctx) -> ReadingReport {
    // tau is a seventh free index; only the gamma^3 block depends on it.
    let mut rec = Recorder::new(6);
    for r in IM {
        for m in IM {
            for n in IM {
                for l in IM {
                    for e in IM {
                        for s in IM {
                            let (lhs, bterms) = a4_lhs_and_bterms(ctx, r, m, n, l, e, s);
                            for t in IM {
                                let ggg = ctx.gg(e, n) * ctx.gg(r, s) * ctx.gg(t, m)
                                    + ctx.gg(s, n) * ctx.gg(t, r) * ctx.gg(e, m)
                                    + ctx.gg(t, n) * ctx.gg(e, r) * ctx.gg(s, m);
                                rec.rec(&[r, m, n, l, e, s, t], lhs - (bterms - 6 * ggg));
                            }
                        }
                    }
                }
            }
        }
    }
    rec.into_report("as printed (tau free)")
}

fn a4_tau_to_lambda(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(6);
    for r in IM {
        for m in IM {
            for n in IM {
                for l in IM {
                    for e in IM {
                        for s in IM {
                            let (lhs, bterms) = a4_lhs_and_bterms(ctx, r, m, n, l, e, s);
                            let ggg = ctx.gg(e, n) * ctx.gg(r, s) * ctx.gg(l, m)
                                + ctx.gg(s, n) * ctx.gg(l, r) * ctx.gg(e, m)
                                + ctx.gg(l, n) * ctx.gg(e, r) * ctx.gg(s, m);
                            rec.rec(&[r, m, n, l, e, s], lhs - (bterms - 6 * ggg));
                        }
                    }
                }
            }
        }
    }
    rec.into_report("tau read as lambda")
}

fn a5(ctx: &Ctx, corrected: bool) -> ReadingReport {
    let mut rec = Recorder::new(1);
    for m in IM {
        for r in IM {
            for n in IM {
                for l in IM {
                    let mut lhs = 0;
                    for k in IM {
                        lhs += ctx.g[k]
                            * (ctx.b(k, m, r) * ctx.b(k, n, l) + ctx.b(k, m, l) * ctx.b(k, n, r));
                    }
                    let second = if corrected { 1 } else { -1 };
                    let rhs = ctx.gg(m, r) * ctx.gg(n, l) + second * ctx.gg(m, l) * ctx.gg(n, r)
                        - 2 * ctx.gg(m, n) * ctx.gg(r, l);
                    rec.rec(&[m, r, n, l], lhs - rhs);
                }
            }
        }
    }
    rec.into_report(if corrected {
        "second metric term sign corrected"
    } else {
        "as printed"
    })
}

fn a6(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(1);
    for m in IM {
        for n in IM {
            for r in IM {
                for s in IM {
                    let mut lhs = 0;
                    for k in IM {
                        lhs += ctx.g[k] * ctx.b(k, m, n) * ctx.b(k, r, s);
                    }
                    let rhs = ctx.bb(m, n, r, s) - ctx.gg(m, r) * ctx.gg(n, s)
                        + ctx.gg(m, s) * ctx.gg(n, r);
                    rec.rec(&[m, n, r, s], lhs - rhs);
                }
            }
        }
    }
    rec.into_report("as printed")
}

fn a7(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(1);
    for r in IM {
        for m in IM {
            for n in IM {
                let mut lhs = 0;
                for k in IM {
                    for l in IM {
                        lhs += ctx.b(k, l, r) * ctx.g[k] * ctx.g[l] * ctx.bb(k, l, m, n);
                    }
                }
                rec.rec(&[r, m, n], lhs + 4 * ctx.b(r, m, n));
            }
        }
    }
    rec.into_report("as printed")
}

fn a8(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(1);
    for m in IM {
        for n in IM {
            let mut lhs = 0;
            for k in IM {
                for l in IM {
                    for e in IM {
                        lhs += ctx.bb(m, k, l, e)
                            * ctx.g[k]
                            * ctx.g[l]
                            * ctx.g[e]
                            * ctx.bb(n, k, l, e);
                    }
                }
            }
            rec.rec(&[m, n], lhs - 24 * ctx.gg(m, n));
        }
    }
    rec.into_report("as printed")
}

fn a9_printed(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(2);
    for m in IM {
        for n in IM {
            for r in IM {
                for s in IM {
                    let mut lhs = 0;
                    let mut bb_term = 0;
                    for k in IM {
                        lhs += ctx.g[k] * ctx.b(k, m, r) * ctx.b(k, n, s);
                        bb_term += ctx.g[k] * ctx.b(k, m, n) * ctx.b(k, r, s);
                    }
                    let rhs2 = -bb_term
                        + ctx.bb(m, n, r, s)
                        + ctx.gg(m, r) * ctx.gg(n, s)
                        + ctx.gg(m, s) * ctx.gg(n, r)
                        - 2 * ctx.gg(m, n) * ctx.gg(r, s);
                    rec.rec(&[m, n, r, s], 2 * lhs - rhs2);
                }
            }
        }
    }
    rec.into_report("as printed")
}

fn a9_corrected(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(1);
    for m in IM {
        for n in IM {
            for r in IM {
                for s in IM {
                    let mut lhs = 0;
                    for k in IM {
                        lhs += ctx.g[k] * ctx.b(k, m, r) * ctx.b(k, n, s);
                    }
                    let rhs = -ctx.bb(m, n, r, s) + ctx.gg(m, s) * ctx.gg(n, r)
                        - ctx.gg(m, n) * ctx.gg(r, s);
                    rec.rec(&[m, n, r, s], lhs - rhs);
                }
            }
        }
    }
    rec.into_report("corrected: b.b = -B + gg - gg")
}

fn a10(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(1);
    for m in IM {
        for n in IM {
            for s in IM {
                for t in IM {
                    let mut lhs = 0;
                    for k in IM {
                        for l in IM {
                            lhs += ctx.bb(m, n, k, l) * ctx.g[k] * ctx.g[l] * ctx.bb(k, l, s, t);
                        }
                    }
                    let rhs = 4 * (ctx.gg(m, s) * ctx.gg(n, t) - ctx.gg(m, t) * ctx.gg(n, s))
                        - 2 * ctx.bb(m, n, s, t);
                    rec.rec(&[m, n, s, t], lhs - rhs);
                }
            }
        }
    }
    rec.into_report("as printed")
}

fn a11(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(24);
    let bk_contract = |x1: usize, x2: usize, x3: usize, x4: usize, s: usize| {
        let mut acc = 0;
        for k in IM {
            acc += ctx.g[k] * ctx.b(k, x1, x2) * ctx.bb(k, x3, x4, s);
        }
        acc
    };
    for m in IM {
        for n in IM {
            for r in IM {
                for e in IM {
                    for s in IM {
                        let lhs = 2 * ctx.alt4([m, n, r, e], |x1, x2, x3, x4| {
                            bk_contract(x1, x2, x3, x4, s)
                        });
                        let r1 =
                            4 * ctx.alt3([m, n, r], |x1, x2, x3| bk_contract(x1, x2, x3, e, s));
                        let r2 =
                            4 * ctx.alt3([m, n, r], |x1, x2, x3| bk_contract(e, x1, x2, x3, s));
                        rec.rec(&[m, n, r, e, s], lhs - (r1 - r2));
                    }
                }
            }
        }
    }
    rec.into_report("as printed")
}

fn a12(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(6);
    let bk = |a: usize, x1: usize, x2: usize, x3: usize, c: usize| {
        let mut acc = 0;
        for k in IM {
            acc += ctx.g[k] * ctx.b(k, a, x1) * ctx.bb(k, x2, x3, c);
        }
        acc
    };
    for m in IM {
        for n in IM {
            for r in IM {
                for s in IM {
                    for t in IM {
                        let l1 = ctx.alt3([m, n, r], |x1, x2, x3| bk(t, x1, x2, x3, s));
                        let l2 = ctx.alt3([m, n, r], |x1, x2, x3| bk(s, x1, x2, x3, t));
                        let r1 = ctx.alt3([m, n, r], |x1, x2, x3| ctx.b(s, x1, x2) * ctx.gg(x3, t));
                        let r2 = ctx.alt3([m, n, r], |x1, x2, x3| ctx.b(t, x1, x2) * ctx.gg(x3, s));
                        rec.rec(&[m, n, r, s, t], (l1 - l2) - (r1 - r2));
                    }
                }
            }
        }
    }
    rec.into_report("as printed")
}

fn a13(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(6);
    for m in IM {
        for n in IM {
            for s in IM {
                for r in IM {
                    for e in IM {
                        let l = ctx.alt3([m, n, s], |x1, x2, x3| {
                            let mut acc = 0;
                            for k in IM {
                                acc += ctx.g[k] * ctx.b(k, x1, x2) * ctx.bb(k, x3, r, e);
                            }
                            acc
                        });
                        let r1 = ctx.alt3([m, n, s], |x1, x2, x3| ctx.b(r, x1, x2) * ctx.gg(x3, e));
                        let r2 = ctx.alt3([m, n, s], |x1, x2, x3| ctx.b(e, x1, x2) * ctx.gg(x3, r));
                        rec.rec(&[m, n, s, r, e], l + 2 * (r1 - r2));
                    }
                }
            }
        }
    }
    rec.into_report("as printed")
}

fn a14(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(6);
    for m in IM {
        for n in IM {
            for r in IM {
                for e in IM {
                    for s in IM {
                        let mut l = 0;
                        for k in IM {
                            l += ctx.g[k] * ctx.b(k, m, n) * ctx.bb(k, r, e, s);
                        }
                        let r1 = ctx.alt3([r, e, s], |x1, x2, x3| ctx.b(m, x1, x2) * ctx.gg(x3, n));
                        let r2 = ctx.alt3([r, e, s], |x1, x2, x3| ctx.b(n, x1, x2) * ctx.gg(x3, m));
                        rec.rec(&[m, n, r, e, s], 6 * l - 3 * (r1 - r2));
                    }
                }
            }
        }
    }
    rec.into_report("as printed")
}

fn a15(ctx: &Ctx) -> ReadingReport {
    // As printed the right side gives the rank-4 tensor three indices; the
    // only well-formed reading takes it as the rank-3 b.
    let mut rec = Recorder::new(24);
    for r in IM {
        for e in IM {
            for m in IM {
                for n in IM {
                    for t in IM {
                        let l = ctx.alt4([r, e, m, n], |x1, x2, x3, x4| {
                            let mut acc = 0;
                            for k in IM {
                                acc += ctx.g[k] * ctx.b(k, x1, x2) * ctx.bb(k, x3, x4, t);
                            }
                            acc
                        });
                        let rb = ctx.alt4([r, e, m, n], |x1, x2, x3, x4| {
                            ctx.b(x3, x4, x1) * ctx.gg(x2, t)
                        });
                        rec.rec(&[r, e, m, n, t], l - 2 * rb);
                    }
                }
            }
        }
    }
    rec.into_report("capital B on the right read as lowercase b")
}

fn a16(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(24);
    for m in IM {
        for n in IM {
            for r in IM {
                for e in IM {
                    for s in IM {
                        let t1 = ctx.alt4([m, n, r, e], |x1, x2, x3, x4| {
                            ctx.b(x1, x2, x3) * ctx.gg(x4, s)
                        });
                        let t2 = ctx.alt4([m, n, r, s], |x1, x2, x3, x4| {
                            ctx.b(x1, x2, x3) * ctx.gg(x4, e)
                        });
                        let r1 = ctx.alt3([m, n, r], |x1, x2, x3| ctx.b(s, x1, x2) * ctx.gg(x3, e));
                        let r2 = ctx.alt3([m, n, r], |x1, x2, x3| ctx.b(e, x1, x2) * ctx.gg(x3, s));
                        rec.rec(&[m, n, r, e, s], (t1 - t2) - 3 * (r1 - r2));
                    }
                }
            }
        }
    }
    rec.into_report("as printed")
}

fn a17(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(6);
    for m in IM {
        for n in IM {
            for r in IM {
                for e in IM {
                    for s in IM {
                        for t in IM {
                            let mut l = 0;
                            for k in IM {
                                l += ctx.g[k] * ctx.bb(k, m, n, r) * ctx.bb(k, e, s, t);
                            }
                            let ggg = ctx.gg(e, n) * ctx.gg(r, s) * ctx.gg(t, m)
                                + ctx.gg(s, n) * ctx.gg(t, r) * ctx.gg(e, m)
                                + ctx.gg(t, n) * ctx.gg(e, r) * ctx.gg(s, m);
                            let q1 = ctx
                                .alt3([m, n, r], |x1, x2, x3| ctx.bb(e, s, x1, x2) * ctx.gg(x3, t));
                            let q2 = ctx
                                .alt3([m, n, r], |x1, x2, x3| ctx.bb(s, t, x1, x2) * ctx.gg(x3, e));
                            let q3 = ctx
                                .alt3([m, n, r], |x1, x2, x3| ctx.bb(t, e, x1, x2) * ctx.gg(x3, s));
                            rec.rec(&[m, n, r, e, s, t], 6 * l - (6 * ggg - 3 * (q1 + q2 + q3)));
                        }
                    }
                }
            }
        }
    }
    rec.into_report("as printed")
}

fn a18(ctx: &Ctx) -> ReadingReport {
    let mut rec = Recorder::new(24);
    for s in IM {
        for m in IM {
            for n in IM {
                for r in IM {
                    for e in IM {
                        for t in IM {
                            let l = ctx.alt4([m, n, r, e], |x1, x2, x3, x4| {
                                let mut acc = 0;
                                for k in IM {
                                    acc += ctx.g[k] * ctx.bb(k, s, x1, x2) * ctx.bb(k, x3, x4, t);
                                }
                                acc
                            });
                            let r1 = ctx.alt4([m, n, r, e], |x1, x2, x3, x4| {
                                ctx.b(s, x1, x2) * ctx.b(x3, x4, t)
                            });
                            let r2 = 24 * ctx.bb(m, n, r, e) * ctx.gg(s, t);
                            let r3 = ctx.alt4([m, n, r, e], |x1, x2, x3, x4| {
                                ctx.bb(s, x1, x2, x3) * ctx.gg(x4, t)
                            });
                            let r4 = ctx.alt4([m, n, r, e], |x1, x2, x3, x4| {
                                ctx.bb(t, x1, x2, x3) * ctx.gg(x4, s)
                            });
                            rec.rec(&[s, m, n, r, e, t], l - (r1 - r2 - 2 * (r3 + r4)));
                        }
                    }
                }
            }
        }
    }
    rec.into_report("as printed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn check(kind: AlgebraKind, id: IdentityId) -> IdentityCheck {
        verify_identity(kind, id)
    }

    #[test]
    fn scalar_identities_reproduce_the_printed_values() {
        for kind in AlgebraKind::ALL {
            let a1 = check(kind, IdentityId::A1);
            assert!(a1.printed().pass);
            assert_eq!(a1.printed().scalar, Some(-42));
            let a2 = check(kind, IdentityId::A2);
            assert!(a2.printed().pass);
            assert_eq!(a2.printed().scalar, Some(168));
        }
    }

    #[test]
    fn identities_true_as_printed() {
        use IdentityId::*;
        for kind in AlgebraKind::ALL {
            for id in [A3, A6, A7, A8, A10, A11, A12, A13, A14, A16, A18] {
                let c = check(kind, id);
                assert!(c.printed().pass, "{kind} {}: {:?}", id.label(), c.printed());
                assert_eq!(c.printed().violations, 0);
            }
        }
    }

    #[test]
    fn a15_holds_under_the_type_correcting_reading() {
        for kind in AlgebraKind::ALL {
            let c = check(kind, IdentityId::A15);
            assert_eq!(c.readings.len(), 1);
            assert!(c.readings[0].pass, "{kind}");
            assert_eq!(c.readings[0].tuples_checked, 16807);
        }
    }

    #[test]
    fn a4_fails_under_both_documented_readings() {
        for kind in AlgebraKind::ALL {
            let c = check(kind, IdentityId::A4);
            let printed = &c.readings[0];
            assert!(!printed.pass);
            assert_eq!(printed.tuples_checked, 823543);
            assert_eq!(printed.violations, 29953);
            assert_eq!(printed.max_abs_residual, Coeff::new(18, 6));
            let sub = &c.readings[1];
            assert!(!sub.pass);
            assert_eq!(sub.tuples_checked, 117649);
            assert_eq!(sub.violations, 4207);
            assert_eq!(sub.max_abs_residual, Coeff::new(18, 6));
        }
    }

    #[test]
    fn a5_fails_as_printed_and_holds_sign_corrected() {
        for kind in AlgebraKind::ALL {
            let c = check(kind, IdentityId::A5);
            assert!(!c.readings[0].pass);
            assert_eq!(c.readings[0].violations, 49);
            assert_eq!(c.readings[0].max_abs_residual, Coeff::from_int(2));
            assert!(c.readings[1].pass, "{kind}");
        }
    }

    #[test]
    fn a9_fails_as_printed_and_holds_corrected() {
        for kind in AlgebraKind::ALL {
            let c = check(kind, IdentityId::A9);
            assert!(!c.readings[0].pass);
            assert_eq!(c.readings[0].violations, 252);
            assert_eq!(c.readings[0].max_abs_residual, Coeff::new(2, 2));
            assert!(c.readings[1].pass, "{kind}");
        }
    }

    #[test]
    fn a17_fails_as_printed_for_both_algebras() {
        for kind in AlgebraKind::ALL {
            let c = check(kind, IdentityId::A17);
            assert!(!c.printed().pass);
            assert_eq!(c.printed().tuples_checked, 117649);
            assert_eq!(c.printed().violations, 2527);
            assert_eq!(c.printed().max_abs_residual, Coeff::new(18, 6));
        }
    }
}

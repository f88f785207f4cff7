//! The verification suites. Every check line reports `pass` as "the exact
//! measurement matches established ground truth", where ground truth is the
//! table-derived mathematics. The handful of printed equations that are
//! provably false (appendix identities A4, A5-as-printed, A9, A17, the
//! additional-symmetry axiom as printed, two supporting lemmas, and the
//! printed super-affine relative sign) are measured, marked `[erratum]`, and
//! asserted to fail in exactly the frozen way; a deviation in either
//! direction is a failure of the suite.

use num_traits::Zero;
use octonion_algebra::scalar::Scalar;
use serde::Serialize;

use octonion_algebra::algebra::{
    associator, bilinear_form, classify_subalgebras, conjugate, jacobian_element, malcev_check,
    multiply, AlgebraKind, CayleyTable, Element, SubalgebraClass,
};
use octonion_algebra::random::{random_element, seeded_rng};
use octonion_algebra::superaffine::{
    convention_search, graded_antisymmetry_check, mode0_even_subalgebra_check, BracketConvention,
    CentralPairing,
};
use octonion_algebra::tensor::{
    dual_tensor, duality_round_trip_sign, jacobian_tensor_check, metric_from_table,
    structure_tensor_from_table, unified_product_crosscheck, verify_identity, IdentityId,
};
use octonion_algebra::triple::{
    coset_correspondence, decompose_f, derivation_apply, derivation_span_dimension, extract_f,
    fundamental_identity_check, printed_f_comparison, sweep_additional_symmetry,
    sweep_derivation_dual_path, sweep_fundamental_identity, sweep_leibniz, sweep_lemmas,
    sweep_lr_closed_forms, sweep_metric_compatibility, DerivationTensors,
};
use octonion_algebra::{Coeff, Elem};

use crate::report::{CheckLine, RunReport, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    Tables,
    Tensors,
    Identities,
    Malcev,
    Lie3,
    Fconst,
    Superaffine,
}

impl SuiteName {
    pub const ALL: [SuiteName; 7] = [
        SuiteName::Tables,
        SuiteName::Tensors,
        SuiteName::Identities,
        SuiteName::Malcev,
        SuiteName::Lie3,
        SuiteName::Fconst,
        SuiteName::Superaffine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteName::Tables => "tables",
            SuiteName::Tensors => "tensors",
            SuiteName::Identities => "identities",
            SuiteName::Malcev => "malcev",
            SuiteName::Lie3 => "lie3",
            SuiteName::Fconst => "fconst",
            SuiteName::Superaffine => "superaffine",
        }
    }
}

/// What to run. Defaults: both algebras, all suites, seed 0, 1000 trials,
/// mode bound 2.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteSelection {
    pub algebras: Vec<AlgebraKind>,
    pub suites: Vec<SuiteName>,
    pub seed: u64,
    pub trials: usize,
    pub mode_bound: i64,
    /// Validate a copy of each table with this entry's sign flipped
    /// (negative-path fixture for the tables suite).
    pub corrupt_entry: Option<(usize, usize)>,
}

impl Default for SuiteSelection {
    fn default() -> Self {
        SuiteSelection {
            algebras: AlgebraKind::ALL.to_vec(),
            suites: SuiteName::ALL.to_vec(),
            seed: 0,
            trials: 1000,
            mode_bound: 2,
            corrupt_entry: None,
        }
    }
}

/// Executes the selection deterministically and assembles the report.
/// Per-suite wall times go to stderr only.
pub fn run(selection: &SuiteSelection) -> RunReport {
    let mut suites = Vec::new();
    for &suite in &selection.suites {
        for &kind in &selection.algebras {
            let start = std::time::Instant::now();
            let report = match suite {
                SuiteName::Tables => tables_suite(kind, selection),
                SuiteName::Tensors => tensors_suite(kind),
                SuiteName::Identities => identities_suite(kind),
                SuiteName::Malcev => malcev_suite(kind, selection),
                SuiteName::Lie3 => lie3_suite(kind, selection),
                SuiteName::Fconst => fconst_suite(kind),
                SuiteName::Superaffine => superaffine_suite(kind, selection),
            };
            eprintln!(
                "suite {} ({}): {} in {:.2?}",
                suite.name(),
                kind,
                if report.passed() { "pass" } else { "FAIL" },
                start.elapsed()
            );
            suites.push(report);
        }
    }
    RunReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        selection: selection.clone(),
        suites,
    }
}

fn suite(name: SuiteName, kind: AlgebraKind, checks: Vec<CheckLine>) -> SuiteReport {
    SuiteReport {
        name: name.name().to_string(),
        algebra: kind.name().to_string(),
        checks,
    }
}

fn bases() -> Vec<Elem> {
    (0..8).map(Element::basis).collect()
}

// ---------------------------------------------------------------- tables --

fn tables_suite(kind: AlgebraKind, selection: &SuiteSelection) -> SuiteReport {
    let mut checks = Vec::new();
    let table = match selection.corrupt_entry {
        Some((i, j)) => CayleyTable::new(kind).with_sign_flipped(i, j),
        None => CayleyTable::new(kind),
    };
    match table.validate() {
        Ok(()) => checks.push(CheckLine::new(
            "table consistency",
            true,
            "identity row/column, off-diagonal antisymmetry, diagonal +-E_0: all hold",
        )),
        Err(v) => checks.push(CheckLine::new("table consistency", false, format!("{v}"))),
    }

    let metric = metric_from_table(kind);
    let expected_diag: [i64; 8] = match kind {
        AlgebraKind::Octonion => [1, -1, -1, -1, -1, -1, -1, -1],
        AlgebraKind::SplitOctonion => [1, 1, -1, 1, 1, 1, -1, -1],
    };
    checks.push(CheckLine::new(
        "metric matches printed signature",
        metric.diag == expected_diag,
        format!("gamma diagonal = {:?}", metric.diag),
    ));

    let unified = unified_product_crosscheck(kind);
    checks.push(CheckLine::new(
        "unified product law vs table",
        unified.pass(),
        match unified.violating_pair {
            None => format!("{} basis pairs agree exactly", unified.pairs_checked),
            Some((i, j)) => format!("violating pair (E_{i}, E_{j})"),
        },
    ));

    let sub = classify_subalgebras(kind);
    let sub_ok = match kind {
        AlgebraKind::Octonion => {
            sub.two_dim
                .iter()
                .all(|s| s.class == SubalgebraClass::Complex)
                && sub.four_dim.iter().all(|s| {
                    s.class == SubalgebraClass::Quaternion && s.closure_violation.is_none()
                })
        }
        AlgebraKind::SplitOctonion => {
            sub.two_dim.iter().all(|s| {
                s.class
                    == if [2, 6, 7].contains(&s.mu) {
                        SubalgebraClass::Complex
                    } else {
                        SubalgebraClass::SplitComplex
                    }
            }) && sub.four_dim.iter().all(|s| s.closure_violation.is_none())
                && sub
                    .four_dim
                    .iter()
                    .filter(|s| s.class == SubalgebraClass::Quaternion)
                    .map(|s| s.indices)
                    .collect::<Vec<_>>()
                    == vec![[0, 6, 7, 2]]
        }
    };
    checks.push(CheckLine::new(
        "subalgebra classification",
        sub_ok,
        "seven 2-dim and seven 4-dim subalgebras classified from squares and closure",
    ));

    let e = bases();
    let u = &e[0] + &e[1];
    let v = &e[0] - &e[1];
    let prod = multiply(kind, &u, &v);
    let zd_ok = match kind {
        AlgebraKind::Octonion => !prod.is_zero(),
        AlgebraKind::SplitOctonion => prod.is_zero(),
    };
    checks.push(CheckLine::new(
        "zero-divisor known answer",
        zd_ok,
        match kind {
            AlgebraKind::Octonion => "(E_0+E_1)(E_0-E_1) nonzero in the division algebra",
            AlgebraKind::SplitOctonion => "(E_0+E_1)(E_0-E_1) = 0",
        },
    ));

    suite(SuiteName::Tables, kind, checks)
}

// --------------------------------------------------------------- tensors --

fn tensors_suite(kind: AlgebraKind) -> SuiteReport {
    let mut checks = Vec::new();
    let b = match structure_tensor_from_table(kind) {
        Ok(b) => b,
        Err(e) => {
            checks.push(CheckLine::new("structure tensor", false, format!("{e}")));
            return suite(SuiteName::Tensors, kind, checks);
        }
    };
    checks.push(CheckLine::new(
        "b totally antisymmetric",
        true,
        format!(
            "{} nonzero components, entries in {{-1,+1}}",
            b.nonzero().len()
        ),
    ));

    // Printed b lists, in the cyclic index order of the source.
    let cyclic: [[usize; 3]; 7] = [
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 7],
        [5, 6, 1],
        [6, 7, 2],
        [7, 1, 3],
    ];
    let b_ok = match kind {
        AlgebraKind::Octonion => cyclic.iter().all(|t| b.at(t[0], t[1], t[2]) == -1),
        AlgebraKind::SplitOctonion => cyclic.iter().all(|t| {
            let expect = if *t == [6, 7, 2] { -1 } else { 1 };
            b.at(t[0], t[1], t[2]) == expect
        }),
    } && b.nonzero().len() == 42;
    checks.push(CheckLine::new(
        "b matches printed list",
        b_ok,
        match kind {
            AlgebraKind::Octonion => "b = -c: the seven cyclic triples carry -1",
            AlgebraKind::SplitOctonion => "seven cyclic triples +1 except b_672 = -1",
        },
    ));

    let big = dual_tensor(kind, &b).expect("dual tensor");
    let printed_quads: [[usize; 4]; 7] = [
        [1, 2, 7, 5],
        [1, 2, 3, 6],
        [1, 4, 3, 5],
        [1, 4, 6, 7],
        [2, 4, 7, 3],
        [2, 4, 6, 5],
        [3, 6, 5, 7],
    ];
    let big_ok = printed_quads.iter().all(|q| {
        let expect = match kind {
            AlgebraKind::Octonion => 1,
            AlgebraKind::SplitOctonion => {
                if *q == [1, 4, 3, 5] {
                    1
                } else {
                    -1
                }
            }
        };
        big.at(q[0], q[1], q[2], q[3]) == expect
    });
    checks.push(CheckLine::new(
        "B matches printed list",
        big_ok,
        "epsilon_1234567 = +1 reproduces the printed components with no global sign",
    ));

    let sign = duality_round_trip_sign(kind, &b, &big);
    checks.push(CheckLine::new(
        "duality round trip",
        sign == Some(-1),
        format!(
            "(1/24) eps B^... = {} * b (sign recorded, not absorbed)",
            sign.map_or("?".to_string(), |s| s.to_string())
        ),
    ));

    let jac = jacobian_tensor_check(kind);
    checks.push(CheckLine::new(
        "Jacobian tensor relation",
        jac.pass(),
        format!(
            "J = -3 B^sigma and J = 3 x unit-weight bracket form on {} triples \
             (the source prints the bracket form without its factor 3)",
            jac.triples_checked
        ),
    ));

    // Element-level J(x,y,z) = 3 B_XYZE on all imaginary basis triples.
    let metric = metric_from_table(kind);
    let e = bases();
    let mut elem_ok = true;
    for m in 1..8 {
        for n in 1..8 {
            for k in 1..8 {
                let j = jacobian_element(kind, &e[m], &e[n], &e[k]);
                let expect: Elem = Element::from_ints(std::array::from_fn(|s| {
                    if s == 0 {
                        0
                    } else {
                        3 * big.mixed(&metric, m, n, k, s)
                    }
                }));
                elem_ok &= j == expect;
            }
        }
    }
    checks.push(CheckLine::new(
        "element Jacobian vs dual tensor",
        elem_ok,
        "J(x,y,z) = 3 B_XYZE on all 343 imaginary triples",
    ));

    suite(SuiteName::Tensors, kind, checks)
}

// ------------------------------------------------------------ identities --

/// Frozen expected verdicts, identical for both algebras and exactly matched
/// by the independent contraction oracle in the test suite.
fn expected_identity_verdicts(id: IdentityId) -> &'static [(&'static str, bool)] {
    use IdentityId::*;
    match id {
        A4 => &[
            ("as printed (tau free)", false),
            ("tau read as lambda", false),
        ],
        A5 => &[
            ("as printed", false),
            ("second metric term sign corrected", true),
        ],
        A9 => &[
            ("as printed", false),
            ("corrected: b.b = -B + gg - gg", true),
        ],
        A15 => &[("capital B on the right read as lowercase b", true)],
        A17 => &[("as printed", false)],
        _ => &[("as printed", true)],
    }
}

fn identities_suite(kind: AlgebraKind) -> SuiteReport {
    let mut checks = Vec::new();
    for id in IdentityId::ALL {
        let result = verify_identity(kind, id);
        let expected = expected_identity_verdicts(id);
        let mut matches = result.readings.len() == expected.len();
        let mut details = Vec::new();
        for (reading, &(exp_name, exp_pass)) in result.readings.iter().zip(expected) {
            matches &= reading.reading == exp_name && reading.pass == exp_pass;
            let mut line = format!(
                "{}: {}",
                reading.reading,
                if reading.pass { "holds" } else { "FALSE" }
            );
            if !reading.pass {
                line.push_str(&format!(
                    " ({} of {} tuples violate, max |residual| {}",
                    reading.violations, reading.tuples_checked, reading.max_abs_residual
                ));
                if let Some((tuple, residual)) = reading.sample_violations.first() {
                    line.push_str(&format!("; first at {tuple:?} with residual {residual}"));
                }
                line.push(')');
            }
            if let Some(s) = reading.scalar {
                line.push_str(&format!(" [computed scalar {s}]"));
            }
            details.push(line);
        }
        let any_holds = expected.iter().any(|&(_, p)| p);
        let printed_holds = expected.first().is_some_and(|&(n, p)| p && n == "as printed");
        let name = if !any_holds {
            format!("{} [erratum: false as printed]", id.label())
        } else if !printed_holds {
            format!("{} [misprint: holds under corrected reading]", id.label())
        } else {
            id.label().to_string()
        };
        checks.push(CheckLine::new(
            name,
            matches,
            format!("{} -- {}", id.description(), details.join("; ")),
        ));
    }
    suite(SuiteName::Identities, kind, checks)
}

// ---------------------------------------------------------------- malcev --

fn malcev_suite(kind: AlgebraKind, selection: &SuiteSelection) -> SuiteReport {
    let mut checks = Vec::new();
    let e = bases();

    let mut basis_ok = true;
    for x in 0..8 {
        for y in 0..8 {
            for z in 0..8 {
                basis_ok &= malcev_check(kind, &e[x], &e[y], &e[z]).pass;
            }
        }
    }
    checks.push(CheckLine::new(
        "Malcev identity on basis",
        basis_ok,
        "J(x,y,[x,z]) = [J(x,y,z),x] on all 512 basis triples, exact",
    ));

    let mut rng = seeded_rng(selection.seed);
    let mut random_ok = true;
    for _ in 0..selection.trials {
        let x: Elem = random_element(&mut rng);
        let y: Elem = random_element(&mut rng);
        let z: Elem = random_element(&mut rng);
        random_ok &= malcev_check(kind, &x, &y, &z).pass;
    }
    checks.push(CheckLine::new(
        "Malcev identity on random elements",
        random_ok,
        format!("{} seeded random rational triples, exact", selection.trials),
    ));

    let mut flex_ok = true;
    for a in 0..8 {
        for x in 0..8 {
            for b in 0..8 {
                let fwd = associator(kind, &e[a], &e[x], &e[b]);
                let rev = associator(kind, &e[b], &e[x], &e[a]);
                flex_ok &= fwd == -&rev;
            }
        }
    }
    checks.push(CheckLine::new(
        "flexibility",
        flex_ok,
        "(a,x,b) = -(b,x,a) on all 512 basis triples",
    ));

    let mut alt_ok = true;
    for a in 0..8 {
        for b in 0..8 {
            alt_ok &= associator(kind, &e[a], &e[a], &e[b]).is_zero()
                && associator(kind, &e[b], &e[a], &e[a]).is_zero();
        }
    }
    let mut rng = seeded_rng(selection.seed.wrapping_add(1));
    for _ in 0..selection.trials {
        let a: Elem = random_element(&mut rng);
        let b: Elem = random_element(&mut rng);
        alt_ok &= associator(kind, &a, &a, &b).is_zero() && associator(kind, &b, &a, &a).is_zero();
    }
    checks.push(CheckLine::new(
        "alternativity",
        alt_ok,
        format!(
            "(a,a,b) = (b,a,a) = 0 on basis pairs and {} random pairs",
            selection.trials
        ),
    ));

    let mut conj_ok = true;
    for a in 0..8 {
        for b in 0..8 {
            conj_ok &= conjugate(&multiply(kind, &e[a], &e[b]))
                == multiply(kind, &conjugate(&e[b]), &conjugate(&e[a]));
        }
    }
    checks.push(CheckLine::new(
        "conjugation anti-automorphism",
        conj_ok,
        "conj(ab) = conj(b) conj(a) on all 64 basis pairs",
    ));

    let mut rng = seeded_rng(selection.seed.wrapping_add(2));
    let mut norm_ok = true;
    for _ in 0..selection.trials {
        let a: Elem = random_element(&mut rng);
        let b: Elem = random_element(&mut rng);
        let ab = multiply(kind, &a, &b);
        norm_ok &= bilinear_form(kind, &ab, &ab)
            == bilinear_form(kind, &a, &a) * bilinear_form(kind, &b, &b);
    }
    checks.push(CheckLine::new(
        "norm composition",
        norm_ok,
        format!(
            "N(ab) = N(a)N(b) on {} random pairs, exact",
            selection.trials
        ),
    ));

    // Operational form vs the printed component line:
    // (a,b) = A_0 B_0 - gamma_mn a^m b^n, so the two disagree in the sign of
    // the imaginary block and in the A_0 B_0 term.
    let metric = metric_from_table(kind);
    let mut rng = seeded_rng(selection.seed.wrapping_add(3));
    let mut rel_ok = true;
    for _ in 0..selection.trials.min(200) {
        let a: Elem = random_element(&mut rng);
        let b: Elem = random_element(&mut rng);
        let op = bilinear_form(kind, &a, &b);
        let mut component = Coeff::zero();
        for m in 1..8 {
            component += Coeff::from_int(metric.sign(m)) * a.coeff(m) * b.coeff(m);
        }
        rel_ok &= op == *a.coeff(0) * *b.coeff(0) - component;
        rel_ok &= op == bilinear_form(kind, &b, &a);
    }
    checks.push(CheckLine::new(
        "bilinear form component relation [erratum measured]",
        rel_ok,
        "(a,b) = Re(a conj(b)) = A_0 B_0 - gamma_mn a^m b^n; the printed line \
         gamma^mn A_m B_n differs in the imaginary sign and the A_0 B_0 term",
    ));

    let diag: Vec<i64> = (0..8)
        .map(|i| {
            let v = bilinear_form(kind, &e[i], &e[i]);
            debug_assert!(v.is_integer());
            v.to_integer()
        })
        .collect();
    let sig_ok = match kind {
        AlgebraKind::Octonion => diag.iter().all(|&d| d == 1),
        AlgebraKind::SplitOctonion => diag == vec![1, -1, 1, -1, -1, -1, 1, 1],
    };
    checks.push(CheckLine::new(
        "bilinear form signature",
        sig_ok,
        match kind {
            AlgebraKind::Octonion => "positive definite on the basis",
            AlgebraKind::SplitOctonion => "signature (4,4) on the full 8-dimensional space",
        },
    ));

    suite(SuiteName::Malcev, kind, checks)
}

// ------------------------------------------------------------------ lie3 --

fn lie3_suite(kind: AlgebraKind, selection: &SuiteSelection) -> SuiteReport {
    let mut checks = Vec::new();

    let fi = sweep_fundamental_identity(kind);
    checks.push(CheckLine::new(
        "fundamental identity",
        fi.pass(),
        format!("all {} basis quintuples, exact", fi.checked),
    ));

    let mut rng = seeded_rng(selection.seed.wrapping_add(10));
    let mut fi_random_ok = true;
    for _ in 0..selection.trials.min(100) {
        let v: Vec<Elem> = (0..5).map(|_| random_element(&mut rng)).collect();
        fi_random_ok &= fundamental_identity_check(kind, &v[0], &v[1], &v[2], &v[3], &v[4]).pass;
    }
    checks.push(CheckLine::new(
        "fundamental identity on random elements",
        fi_random_ok,
        format!(
            "{} seeded random quintuples through the element path",
            selection.trials.min(100)
        ),
    ));

    let mc = sweep_metric_compatibility(kind);
    checks.push(CheckLine::new(
        "metric compatibility",
        mc.pass(),
        format!(
            "([a,b,x],y) + (x,[a,b,y]) = 0 on all {} basis tuples",
            mc.checked
        ),
    ));

    let (printed, exchange) = sweep_additional_symmetry(kind);
    let printed_as_expected = !printed.pass() && printed.first_failure == Some(vec![1, 2, 1, 2]);
    checks.push(CheckLine::new(
        "additional symmetry [erratum: false as printed]",
        printed_as_expected && exchange.pass(),
        format!(
            "as printed ([x,y,a],b) = (a,[x,y,b]) is FALSE ({} of {} tuples violate, first at \
             (E_1,E_2,E_1,E_2)); the pair-exchange reading ([x,y,a],b) = ([a,b,x],y) of the \
             cited definition holds on all tuples",
            printed.failures, printed.checked
        ),
    ));

    let lz = sweep_leibniz(kind);
    checks.push(CheckLine::new(
        "Leibniz property",
        lz.pass(),
        format!("D(xy) = (Dx)y + x(Dy) on all {} basis tuples", lz.checked),
    ));

    let dual = sweep_derivation_dual_path(kind);
    let mut rng = seeded_rng(selection.seed.wrapping_add(11));
    let tensors = DerivationTensors::new(kind);
    let mut dual_random_ok = true;
    for _ in 0..selection.trials.min(200) {
        let a: Elem = random_element(&mut rng);
        let b: Elem = random_element(&mut rng);
        let x: Elem = random_element(&mut rng);
        dual_random_ok &= derivation_apply(kind, &a, &b, &x) == tensors.closed_form(&a, &b, &x);
    }
    checks.push(CheckLine::new(
        "derivation dual path",
        dual.pass() && dual_random_ok,
        format!(
            "definitional operator == tensor closed form on {} basis triples and {} random triples",
            dual.checked,
            selection.trials.min(200)
        ),
    ));

    let lr = sweep_lr_closed_forms(kind);
    checks.push(CheckLine::new(
        "L/R commutator closed forms",
        lr.pass(),
        format!(
            "[L,L], [R,R], [L,R] closed forms on {} basis triples",
            lr.checked
        ),
    ));

    let lemmas = sweep_lemmas(kind);
    let lemma_expected = !lemmas.product_printed.pass()
        && lemmas.product_printed.first_failure == Some(vec![0, 0, 0])
        && lemmas.left_adjoint.pass()
        && lemmas.right_adjoint.pass()
        && !lemmas.double_product.pass()
        && lemmas.double_product.first_failure == Some(vec![0, 1, 2, 4])
        && lemmas.double_product_imaginary.pass();
    checks.push(CheckLine::new(
        "supporting lemmas [errata measured]",
        lemma_expected,
        "(ab,x)+(a,bx)=0 FALSE (already at E_0,E_0,E_0); adjoint forms (ax,y)=(x,conj(a)y) and \
         (xa,y)=(x,y conj(a)) hold; (ab,xy)=(ba,yx) holds on imaginary tuples only \
         (first mixed counterexample E_0,E_1,E_2,E_4)",
    ));

    let dim = derivation_span_dimension(kind);
    checks.push(CheckLine::new(
        "derivation span dimension",
        dim == 14,
        format!("span of D_(E_mu, E_nu) has dimension {dim} (automorphism algebra dimension)"),
    ));

    suite(SuiteName::Lie3, kind, checks)
}

// ---------------------------------------------------------------- fconst --

fn fconst_suite(kind: AlgebraKind) -> SuiteReport {
    let mut checks = Vec::new();
    let f = match extract_f(kind) {
        Ok(f) => f,
        Err(e) => {
            checks.push(CheckLine::new("f extraction", false, format!("{e}")));
            return suite(SuiteName::Fconst, kind, checks);
        }
    };
    checks.push(CheckLine::new(
        "f extraction, zero patterns, pair symmetries",
        true,
        "f_0... = 0, associative triples vanish, f_mnkl = -f_nmkl = -f_mnlk = f_klmn",
    ));

    let cmp = printed_f_comparison(kind);
    checks.push(CheckLine::new(
        "f matches printed lists [6712 erratum noted]",
        cmp.all_listed_match
            && cmp.diagonal_law_holds
            && cmp.printed_6712_computed == 0
            && cmp.completed_6714_computed == cmp.printed_6712_value
            && cmp.global_sign == 1,
        format!(
            "six listed quadruples and the diagonal law match exactly (global sign +1); the \
             printed seventh quadruple 6712 breaks the complement pattern and computes to 0, \
             while the pattern-completing 6714 computes to {} = the printed seventh value",
            cmp.completed_6714_computed
        ),
    ));

    let dec = decompose_f(&f);
    checks.push(CheckLine::new(
        "t + p decomposition",
        dec.reconstruction_exact && dec.t_is_minus_dual,
        "f = t + (dd - dd)p reconstructs exactly over all tuples; t = -B componentwise",
    ));

    let coset = coset_correspondence(kind);
    checks.push(CheckLine::new(
        "coset correspondence",
        coset.bijective && coset.disjoint,
        "the seven nonzero t quadruples are exactly the complements of the seven associative \
         triples",
    ));

    suite(SuiteName::Fconst, kind, checks)
}

// ------------------------------------------------------------ superaffine --

fn superaffine_suite(kind: AlgebraKind, selection: &SuiteSelection) -> SuiteReport {
    let mut checks = Vec::new();
    let bound = selection.mode_bound;

    let mut anti_ok = true;
    let mut mode0_ok = true;
    for convention in BracketConvention::all() {
        anti_ok &= graded_antisymmetry_check(kind, convention, bound).pass();
        mode0_ok &= mode0_even_subalgebra_check(kind, convention);
    }
    checks.push(CheckLine::new(
        "graded antisymmetry and K centrality",
        anti_ok,
        format!(
            "bracket(g1,g2) = (-1)^(e1 e2 + 1) bracket(g2,g1) for all generator pairs with \
             |mode| <= {bound}, all 16 conventions"
        ),
    ));
    checks.push(CheckLine::new(
        "mode-0 even subalgebra",
        mode0_ok,
        "phi_mu^0 brackets reproduce the element-level half-commutator algebra exactly \
         (up to the convention's phi-phi sign)",
    ));

    let reports = convention_search(kind, bound);
    let passers: Vec<String> = reports
        .iter()
        .filter(|r| r.pass())
        .map(|r| r.convention.to_string())
        .collect();
    let expected_passer = |c: &BracketConvention| {
        let signs_ok = c.psi_phi_sign == c.phi_phi_sign;
        match kind {
            AlgebraKind::Octonion => signs_ok,
            AlgebraKind::SplitOctonion => signs_ok && c.pairing == CentralPairing::Gamma,
        }
    };
    let verdicts_ok = reports
        .iter()
        .all(|r| r.pass() == expected_passer(&r.convention));
    checks.push(CheckLine::new(
        "graded Malcev convention search",
        !passers.is_empty() && verdicts_ok,
        format!(
            "passers ({} of 16): the identity holds iff the psi-phi and phi-phi structure \
             signs agree{}; the printed relative sign (s1=+1, s2=-1) FAILS. passing: [{}]",
            passers.len(),
            match kind {
                AlgebraKind::Octonion => "",
                AlgebraKind::SplitOctonion => " and the central pairing is gamma",
            },
            passers.join(", ")
        ),
    ));

    let printed = reports
        .iter()
        .find(|r| r.convention == BracketConvention::printed())
        .expect("printed convention in search");
    checks.push(CheckLine::new(
        "printed convention counterexample [erratum measured]",
        !printed.malcev.pass(),
        match &printed.malcev.counterexample {
            Some([x, y, z]) => format!(
                "the printed transcription violates the graded Malcev identity first at \
                 ({x}, {y}, {z})"
            ),
            None => "expected a counterexample for the printed convention".to_string(),
        },
    ));

    suite(SuiteName::Superaffine, kind, checks)
}

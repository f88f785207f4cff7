//! Acceptance suite: one test per criterion, each printing a single
//! verdict line (run with `--nocapture` to see all lines).
//!
//! Three printed appendix identities (A4, A9, A17), the printed
//! additional-symmetry axiom, one printed supporting lemma, the printed
//! seventh f quadruple, and the printed super-affine relative sign are
//! mathematically false as typeset. Those criteria are reported PASS WITH
//! ERRATA: the erratum is measured exhaustively, frozen, and cross-checked
//! against an independent oracle, and any deviation from the frozen
//! measurement fails the suite.

use std::process::Command;
use std::time::Instant;

use num_traits::Zero;

use octonion_algebra::algebra::{
    bilinear_form, jacobian_element, malcev_check, multiply, AlgebraKind, CayleyTable, Element,
};
use octonion_algebra::random::{random_element, seeded_rng};
use octonion_algebra::superaffine::{
    convention_search, graded_antisymmetry_check, mode0_even_subalgebra_check, BracketConvention,
    CentralPairing, GradedElement, ModeAlgebra, ModeGenerator,
};
use octonion_algebra::tensor::{
    dual_tensor, duality_round_trip_sign, jacobian_tensor_check, metric_from_table,
    structure_tensor_from_table, unified_product_crosscheck, verify_identity, IdentityId,
};
use octonion_algebra::triple::{
    coset_correspondence, decompose_f, extract_f, printed_f_comparison, sweep_additional_symmetry,
    sweep_derivation_dual_path, sweep_fundamental_identity, sweep_leibniz, sweep_lr_closed_forms,
    sweep_metric_compatibility,
};
use octonion_algebra::{Coeff, Elem};

fn verdict(n: u32, title: &str, pass: bool, detail: String) {
    verdict_with(n, title, pass, if pass { "PASS" } else { "FAIL" }, detail);
}

fn verdict_with(n: u32, title: &str, pass: bool, label: &str, detail: String) {
    println!("ACCEPTANCE {n} {title}: {label} -- {detail}");
    assert!(pass, "criterion {n} ({title}): {detail}");
}

#[test]
fn criterion_01_table_consistency() {
    let start = Instant::now();
    let mut ok = true;
    for kind in AlgebraKind::ALL {
        ok &= CayleyTable::new(kind).validate().is_ok();
        let unified = unified_product_crosscheck(kind);
        ok &= unified.pass() && unified.pairs_checked == 64;
    }
    verdict(
        1,
        "table consistency",
        ok && start.elapsed().as_secs() < 1,
        format!(
            "identity/antisymmetry/diagonal checks and 64-pair unified-product cross-check, \
             both algebras, exact, {:.2?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_02_structure_data_reproduction() {
    let mut ok = true;
    // gamma, per the printed equation
    ok &= metric_from_table(AlgebraKind::Octonion).diag == [1, -1, -1, -1, -1, -1, -1, -1];
    ok &= metric_from_table(AlgebraKind::SplitOctonion).diag == [1, 1, -1, 1, 1, 1, -1, -1];
    // b lists in the printed cyclic order
    let cyclic: [[usize; 3]; 7] = [
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 7],
        [5, 6, 1],
        [6, 7, 2],
        [7, 1, 3],
    ];
    let b_o = structure_tensor_from_table(AlgebraKind::Octonion).unwrap();
    ok &= cyclic.iter().all(|t| b_o.at(t[0], t[1], t[2]) == -1); // b = -c
    let b_s = structure_tensor_from_table(AlgebraKind::SplitOctonion).unwrap();
    ok &= cyclic
        .iter()
        .all(|t| b_s.at(t[0], t[1], t[2]) == if *t == [6, 7, 2] { -1 } else { 1 });
    // B lists at the printed index orders
    let quads: [[usize; 4]; 7] = [
        [1, 2, 7, 5],
        [1, 2, 3, 6],
        [1, 4, 3, 5],
        [1, 4, 6, 7],
        [2, 4, 7, 3],
        [2, 4, 6, 5],
        [3, 6, 5, 7],
    ];
    let big_o = dual_tensor(AlgebraKind::Octonion, &b_o).unwrap();
    ok &= quads.iter().all(|q| big_o.at(q[0], q[1], q[2], q[3]) == 1);
    let big_s = dual_tensor(AlgebraKind::SplitOctonion, &b_s).unwrap();
    ok &= quads
        .iter()
        .all(|q| big_s.at(q[0], q[1], q[2], q[3]) == if *q == [1, 4, 3, 5] { 1 } else { -1 });
    // global-sign conventions recorded: the printed lists are reproduced with
    // no global flip; the duality round trip carries sign -1 for both kinds.
    ok &= duality_round_trip_sign(AlgebraKind::Octonion, &b_o, &big_o) == Some(-1);
    ok &= duality_round_trip_sign(AlgebraKind::SplitOctonion, &b_s, &big_s) == Some(-1);
    verdict(
        2,
        "structure data reproduction",
        ok,
        "b, gamma, B equal the printed lists exactly (no global sign needed; \
         epsilon_1234567 = +1, duality round-trip sign -1 recorded)"
            .to_string(),
    );
}

#[test]
fn criterion_03_appendix_identities() {
    let start = Instant::now();
    let mut ok = true;
    let mut scalars_ok = true;
    for kind in AlgebraKind::ALL {
        for id in IdentityId::ALL {
            let check = verify_identity(kind, id);
            match id {
                IdentityId::A1 => {
                    scalars_ok &= check.printed().scalar == Some(-42);
                    ok &= check.printed().pass;
                }
                IdentityId::A2 => {
                    scalars_ok &= check.printed().scalar == Some(168);
                    ok &= check.printed().pass;
                }
                IdentityId::A4 => {
                    // erratum: false under both documented readings, with the
                    // frozen violation profile (identical for both algebras)
                    ok &= !check.readings[0].pass
                        && check.readings[0].violations == 29953
                        && check.readings[0].max_abs_residual == Coeff::new(3, 1)
                        && !check.readings[1].pass
                        && check.readings[1].violations == 4207;
                }
                IdentityId::A5 => {
                    ok &= !check.readings[0].pass
                        && check.readings[0].violations == 49
                        && check.readings[1].pass;
                }
                IdentityId::A9 => {
                    ok &= !check.readings[0].pass
                        && check.readings[0].violations == 252
                        && check.readings[1].pass;
                }
                IdentityId::A15 => ok &= check.readings[0].pass,
                IdentityId::A17 => {
                    ok &= !check.printed().pass
                        && check.printed().violations == 2527
                        && check.printed().max_abs_residual == Coeff::new(3, 1);
                }
                _ => ok &= check.printed().pass,
            }
        }
    }
    let elapsed = start.elapsed();
    verdict_with(
        3,
        "appendix identities",
        ok && scalars_ok && elapsed.as_secs() < 30,
        "PASS WITH ERRATA",
        format!(
            "b^2 = -42 and B^2 = 168 reproduced; 13 identities hold as printed, A15 under \
             the forced type correction, A5 under a one-character sign correction; A4, A9, \
             A17 are FALSE as printed for both algebras (the criterion's 'all 18 hold' is \
             unattainable) -- their exact residual profiles are frozen here and match the \
             independent brute-force oracle for both algebras (crates/core/tests/oracle.rs); \
             exhaustive over <= 7^7 tuples in {elapsed:.2?}"
        ),
    );
}

#[test]
fn criterion_04_malcev() {
    let start = Instant::now();
    let mut ok = true;
    for kind in AlgebraKind::ALL {
        let e: Vec<Elem> = (0..8).map(Element::basis).collect();
        for x in 0..8 {
            for y in 0..8 {
                for z in 0..8 {
                    ok &= malcev_check(kind, &e[x], &e[y], &e[z]).pass;
                }
            }
        }
        let mut rng = seeded_rng(0);
        for _ in 0..1000 {
            let x: Elem = random_element(&mut rng);
            let y: Elem = random_element(&mut rng);
            let z: Elem = random_element(&mut rng);
            ok &= malcev_check(kind, &x, &y, &z).pass;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        4,
        "Malcev identity",
        ok && elapsed.as_secs() < 5,
        format!(
            "all 512 basis triples and 1000 seeded random rational triples per algebra, \
             exact, {elapsed:.2?}"
        ),
    );
}

#[test]
fn criterion_05_jacobian_relation() {
    let mut ok = true;
    for kind in AlgebraKind::ALL {
        let report = jacobian_tensor_check(kind);
        ok &= report.pass() && report.triples_checked == 343;
        // element-level J(x,y,z) = 3 B_XYZE on all 7^3 imaginary triples
        let metric = metric_from_table(kind);
        let b = structure_tensor_from_table(kind).unwrap();
        let big = dual_tensor(kind, &b).unwrap();
        let e: Vec<Elem> = (0..8).map(Element::basis).collect();
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
                    ok &= j == expect;
                }
            }
        }
    }
    verdict(
        5,
        "Jacobian relation",
        ok,
        "J_mnk = -3 B_mnk^s E_s (nested form) and element-level J(x,y,z) = 3 B_XYZE on all \
         343 triples, both algebras, exact"
            .to_string(),
    );
}

#[test]
fn criterion_06_lie3_axioms() {
    let start = Instant::now();
    let mut ok = true;
    let mut erratum_ok = true;
    for kind in AlgebraKind::ALL {
        let fi = sweep_fundamental_identity(kind);
        ok &= fi.pass() && fi.checked == 32768;
        let mc = sweep_metric_compatibility(kind);
        ok &= mc.pass() && mc.checked == 4096;
        let lz = sweep_leibniz(kind);
        ok &= lz.pass() && lz.checked == 4096;
        let (printed, exchange) = sweep_additional_symmetry(kind);
        erratum_ok &= !printed.pass() && printed.first_failure == Some(vec![1, 2, 1, 2]);
        ok &= exchange.pass() && exchange.checked == 4096;
    }
    let elapsed = start.elapsed();
    verdict_with(
        6,
        "Lie-3 axioms",
        ok && erratum_ok && elapsed.as_secs() < 60,
        "PASS WITH ERRATUM",
        format!(
            "fundamental identity on all 32768 quintuples, metric compatibility and Leibniz \
             on all 4096 tuples, both algebras, exact; the additional-symmetry axiom as \
             printed is FALSE (first counterexample (E_1,E_2,E_1,E_2)) while the \
             pair-exchange reading of the cited definition holds on all 4096 tuples; \
             {elapsed:.2?}"
        ),
    );
}

#[test]
fn criterion_07_derivation_dual_path() {
    let mut ok = true;
    for kind in AlgebraKind::ALL {
        let d = sweep_derivation_dual_path(kind);
        ok &= d.pass() && d.checked == 512;
        let lr = sweep_lr_closed_forms(kind);
        ok &= lr.pass() && lr.checked == 512;
    }
    verdict(
        7,
        "derivation dual path",
        ok,
        "definitional operator == tensor closed form, and the three L/R commutator closed \
         forms match direct evaluation, on all 512 basis triples, both algebras"
            .to_string(),
    );
}

#[test]
fn criterion_08_f_constants() {
    let mut ok = true;
    for kind in AlgebraKind::ALL {
        // extraction asserts f_0... = 0, the associative-triple zero pattern,
        // and the pair symmetries of the lowered tensor
        let f = extract_f(kind);
        ok &= f.is_ok();
        let f = f.unwrap();
        let cmp = printed_f_comparison(kind);
        ok &= cmp.all_listed_match
            && cmp.diagonal_law_holds
            && cmp.global_sign == 1
            && cmp.printed_6712_computed == 0
            && cmp.completed_6714_computed == cmp.printed_6712_value;
        let dec = decompose_f(&f);
        ok &= dec.reconstruction_exact && dec.t_is_minus_dual;
        let coset = coset_correspondence(kind);
        ok &= coset.bijective && coset.disjoint && coset.pairs.len() == 7;
    }
    verdict(
        8,
        "f constants",
        ok,
        "zero patterns and pair symmetries exhaustive; printed value lists reproduced with \
         global sign +1 (the printed seventh quadruple 6712 is an index misprint: it computes \
         to 0, and the pattern-completing 6714 carries the printed value); t + p reconstructs \
         f exactly; the seven-fold coset correspondence is a bijection"
            .to_string(),
    );
}

#[test]
fn criterion_09_super_affine() {
    let start = Instant::now();
    let mut ok = true;
    let mut details = Vec::new();
    for kind in AlgebraKind::ALL {
        // graded antisymmetry + K centrality for all pairs with |mode| <= 2
        for convention in BracketConvention::all() {
            ok &= graded_antisymmetry_check(kind, convention, 2).pass();
            ok &= mode0_even_subalgebra_check(kind, convention);
        }
        // K centrality explicitly
        let alg = ModeAlgebra::new(kind, BracketConvention::printed());
        for index in 0..8 {
            for mode in -2i64..=2 {
                let b: GradedElement<Coeff> =
                    alg.bracket_generators(ModeGenerator::K, ModeGenerator::psi(index, mode));
                ok &= b.is_zero();
            }
        }
        let reports = convention_search(kind, 2);
        let passers: Vec<_> = reports.iter().filter(|r| r.pass()).collect();
        ok &= !passers.is_empty();
        // the frozen search outcome: the identity holds iff the two structure
        // signs agree (and, for the split algebra, the pairing is gamma)
        let expected = |c: &BracketConvention| {
            c.psi_phi_sign == c.phi_phi_sign
                && (kind == AlgebraKind::Octonion || c.pairing == CentralPairing::Gamma)
        };
        ok &= reports.iter().all(|r| r.pass() == expected(&r.convention));
        // the printed transcription fails and emits a counterexample
        let printed = reports
            .iter()
            .find(|r| r.convention == BracketConvention::printed())
            .unwrap();
        ok &= printed.malcev.counterexample.is_some();
        details.push(format!("{kind}: {} of 16 conventions pass", passers.len()));
    }
    let elapsed = start.elapsed();
    verdict(
        9,
        "super-affine mode algebra",
        ok && elapsed.as_secs() < 120,
        format!(
            "graded antisymmetry, K centrality, and the mode-0 correspondence hold for all \
             conventions at |mode| <= 2; the graded Malcev sweep passes exactly for the \
             conventions with matching structure signs ({}); the printed relative sign \
             fails with an emitted counterexample; {elapsed:.2?}",
            details.join("; ")
        ),
    );
}

#[test]
fn criterion_10_negative_path_and_determinism() {
    let bin = env!("CARGO_BIN_EXE_octonion");
    let mut ok = true;
    let mut notes = Vec::new();

    // corrupted-table fixture: exit code 1 and the violating pair named
    let corrupted = Command::new(bin)
        .args([
            "verify",
            "--algebra",
            "octonion",
            "--suite",
            "tables",
            "--corrupt-table",
            "1,2",
        ])
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&corrupted.stdout).to_string();
    let named = stdout.contains("(1, 2)");
    ok &= corrupted.status.code() == Some(1) && named;
    notes.push(format!(
        "corrupt-table fixture: exit {:?}, violating pair named: {named}",
        corrupted.status.code()
    ));

    // repeated seeded runs are byte-identical
    let run = || {
        Command::new(bin)
            .args([
                "verify",
                "--algebra",
                "both",
                "--suite",
                "tables,malcev,fconst",
                "--seed",
                "7",
                "--trials",
                "200",
            ])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    ok &=
        first.status.code() == Some(0) && first.stdout == second.stdout && !first.stdout.is_empty();
    notes.push("seeded reruns byte-identical".to_string());

    // split zero-divisor known answer (the factors are null vectors of the
    // split form, as non-divisionality requires)
    let e0: Elem = Element::basis(0);
    let e1: Elem = Element::basis(1);
    let u = &e0 + &e1;
    let v = &e0 - &e1;
    ok &= multiply(AlgebraKind::SplitOctonion, &u, &v).is_zero();
    ok &= bilinear_form(AlgebraKind::SplitOctonion, &u, &u).is_zero();
    notes.push("(E_0+E_1)(E_0-E_1) = 0 in the split algebra".to_string());

    // re-export determinism
    let export = || {
        Command::new(bin)
            .args(["export", "b", "--algebra", "split", "--format", "json"])
            .output()
            .expect("binary runs")
    };
    let x1 = export();
    let x2 = export();
    ok &= x1.status.code() == Some(0) && x1.stdout == x2.stdout;
    notes.push("re-export byte-identical".to_string());

    verdict(10, "negative path and determinism", ok, notes.join("; "));
}

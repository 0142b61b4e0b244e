//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads 1` to see them
//! in order.

use std::process::Command;
use std::time::{Duration, Instant};

use qmock::expr::{eval, render};
use qmock::identity::{builtin_registry, lookup, prefactor_perturbations, verify, verify_all_of, Identity, Status};
use qmock::selftest::{self, Law};
use qmock::{first_mismatch, EvalContext, LaurentSeries};

fn ctx(n: i64) -> EvalContext {
    EvalContext::new(n).unwrap()
}

fn report(criterion: u32, what: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS criterion {criterion}: {what}");
    } else {
        println!("FAIL criterion {criterion}: {what}: {}", failures.join("; "));
    }
    assert!(failures.is_empty(), "criterion {criterion} failed");
}

fn timed_verify(name: &str, order: i64, budget: Duration, failures: &mut Vec<String>) {
    let registry = builtin_registry();
    let id = lookup(&registry, name).unwrap();
    let started = Instant::now();
    let r = verify(id, &ctx(order)).unwrap();
    let elapsed = started.elapsed();
    if r.status != Status::Equal {
        failures.push(r.plain());
    }
    if elapsed > budget {
        failures.push(format!("{name} took {elapsed:?}"));
    }
}

#[test]
fn criterion_1_conjectured_identities_at_order_200() {
    let mut failures = Vec::new();
    for name in ["mtc-X", "mtc-chi"] {
        timed_verify(name, 200, Duration::from_secs(60), &mut failures);
    }
    report(1, "mtc-X and mtc-chi equal at order 200 within 60 s each", &failures);
}

#[test]
fn criterion_2_theta_quotient_identities_at_order_500() {
    let mut failures = Vec::new();
    for name in ["theta-core-X", "theta-core-chi"] {
        timed_verify(name, 500, Duration::from_secs(300), &mut failures);
    }
    report(2, "theta-core-X and theta-core-chi equal at order 500 within 5 min each", &failures);
}

#[test]
fn criterion_3_whole_registry_at_order_100() {
    let mut failures = Vec::new();
    let registry = builtin_registry();
    let results = verify_all_of(&registry, &ctx(100)).unwrap();
    for v in &results {
        if v.report.status != Status::Equal {
            failures.push(v.report.plain());
        }
    }
    for name in ["lambda-zero-X", "lambda-zero-chi"] {
        let v = results.iter().find(|v| v.report.name == name).unwrap();
        let zero = |s: &Option<LaurentSeries>| s.as_ref().is_some_and(LaurentSeries::is_zero_to_order);
        if !zero(&v.lhs) || !zero(&v.rhs) {
            failures.push(format!("{name} is not exactly zero"));
        }
    }
    let what = format!("all {} registry entries equal at order 100, Lambda entries exactly zero", registry.len());
    report(3, &what, &failures);
}

#[test]
fn criterion_4_property_suites() {
    let mut failures = Vec::new();
    let mut audit = Vec::new();
    let c100 = ctx(100);
    let mut checks: Vec<_> = Law::ALL.iter().map(|law| selftest::law_samples(*law, &c100, &mut audit)).collect();
    if selftest::theta_pairs().len() < 10 {
        failures.push("fewer than 10 theta pairs".into());
    }
    checks.push(selftest::triple_product(&ctx(300)));
    checks.push(selftest::quasi_periodicity(&ctx(200)));
    checks.push(selftest::inversion_symmetry(&ctx(200)));
    checks.push(selftest::vanishing_sweep(&ctx(200)));
    for check in checks {
        println!("  {}", check.line());
        if !check.passed {
            failures.push(check.name);
        }
    }
    report(4, "laws m1-m5 at 5 generic tuples (order 100), triple product (300), theta symmetries (200)", &failures);
}

#[test]
fn criterion_5_oracle_equivalence_at_order_80() {
    let mut failures = Vec::new();
    let calls = selftest::registry_sum_calls();
    for call in &calls {
        let label = render(&qmock::expr::Expr::Call(call.clone()));
        // raise the working order until the trusted window reaches q^80
        let mut order = 80;
        let (engine, reference) = loop {
            let (engine, reference) = selftest::oracle_pair(call, &ctx(order)).unwrap();
            let window = engine.valid_to().min(reference.valid_to());
            if window >= 80 {
                break (engine, reference);
            }
            order += 80 - window;
        };
        let window = engine.valid_to().min(reference.valid_to());
        if let Some(m) = first_mismatch(&engine, &reference, window).unwrap() {
            failures.push(format!("{label}: q^{}: {} vs {}", m.exponent, m.lhs, m.rhs));
        }
    }
    report(5, &format!("{} registry sum calls agree with the brute-force oracle through q^80", calls.len()), &failures);
}

#[test]
fn criterion_6_order_doubling() {
    let mut failures = Vec::new();
    let (c1, c2) = (ctx(100), ctx(200));
    for id in builtin_registry() {
        for (side, e) in [("lhs", &id.lhs), ("rhs", &id.rhs)] {
            let a = eval(e, &c1).unwrap();
            let b = eval(e, &c2).unwrap();
            if b.valid_to() < a.valid_to() {
                failures.push(format!("{} {side}: validity fell", id.name));
            }
            if let Some(m) = first_mismatch(&a, &b, a.valid_to()).unwrap() {
                failures.push(format!("{} {side}: q^{}", id.name, m.exponent));
            }
        }
    }
    report(6, "every registry side agrees at orders 100 and 200 below the order-100 bound", &failures);
}

#[test]
fn criterion_7_perturbed_prefactors_are_caught() {
    let mut failures = Vec::new();
    let registry = builtin_registry();
    let id = lookup(&registry, "mtc-X").unwrap();
    let variants = prefactor_perturbations(&id.rhs);
    if variants.is_empty() {
        failures.push("no prefactors found".into());
    }
    for rhs in &variants {
        let bad = Identity { rhs: rhs.clone(), builtin: None, ..id.clone() };
        let r = verify(&bad, &ctx(100)).unwrap();
        match (&r.status, &r.mismatch) {
            (Status::Mismatch, Some(m)) => println!("  {} -> mismatch at q^{}", render(rhs), m.exponent),
            _ => failures.push(format!("not caught: {}", render(rhs))),
        }
        let text = format!("{} = {}", render(&id.lhs), render(rhs));
        let out = Command::new(env!("CARGO_BIN_EXE_qmock")).args(["verify", &text, "--order", "100"]).output().unwrap();
        if out.status.code() != Some(1) {
            failures.push(format!("cli exit {:?} for {}", out.status.code(), render(rhs)));
        }
    }
    report(7, &format!("all {} mtc-X prefactor perturbations mismatch, cli exits 1", variants.len()), &failures);
}

#[test]
fn criterion_8_dyadic_denominators() {
    let mut failures = Vec::new();
    let st = selftest::run(100, None).unwrap();
    for check in st.checks.iter().filter(|c| !c.passed) {
        failures.push(check.line());
    }
    let mut audit = Vec::new();
    for order in [200, 500] {
        let results = verify_all_of(&builtin_registry(), &ctx(order)).unwrap();
        for v in results {
            audit.extend(v.lhs);
            audit.extend(v.rhs);
        }
    }
    let check = selftest::denominator_audit(&audit);
    if !check.passed {
        failures.push(check.line());
    }
    report(8, "every coefficient emitted by the selftest and registry runs has a power-of-two denominator", &failures);
}

//! The full property suite, as run by `qmock selftest`.
fn main() -> qmock::Result<()> {
    let report = qmock::selftest::run(60, None)?;
    for check in &report.checks {
        println!("{}", check.line());
    }
    println!("{} passed, {} failed", report.passed(), report.failed());
    Ok(())
}

//! Every Appell-Lerch and mock theta call in the registry, expanded by the
//! engine and by the brute-force oracle.
use qmock::expr::{render, Expr};
use qmock::selftest::{oracle_pair, registry_sum_calls};
use qmock::{first_mismatch, EvalContext};

fn main() -> qmock::Result<()> {
    let ctx = EvalContext::new(80)?;
    for call in registry_sum_calls() {
        let (engine, reference) = oracle_pair(&call, &ctx)?;
        let upto = engine.valid_to().min(reference.valid_to());
        let same = first_mismatch(&engine, &reference, upto)?.is_none();
        println!("{:<28} {} below q^{upto}", render(&Expr::Call(call)), if same { "agree" } else { "DIFFER" });
    }
    Ok(())
}

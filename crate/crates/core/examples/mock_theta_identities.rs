//! The two 10th order identities and the chain of steps that proves them.
use qmock::identity::{builtin_registry, verify};
use qmock::EvalContext;

fn main() -> qmock::Result<()> {
    let order = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    let ctx = EvalContext::new(order)?;
    let registry = builtin_registry();
    for id in registry.iter().filter(|id| !id.name.starts_with("law-")) {
        println!("{}", verify(id, &ctx)?.plain());
    }
    Ok(())
}

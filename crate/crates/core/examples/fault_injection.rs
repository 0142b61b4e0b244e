//! Shows that a wrong prefactor in the X(-q^2) identity is detected, and
//! where.
use qmock::expr::render;
use qmock::identity::{builtin_registry, lookup, prefactor_perturbations, verify, Identity};
use qmock::EvalContext;

fn main() -> qmock::Result<()> {
    let ctx = EvalContext::new(100)?;
    let registry = builtin_registry();
    let id = lookup(&registry, "mtc-X").expect("registry entry");
    for rhs in prefactor_perturbations(&id.rhs) {
        let bad = Identity { rhs, builtin: None, ..id.clone() };
        println!("{}\n  -> {}", render(&bad.rhs), verify(&bad, &ctx)?.plain());
    }
    Ok(())
}

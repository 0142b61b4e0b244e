//! Verification reports for the whole registry as JSON.
use qmock::identity::verify_all;
use qmock::EvalContext;

fn main() -> qmock::Result<()> {
    let reports = verify_all(&EvalContext::new(100)?)?;
    println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
    Ok(())
}

//! Parses an expression and prints its expansion.
//!
//!     cargo run --example expand -- "m(q^18, q^40, q^32)" 60
use qmock::expr::{eval, parse};
use qmock::EvalContext;

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "pochinf(q, q)^-1".into());
    let order = args.next().and_then(|s| s.parse().ok()).unwrap_or(30);
    let expr = match parse(&text) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{text}\n{}^ {e}", " ".repeat(e.position()));
            std::process::exit(2);
        }
    };
    let ctx = EvalContext::new(order).expect("positive order");
    match eval(&expr, &ctx) {
        Ok(s) => println!("{expr} = {s}"),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(3);
        }
    }
}

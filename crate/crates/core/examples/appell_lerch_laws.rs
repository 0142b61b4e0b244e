//! The five transformation laws for Appell-Lerch sums at one tuple each.
use qmock::selftest::Law;
use qmock::{first_mismatch, EvalContext, Monomial};

fn main() -> qmock::Result<()> {
    let ctx = EvalContext::new(80)?;
    let (q, n) = (Monomial::q, Monomial::neg_q);
    let samples = [
        (Law::Inversion, [n(3), q(10), q(1), q(1)]),
        (Law::ZShift, [n(3), q(10), q(2), q(1)]),
        (Law::BaseChange, [n(1), q(10), q(2), q(1)]),
        (Law::G2, [q(3), q(20), q(1), q(1)]),
        (Law::KToM, [n(2), n(10), q(1), q(1)]),
    ];
    for (law, p) in samples {
        let (lhs, rhs) = law.sides(p, &ctx)?;
        let upto = lhs.valid_to().min(rhs.valid_to());
        let verdict = match first_mismatch(&lhs, &rhs, upto)? {
            None => format!("holds below q^{upto}"),
            Some(m) => format!("fails at q^{}", m.exponent),
        };
        println!("{:<22} at ({}, {}, {}, {}): {verdict}", law.name(), p[0], p[1], p[2], p[3]);
    }
    Ok(())
}

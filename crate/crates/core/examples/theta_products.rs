//! Theta functions as products, checked against their bilateral sums.
use qmock::theta::{jtheta, J};
use qmock::{oracle, EvalContext, Monomial};

fn main() -> qmock::Result<()> {
    let ctx = EvalContext::new(30)?;
    let euler = J(1, 3, Monomial::q(1), &ctx)?;
    println!("J(1,3) = {euler}");

    // negative arguments are moved into range by quasi-periodicity
    let x = jtheta(Monomial::q(-32), Monomial::q(40), &ctx)?;
    println!("j(q^-32, q^40) = {x}");
    assert_eq!(x, oracle::theta_sum(Monomial::q(-32), Monomial::q(40), x.valid_to()));

    let zero = jtheta(Monomial::q(20), Monomial::neg_q(10), &ctx)?;
    println!("j(q^20, -q^10) vanishes: {}", zero.is_zero_to_order());
    Ok(())
}

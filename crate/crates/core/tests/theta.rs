use qmock::oracle;
use qmock::theta::{jtheta, pochhammer, theta_vanishes, PochLength, J};
use qmock::{EvalContext, Monomial};

fn ctx(n: i64) -> EvalContext {
    EvalContext::new(n).unwrap()
}

#[test]
fn euler_product_is_pentagonal() {
    let c = ctx(120);
    let product = pochhammer(Monomial::q(1), Monomial::q(1), PochLength::Infinite, &c).unwrap();
    assert_eq!(product, oracle::pentagonal(120));
    assert_eq!(J(1, 3, Monomial::q(1), &c).unwrap(), oracle::pentagonal(120));
}

#[test]
fn finite_pochhammer_matches_naive_product() {
    let c = ctx(60);
    for (a, b, n) in [(Monomial::neg_q(2), Monomial::neg_q(2), 7), (Monomial::q(-3), Monomial::q(2), 5)] {
        let s = pochhammer(a, b, PochLength::Finite(n), &c).unwrap();
        assert_eq!(s, oracle::pochhammer(a, b, n, 60), "({a}; {b})_{n}");
    }
}

#[test]
fn reduction_of_a_negative_argument() {
    // j(q^-32, q^40) = -q^-32 j(q^8, q^40)
    let c = ctx(200);
    let direct = jtheta(Monomial::q(-32), Monomial::q(40), &c).unwrap();
    let reduced = jtheta(Monomial::q(8), Monomial::q(40), &c).unwrap().shift(Monomial::neg_q(-32));
    assert_eq!(direct, reduced);
    assert_eq!(direct.lo(), -32);
    assert_eq!(direct, oracle::theta_sum(Monomial::q(-32), Monomial::q(40), direct.valid_to()));
}

#[test]
fn vanishing_is_exact() {
    let c = ctx(80);
    for k in -3..=3 {
        let b = Monomial::neg_q(10);
        assert!(theta_vanishes(b.pow(k), b));
        assert!(jtheta(b.pow(k), b, &c).unwrap().is_zero_to_order());
    }
    // (-q^10)^2 = q^20, but -q^20 is not a power of -q^10
    assert!(!theta_vanishes(Monomial::neg_q(20), Monomial::neg_q(10)));
    assert!(!jtheta(Monomial::neg_q(20), Monomial::neg_q(10), &c).unwrap().is_zero_to_order());
}

#[test]
fn theta_with_negative_base_matches_sum() {
    let c = ctx(150);
    for x in [Monomial::q(4), Monomial::neg_q(2), Monomial::q(-13)] {
        let b = Monomial::neg_q(10);
        let s = jtheta(x, b, &c).unwrap();
        assert_eq!(s, oracle::theta_sum(x, b, s.valid_to()));
    }
}

use qmock::appell::{appell_m, delta_term, g2, geom_inverse, lambda_term, small_k};
use qmock::{oracle, Error, EvalContext, LaurentSeries, Monomial};

fn ctx(n: i64) -> EvalContext {
    EvalContext::new(n).unwrap()
}

fn q(e: i64) -> Monomial {
    Monomial::q(e)
}

fn nq(e: i64) -> Monomial {
    Monomial::neg_q(e)
}

fn assert_agree(f: &LaurentSeries, g: &LaurentSeries) {
    let upto = f.valid_to().min(g.valid_to());
    assert_eq!(qmock::first_mismatch(f, g, upto).unwrap(), None);
}

#[test]
fn geometric_inverses() {
    let c = ctx(10);
    assert_eq!(geom_inverse(q(3), &c).unwrap(), LaurentSeries::from_ints(0, &[1, 0, 0, 1, 0, 0, 1, 0, 0, 1]));
    assert_eq!(geom_inverse(q(-2), &c).unwrap().to_string(), "-q^2 - q^4 - q^6 - q^8 + O(q^10)");
    assert_eq!(geom_inverse(nq(0), &c).unwrap().to_string(), "1/2 + O(q^10)");
    assert!(matches!(geom_inverse(Monomial::ONE, &c), Err(Error::Genericity(_))));
}

#[test]
fn sums_match_the_oracle() {
    let c = ctx(90);
    let cases: [(Monomial, Monomial, Monomial); 5] = [
        (q(18), q(40), q(32)),
        (q(2), q(40), q(-32)),
        (nq(4), nq(10), q(8)),
        (q(2), nq(10), q(4)),
        (nq(3), q(10), q(-1)),
    ];
    for (x, b, z) in cases {
        let s = appell_m(x, b, z, &c).unwrap();
        assert_eq!(s, oracle::appell_m(x, b, z, s.valid_to()), "m({x}, {b}, {z})");
    }
    let k = small_k(nq(2), nq(10), &c).unwrap();
    assert_eq!(k, oracle::small_k(nq(2), nq(10), k.valid_to()));
    let g = g2(q(1), q(20), &c).unwrap();
    assert_eq!(g, oracle::g2(q(1), q(20), g.valid_to()));
}

#[test]
fn poles_are_reported() {
    let c = ctx(40);
    assert!(matches!(appell_m(q(2), q(40), Monomial::ONE, &c), Err(Error::Genericity(_))));
    // B^(r-1) x z = 1 at r = 0 for x z = B
    assert!(matches!(appell_m(q(30), q(40), q(10), &c), Err(Error::Genericity(_))));
    assert!(matches!(small_k(q(5), q(5), &c), Err(Error::Genericity(_))));
    assert!(matches!(g2(q(10), q(10), &c), Err(Error::Genericity(_))));
    assert!(matches!(delta_term(q(1), q(10), q(20), q(3), &c), Err(Error::Genericity(_))));
}

#[test]
fn delta_is_the_difference_of_two_sums() {
    let c = ctx(120);
    for (x, z1, z0) in [(q(18), q(32), q(1)), (q(2), q(-32), q(9)), (q(14), q(16), q(3)), (q(6), q(-16), q(7))] {
        let b = q(40);
        let d = delta_term(x, b, z1, z0, &c).unwrap();
        let diff = oracle::appell_m(x, b, z1, 130).sub(&oracle::appell_m(x, b, z0, 130));
        assert_agree(&d, &diff);
        assert!(d.valid_to() >= 120);
    }
    assert!(delta_term(q(3), q(10), q(4), q(4), &c).unwrap().is_zero_to_order());
}

#[test]
fn lambda_vanishes_where_expected() {
    let c = ctx(100);
    assert!(lambda_term(nq(4), nq(10), q(8), &c).unwrap().is_zero_to_order());
    assert!(lambda_term(q(2), nq(10), q(4), &c).unwrap().is_zero_to_order());
    assert!(!lambda_term(nq(1), q(10), q(2), &c).unwrap().is_zero_to_order());
}

#[test]
fn half_integers_appear_only_through_the_minus_one_denominator() {
    let c = ctx(60);
    let s = appell_m(nq(4), nq(10), q(8), &c).unwrap();
    assert!(s.has_dyadic_denominators());
}

use qmock::mock::{mt_chi, mt_x};
use qmock::{oracle, EvalContext, LaurentSeries, Monomial};

#[test]
fn mock_theta_functions_match_the_oracle() {
    let ctx = EvalContext::new(120).unwrap();
    for b in [Monomial::q(1), Monomial::neg_q(2), Monomial::q(3)] {
        assert_eq!(mt_x(b, &ctx).unwrap(), oracle::mt_x(b, 120), "X({b})");
        assert_eq!(mt_chi(b, &ctx).unwrap(), oracle::mt_chi(b, 120), "chi({b})");
    }
}

#[test]
fn low_order_coefficients() {
    let ctx = EvalContext::new(4).unwrap();
    // X(q) = 1 - q/((1+q)(1+q^2)) + O(q^4)
    assert_eq!(mt_x(Monomial::q(1), &ctx).unwrap(), LaurentSeries::from_ints(0, &[1, -1, 1, 0]));
    // chi(q) = q/(1+q) + O(q^4)
    assert_eq!(mt_chi(Monomial::q(1), &ctx).unwrap(), LaurentSeries::from_ints(1, &[1, -1, 1]));
}

use num::{BigInt, BigRational};
use proptest::prelude::*;
use qmock::{first_mismatch, EvalContext, LaurentSeries, Monomial};

fn series() -> impl Strategy<Value = LaurentSeries> {
    (-4i64..4, prop::collection::vec((-6i64..=6, 1i64..=3), 1..24)).prop_map(|(lo, cs)| {
        let coeffs = cs.into_iter().map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect();
        LaurentSeries::from_coeffs(lo, coeffs)
    })
}

fn agree(f: &LaurentSeries, g: &LaurentSeries) -> bool {
    let upto = f.valid_to().min(g.valid_to());
    first_mismatch(f, g, upto).unwrap().is_none()
}

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(f in series(), g in series(), h in series()) {
        prop_assert!(agree(&f.add(&g).add(&h), &f.add(&g.add(&h))));
        prop_assert!(agree(&f.add(&g), &g.add(&f)));
    }

    #[test]
    fn multiplication_distributes(f in series(), g in series(), h in series()) {
        prop_assert!(agree(&f.mul(&g.add(&h)), &f.mul(&g).add(&f.mul(&h))));
        prop_assert!(agree(&f.mul(&g), &g.mul(&f)));
        prop_assert!(agree(&f.mul(&g).mul(&h), &f.mul(&g.mul(&h))));
    }

    #[test]
    fn product_validity_follows_the_rule(f in series(), g in series()) {
        let (a, b) = (f.trimmed(), g.trimmed());
        let p = f.mul(&g);
        if !a.is_zero_to_order() && !b.is_zero_to_order() {
            prop_assert_eq!(p.valid_to(), (a.valid_to() + b.lo()).min(b.valid_to() + a.lo()));
        }
    }

    #[test]
    fn truncating_an_input_never_changes_trusted_output(f in series(), g in series(), cut in 1i64..20) {
        let short = f.truncated(f.lo() + cut);
        prop_assert!(agree(&short.mul(&g), &f.mul(&g)));
        if let (Ok(a), Ok(b)) = (short.invert(), f.invert()) {
            prop_assert!(agree(&a, &b));
        }
    }

    #[test]
    fn inverse_is_an_inverse(f in series()) {
        if let Ok(inv) = f.invert() {
            let p = f.mul(&inv);
            let unit: Vec<i64> = (0..p.valid_to().max(1)).map(|e| i64::from(e == 0)).collect();
            prop_assert!(agree(&p, &LaurentSeries::from_ints(0, &unit)));
        }
    }

    #[test]
    fn shifts_move_the_window(f in series(), e in -10i64..10) {
        let m = Monomial::q(e);
        let s = f.shift(m);
        prop_assert_eq!(s.lo(), f.lo() + e);
        prop_assert_eq!(s.valid_to(), f.valid_to() + e);
        prop_assert_eq!(s.shift(m.inv()), f);
    }
}

#[test]
fn negative_shift_costs_validity() {
    let ctx = EvalContext::new(50).unwrap();
    let f = LaurentSeries::one(&ctx);
    assert_eq!(f.shift(Monomial::q(-4)).valid_to(), 46);
}

#[test]
fn mismatch_beyond_validity_is_refused() {
    let f = LaurentSeries::from_ints(0, &[1, 2, 3]);
    assert!(first_mismatch(&f, &f, 4).is_err());
    assert_eq!(first_mismatch(&f, &f, 3).unwrap(), None);
}

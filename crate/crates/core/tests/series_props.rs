use dyck_odd::Series;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn series() -> impl Strategy<Value = Series> {
    (-2i64..3, prop::collection::vec((-9i64..10, 1i64..4), 1..10)).prop_map(|(val, cs)| {
        let len = cs.len() as i64;
        let coeffs = cs
            .into_iter()
            .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        Series::from_coeffs(val, coeffs, val + len)
    })
}

fn nonzero_series() -> impl Strategy<Value = Series> {
    series().prop_filter("nonzero", |s| !s.is_zero())
}

/// Equality on the precision both sides know.
fn agree(a: &Series, b: &Series) -> bool {
    let p = a.precision().min(b.precision());
    a.truncate(p) == b.truncate(p)
}

proptest! {
    #[test]
    fn add_associative(a in series(), b in series(), c in series()) {
        prop_assert!(agree(&(&(&a + &b) + &c), &(&a + &(&b + &c))));
    }

    #[test]
    fn add_commutative(a in series(), b in series()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn additive_identity(a in series()) {
        prop_assert_eq!(&a + &Series::zero(a.precision()), a);
    }

    #[test]
    fn mul_associative(a in series(), b in series(), c in series()) {
        prop_assert!(agree(&(&(&a * &b) * &c), &(&a * &(&b * &c))));
    }

    #[test]
    fn distributive(a in series(), b in series(), c in series()) {
        prop_assert!(agree(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c))));
    }

    #[test]
    fn multiplicative_identity(a in series()) {
        let one = Series::one(a.precision() - a.valuation().min(0));
        prop_assert!(agree(&(&a * &one), &a));
    }

    #[test]
    fn div_inverts_mul(a in series(), b in nonzero_series()) {
        let q = a.div(&b).unwrap();
        prop_assert!(agree(&(&q * &b), &a));
    }

    #[test]
    fn self_quotient_is_one(a in nonzero_series()) {
        let q = a.div(&a).unwrap();
        prop_assert!(agree(&q, &Series::one(q.precision())));
    }

    #[test]
    fn coeff_is_additive(a in series(), b in series(), n in -3i64..12) {
        let s = &a + &b;
        if n < s.precision() {
            prop_assert_eq!(s.coeff(n).unwrap(), a.coeff(n).unwrap() + b.coeff(n).unwrap());
        } else {
            prop_assert!(s.coeff(n).is_err());
        }
    }

    #[test]
    fn decimate_inverts_inflate(a in series()) {
        prop_assert_eq!(a.inflate().decimate().unwrap(), a);
    }

    #[test]
    fn sub_self_is_zero(a in series()) {
        prop_assert!((&a - &a).is_zero());
    }
}

#[test]
fn z_times_v1_prefix() {
    // z * (1/z - z - z^5 - 2z^7) = 1 - z^2 - z^6 - 2z^8
    let v1 = Series::from_ints(-1, &[1, 0, -1, 0, 0, 0, -1, 0, -2], 8);
    let zv1 = &Series::var(20) * &v1;
    assert_eq!(
        zv1,
        Series::from_ints(0, &[1, 0, -1, 0, 0, 0, -1, 0, -2], 9)
    );
}

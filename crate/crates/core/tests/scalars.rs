use num::bigint::BigInt;
use proptest::prelude::*;
use qproj::qscalar::{QScalar, Rat};

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Sums of monomials in t = q^(1/root), optionally divided by another such sum.
fn laurent(root: u32) -> impl Strategy<Value = QScalar> {
    prop::collection::vec((-4i64..=4, 1i64..=3, -6i32..=6), 1..4).prop_map(move |terms| {
        let mut x = QScalar::zero();
        for (n, d, k) in terms {
            x += &QScalar::monomial(rat(n, d), k, root);
        }
        x
    })
}

fn scalar() -> impl Strategy<Value = QScalar> {
    (1u32..=3).prop_flat_map(|root| {
        (laurent(root), laurent(root)).prop_map(|(a, b)| if b.is_zero() { a } else { a / b })
    })
}

fn triple() -> impl Strategy<Value = (QScalar, QScalar, QScalar)> {
    (1u32..=3).prop_flat_map(|root| (laurent(root), laurent(root), laurent(root)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverse(a in scalar()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.try_inv().unwrap()).is_one());
        prop_assert_eq!(a.pow(-2), (&a * &a).try_inv().unwrap());
    }

    #[test]
    fn conjugation_is_an_involutive_field_map((a, b, _) in triple()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        prop_assert_eq!((&a + &b).conj(), a.conj() + b.conj());
    }

    #[test]
    fn evaluation_is_a_homomorphism((a, b, _) in (1u32..=1).prop_flat_map(|r| (laurent(r), laurent(r), laurent(r)))) {
        let q0 = rat(3, 2);
        let ev = |x: &QScalar| x.eval(&q0).unwrap().as_rational().unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn display_parses_back(a in scalar()) {
        let root = a.root_order();
        prop_assert_eq!(QScalar::parse(&a.to_string(), root).unwrap(), a);
    }
}

#[test]
fn t_powers_compose() {
    for root in 1..=4u32 {
        assert_eq!(QScalar::t_pow(root as i32, root), QScalar::q(root));
        assert_eq!(QScalar::q_pow(2, root) * QScalar::q_pow(-2, root), QScalar::one());
        assert_eq!(QScalar::nu(root), QScalar::q(root) - QScalar::q_pow(-1, root));
    }
}

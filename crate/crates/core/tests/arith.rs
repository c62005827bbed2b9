use confalg::{DPoly, Rational, Scalar};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d)),
        // large enough to overflow i64 products
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rational::new(n, d)),
    ]
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), prop_oneof![Just(Rational::zero()), rational()]).prop_map(|(re, im)| Scalar::new(re, im))
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..6, 1i64..4, -3i64..3).prop_map(|(n, d, i)| &Scalar::from_ratio(n, d) + &(&Scalar::i() * &Scalar::from_int(i)))
}

fn dpoly() -> impl Strategy<Value = DPoly> {
    prop::collection::vec(small_scalar(), 0..5).prop_map(DPoly::from_coeffs)
}

proptest! {
    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn conjugation_is_multiplicative(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert!((&a * &a.conj()).is_real());
    }

    #[test]
    fn division_with_remainder(a in dpoly(), b in dpoly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in dpoly(), b in dpoly()) {
        let g = a.gcd(&b);
        if g.is_zero() {
            prop_assert!(a.is_zero() && b.is_zero());
        } else {
            prop_assert!(g.leading().unwrap().is_one());
            prop_assert!(a.div_exact(&g).is_some());
            prop_assert!(b.div_exact(&g).is_some());
        }
    }

    #[test]
    fn translation_is_a_ring_map(a in dpoly(), b in dpoly(), c in small_scalar(), x in small_scalar()) {
        prop_assert_eq!((&a * &b).translate(&c), &a.translate(&c) * &b.translate(&c));
        prop_assert_eq!(a.translate(&c).eval(&x), a.eval(&(&x + &c)));
        prop_assert_eq!((&a * &b).eval(&x), &a.eval(&x) * &b.eval(&x));
    }

    #[test]
    fn leibniz(a in dpoly(), b in dpoly()) {
        prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
    }
}

#[test]
fn overflow_promotes_to_big() {
    let big = Rational::new(i64::MAX, 1);
    let sq = &big * &big;
    assert_eq!(&sq / &big, big);
    assert!(Rational::new(i64::MIN, -1).numer() > 0.into());
}

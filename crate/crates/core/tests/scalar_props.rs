use e6grad::scalar::{CycScalar, Rational};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn cyc() -> impl Strategy<Value = CycScalar> {
    [rat(), rat(), rat(), rat()].prop_map(CycScalar::from_coords)
}

fn real() -> impl Strategy<Value = CycScalar> {
    (rat(), rat()).prop_map(|(p, q)| CycScalar::from_rational(p) + CycScalar::sqrt3().scale(&q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), CycScalar::one());
        }
    }

    #[test]
    fn conjugation_is_involutive_automorphism(a in cyc(), b in cyc()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        let n = &a * &a.conj();
        prop_assert!(n.is_real());
        prop_assert!(n.sign_real().unwrap() >= 0);
    }

    #[test]
    fn sign_matches_floating_point(x in real()) {
        let (p, q) = x.real_parts().unwrap();
        let v = p.to_f64() + q.to_f64() * 1.7320508075688772;
        let s = x.sign_real().unwrap();
        if v.abs() > 1e-9 {
            prop_assert_eq!(s, if v > 0.0 { 1 } else { -1 });
        } else {
            prop_assert_eq!(s, 0);
        }
    }

    #[test]
    fn rational_parse_roundtrip(r in rat()) {
        let back: Rational = r.to_pq_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn sign_agrees_with_float_on_1000_elements() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(12);
    for _ in 0..1000 {
        let p = Rational::new(rng.gen_range(-1000..1000), rng.gen_range(1..50)).unwrap();
        let q = Rational::new(rng.gen_range(-1000..1000), rng.gen_range(1..50)).unwrap();
        let x = CycScalar::from_rational(p.clone()) + CycScalar::sqrt3().scale(&q);
        let v = p.to_f64() + q.to_f64() * 1.7320508075688772;
        let s = x.sign_real().unwrap();
        let expect = if v.abs() < 1e-12 { 0 } else if v > 0.0 { 1 } else { -1 };
        assert_eq!(s, expect, "{x}");
    }
}

use num_rational::Ratio;
use pointed_ext::scalar::{cyclotomic_polynomial, exp_i_pi, root_in, totient, Q128};
use pointed_ext::{root_of_unity, Cyc, CycField, Error};
use proptest::prelude::*;

fn close(x: (f64, f64), y: (f64, f64)) -> bool {
    (x.0 - y.0).abs() < 1e-12 && (x.1 - y.1).abs() < 1e-12
}

#[test]
fn roots_of_unity() {
    assert!(root_of_unity(1, 0).unwrap().is_one());
    let i = root_of_unity(4, 1).unwrap();
    assert_eq!(&i * &i, root_of_unity(4, 2).unwrap());
    assert_eq!(root_of_unity(4, 2).unwrap().as_rational(), Some(Q128::from_integer(-1)));
    let s = &root_of_unity(3, 1).unwrap() + &root_of_unity(3, 2).unwrap();
    assert_eq!(s.as_rational(), Some(Q128::from_integer(-1)));
    assert_eq!(root_of_unity(7, 9).unwrap(), root_of_unity(7, 2).unwrap());
    assert_eq!(root_of_unity(7, -5).unwrap(), root_of_unity(7, 2).unwrap());
    assert_eq!(root_of_unity(0, 1), Err(Error::ZeroOrder));
}

#[test]
fn conjugate_and_inverse() {
    assert_eq!(root_of_unity(8, 1).unwrap().conj(), root_of_unity(8, 7).unwrap());
    assert_eq!(root_of_unity(5, 2).unwrap().inv().unwrap(), root_of_unity(5, 3).unwrap());
    let f = CycField::new(6).unwrap();
    assert_eq!(Cyc::zero(&f).inv(), Err(Error::ZeroInverse));
}

#[test]
fn numeric_embedding() {
    let f = CycField::new(12).unwrap();
    assert!(close(Cyc::one(&f).approx_complex(), (1.0, 0.0)));
    assert!(close(root_of_unity(4, 1).unwrap().approx_complex(), (0.0, 1.0)));
    let pi6 = std::f64::consts::PI / 6.0;
    assert!(close(root_in(&f, 1).approx_complex(), (pi6.cos(), pi6.sin())));
}

#[test]
fn canonical_form_degree() {
    for n in 1..=40u32 {
        assert_eq!(cyclotomic_polynomial(n).len() as u32, totient(n) + 1);
        let f = CycField::new(n).unwrap();
        for k in 0..n as i64 {
            assert!((root_in(&f, k).coeffs().len() as u32) <= totient(n));
        }
    }
}

#[test]
fn exp_i_pi_values() {
    let f = CycField::new(8).unwrap();
    assert_eq!(exp_i_pi(&f, 1, 4), root_in(&f, 1));
    assert_eq!(exp_i_pi(&f, 1, 1).as_rational(), Some(Q128::from_integer(-1)));
    assert_eq!(exp_i_pi(&f, 3, 2), root_in(&f, 6));
}

#[test]
fn sqrt_two_from_eighth_roots() {
    // ζ8 + ζ8⁻¹ = √2, so its square is 2.
    let z = root_of_unity(8, 1).unwrap();
    let r = &z + &z.conj();
    assert_eq!((&r * &r).as_rational(), Some(Q128::from_integer(2)));
}

#[test]
fn mixed_orders_combine() {
    let a = root_of_unity(3, 1).unwrap();
    let b = root_of_unity(4, 1).unwrap();
    assert_eq!(&a * &b, root_of_unity(12, 7).unwrap());
    assert_eq!(a.lift(12).unwrap(), a);
}

fn arb_cyc(order: u32) -> impl Strategy<Value = Cyc> {
    prop::collection::vec((-6i128..=6, 1i128..=4), 0..8).prop_map(move |cs| {
        let f = CycField::new(order).unwrap();
        let coeffs: Vec<Q128> = cs.into_iter().map(|(p, q)| Ratio::new(p, q)).collect();
        Cyc::from_coeffs(&f, &coeffs)
    })
}

fn arb_triple() -> impl Strategy<Value = (Cyc, Cyc, Cyc)> {
    prop::sample::select(vec![1u32, 3, 4, 5, 8, 12, 15, 24]).prop_flat_map(|n| (arb_cyc(n), arb_cyc(n), arb_cyc(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn additive_inverse((x, _, _) in arb_triple()) {
        prop_assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn ring_axioms((x, y, z) in arb_triple()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn multiplicative_inverse((x, _, _) in arb_triple()) {
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn conjugation_is_multiplicative((x, y, _) in arb_triple()) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn embedding_matches_arithmetic((x, y, _) in arb_triple()) {
        let (a, b) = (x.approx_complex(), y.approx_complex());
        let p = (&x * &y).approx_complex();
        let want = (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
        prop_assert!((p.0 - want.0).abs() < 1e-6 && (p.1 - want.1).abs() < 1e-6);
    }

    #[test]
    fn roots_have_unit_modulus(n in 1u32..60, k in -200i64..200) {
        let (re, im) = root_of_unity(n, k).unwrap().approx_complex();
        prop_assert!(((re * re + im * im).sqrt() - 1.0).abs() < 1e-12);
        prop_assert_eq!(root_of_unity(n, k).unwrap(), root_of_unity(n, k.rem_euclid(n as i64)).unwrap());
    }

    #[test]
    fn lifting_preserves_values((x, y, _) in arb_triple(), m in 1u32..4) {
        let big = x.order() * m * 2;
        let (xl, yl) = (x.lift(big).unwrap(), y.lift(big).unwrap());
        prop_assert_eq!(&xl, &x);
        prop_assert_eq!(&xl * &yl, &x * &y);
        prop_assert_eq!(&xl + &yl, &x + &y);
    }
}

use num_integer::Integer;
use orthomod::exact::{apply_galois, sign_of_real, CycNumber, GaloisAutomorphism, Rational};
use proptest::prelude::*;

const CONDUCTORS: [u32; 7] = [1, 3, 4, 8, 9, 12, 20];

type Terms = Vec<(i64, i64, i64)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((0i64..40, -6i64..=6, 1i64..=4), 0..6)
}

fn build(n: u32, t: &Terms) -> CycNumber {
    let pairs: Vec<(i64, Rational)> = t.iter().map(|&(e, p, q)| (e, Rational::new(p.into(), q.into()))).collect();
    CycNumber::from_exponents(n, &pairs)
}

/// Σ (p/q)·exp(2πi e/N), straight from the terms.
fn direct(n: u32, t: &Terms) -> (f64, f64) {
    t.iter().fold((0.0, 0.0), |(re, im), &(e, p, q)| {
        let th = 2.0 * std::f64::consts::PI * e as f64 / n as f64;
        let c = p as f64 / q as f64;
        (re + c * th.cos(), im + c * th.sin())
    })
}

fn conductor() -> impl Strategy<Value = u32> {
    prop::sample::select(CONDUCTORS.to_vec())
}

fn unit(n: u32) -> impl Strategy<Value = i64> {
    (1..=n as i64).prop_filter("unit", move |l| l.gcd(&(n as i64)) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(n in conductor(), a in terms(), b in terms(), c in terms()) {
        let (a, b, c) = (build(n, &a), build(n, &b), build(n, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(n in conductor(), a in terms()) {
        let a = build(n, &a);
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert_eq!(&a * &a.inv().unwrap(), CycNumber::one(n));
        }
    }

    #[test]
    fn norm_is_positive(n in conductor(), a in terms()) {
        let a = build(n, &a);
        let nn = &a * &a.conj();
        prop_assert!(nn.is_real());
        let s = sign_of_real(&nn).unwrap();
        prop_assert_eq!(s, if a.is_zero() { 0 } else { 1 });
    }

    #[test]
    fn galois_is_a_homomorphism(n in conductor(), l in 1i64..200, a in terms(), b in terms()) {
        prop_assume!(l.gcd(&(n as i64)) == 1);
        let s = GaloisAutomorphism::new(n, l).unwrap();
        let (a, b) = (build(n, &a), build(n, &b));
        let g = |x: &CycNumber| apply_galois(&s, x).unwrap();
        prop_assert_eq!(g(&(&a + &b)), &g(&a) + &g(&b));
        prop_assert_eq!(g(&(&a * &b)), &g(&a) * &g(&b));
        prop_assert_eq!(g(&CycNumber::one(n)), CycNumber::one(n));
    }

    #[test]
    fn galois_composition((n, l, m) in conductor().prop_flat_map(|n| (Just(n), unit(n), unit(n))), a in terms()) {
        let a = build(n, &a);
        let sl = GaloisAutomorphism::new(n, l).unwrap();
        let sm = GaloisAutomorphism::new(n, m).unwrap();
        let lm = GaloisAutomorphism::new(n, (l * m) % n as i64).unwrap();
        prop_assert_eq!(sl.compose(&sm).unwrap(), lm);
        let twice = apply_galois(&sl, &apply_galois(&sm, &a).unwrap()).unwrap();
        prop_assert_eq!(twice, apply_galois(&lm, &a).unwrap());
    }

    #[test]
    fn embedding_preserves_equality(n in conductor(), k in 1u32..=4, a in terms(), b in terms()) {
        let (a, b) = (build(n, &a), build(n, &b));
        let m = n * k;
        prop_assert_eq!(a.embed(m) == b.embed(m), a == b);
        prop_assert_eq!(a.embed(m), a.clone());
        // mixed-conductor arithmetic lands in the common field
        let c = &a.embed(m) + &b;
        prop_assert_eq!(c.embed(m), (&a + &b).embed(m));
    }

    #[test]
    fn floating_point_evaluation(n in conductor(), t in terms()) {
        let a = build(n, &t);
        let (re, im) = a.to_complex_f64();
        let (dre, dim) = direct(n, &t);
        prop_assert!((re - dre).abs() < 1e-9 && (im - dim).abs() < 1e-9, "{:?} vs {:?}", (re, im), (dre, dim));
    }
}

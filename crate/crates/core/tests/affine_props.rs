use num_bigint::BigInt;
use orthomod::affine::*;
use orthomod::exact::Rational;
use proptest::prelude::*;

fn algebra() -> impl Strategy<Value = AlgebraSpec> {
    (prop::bool::ANY, 3u32..=10, 1u32..=3).prop_map(|(b, r, k)| if b { AlgebraSpec::b(r, k) } else { AlgebraSpec::d(r + 1, k) })
}

fn with_weight() -> impl Strategy<Value = (AlgebraSpec, Weight)> {
    algebra().prop_flat_map(|alg| {
        let ws = enumerate_weights(&alg);
        (Just(alg), prop::sample::select(ws))
    })
}

fn is_integer_multiple(x: &Rational, m: i64) -> bool {
    (x / Rational::from_integer(BigInt::from(m))).is_integer()
}

#[test]
fn weight_counts() {
    for r in 3..=20 {
        assert_eq!(enumerate_weights(&AlgebraSpec::b(r, 2)).len(), r as usize + 4);
        assert_eq!(enumerate_weights(&AlgebraSpec::b(r, 3)).len(), 3 * r as usize + 4);
    }
    for r in 4..=20 {
        assert_eq!(enumerate_weights(&AlgebraSpec::d(r, 2)).len(), r as usize + 7);
        assert_eq!(enumerate_weights(&AlgebraSpec::d(r, 3)).len(), 4 * r as usize + 8);
    }
}

#[test]
fn rank_two_and_small_d_are_rejected() {
    assert!(AlgebraSpec::new(Series::B, 2, 2).is_err());
    assert!(AlgebraSpec::new(Series::D, 3, 2).is_err());
    assert!(AlgebraSpec::new(Series::B, 3, 4).is_err());
}

#[test]
fn current_group_structure() {
    for r in 4..=9 {
        let alg = AlgebraSpec::d(r, 2);
        use SimpleCurrent::*;
        assert_eq!(Jv.compose(&Js, &alg).unwrap(), Jc);
        assert_eq!(Jv.compose(&Jv, &alg).unwrap(), Id);
        let ns = if r % 2 == 0 { 2 } else { 4 };
        assert_eq!(Js.order(&alg), ns);
        assert_eq!(Js.power(ns, &alg), Id);
        assert_ne!(Js.power(ns - 1, &alg), Id);
        assert_eq!(current_group(&[Js], &alg).unwrap().len(), ns as usize);
        assert_eq!(current_group(&[Jv, Js], &alg).unwrap().len(), 4);
    }
    let b = AlgebraSpec::b(5, 3);
    assert_eq!(SimpleCurrent::Jb.compose(&SimpleCurrent::Jb, &b).unwrap(), SimpleCurrent::Id);
    assert!(SimpleCurrent::Js.compose(&SimpleCurrent::Jb, &b).is_err());
}

#[test]
fn triality_mixes_spinor_sectors() {
    let alg = AlgebraSpec::d(4, 1);
    let v = named::fundamental(&alg, 1).unwrap();
    assert!(!is_spinor(&v, &alg));
    let moved: Vec<bool> = conjugations(&alg).iter().map(|&c| is_spinor(&apply_conjugation(c, &v, &alg).unwrap(), &alg)).collect();
    assert_eq!(moved, [false, false, true, true, true, true]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn currents_act_as_a_group((alg, w) in with_weight()) {
        let cs = currents(&alg);
        for a in &cs {
            prop_assert!(enumerate_weights(&alg).contains(&apply_current(*a, &w, &alg).unwrap()));
            prop_assert_eq!(apply_current(a.inverse(&alg), &apply_current(*a, &w, &alg).unwrap(), &alg).unwrap(), w.clone());
            for b in &cs {
                let ab = a.compose(b, &alg).unwrap();
                let lhs = apply_current(ab, &w, &alg).unwrap();
                let rhs = apply_current(*a, &apply_current(*b, &w, &alg).unwrap(), &alg).unwrap();
                prop_assert_eq!(lhs, rhs);
                // charges add mod 1
                let q = charge(*a, &w, &alg).unwrap() + charge(*b, &w, &alg).unwrap() - charge(ab, &w, &alg).unwrap();
                prop_assert!(q.is_integer());
            }
        }
    }

    #[test]
    fn norm_charge_congruence((alg, w) in with_weight()) {
        let two_n = 2 * alg.n() as i64;
        let base = norm_shift(&w, &alg).unwrap();
        prop_assert_eq!(&base, &inner_product_norm(&w, &alg));
        for j in currents(&alg) {
            let big_n = j.order(&alg) as i64;
            let moved = norm_shift(&apply_current(j, &w, &alg).unwrap(), &alg).unwrap();
            let rr = current_r(j, &alg).unwrap();
            let want = (Rational::new(BigInt::from(rr * (big_n - 1)), BigInt::from(2 * big_n)) - charge(j, &w, &alg).unwrap())
                * Rational::from_integer(BigInt::from(two_n));
            prop_assert!(is_integer_multiple(&(moved - base.clone() - want), two_n), "{} {} {}", alg, w, j);
        }
    }

    #[test]
    fn conjugations_preserve_norm_and_spinors((alg, w) in with_weight()) {
        for c in conjugations(&alg) {
            let v = apply_conjugation(c, &w, &alg).unwrap();
            prop_assert_eq!(inner_product_norm(&v, &alg), inner_product_norm(&w, &alg));
            // D₄ triality exchanges vector and spinor weights; only C₁ keeps the sectors
            if c.0 <= 1 {
                prop_assert_eq!(is_spinor(&v, &alg), is_spinor(&w, &alg));
            }
            prop_assert!(v.is_vacuum() == w.is_vacuum());
        }
    }

    #[test]
    fn orbits_partition_the_weights(alg in algebra(), pick in 0usize..4) {
        let cs = currents(&alg);
        let group = current_group(&[cs[pick % cs.len()]], &alg).unwrap();
        let ws = enumerate_weights(&alg);
        let orbs = orbits(&group, &ws, &alg).unwrap();
        let mut all: Vec<usize> = orbs.iter().flatten().copied().collect();
        prop_assert_eq!(all.len(), ws.len());
        all.sort();
        all.dedup();
        prop_assert_eq!(all.len(), ws.len());
        for o in &orbs {
            prop_assert!(group.len() % o.len() == 0);
            for &k in o {
                for j in &group {
                    let image = apply_current(*j, &ws[k], &alg).unwrap();
                    prop_assert!(o.iter().any(|&x| ws[x] == image));
                }
            }
        }
        let fixed = fixed_points(&group, &ws, &alg).unwrap();
        prop_assert_eq!(fixed.len(), orbs.iter().filter(|o| o.len() < group.len()).map(|o| o.len()).sum::<usize>());
    }
}

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use orthomod::affine::{apply_current, currents, named, AlgebraSpec};
use orthomod::classify::theorem_list;
use orthomod::classify::theorems::{b_level_two_params, d_level_two_params};
use orthomod::invariants::*;
use orthomod::modular::{build_modular_data, galois_data, qdim_parity, ModularData};
use proptest::prelude::*;

fn modular(alg: &AlgebraSpec) -> Arc<ModularData> {
    static CACHE: OnceLock<Mutex<HashMap<AlgebraSpec, Arc<ModularData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(md) = cache.lock().unwrap().get(alg) {
        return md.clone();
    }
    let md = Arc::new(build_modular_data(alg).unwrap());
    cache.lock().unwrap().insert(*alg, md.clone());
    md
}

fn lists(alg: &AlgebraSpec) -> Arc<Vec<InvariantMatrix>> {
    static CACHE: OnceLock<Mutex<HashMap<AlgebraSpec, Arc<Vec<InvariantMatrix>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(l) = cache.lock().unwrap().get(alg) {
        return l.clone();
    }
    let l: Arc<Vec<InvariantMatrix>> = Arc::new(theorem_list(alg).unwrap().invariants.into_iter().map(|x| x.matrix).collect());
    cache.lock().unwrap().insert(*alg, l.clone());
    l
}

fn algebra() -> impl Strategy<Value = AlgebraSpec> {
    prop_oneof![
        (3u32..=12).prop_map(|r| AlgebraSpec::b(r, 2)),
        (4u32..=16).prop_map(|r| AlgebraSpec::d(r, 2)),
        (3u32..=5).prop_map(|r| AlgebraSpec::b(r, 3)),
        prop::sample::select(vec![4u32, 5, 7]).prop_map(|r| AlgebraSpec::d(r, 3)),
        (3u32..=8).prop_map(|r| AlgebraSpec::b(r, 1)),
        (4u32..=8).prop_map(|r| AlgebraSpec::d(r, 1)),
    ]
}

fn listed() -> impl Strategy<Value = (AlgebraSpec, usize, usize)> {
    algebra().prop_flat_map(|alg| {
        let n = lists(&alg).len();
        (Just(alg), 0..n, 0..n)
    })
}

/// M_{Jλ,J'μ} = M_{λμ} whenever M_{J0,J'0} ≠ 0.
fn current_coupling_holds(m: &InvariantMatrix, md: &ModularData) -> bool {
    let alg = &md.alg;
    let vac = named::vacuum(alg);
    let ws = &md.weights;
    let idx = |w| md.index_of(&w).unwrap();
    for j in currents(alg) {
        for jp in currents(alg) {
            let (a, b) = (idx(apply_current(j, &vac, alg).unwrap()), idx(apply_current(jp, &vac, alg).unwrap()));
            if m.entries[a][b] == 0 {
                continue;
            }
            for (l, wl) in ws.iter().enumerate() {
                let jl = idx(apply_current(j, wl, alg).unwrap());
                for (u, wu) in ws.iter().enumerate() {
                    if m.entries[jl][idx(apply_current(jp, wu, alg).unwrap())] != m.entries[l][u] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn listed_invariants_obey_the_sum_rule((alg, i, _) in listed()) {
        let md = modular(&alg);
        let m = &lists(&alg)[i];
        let rep = verify_physical(m, &md).unwrap();
        prop_assert_eq!(rep.sum_rule.as_deref(), Some("1"), "{} {}", alg, m.name);
        prop_assert!(rep.is_physical());
        prop_assert!(current_coupling_holds(m, &md), "{} {}", alg, m.name);
    }

    #[test]
    fn products_and_transposes_commute((alg, i, j) in listed()) {
        let md = modular(&alg);
        let l = lists(&alg);
        for x in [product(&l[i], &l[j]).unwrap(), transpose(&l[i])] {
            let rep = verify_physical(&x, &md).unwrap();
            prop_assert!(rep.commutes_s && rep.commutes_t && rep.commutes_t_diagonal, "{}", x.name);
        }
    }

    #[test]
    fn galois_parities_agree(alg in algebra(), l in 1i64..500) {
        let md = modular(&alg);
        let n = md.conductor() as i64;
        prop_assume!(l.gcd(&n) == 1);
        let g = galois_data(&md, l).unwrap();
        for k in 0..md.dim() {
            prop_assert_eq!(qdim_parity(&md, l, k).unwrap(), g.parity[k] * g.parity[0]);
        }
    }

    #[test]
    fn b_pairs_are_symmetric_in_their_arguments(r in 3u32..=12, a in 0usize..8, b in 0usize..8) {
        let alg = AlgebraSpec::b(r, 2);
        let ps = b_level_two_params(&alg);
        let ((d1, l1), (d2, l2)) = (ps[a % ps.len()], ps[b % ps.len()]);
        // construction fails unless every entry of the doubled matrix is even
        let x = family_b_pair(d1, l1, d2, l2, &alg).unwrap();
        let y = family_b_pair(d2, l2, d1, l1, &alg).unwrap();
        prop_assert_eq!(x.entries, y.entries);
    }

    #[test]
    fn d_pairs_are_symmetric_in_their_arguments(r in 4u32..=16, a in 0usize..8, b in 0usize..8) {
        let alg = AlgebraSpec::d(r, 2);
        let ps = d_level_two_params(&alg);
        let ((d1, l1), (d2, l2)) = (ps[a % ps.len()], ps[b % ps.len()]);
        let rr = r as i64;
        prop_assume!((rr % (2 * d1) == 0) == (rr % (2 * d2) == 0));
        let x = family_d_pair(d1, l1, d2, l2, &alg).unwrap();
        let y = family_d_pair(d2, l2, d1, l1, &alg).unwrap();
        prop_assert_eq!(x.entries, y.entries);
    }
}

#[test]
fn only_two_asymmetric_b_invariants() {
    for r in 3..=12 {
        let alg = AlgebraSpec::b(r, 2);
        let asym: Vec<_> = lists(&alg).iter().filter(|m| !m.is_symmetric()).cloned().collect();
        if alg.n() == 9 || alg.n() == 25 {
            let iii = family_b_exceptional(BExceptional::III, &alg).unwrap();
            let iv = family_b_exceptional(BExceptional::IV, &alg).unwrap();
            assert_eq!(asym.len(), 2, "{alg}");
            assert!(asym.iter().any(|m| m.entries == iii.entries));
            assert!(asym.iter().any(|m| m.entries == iv.entries));
        } else {
            assert!(asym.is_empty(), "{alg}");
        }
    }
}

#[test]
fn every_pair_construction_is_integral() {
    for r in 3..=12 {
        let alg = AlgebraSpec::b(r, 2);
        let ps = b_level_two_params(&alg);
        for &(d1, l1) in &ps {
            for &(d2, l2) in &ps {
                family_b_pair(d1, l1, d2, l2, &alg).unwrap();
            }
        }
    }
    for r in 4..=16 {
        let alg = AlgebraSpec::d(r, 2);
        let ps = d_level_two_params(&alg);
        let rr = r as i64;
        for &(d1, l1) in &ps {
            for &(d2, l2) in &ps {
                if (rr % (2 * d1) == 0) == (rr % (2 * d2) == 0) {
                    family_d_pair(d1, l1, d2, l2, &alg).unwrap();
                }
            }
        }
    }
}

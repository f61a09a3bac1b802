use orthomod::affine::{conjugations, AlgebraSpec, SimpleCurrent};
use orthomod::invariants::*;
use orthomod::modular::build_modular_data;

fn params(n: i64, modulus: impl Fn(i64) -> Option<i64>) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for d in 1..=n {
        if let Some(m) = modulus(d) {
            for ell in 0..d.max(1) {
                if (ell * ell - 1).rem_euclid(m) == 0 {
                    out.push((d, ell));
                }
            }
        }
    }
    out
}

fn b_params(alg: &AlgebraSpec) -> Vec<(i64, i64)> {
    let n = alg.n() as i64;
    params(n, |d| (n % d == 0 && (d * d) % n == 0).then(|| d * d / n))
}

fn d_params(alg: &AlgebraSpec) -> Vec<(i64, i64)> {
    let r = alg.rank as i64;
    params(r, |d| (r % d == 0 && (d * d) % r == 0).then(|| 4 * d * d / r))
}

fn assert_physical(m: &InvariantMatrix, md: &orthomod::modular::ModularData) {
    let rep = verify_physical(m, md).unwrap();
    assert!(rep.is_physical(), "{} on {}: {:?}", m.name, md.alg, rep);
    selection_rules(m, md).unwrap_or_else(|e| panic!("{} on {}: {e}", m.name, md.alg));
}

#[test]
fn b_families_are_physical() {
    for r in 3..=12 {
        let alg = AlgebraSpec::b(r, 2);
        let md = build_modular_data(&alg).unwrap();
        let ps = b_params(&alg);
        for &(d, l) in &ps {
            assert_physical(&family_b(d, l, &alg).unwrap(), &md);
        }
        for &(d1, l1) in &ps {
            for &(d2, l2) in &ps {
                assert_physical(&family_b_pair(d1, l1, d2, l2, &alg).unwrap(), &md);
            }
        }
    }
}

#[test]
fn d_families_are_physical() {
    for r in 4..=16 {
        let alg = AlgebraSpec::d(r, 2);
        let md = build_modular_data(&alg).unwrap();
        let ps = d_params(&alg);
        for &(d, l) in &ps {
            assert_physical(&family_d(d, l, &alg).unwrap(), &md);
        }
        for &(d1, l1) in &ps {
            for &(d2, l2) in &ps {
                if let Ok(m) = family_d_pair(d1, l1, d2, l2, &alg) {
                    assert_physical(&m, &md);
                }
            }
        }
    }
}

#[test]
fn exceptional_b_families() {
    // n = 2r + 1 square: r = 4, 12
    for r in [4, 12] {
        let alg = AlgebraSpec::b(r, 2);
        let md = build_modular_data(&alg).unwrap();
        let ms: Vec<_> = [BExceptional::I, BExceptional::II, BExceptional::III, BExceptional::IV]
            .iter()
            .map(|&t| family_b_exceptional(t, &alg).unwrap())
            .collect();
        for m in &ms {
            assert_physical(m, &md);
        }
        assert_ne!(ms[2], transpose(&ms[2]));
        assert_eq!(ms[3].entries, transpose(&ms[2]).entries);
    }
    assert!(family_b_exceptional(BExceptional::I, &AlgebraSpec::b(5, 2)).is_err());
}

#[test]
fn exceptional_d_family() {
    let alg = AlgebraSpec::d(16, 2);
    let md = build_modular_data(&alg).unwrap();
    for t in [DExceptional::I, DExceptional::II, DExceptional::III] {
        assert_physical(&family_d_exceptional(t, &alg).unwrap(), &md);
    }
    assert!(family_d_exceptional(DExceptional::I, &AlgebraSpec::d(9, 2)).is_err());
}

#[test]
fn identifications_with_simple_current_invariants() {
    for r in 3..=8 {
        let alg = AlgebraSpec::b(r, 2);
        let n = alg.n() as i64;
        assert_eq!(family_b(n, 1, &alg).unwrap().entries, InvariantMatrix::identity(&alg).entries);
        let ijb = simple_current_invariant(SimpleCurrent::Jb, &alg).unwrap();
        assert_eq!(family_b_pair(n, 1, n, 1, &alg).unwrap().entries, ijb.entries);
    }
    for r in 4..=12 {
        let alg = AlgebraSpec::d(r, 2);
        let ri = r as i64;
        assert_eq!(family_d(ri, 1, &alg).unwrap().entries, InvariantMatrix::identity(&alg).entries);
        let ijv = simple_current_invariant(SimpleCurrent::Jv, &alg).unwrap();
        assert_eq!(family_d_pair(ri, 1, ri, 1, &alg).unwrap().entries, ijv.entries);
        let ijs = simple_current_invariant(SimpleCurrent::Js, &alg).unwrap();
        if r % 4 == 0 {
            assert_eq!(family_d(ri / 2, 1, &alg).unwrap().entries, ijs.entries);
        }
        if r % 4 == 2 {
            assert_eq!(family_d(ri, ri - 1, &alg).unwrap().entries, ijs.entries);
        }
    }
}

#[test]
fn simple_current_invariants() {
    for r in 3..=6 {
        let alg = AlgebraSpec::b(r, 2);
        let md = build_modular_data(&alg).unwrap();
        assert_physical(&simple_current_invariant(SimpleCurrent::Jb, &alg).unwrap(), &md);
    }
    let alg = AlgebraSpec::d(7, 3);
    let md = build_modular_data(&alg).unwrap();
    let ijs = simple_current_invariant(SimpleCurrent::Js, &alg).unwrap();
    assert!(!verify_physical(&ijs, &md).unwrap().is_physical());
}

#[test]
fn conjugations_at_level_one() {
    for r in [5, 6, 7] {
        let alg = AlgebraSpec::d(r, 1);
        let md = build_modular_data(&alg).unwrap();
        let cs = conjugations(&alg);
        let c1 = conjugation_matrix(cs[1], &alg).unwrap();
        assert_physical(&c1, &md);
        assert!(c1.is_automorphism());
        assert_eq!(product(&c1, &c1).unwrap().entries, InvariantMatrix::identity(&alg).entries);
        if r % 4 != 0 {
            let ijv = simple_current_invariant(SimpleCurrent::Jv, &alg).unwrap();
            assert_eq!(c1.entries, ijv.entries);
        }
    }
}

#[test]
fn d73_exceptional() {
    let alg = AlgebraSpec::d(7, 3);
    let md = build_modular_data(&alg).unwrap();
    let e = exceptional_d73().unwrap();
    assert_physical(&e, &md);
    assert_eq!(e.entries[0][0], 1);
    let c1 = conjugation_matrix(conjugations(&alg)[1], &alg).unwrap();
    assert_ne!(product(&c1, &e).unwrap().entries, e.entries);
    assert!(partition_function(&e).contains("|²"));
}

#[test]
fn vacuum_multiplicity_two_is_rejected() {
    let alg = AlgebraSpec::b(3, 2);
    let md = build_modular_data(&alg).unwrap();
    let mut m = InvariantMatrix::identity(&alg);
    m.entries[0][0] = 2;
    let rep = verify_physical(&m, &md).unwrap();
    assert!(!rep.is_physical());
    assert!(!rep.vacuum_ok);
}

use std::collections::BTreeMap;

use pointed_ext::fusion::*;
use pointed_ext::lattice::{build_pointed_mtc, cartan, GramMatrix};
use pointed_ext::scalar::Q128;
use pointed_ext::{root_of_unity, Cyc, CycField, Error};

fn gram(rows: Vec<Vec<i64>>) -> GramMatrix {
    GramMatrix::new(rows).unwrap()
}

fn semion() -> FusionData {
    build_pointed_mtc(&gram(vec![vec![2]])).unwrap()
}

fn trivial() -> FusionData {
    let f = CycField::new(1).unwrap();
    let one = Cyc::one(&f);
    FusionData::new(
        vec!["0".into()],
        0,
        vec![0],
        &[(0, 0, 0)],
        BTreeMap::from([([0; 6], one.clone())]),
        BTreeMap::from([([0; 3], one.clone())]),
        vec![one],
        1,
    )
    .unwrap()
}

fn passes(r: Result<Report, Error>) -> bool {
    r.map(|r| r.passed()).unwrap_or(false)
}

fn all_pass(d: &FusionData) -> bool {
    verify_all(d).into_iter().all(passes)
}

#[test]
fn trivial_category_passes_everything() {
    let d = trivial();
    assert!(all_pass(&d));
    let md = pointed_modular_data(&d).unwrap();
    assert!(md.s[0][0].is_one() && md.t[0].is_one() && md.gauss.is_one());
}

#[test]
fn semion_passes_everything() {
    let d = semion();
    assert!(verify_fusion_ring(&d).passed());
    assert!(passes(verify_pentagon(&d)));
    assert!(passes(verify_hexagon(&d)));
    assert!(passes(verify_ribbon(&d)));
    assert!(passes(verlinde_check(&d)));
    assert!(passes(modular_relation_check(&d)));
}

#[test]
fn semion_modular_data() {
    let d = semion();
    let md = pointed_modular_data(&d).unwrap();
    let i = root_of_unity(4, 1).unwrap();
    let f = d.field().clone();
    let one = Cyc::one(&f);
    let m1 = Cyc::rational(&f, -1, 1);
    assert_eq!(md.s, vec![vec![one.clone(), one.clone()], vec![one.clone(), m1]]);
    assert_eq!(md.t, vec![one.clone(), i.clone()]);
    assert_eq!(md.gauss, &one + &i);
}

#[test]
fn a2_modular_data() {
    let d = build_pointed_mtc(&cartan('A', 2).unwrap()).unwrap();
    let md = pointed_modular_data(&d).unwrap();
    let n = d.rank();
    assert_eq!(n, 3);
    for l in 0..n {
        assert!(md.s[0][l].is_one() && md.s[l][0].is_one());
        for m in 0..n {
            assert_eq!(md.s[l][m], md.s[m][l]);
            assert_eq!(md.s[l][m].pow(3).unwrap(), Cyc::one(d.field()));
            // Σ_k S̃_lk conj(S̃_mk) = 3 δ_lm and Σ_k S̃_lk S̃_km = 3 δ_{l, dual m}.
            let mut uni = Cyc::zero(d.field());
            let mut sq = Cyc::zero(d.field());
            for k in 0..n {
                uni = &uni + &(&md.s[l][k] * &md.s[m][k].conj());
                sq = &sq + &(&md.s[l][k] * &md.s[k][m]);
            }
            let want = |b: bool| Q128::from_integer(if b { 3 } else { 0 });
            assert_eq!(uni.as_rational(), Some(want(l == m)));
            assert_eq!(sq.as_rational(), Some(want(l == d.dual(m))));
        }
    }
}

#[test]
fn z4_verlinde_recovers_addition() {
    let d = build_pointed_mtc(&gram(vec![vec![4]])).unwrap();
    let rep = verlinde_check(&d).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.checked, 64);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(d.products(i, j), &[(i + j) % 4]);
        }
    }
}

#[test]
fn fusion_flip_is_a_duality_violation() {
    let mut d = semion();
    d.set_fusion(1, 1, 0, false);
    let rep = verify_fusion_ring(&d);
    assert!(!rep.passed());
    assert!(rep.failures.iter().any(|f| f.check == "duality" && f.coords == vec![1, 1]));
}

#[test]
fn negated_f_is_located() {
    let mut d = semion();
    let key = [1, 0, 1, 0, 1, 1];
    let v = d.f_symbol(key).unwrap().clone();
    d.set_f(key, -&v);
    let rep = verify_pentagon(&d).unwrap();
    assert!(!rep.passed());
    assert!(rep.failures.iter().all(|f| f.coords.len() >= 4));
}

#[test]
fn negated_semion_associator_is_another_cocycle() {
    // F(1,1,1) = +1 is the trivial associator: pentagon still holds, the
    // hexagon R(1,1)² = F(1,1,1) does not.
    let mut d = semion();
    let key = [1, 1, 1, 1, 0, 0];
    let v = d.f_symbol(key).unwrap().clone();
    assert_eq!(v.as_rational(), Some(Q128::from_integer(-1)));
    d.set_f(key, -&v);
    assert!(verify_pentagon(&d).unwrap().passed());
    let rep = verify_hexagon(&d).unwrap();
    assert!(!rep.passed());
    assert!(rep.failures.iter().all(|f| f.coords.iter().all(|&x| x < 2)));
}

#[test]
fn conjugated_r_fails_self_braiding() {
    let mut d = semion();
    let v = d.r_symbol(1, 1, 0).unwrap().clone();
    d.set_r([1, 1, 0], v.conj());
    // R(1,1;0) = -i is the other semion braiding: hexagon and balancing
    // both hold, the self-braiding relation with θ(1) = i does not.
    assert!(verify_hexagon(&d).unwrap().passed());
    let rep = verify_ribbon(&d).unwrap();
    assert!(!rep.passed());
    assert!(rep.failures.iter().any(|f| f.check == "self-braiding" && f.coords == vec![1, 1, 0]));
}

#[test]
fn twist_reset_fails_ribbon() {
    let mut d = semion();
    let one = Cyc::one(d.field());
    d.set_twist(1, one);
    let rep = verify_ribbon(&d).unwrap();
    assert!(!rep.passed());
    assert!(rep.failures.iter().any(|f| f.coords.contains(&1)));
}

#[test]
fn missing_entry_is_structural() {
    let mut d = semion();
    d.set_fusion(1, 1, 1, true);
    // 1 ⊗ 1 = 0 ⊕ 1 is the Fibonacci ring, so only the F and R tables are short.
    assert!(verify_fusion_ring(&d).passed());
    assert!(!d.missing_entries().is_empty());
    assert!(matches!(verify_pentagon(&d), Err(Error::MissingEntry(_))));
}

#[test]
fn every_single_negation_is_caught() {
    for g in [vec![vec![2]], vec![vec![4]], vec![vec![2, -1], vec![-1, 2]]] {
        let d = build_pointed_mtc(&gram(g)).unwrap();
        for (k, v) in d.f_entries().clone() {
            let mut m = d.clone();
            m.set_f(k, -&v);
            assert!(!all_pass(&m), "F{:?} negated went unnoticed", k);
        }
        for (k, v) in d.r_entries().clone() {
            let mut m = d.clone();
            m.set_r(k, -&v);
            assert!(!all_pass(&m), "R{:?} negated went unnoticed", k);
        }
    }
}

#[test]
fn non_pointed_input_is_rejected() {
    let mut d = semion();
    d.set_fusion(1, 1, 1, true);
    assert_eq!(pointed_modular_data(&d), Err(Error::NotPointed));
}

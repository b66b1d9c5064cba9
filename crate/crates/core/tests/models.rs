use std::collections::BTreeSet;

use num_rational::Ratio;
use pointed_ext::models::*;
use pointed_ext::{root_of_unity, Error};
use proptest::prelude::*;

type R = Ratio<i128>;

/// Expanded form of the Kac formula, evaluated in 128-bit rationals.
fn oracle_h(m: i64, r: i64, s: i64) -> R {
    let (m, r, s) = (m as i128, r as i128, s as i128);
    let num = (m + 1) * (m + 1) * r * r - 2 * m * (m + 1) * r * s + m * m * s * s - 1;
    R::new(num, 4 * m * (m + 1))
}

fn oracle_c(m: i64) -> R {
    let m = m as i128;
    R::new(m * m + m - 6, m * (m + 1))
}

fn as_r(q: Q) -> R {
    R::new(*q.numer() as i128, *q.denom() as i128)
}

#[test]
fn ising_table() {
    let t = minimal_model(3).unwrap();
    assert_eq!(as_r(t.central_charge), R::new(1, 2));
    assert_eq!(as_r(t.central_charge), oracle_c(3));
    let hs: BTreeSet<R> = t.dedup().iter().map(|w| as_r(w.h)).collect();
    let want: BTreeSet<R> = [R::new(0, 1), R::new(1, 16), R::new(1, 2)].into_iter().collect();
    assert_eq!(hs, want);
    assert_eq!(t.dedup().len(), 3);
    assert_eq!(t.weight(1, 1).unwrap().h, Q::new(0, 1));
    assert_eq!(t.weight(1, 2).unwrap().h, Q::new(1, 16));
    assert_eq!(t.weight(1, 3).unwrap().h, Q::new(1, 2));
    assert_eq!(t.weight(1, 2).unwrap().twist, root_of_unity(16, 1).unwrap());
}

#[test]
fn tricritical_ising_table() {
    let t = minimal_model(4).unwrap();
    assert_eq!(as_r(t.central_charge), R::new(7, 10));
    assert_eq!(as_r(t.weight(2, 2).unwrap().h), R::new(3, 80));
    assert_eq!(as_r(t.weight(2, 2).unwrap().h), oracle_h(4, 2, 2));
    assert_eq!(t.dedup().len(), 6);
    assert_eq!(t.generators().len(), 2);
}

#[test]
fn trivial_minimal_model() {
    let t = minimal_model(2).unwrap();
    assert_eq!(as_r(t.central_charge), R::new(0, 1));
    assert!(t.weights.iter().all(|w| w.h == Q::new(0, 1)));
    assert_eq!(t.weights.len(), 2);
    assert_eq!(t.generators().len(), 1);
}

#[test]
fn small_m_is_rejected() {
    assert!(matches!(minimal_model(1), Err(Error::BadParameter(_))));
}

#[test]
fn tables_match_oracle() {
    for m in 2..=20 {
        let t = minimal_model(m).unwrap();
        assert_eq!(as_r(t.central_charge), oracle_c(m));
        assert_eq!(t.weights.len() as i64, (m - 1) * m);
        for w in &t.weights {
            assert_eq!(as_r(w.h), oracle_h(m, w.r, w.s));
            assert_eq!(w.twist.pow(*w.h.denom()).unwrap().root_exponent(), Some(0));
            let (p, q) = kac_partner(m, w.r, w.s);
            assert_eq!(t.weight(p, q).unwrap().h, w.h);
        }
        assert_eq!(t.dedup().len() as i64, (m - 1) * m / 2);
    }
}

#[test]
fn heisenberg_examples() {
    let g = vec![vec![Q::from_integer(2)]];
    let half = HeisenbergSector::new(g.clone(), vec![Q::new(1, 2)]).unwrap();
    let zero = half.zero_like();
    assert_eq!(heisenberg_fusion(&half, &zero).unwrap(), half);
    assert_eq!(heisenberg_fusion(&half, &half).unwrap().vector(), &[Q::from_integer(1)]);
    assert!(heisenberg_braid_phase(&half, &zero).unwrap().is_one());
    assert_eq!(heisenberg_braid_phase(&half, &half).unwrap(), root_of_unity(4, 1).unwrap());
    let other = HeisenbergSector::new(vec![vec![Q::from_integer(4)]], vec![Q::new(1, 2)]).unwrap();
    assert!(heisenberg_fusion(&half, &other).is_err());
    assert_eq!(HeisenbergSector::new(vec![vec![Q::from_integer(1), Q::from_integer(0)]], vec![Q::from_integer(0)]), Err(Error::NotSquare));
}

fn arb_q() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| Q::new(p, q))
}

fn space() -> Vec<Vec<Q>> {
    vec![vec![Q::from_integer(2), Q::from_integer(-1)], vec![Q::from_integer(-1), Q::new(5, 2)]]
}

fn arb_sector() -> impl Strategy<Value = HeisenbergSector> {
    prop::collection::vec(arb_q(), 2).prop_map(|v| HeisenbergSector::new(space(), v).unwrap())
}

proptest! {
    #[test]
    fn kac_symmetry(m in 2i64..=20, r in 1i64..20, s in 1i64..21) {
        prop_assume!(r < m && s <= m);
        let (p, q) = kac_partner(m, r, s);
        prop_assert_eq!(kac_weight(m, r, s), kac_weight(m, p, q));
    }

    #[test]
    fn fusion_commutes(a in arb_sector(), b in arb_sector()) {
        prop_assert_eq!(heisenberg_fusion(&a, &b).unwrap(), heisenberg_fusion(&b, &a).unwrap());
    }

    #[test]
    fn braid_phase_is_bimultiplicative(a in arb_sector(), a2 in arb_sector(), b in arb_sector()) {
        let sum = heisenberg_fusion(&a, &a2).unwrap();
        let lhs = heisenberg_braid_phase(&sum, &b).unwrap();
        let rhs = &heisenberg_braid_phase(&a, &b).unwrap() * &heisenberg_braid_phase(&a2, &b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn double_braiding_is_monodromy(a in arb_sector(), b in arb_sector()) {
        let p = a.pairing(&b).unwrap();
        let mono = &heisenberg_braid_phase(&a, &b).unwrap() * &heisenberg_braid_phase(&b, &a).unwrap();
        let want = root_of_unity(*p.denom() as u32, *p.numer()).unwrap();
        prop_assert_eq!(mono, want);
    }

    #[test]
    fn lattice_vectors_braid_trivially(x in prop::collection::vec(-4i64..=4, 2), y in prop::collection::vec(-4i64..=4, 2)) {
        let g = vec![vec![Q::from_integer(2), Q::from_integer(-1)], vec![Q::from_integer(-1), Q::from_integer(2)]];
        let a = HeisenbergSector::new(g.clone(), x.iter().map(|&v| Q::from_integer(v)).collect()).unwrap();
        let b = HeisenbergSector::new(g, y.iter().map(|&v| Q::from_integer(v)).collect()).unwrap();
        let p = heisenberg_braid_phase(&a, &b).unwrap();
        prop_assert!((&p * &p).is_one());
        prop_assert!(heisenberg_braid_phase(&a, &a).unwrap().is_one());
    }
}

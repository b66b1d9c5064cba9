use pointed_ext::catext::Ambient;
use pointed_ext::circle::ArgInterval;
use pointed_ext::dhr::*;
use pointed_ext::lattice::GramMatrix;
use pointed_ext::{root_of_unity, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn iv(a: i64, b: i64, q: i64) -> ArgInterval {
    ArgInterval::from_ratio(a, b, q).unwrap()
}

fn amb(rows: Vec<Vec<i64>>) -> Ambient {
    Ambient::from_gram(&GramMatrix::new(rows).unwrap()).unwrap()
}

#[test]
fn vacuum_sector_is_trivial() {
    let a = amb(vec![vec![4]]);
    let i0 = reference_interval();
    for l in 0..4 {
        let r0 = DhrEndo::new(0, iv(1, 2, 10)).unwrap();
        let r = DhrEndo::new(l, i0).unwrap();
        assert!(statistics_operator(&a, &r0, &r).unwrap().is_one());
        assert!(statistics_operator(&a, &r, &r0).unwrap().is_one());
    }
}

#[test]
fn transported_configuration_is_one() {
    let a = amb(vec![vec![2]]);
    let r1 = DhrEndo::new(1, iv(1, 2, 10)).unwrap();
    let r2 = DhrEndo::new(1, iv(3, 4, 10)).unwrap();
    assert!(statistics_operator(&a, &r1, &r2).unwrap().is_one());
}

#[test]
fn semion_statistics() {
    let a = amb(vec![vec![2]]);
    let i0 = reference_interval();
    let r = DhrEndo::new(1, i0).unwrap();
    assert_eq!(statistics_operator(&a, &r, &r).unwrap(), root_of_unity(4, 1).unwrap());
    let r1 = DhrEndo::new(1, iv(1, 2, 10)).unwrap();
    let r2 = DhrEndo::new(1, iv(3, 4, 10)).unwrap();
    assert_eq!(monodromy(&a, &r1, &r2).unwrap(), -&a.one());
    assert_eq!(statistics_operator(&a, &r2, &r1).unwrap(), -&a.one());
}

#[test]
fn z4_monodromy_is_the_pairing() {
    // b(l, m) = lm/4 for the Gram matrix (4)
    let a = amb(vec![vec![4]]);
    for l in 0..4 {
        for m in 0..4 {
            let r1 = DhrEndo::new(l, iv(1, 2, 10)).unwrap();
            let r2 = DhrEndo::new(m, iv(3, 4, 10)).unwrap();
            assert_eq!(monodromy(&a, &r1, &r2).unwrap(), root_of_unity(4, (l * m) as i64).unwrap());
        }
    }
}

#[test]
fn composition() {
    let a = amb(vec![vec![2]]);
    let r1 = DhrEndo::new(1, iv(1, 2, 10)).unwrap();
    let r2 = DhrEndo::new(1, iv(3, 4, 10)).unwrap();
    let c = compose(&a, &r1, &r2).unwrap();
    assert_eq!(c.sector, 0);
    assert_eq!(c.loc, iv(1, 4, 10));
    let id = compose(&a, &DhrEndo::identity(), &r1).unwrap();
    assert_eq!(id.sector, 1);
    assert!(matches!(DhrEndo::new(1, iv(6, 7, 10)), Err(Error::Precondition(_))));
}

#[test]
fn g_functor_on_fixtures() {
    for g in [vec![vec![2]], vec![vec![4]], vec![vec![2, -1], vec![-1, 2]], vec![vec![2, 1], vec![1, 4]], vec![vec![12]]] {
        let rep = check_g_functor(&amb(g.clone())).unwrap();
        assert!(rep.passed() && rep.checked > 0, "{:?}: {:?}", g, rep.failures.first());
    }
}

#[test]
fn transport_independence() {
    for g in [vec![vec![2]], vec![vec![4]], vec![vec![2, 1], vec![1, 4]]] {
        let a = amb(g.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let trs: Vec<Transport> = (0..12).map(|_| random_transport(40, &mut |k| rng.gen_range(0..k)).unwrap()).collect();
        let rep = check_transport_independence(&a, &trs).unwrap();
        assert!(rep.passed(), "{:?}: {:?}", g, rep.failures.first());
    }
}

#[test]
fn transport_requires_order() {
    let i0 = reference_interval();
    assert!(Transport::new(iv(1, 2, 10), iv(3, 4, 10), &i0).is_ok());
    assert!(Transport::new(iv(3, 4, 10), iv(1, 2, 10), &i0).is_err());
}

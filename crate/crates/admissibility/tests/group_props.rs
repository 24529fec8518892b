mod common;

use admissibility::arith::{p_part, prime_divisors};
use admissibility::group::*;
use proptest::prelude::*;

fn is_valid_table(g: &FiniteGroup) -> bool {
    let n = g.order();
    let e = g.identity();
    for a in 0..n {
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for b in 0..n {
            row[g.mul(a, b)] = true;
            col[g.mul(b, a)] = true;
        }
        if row.contains(&false) || col.contains(&false) {
            return false;
        }
        if g.mul(a, e) != a || g.mul(e, a) != a || g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)))))
}

#[test]
fn corpus_tables_are_groups() {
    for (name, g) in common::corpus(64) {
        assert!(is_valid_table(&g), "{name}");
    }
}

#[test]
fn sylow_orders_are_exact_p_parts() {
    let groups = common::corpus(64).into_iter().chain(common::large_groups());
    for (name, g) in groups {
        let n = g.order() as u64;
        for p in prime_divisors(n) {
            let s = g.sylow_subgroup(p).unwrap();
            assert_eq!(s.order() as u64, p_part(n, p), "{name}, p = {p}");
        }
    }
}

#[test]
fn rank_matches_exhaustive_generation() {
    for (name, _, g) in common::p_groups(81) {
        assert_eq!(g.min_generators(), g.min_generators_exhaustive(), "{name}");
    }
}

#[test]
fn trivial_action_gives_direct_product() {
    let pairs = [(cyclic(4), cyclic(2)), (symmetric(3), cyclic(3)), (abelian(&[2, 2]), dihedral(4)), (quaternion_ok(), cyclic(3))];
    for (n, h) in pairs {
        let (n, h) = (n.unwrap(), h.unwrap());
        let action: Vec<ActionGenerator> = h
            .generators()
            .iter()
            .map(|&a| ActionGenerator { acting: a, images: n.generators().to_vec() })
            .collect();
        let sd = semidirect_product(&n, &h, &action, &TableOptions::default()).unwrap();
        let dp = direct_product(&n, &h).unwrap();
        assert!(sd.order() <= 64);
        assert!(sd.is_isomorphic(&dp));
    }
}

fn quaternion_ok() -> Result<FiniteGroup, GroupError> {
    Ok(quaternion())
}

fn metacyclic_params() -> impl Strategy<Value = MetacyclicParams> {
    (1u64..=32, 1u64..=32)
        .prop_flat_map(|(m, n)| (Just(m), Just(n), 0..n, 0..n))
        .prop_filter_map("consistent", |(m, n, i, t)| MetacyclicParams::new(m, n, i, t).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn metacyclic_order_and_abelianization(p in metacyclic_params()) {
        let g = build_metacyclic(p).unwrap();
        prop_assert_eq!(g.order() as u64, p.m * p.n);
        let from_table = (g.order() / g.commutator_subgroup().order()) as u64;
        prop_assert_eq!(from_table, p.abelianization_order());
    }

    #[test]
    fn enumerated_presentations_rebuild_the_group(p in metacyclic_params().prop_filter("small", |p| p.m * p.n <= 64)) {
        let g = build_metacyclic(p).unwrap();
        let found = enumerate_metacyclic_presentations(&g);
        prop_assert!(!found.is_empty());
        for q in found.iter().take(4) {
            prop_assert!(build_metacyclic(*q).unwrap().is_isomorphic(&g));
        }
    }
}

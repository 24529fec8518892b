mod common;

use admissibility::group::*;
use admissibility::local::*;
use admissibility::words::{Budget, EpimorphismCount};
use proptest::prelude::*;

fn fields() -> Vec<LocalFieldParams> {
    vec![
        LocalFieldParams::q2(),
        LocalFieldParams::q2_i(),
        LocalFieldParams::new(2, 1, 3, 1).unwrap(),
        LocalFieldParams::qp(3).unwrap(),
        LocalFieldParams::qp(5).unwrap(),
        LocalFieldParams::qp_sqrt_p(3).unwrap(),
        LocalFieldParams::new(3, 2, 1, 1).unwrap(),
        LocalFieldParams::new(3, 1, 2, 0).unwrap(),
        LocalFieldParams::new(5, 4, 1, 1).unwrap(),
    ]
}

#[test]
fn generator_count_tracks_roots_of_unity() {
    for k in fields() {
        let Ok(pres) = presentation_of_max_p_extension(&k) else { continue };
        let extra = usize::from(k.s0 > 0);
        assert_eq!(pres.rank(), k.n as usize + 1 + extra, "{k}");
        assert_eq!(pres.abelianization_rank_mod(k.p), k.n as usize + 1 + extra, "{k}");
    }
}

#[test]
fn power_classes_match_unit_count_over_qp() {
    for p in [2u64, 3, 5, 7] {
        let k = LocalFieldParams::qp(p).unwrap();
        for m in 1..=24 {
            assert_eq!(k.power_class_count(m), m * unit_power_classes_brute_force(p, m), "p = {p}, m = {m}");
        }
    }
}

/// An abelian p-group is a quotient of `Z_p^r ⊕ Z/p^s` exactly when it has at
/// most `r + 1` invariants and the `(r+1)`-th largest divides `p^s`.
fn abelian_quotient_oracle(invariants: &[usize], free_rank: usize, torsion: u64) -> bool {
    let mut inv: Vec<u64> = invariants.iter().map(|&a| a as u64).filter(|&a| a > 1).collect();
    inv.sort_unstable_by(|a, b| b.cmp(a));
    match inv.len().cmp(&(free_rank + 1)) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Equal => torsion % inv[free_rank] == 0,
        std::cmp::Ordering::Greater => false,
    }
}

#[test]
fn abelian_groups_follow_the_rank_rule() {
    let budget = Budget(1 << 28);
    let shapes: &[&[usize]] = &[&[3], &[9], &[3, 3], &[3, 9], &[3, 3, 3], &[9, 9], &[3, 3, 3, 3], &[5], &[5, 5], &[5, 5, 5], &[25, 5]];
    for k in fields().into_iter().filter(|k| k.p != 2) {
        let torsion = k.p.pow(k.s0);
        for &shape in shapes.iter().filter(|s| s.iter().all(|&a| a as u64 % k.p == 0)) {
            let g = abelian(shape).unwrap();
            if g.order() > 243 {
                continue;
            }
            let got = is_realizable_local(&g, &k, budget).unwrap().holds;
            assert_eq!(got, abelian_quotient_oracle(shape, k.n as usize + 1, torsion), "{shape:?} over {k}");
        }
    }
}

#[test]
fn realizability_is_an_isomorphism_invariant() {
    let budget = Budget(1 << 28);
    for k in [LocalFieldParams::q2(), LocalFieldParams::q2_i()] {
        for order in [8u64, 16, 32] {
            for p in consistent_metacyclic_params(order).into_iter().filter(|p| p.m > 1).take(24) {
                let g = build_metacyclic(p).unwrap();
                let verdict = is_realizable_local(&g, &k, budget).unwrap().holds;
                for q in enumerate_metacyclic_presentations(&g).into_iter().take(3) {
                    let h = build_metacyclic(q).unwrap();
                    assert_eq!(is_realizable_local(&h, &k, budget).unwrap().holds, verdict, "{p} vs {q} over {k}");
                }
            }
        }
    }
}

#[test]
fn realizability_passes_to_quotients() {
    let budget = Budget(1 << 28);
    for (name, p, g) in common::p_groups(64) {
        for k in fields().into_iter().filter(|k| k.p == p) {
            let Ok(v) = is_realizable_local(&g, &k, budget) else { continue };
            if !v.holds {
                continue;
            }
            for n in [g.center(), g.commutator_subgroup()] {
                let (q, _) = g.quotient(&n).unwrap();
                assert!(is_realizable_local(&q, &k, budget).unwrap().holds, "{name} over {k}");
            }
        }
    }
}

#[test]
fn census_entries_classify_as_their_case() {
    let census = count_sensitive_extensions(Budget(1 << 24)).unwrap();
    let listed = enumerate_sensitive_extensions(&census);
    assert_eq!(listed.len() as u64, census.total);
    for e in &listed {
        assert_eq!(classify_extension(&e.spec), SensitivityVerdict::Sensitive { case: e.case }, "{}", e.base_description);
    }
}

#[test]
fn census_total_depends_on_the_epimorphism_count() {
    let census = count_sensitive_extensions(Budget(1 << 24)).unwrap();
    let s3 = EpimorphismCount {
        epimorphisms: census.s3_epimorphisms,
        automorphisms: census.s3_automorphisms,
        normal_subgroups: census.s3_extensions,
        candidates: 0,
    };
    let same = SensitiveCensus::from_parts(census.quadratic_fields, census.cyclic_cubic_fields, &s3, census.s3_involutions);
    assert_eq!(same.total, census.total);
    let more = EpimorphismCount { epimorphisms: s3.epimorphisms + 6, ..s3.clone() };
    let changed = SensitiveCensus::from_parts(census.quadratic_fields, census.cyclic_cubic_fields, &more, census.s3_involutions);
    assert_eq!(changed.total, census.total + 3);
}

proptest! {
    #[test]
    fn non_sensitive_routes_verify(fi in 0usize..9, e in 1u64..=6, f in 1u64..=6) {
        let base = fields()[fi].clone();
        let ext = LocalExtensionSpec::new(base, e, f).unwrap();
        match classify_extension(&ext) {
            SensitivityVerdict::Sensitive { case } => prop_assert!((2..=4).contains(&case)),
            SensitivityVerdict::NonSensitive { route } => {
                if let Some(r) = route {
                    prop_assert!(r.verify());
                }
            }
        }
    }
}

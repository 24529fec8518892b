use admissibility::brauer::PlaceId;
use admissibility::engine::*;
use admissibility::group::*;
use proptest::prelude::*;

const RESIDUE_CHARS: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("C30", cyclic(30).unwrap()),
        ("S3xC5", direct_product(&symmetric(3).unwrap(), &cyclic(5).unwrap()).unwrap()),
        ("C12", cyclic(12).unwrap()),
        ("S4", symmetric(4).unwrap()),
    ]
}

fn subgroup_pool(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut pool = vec![g.whole(), g.trivial_subgroup(), g.center(), g.commutator_subgroup()];
    let sylows: Vec<Subgroup> = g.sylow_system().into_iter().map(|(_, s)| s).collect();
    for (i, a) in sylows.iter().enumerate() {
        pool.push(a.clone());
        for b in &sylows[i + 1..] {
            let gens: Vec<usize> = a.members().iter().chain(b.members()).copied().collect();
            pool.push(g.subgroup_generated(&gens));
        }
    }
    pool
}

/// `(residue char index, subgroup indices, tame flag)` per place.
type RawFact = (usize, Vec<usize>, bool);

fn raw_facts() -> impl Strategy<Value = Vec<RawFact>> {
    prop::collection::vec((0..RESIDUE_CHARS.len(), prop::collection::vec(0usize..16, 1..3), any::<bool>()), 0..=9)
}

fn build_facts(g: &FiniteGroup, raw: &[RawFact]) -> Vec<LocalFact> {
    let pool = subgroup_pool(g);
    raw.iter()
        .enumerate()
        .map(|(i, (pc, subs, tame))| {
            let place = PlaceId::new(format!("v{i}"), RESIDUE_CHARS[*pc]);
            let chosen = subs.iter().map(|&s| pool[s % pool.len()].clone());
            if *tame {
                LocalFact::tame(place, chosen)
            } else {
                LocalFact::wild(place, chosen)
            }
        })
        .collect()
}

const MODES: [(Distinctness, EdgeFilter); 6] = [
    (Distinctness::AllDistinct, EdgeFilter::Any),
    (Distinctness::AllDistinct, EdgeFilter::AvoidResidueChar),
    (Distinctness::AllDistinct, EdgeFilter::TameOnly),
    (Distinctness::Pairwise, EdgeFilter::Any),
    (Distinctness::Pairwise, EdgeFilter::AvoidResidueChar),
    (Distinctness::Pairwise, EdgeFilter::TameOnly),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matching_agrees_with_exhaustive_assignment(gi in 0usize..4, raw in raw_facts()) {
        let (name, g) = &groups()[gi];
        let facts = build_facts(g, &raw);
        for (distinctness, filter) in MODES {
            let found = preadmissibility_search_with(g, &facts, distinctness, filter);
            let exists = preadmissibility_exhaustive(g, &facts, distinctness, filter);
            prop_assert_eq!(found.is_some(), exists, "{} {:?} {:?}", name, distinctness, filter);
            if let Some(cert) = found {
                prop_assert!(schacher_check(g, &cert));
                if distinctness == Distinctness::AllDistinct {
                    prop_assert!(cert.all_places_distinct());
                }
                if filter == EdgeFilter::AvoidResidueChar {
                    prop_assert!(cert.avoids_residue_characteristic());
                }
            }
        }
    }

    #[test]
    fn fact_order_does_not_matter(gi in 0usize..4, raw in raw_facts(), seed in any::<u64>()) {
        let (_, g) = &groups()[gi];
        let facts = build_facts(g, &raw);
        let mut shuffled = facts.clone();
        let n = shuffled.len();
        for i in (1..n).rev() {
            let j = (seed.rotate_left(i as u32) as usize) % (i + 1);
            shuffled.swap(i, j);
        }
        for (distinctness, filter) in MODES {
            prop_assert_eq!(
                preadmissibility_search_with(g, &facts, distinctness, filter),
                preadmissibility_search_with(g, &shuffled, distinctness, filter)
            );
        }
    }

    #[test]
    fn wildness_is_consistent_with_exhaustive_search(gi in 0usize..4, raw in raw_facts()) {
        let (_, g) = &groups()[gi];
        let facts = build_facts(g, &raw);
        for distinctness in [Distinctness::AllDistinct, Distinctness::Pairwise] {
            let tame_route = preadmissibility_exhaustive(g, &facts, distinctness, EdgeFilter::AvoidResidueChar);
            match classify_wildness(g, &facts, distinctness) {
                Wildness::NonWildAvailable { certificate } => {
                    prop_assert!(tame_route);
                    prop_assert!(schacher_check(g, &certificate));
                    prop_assert!(certificate.avoids_residue_characteristic());
                }
                Wildness::Wild => prop_assert!(!tame_route),
            }
        }
    }
}

#[test]
fn twelve_places_three_primes() {
    let g = cyclic(30).unwrap();
    let pool = subgroup_pool(&g);
    for shift in 0..6 {
        let facts: Vec<LocalFact> = (0..12)
            .map(|i| {
                let place = PlaceId::new(format!("v{i}"), RESIDUE_CHARS[(i + shift) % 6]);
                LocalFact::wild(place, [pool[(i * 7 + shift) % pool.len()].clone()])
            })
            .collect();
        let found = preadmissibility_search(&g, &facts);
        assert_eq!(found.is_some(), preadmissibility_exhaustive(&g, &facts, Distinctness::AllDistinct, EdgeFilter::Any));
    }
}

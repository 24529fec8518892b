use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{p_part, prime_divisors};
use crate::brauer::PlaceId;
use crate::group::{FiniteGroup, Subgroup};

/// A subgroup realizable as a local Galois group at some place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizedSubgroup {
    pub subgroup: Subgroup,
    /// Realizable inside the tame part of the local absolute Galois group.
    pub tame: bool,
}

/// The subgroups of a fixed group that are realizable over one completion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalFact {
    pub place: PlaceId,
    pub realizable: Vec<RealizedSubgroup>,
}

impl LocalFact {
    pub fn new(place: PlaceId, realizable: Vec<RealizedSubgroup>) -> Self {
        LocalFact { place, realizable }
    }

    /// Every listed subgroup, flagged wild.
    pub fn wild(place: PlaceId, subgroups: impl IntoIterator<Item = Subgroup>) -> Self {
        Self::new(place, subgroups.into_iter().map(|subgroup| RealizedSubgroup { subgroup, tame: false }).collect())
    }

    /// Every listed subgroup, flagged tame.
    pub fn tame(place: PlaceId, subgroups: impl IntoIterator<Item = Subgroup>) -> Self {
        Self::new(place, subgroups.into_iter().map(|subgroup| RealizedSubgroup { subgroup, tame: true }).collect())
    }
}

/// Two (place, subgroup) choices for one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateEntry {
    pub prime: u64,
    pub places: [PlaceId; 2],
    pub subgroups: [Subgroup; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityCertificate {
    pub entries: Vec<CertificateEntry>,
}

impl AdmissibilityCertificate {
    /// Whether no place is used twice across the whole certificate.
    pub fn all_places_distinct(&self) -> bool {
        let mut seen: Vec<&PlaceId> = self.entries.iter().flat_map(|e| e.places.iter()).collect();
        let n = seen.len();
        seen.sort();
        seen.dedup();
        seen.len() == n
    }

    /// Whether every place chosen for `p` has residue characteristic other than `p`.
    pub fn avoids_residue_characteristic(&self) -> bool {
        self.entries.iter().all(|e| e.places.iter().all(|v| v.residue_char != e.prime))
    }
}

/// Whether the places in a certificate must differ only within each prime's
/// pair, or across the whole certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Distinctness {
    Pairwise,
    AllDistinct,
}

/// Which local facts may serve a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeFilter {
    Any,
    /// Only places whose residue characteristic differs from the prime.
    AvoidResidueChar,
    /// Only subgroups flagged tame.
    TameOnly,
}

/// Contains a Sylow `p`-subgroup of `g` (some conjugate): `|H|_p = |G|_p`.
pub fn contains_sylow(g: &FiniteGroup, h: &Subgroup, p: u64) -> bool {
    p_part(h.order() as u64, p) == p_part(g.order() as u64, p)
}

/// Schacher's criterion at certificate level: for every prime dividing `|G|`
/// two distinct places whose subgroups contain a Sylow subgroup.
pub fn schacher_check(g: &FiniteGroup, cert: &AdmissibilityCertificate) -> bool {
    let primes = prime_divisors(g.order() as u64);
    let mut covered: Vec<u64> = cert.entries.iter().map(|e| e.prime).collect();
    covered.sort_unstable();
    covered == primes
        && cert.entries.iter().all(|e| {
            e.places[0] != e.places[1]
                && e.subgroups.iter().all(|h| h.parent() == g.id() && contains_sylow(g, h, e.prime))
        })
}

/// Facts merged by place and put in a canonical order.
fn canonical_facts(g: &FiniteGroup, facts: &[LocalFact]) -> Vec<LocalFact> {
    let mut by_place: BTreeMap<PlaceId, Vec<RealizedSubgroup>> = BTreeMap::new();
    for f in facts {
        by_place.entry(f.place.clone()).or_default().extend(f.realizable.iter().filter(|r| r.subgroup.parent() == g.id()).cloned());
    }
    by_place
        .into_iter()
        .map(|(place, mut subs)| {
            subs.sort_by(|a, b| {
                (a.subgroup.order(), a.subgroup.members(), a.tame).cmp(&(b.subgroup.order(), b.subgroup.members(), b.tame))
            });
            subs.dedup();
            LocalFact { place, realizable: subs }
        })
        .collect()
}

/// The first subgroup at `fact` serving `p` under `filter`.
fn serving<'a>(g: &FiniteGroup, fact: &'a LocalFact, p: u64, filter: EdgeFilter) -> Option<&'a Subgroup> {
    if filter == EdgeFilter::AvoidResidueChar && fact.place.residue_char == p {
        return None;
    }
    fact.realizable
        .iter()
        .filter(|r| filter != EdgeFilter::TameOnly || r.tame)
        .map(|r| &r.subgroup)
        .find(|h| contains_sylow(g, h, p))
}

/// Bipartite graph between slots `(p, 1), (p, 2)` and places.
struct SlotGraph {
    slots: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

fn slot_graph(g: &FiniteGroup, facts: &[LocalFact], filter: EdgeFilter) -> SlotGraph {
    let primes = prime_divisors(g.order() as u64);
    let slots: Vec<u64> = primes.iter().flat_map(|&p| [p, p]).collect();
    let adj = slots
        .iter()
        .map(|&p| (0..facts.len()).filter(|&v| serving(g, &facts[v], p, filter).is_some()).collect())
        .collect();
    SlotGraph { slots, adj }
}

/// Maximum matching by augmenting paths, slots and places visited in order.
fn kuhn(graph: &SlotGraph, places: usize) -> Vec<Option<usize>> {
    fn augment(graph: &SlotGraph, s: usize, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &v in &graph.adj[s] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|t| augment(graph, t, seen, owner)) {
                owner[v] = Some(s);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; places];
    for s in 0..graph.slots.len() {
        let mut seen = vec![false; places];
        augment(graph, s, &mut seen, &mut owner);
    }
    let mut assignment = vec![None; graph.slots.len()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(s) = o {
            assignment[*s] = Some(v);
        }
    }
    assignment
}

fn assemble(
    g: &FiniteGroup,
    facts: &[LocalFact],
    slots: &[u64],
    assignment: &[usize],
    filter: EdgeFilter,
) -> AdmissibilityCertificate {
    let entries = slots
        .chunks(2)
        .zip(assignment.chunks(2))
        .map(|(ps, vs)| {
            let p = ps[0];
            let pick = |v: usize| serving(g, &facts[v], p, filter).expect("edge exists").clone();
            CertificateEntry {
                prime: p,
                places: [facts[vs[0]].place.clone(), facts[vs[1]].place.clone()],
                subgroups: [pick(vs[0]), pick(vs[1])],
            }
        })
        .collect();
    AdmissibilityCertificate { entries }
}

/// Searches for a certificate; `None` when no valid assignment exists.
pub fn preadmissibility_search_with(
    g: &FiniteGroup,
    facts: &[LocalFact],
    distinctness: Distinctness,
    filter: EdgeFilter,
) -> Option<AdmissibilityCertificate> {
    let facts = canonical_facts(g, facts);
    let graph = slot_graph(g, &facts, filter);
    let assignment: Vec<usize> = match distinctness {
        Distinctness::AllDistinct => kuhn(&graph, facts.len()).into_iter().collect::<Option<_>>()?,
        Distinctness::Pairwise => {
            let mut out = Vec::with_capacity(graph.slots.len());
            for pair in graph.adj.chunks(2) {
                let [a, b, ..] = pair[0][..] else { return None };
                out.extend([a, b]);
            }
            out
        }
    };
    Some(assemble(g, &facts, &graph.slots, &assignment, filter))
}

/// All places distinct across primes, any realizable subgroup.
pub fn preadmissibility_search(g: &FiniteGroup, facts: &[LocalFact]) -> Option<AdmissibilityCertificate> {
    preadmissibility_search_with(g, facts, Distinctness::AllDistinct, EdgeFilter::Any)
}

/// Existence of a certificate by trying every assignment of places to slots.
pub fn preadmissibility_exhaustive(
    g: &FiniteGroup,
    facts: &[LocalFact],
    distinctness: Distinctness,
    filter: EdgeFilter,
) -> bool {
    let facts = canonical_facts(g, facts);
    let graph = slot_graph(g, &facts, filter);
    let k = graph.slots.len();
    let n = facts.len();
    if n == 0 {
        return k == 0;
    }
    let mut choice = vec![0usize; k];
    loop {
        let edges_ok = (0..k).all(|s| graph.adj[s].contains(&choice[s]));
        let distinct_ok = match distinctness {
            Distinctness::AllDistinct => (0..k).all(|s| (0..s).all(|t| choice[t] != choice[s])),
            Distinctness::Pairwise => (0..k).step_by(2).all(|s| choice[s] != choice[s + 1]),
        };
        if edges_ok && distinct_ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == k {
                return false;
            }
            choice[i] += 1;
            if choice[i] < n {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Wildness {
    /// A certificate whose places all avoid the residue characteristic of
    /// their prime.
    NonWildAvailable { certificate: AdmissibilityCertificate },
    /// Every certificate uses, for some prime, a place above that prime.
    Wild,
}

/// Wild unless a certificate avoiding residue characteristic `p` for every
/// `p` exists.
pub fn classify_wildness(g: &FiniteGroup, facts: &[LocalFact], distinctness: Distinctness) -> Wildness {
    match preadmissibility_search_with(g, facts, distinctness, EdgeFilter::AvoidResidueChar) {
        Some(certificate) => {
            debug_assert!(certificate.avoids_residue_characteristic());
            Wildness::NonWildAvailable { certificate }
        }
        None => Wildness::Wild,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, heisenberg, symmetric};

    fn place(label: &str, p: u64) -> PlaceId {
        PlaceId::new(label, p)
    }

    #[test]
    fn schacher_on_cyclic_six() {
        let g = cyclic(6).unwrap();
        let facts = [LocalFact::wild(place("a", 7), [g.whole()]), LocalFact::wild(place("b", 13), [g.whole()])];
        let cert = preadmissibility_search_with(&g, &facts, Distinctness::Pairwise, EdgeFilter::Any).unwrap();
        assert!(schacher_check(&g, &cert));
        assert!(preadmissibility_search(&g, &facts).is_none());
        let one = [LocalFact::wild(place("a", 7), [g.whole()])];
        assert!(preadmissibility_search_with(&g, &one, Distinctness::Pairwise, EdgeFilter::Any).is_none());
    }

    #[test]
    fn s3_with_cyclic_local_groups() {
        let g = symmetric(3).unwrap();
        let c3 = g.sylow_subgroup(3).unwrap();
        let c2 = g.sylow_subgroup(2).unwrap();
        let mut facts = vec![
            LocalFact::wild(place("a", 5), [c3.clone()]),
            LocalFact::wild(place("b", 7), [c3]),
            LocalFact::wild(place("c", 11), [c2.clone()]),
            LocalFact::wild(place("d", 13), [c2]),
        ];
        let cert = preadmissibility_search(&g, &facts).unwrap();
        assert!(schacher_check(&g, &cert));
        assert!(cert.all_places_distinct());
        facts.pop();
        assert!(preadmissibility_search(&g, &facts).is_none());
        assert!(!preadmissibility_exhaustive(&g, &facts, Distinctness::AllDistinct, EdgeFilter::Any));
    }

    #[test]
    fn matching_needs_reassignment() {
        // Greedy slot-by-slot choice would take place "a" for the prime 2.
        let g = cyclic(30).unwrap();
        let whole = g.whole();
        let s2 = g.sylow_subgroup(2).unwrap();
        let s3 = g.sylow_subgroup(3).unwrap();
        let s5 = g.sylow_subgroup(5).unwrap();
        let s35 = g.subgroup_generated(&[s3.members()[1], s5.members()[1]]);
        let facts = vec![
            LocalFact::wild(place("a", 7), [whole.clone()]),
            LocalFact::wild(place("b", 11), [whole]),
            LocalFact::wild(place("c", 13), [s2.clone()]),
            LocalFact::wild(place("d", 17), [s2]),
            LocalFact::wild(place("e", 19), [s35]),
        ];
        let cert = preadmissibility_search(&g, &facts);
        assert!(cert.is_none(), "only five places for six slots");
        let mut more = facts.clone();
        more.push(LocalFact::wild(place("f", 23), [g.sylow_subgroup(5).unwrap()]));
        let cert = preadmissibility_search(&g, &more).unwrap();
        assert!(schacher_check(&g, &cert) && cert.all_places_distinct());
        let mut reversed = more.clone();
        reversed.reverse();
        assert_eq!(preadmissibility_search(&g, &reversed).unwrap(), cert);
    }

    #[test]
    fn wildness() {
        let g = heisenberg(3).unwrap();
        let facts = [LocalFact::wild(place("u1", 3), [g.whole()]), LocalFact::wild(place("u2", 3), [g.whole()])];
        assert!(preadmissibility_search(&g, &facts).is_some());
        assert_eq!(classify_wildness(&g, &facts, Distinctness::Pairwise), Wildness::Wild);

        let c = cyclic(9).unwrap();
        let facts = [
            LocalFact::tame(place("q1", 19), [c.whole()]),
            LocalFact::tame(place("q2", 37), [c.whole()]),
            LocalFact::wild(place("u", 3), [c.whole()]),
        ];
        match classify_wildness(&c, &facts, Distinctness::Pairwise) {
            Wildness::NonWildAvailable { certificate } => assert!(certificate.avoids_residue_characteristic()),
            Wildness::Wild => panic!("tame pair available"),
        }
    }
}

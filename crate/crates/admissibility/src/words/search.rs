//! Exhaustive searches for (pro-p) epimorphisms onto finite groups.
//!
//! Every search estimates its candidate count up front and refuses to start
//! above the [`Budget`]. Work is split over the candidates of the first
//! generator (or the first coset coordinate) and run on the rayon pool;
//! results are combined so that counts and reported witnesses do not depend
//! on the number of workers.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::{Mode, Presentation, Word};
use crate::group::FiniteGroup;

pub const DEFAULT_BUDGET: u128 = 1_000_000_000;
/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV_VAR: &str = "ADMISSIBILITY_SEARCH_BUDGET";

/// Maximum number of candidate tuples a single search may examine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u128);

impl Budget {
    pub fn from_env() -> Budget {
        std::env::var(BUDGET_ENV_VAR)
            .ok()
            .and_then(|v| v.trim().replace('_', "").parse().ok())
            .map_or(Budget(DEFAULT_BUDGET), Budget)
    }

    fn admit(self, estimate: u128) -> Result<(), SearchError> {
        if estimate > self.0 {
            Err(SearchError::BudgetExceeded { estimate, budget: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search needs about {estimate} candidate tuples, over the budget of {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error("a group of order {order} is not a valid target in {mode} mode")]
    ModeMismatch { mode: Mode, order: usize },
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpimorphismCount {
    pub epimorphisms: u64,
    pub automorphisms: usize,
    /// Normal subgroups with quotient isomorphic to the target: `epimorphisms / |Aut|`.
    pub normal_subgroups: u64,
    pub candidates: u128,
}

fn check_mode(pres: &Presentation, g: &FiniteGroup) -> Result<(), SearchError> {
    let ok = match pres.mode {
        Mode::AbstractFinite => true,
        Mode::ProP(p) => g.order() == 1 || g.p_group_prime() == Some(p),
        Mode::ProPrimeTo2 => g.order() % 2 == 1,
    };
    if ok {
        Ok(())
    } else {
        Err(SearchError::ModeMismatch { mode: pres.mode, order: g.order() })
    }
}

/// Relators bucketed by the depth at which all their letters are assigned.
struct Relators<'a> {
    g: &'a FiniteGroup,
    at_depth: Vec<Vec<&'a Word>>,
}

impl<'a> Relators<'a> {
    fn new(pres: &'a Presentation, g: &'a FiniteGroup) -> Self {
        let mut at_depth = vec![Vec::new(); pres.rank().max(1)];
        for r in &pres.relators {
            if let Some(d) = r.max_generator() {
                at_depth[d].push(r);
            }
        }
        Relators { g, at_depth }
    }

    fn hold_at(&self, depth: usize, images: &[usize]) -> bool {
        self.at_depth[depth].iter().all(|r| r.evaluate(self.g, images) == self.g.identity())
    }
}

fn torsion_ok(pres: &Presentation, g: &FiniteGroup, i: usize, x: usize) -> bool {
    pres.torsion[i].is_none_or(|b| b % g.element_order(x) as u64 == 0)
}

fn product_estimate(sizes: impl Iterator<Item = usize>) -> u128 {
    sizes.fold(1u128, |acc, s| acc.saturating_mul(s as u128))
}

/// Number of epimorphisms from the presented group onto `g`, pruned by
/// torsion bounds and early relator checks.
pub fn count_epimorphisms(
    pres: &Presentation,
    g: &FiniteGroup,
    budget: Budget,
) -> Result<EpimorphismCount, SearchError> {
    check_mode(pres, g)?;
    let k = pres.rank();
    let finish = |epis: u64, candidates: u128| {
        let automorphisms = g.automorphism_count();
        EpimorphismCount { epimorphisms: epis, automorphisms, normal_subgroups: epis / automorphisms as u64, candidates }
    };
    if k == 0 {
        return Ok(finish(u64::from(g.order() == 1), 1));
    }
    let cands: Vec<Vec<usize>> =
        (0..k).map(|i| (0..g.order()).filter(|&x| torsion_ok(pres, g, i, x)).collect()).collect();
    let estimate = product_estimate(cands.iter().map(Vec::len));
    budget.admit(estimate)?;
    let rels = Relators::new(pres, g);
    let refs: Vec<&[usize]> = cands.iter().map(Vec::as_slice).collect();
    let epis: u64 = cands[0]
        .par_iter()
        .map(|&x0| {
            let mut images = vec![g.identity(); k];
            images[0] = x0;
            if !rels.hold_at(0, &images) {
                return 0;
            }
            let mut n = 0u64;
            let mut leaf = |im: &[usize]| {
                if g.generates(im) {
                    n += 1;
                }
                true
            };
            dfs_from(&rels, &refs, &mut images, 1, &mut leaf);
            n
        })
        .sum();
    Ok(finish(epis, estimate))
}

/// Depth-first search over `cands[depth]`, pruning with relators as soon as
/// their letters are assigned. `leaf` returns `false` to stop.
fn dfs_from(
    rels: &Relators<'_>,
    cands: &[&[usize]],
    images: &mut Vec<usize>,
    depth: usize,
    leaf: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if depth == cands.len() {
        return leaf(images);
    }
    for &x in cands[depth] {
        images[depth] = x;
        if rels.hold_at(depth, images) && !dfs_from(rels, cands, images, depth + 1, leaf) {
            return false;
        }
    }
    true
}

/// Oracle: every tuple in `G^k`, checked for relators, torsion and generation.
pub fn count_epimorphisms_naive(pres: &Presentation, g: &FiniteGroup, budget: Budget) -> Result<u64, SearchError> {
    check_mode(pres, g)?;
    let k = pres.rank();
    let n = g.order();
    budget.admit(product_estimate(std::iter::repeat_n(n, k)))?;
    let total = (n as u128).pow(k as u32) as u64;
    let mut count = 0;
    let mut images = vec![0usize; k];
    for code in 0..total {
        let mut c = code;
        for slot in images.iter_mut() {
            *slot = (c % n as u64) as usize;
            c /= n as u64;
        }
        if pres.satisfied_by(g, &images) && g.closure(&images).len() == n {
            count += 1;
        }
    }
    Ok(count)
}

/// Checks that `images` defines an epimorphism from the presented group onto `g`.
pub fn verify_epimorphism(pres: &Presentation, g: &FiniteGroup, images: &[usize]) -> bool {
    images.iter().all(|&x| x < g.order()) && pres.satisfied_by(g, images) && g.closure(images).len() == g.order()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuotientStrategy {
    /// Cheapest applicable method within budget.
    Auto,
    /// All of `G^k`.
    Naive,
    /// Images fixed modulo the Frattini subgroup first, then lifted.
    FrattiniLift,
    /// Images enumerated modulo a central subgroup that cannot affect relator values.
    CentralReduction,
    /// Free presentation: decided by comparing ranks.
    FreeRank,
    /// Elementary abelian target: decided by linear algebra on exponent sums mod `p`.
    ElementaryRank,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientVerdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
    pub strategy: QuotientStrategy,
    pub estimate: u128,
    pub reduction: Option<CentralReduction>,
}

/// Outcome of the central-reduction test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralReduction {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
    /// gcd of all generator exponent sums (and torsion bounds); 0 if all vanish.
    pub exponent_gcd: u64,
    /// Order of the central subgroup `C = {z ∈ Z(G) ∩ Φ(G) : z^gcd = 1}`.
    pub central_order: usize,
    /// Whether `C` is the whole center.
    pub full_center: bool,
    pub coset_tuples_total: u128,
    /// Tuples visited in lexicographic order: all of them, or up to the witness.
    pub coset_tuples_scanned: u128,
    /// Set when `C` is trivial and the answer came from the Frattini-lift search.
    pub fallback: bool,
}

struct PGroupData<'a> {
    g: &'a FiniteGroup,
    fq: &'a crate::group::FrattiniQuotient,
}

fn p_group_data<'a>(pres: &Presentation, g: &'a FiniteGroup) -> Result<Option<PGroupData<'a>>, SearchError> {
    let Mode::ProP(_) = pres.mode else {
        return Err(SearchError::Unsupported("pro-p quotient tests need a pro-p presentation".into()));
    };
    check_mode(pres, g)?;
    Ok(g.frattini_quotient().map(|fq| PGroupData { g, fq }))
}

fn spanning_tuple_count(p: u64, d: usize, k: usize) -> u128 {
    if k < d {
        return 0;
    }
    let pk = (p as u128).pow(k as u32);
    (0..d).fold(1u128, |acc, i| acc.saturating_mul(pk - (p as u128).pow(i as u32)))
}

fn frattini_estimate(data: &PGroupData<'_>, k: usize) -> u128 {
    let phi = data.fq.frattini.len() as u128;
    spanning_tuple_count(data.fq.prime, data.fq.rank, k).saturating_mul(phi.saturating_pow(k as u32))
}

/// The central subgroup used by the reduction, with the exponent gcd.
fn reduction_subgroup(pres: &Presentation, data: &PGroupData<'_>) -> (Vec<usize>, u64, bool) {
    let g = data.g;
    let k = pres.rank();
    let mut gcd = 0u64;
    for r in &pres.relators {
        for e in r.exponent_sums(k) {
            gcd = num_integer::gcd(gcd, e.unsigned_abs());
        }
    }
    for b in pres.torsion.iter().flatten() {
        gcd = num_integer::gcd(gcd, *b);
    }
    let center = g.center();
    let in_phi = |z: &usize| data.fq.coords(*z) == 0;
    let c: Vec<usize> = center
        .members()
        .iter()
        .copied()
        .filter(in_phi)
        .filter(|&z| gcd == 0 || g.pow(z, gcd as i64) == g.identity())
        .collect();
    let full = c.len() == center.order();
    (c, gcd, full)
}

fn central_estimate(pres: &Presentation, data: &PGroupData<'_>) -> Option<u128> {
    let (c, _, _) = reduction_subgroup(pres, data);
    (c.len() > 1).then(|| ((data.g.order() / c.len()) as u128).saturating_pow(pres.rank() as u32))
}

/// Decides whether the finite p-group `g` is a quotient of the pro-p group
/// presented by `pres`, using the cheapest method that fits the budget.
pub fn is_prop_quotient(pres: &Presentation, g: &FiniteGroup, budget: Budget) -> Result<QuotientVerdict, SearchError> {
    is_prop_quotient_with(pres, g, QuotientStrategy::Auto, budget)
}

pub fn is_prop_quotient_with(
    pres: &Presentation,
    g: &FiniteGroup,
    strategy: QuotientStrategy,
    budget: Budget,
) -> Result<QuotientVerdict, SearchError> {
    let data = p_group_data(pres, g)?;
    let k = pres.rank();
    let Some(data) = data else {
        // trivial group
        return Ok(QuotientVerdict {
            holds: true,
            witness: Some(vec![g.identity(); k]),
            strategy: QuotientStrategy::FreeRank,
            estimate: 1,
            reduction: None,
        });
    };
    let free = pres.relators.is_empty() && pres.torsion.iter().all(Option::is_none);
    let chosen = match strategy {
        QuotientStrategy::Auto if free => QuotientStrategy::FreeRank,
        QuotientStrategy::Auto if data.fq.frattini.len() == 1 => QuotientStrategy::ElementaryRank,
        QuotientStrategy::Auto => {
            let fr = frattini_estimate(&data, k);
            match central_estimate(pres, &data) {
                Some(ce) if ce < fr => QuotientStrategy::CentralReduction,
                _ => QuotientStrategy::FrattiniLift,
            }
        }
        s => s,
    };
    match chosen {
        QuotientStrategy::FreeRank => {
            if !free {
                return Err(SearchError::Unsupported("rank comparison needs a free presentation".into()));
            }
            let gens = g.small_generating_set();
            let holds = gens.len() <= k;
            let witness = holds.then(|| {
                let mut w = gens.clone();
                w.resize(k, g.identity());
                w
            });
            Ok(QuotientVerdict { holds, witness, strategy: chosen, estimate: 1, reduction: None })
        }
        QuotientStrategy::ElementaryRank => {
            if data.fq.frattini.len() != 1 {
                return Err(SearchError::Unsupported("rank test needs an elementary abelian target".into()));
            }
            let witness = elementary_witness(pres, &data);
            Ok(QuotientVerdict { holds: witness.is_some(), witness, strategy: chosen, estimate: 1, reduction: None })
        }
        QuotientStrategy::Naive => {
            let n = g.order();
            let estimate = product_estimate(std::iter::repeat_n(n, k));
            budget.admit(estimate)?;
            let witness = naive_first_witness(pres, g);
            Ok(QuotientVerdict { holds: witness.is_some(), witness, strategy: chosen, estimate, reduction: None })
        }
        QuotientStrategy::FrattiniLift => {
            let estimate = frattini_estimate(&data, k);
            budget.admit(estimate)?;
            let witness = frattini_lift_witness(pres, &data);
            Ok(QuotientVerdict { holds: witness.is_some(), witness, strategy: chosen, estimate, reduction: None })
        }
        QuotientStrategy::CentralReduction => {
            let red = central_reduction_inner(pres, &data, budget)?;
            Ok(QuotientVerdict {
                holds: red.holds,
                witness: red.witness.clone(),
                strategy: if red.fallback { QuotientStrategy::FrattiniLift } else { chosen },
                estimate: red.coset_tuples_total,
                reduction: Some(red),
            })
        }
        QuotientStrategy::Auto => unreachable!("resolved above"),
    }
}

/// For `G = F_p^d`, images are a `k × d` matrix whose columns must be
/// independent solutions of the relation matrix; any `d` basis vectors of its
/// null space will do.
fn elementary_witness(pres: &Presentation, data: &PGroupData<'_>) -> Option<Vec<usize>> {
    let fq = data.fq;
    let (p, d, k) = (fq.prime, fq.rank, pres.rank());
    let basis = crate::arith::nullspace_mod(&pres.relation_matrix_mod(p), k, p);
    if basis.len() < d {
        return None;
    }
    let images = (0..k)
        .map(|j| {
            let packed = (0..d).rev().fold(0u64, |acc, i| acc * p + basis[i][j]);
            fq.coset(packed)[0]
        })
        .collect();
    Some(images)
}

fn naive_first_witness(pres: &Presentation, g: &FiniteGroup) -> Option<Vec<usize>> {
    let k = pres.rank();
    let n = g.order();
    let rels = Relators::new(pres, g);
    let all: Vec<usize> = (0..n).collect();
    (0..n).into_par_iter().find_map_first(|x0| {
        let mut images = vec![g.identity(); k];
        images[0] = x0;
        if !torsion_ok(pres, g, 0, x0) || !rels.hold_at(0, &images) {
            return None;
        }
        let cands: Vec<Vec<usize>> = (0..k)
            .map(|i| if i == 0 { vec![x0] } else { all.iter().copied().filter(|&x| torsion_ok(pres, g, i, x)).collect() })
            .collect();
        let refs: Vec<&[usize]> = cands.iter().map(Vec::as_slice).collect();
        let mut found = None;
        dfs_from(&rels, &refs, &mut images, 1, &mut |im| {
            if g.closure(im).len() == n {
                found = Some(im.to_vec());
                false
            } else {
                true
            }
        });
        found
    })
}

/// Odometer over `base^k` in lexicographic order (first coordinate most significant).
fn decode(code: u128, base: u128, k: usize) -> Vec<u64> {
    let mut out = vec![0u64; k];
    let mut c = code;
    for slot in out.iter_mut().rev() {
        *slot = (c % base) as u64;
        c /= base;
    }
    out
}

fn frattini_lift_witness(pres: &Presentation, data: &PGroupData<'_>) -> Option<Vec<usize>> {
    let (g, fq) = (data.g, data.fq);
    let k = pres.rank();
    let q = fq.quotient_order() as u128;
    let total = q.pow(k as u32);
    let rels = Relators::new(pres, g);
    (0..total).into_par_iter().find_map_first(|code| {
        let vecs = decode(code, q, k);
        if fq.rank_of(vecs.iter().copied()) != fq.rank {
            return None;
        }
        let cands: Vec<Vec<usize>> = vecs
            .iter()
            .enumerate()
            .map(|(i, &v)| fq.coset(v).iter().copied().filter(|&x| torsion_ok(pres, g, i, x)).collect())
            .collect();
        let refs: Vec<&[usize]> = cands.iter().map(Vec::as_slice).collect();
        let mut images = vec![g.identity(); k];
        let mut found = None;
        dfs_from(&rels, &refs, &mut images, 0, &mut |im| {
            found = Some(im.to_vec());
            false
        });
        found
    })
}

/// Quotient test that enumerates generator images only modulo a central
/// subgroup `C ≤ Z(G) ∩ Φ(G)` whose exponent divides every generator's
/// exponent sum in every relator.
///
/// For such `C`, replacing images `s_t` by `s_t z_t` with `z_t ∈ C` multiplies
/// each relator value by `∏ z_t^{e_t} = 1`, and does not change whether the
/// images span `G/Φ(G)`. So one representative per coset suffices. When the
/// only such `C` is trivial the test falls back to the Frattini-lift search
/// and says so in [`CentralReduction::fallback`].
pub fn central_reduction_quotient_test(
    pres: &Presentation,
    g: &FiniteGroup,
    budget: Budget,
) -> Result<CentralReduction, SearchError> {
    match p_group_data(pres, g)? {
        Some(data) => central_reduction_inner(pres, &data, budget),
        None => Ok(CentralReduction {
            holds: true,
            witness: Some(vec![g.identity(); pres.rank()]),
            exponent_gcd: 0,
            central_order: 1,
            full_center: true,
            coset_tuples_total: 1,
            coset_tuples_scanned: 1,
            fallback: false,
        }),
    }
}

fn central_reduction_inner(
    pres: &Presentation,
    data: &PGroupData<'_>,
    budget: Budget,
) -> Result<CentralReduction, SearchError> {
    let (g, fq) = (data.g, data.fq);
    let k = pres.rank();
    let (c, gcd, full_center) = reduction_subgroup(pres, data);
    if c.len() <= 1 {
        let estimate = frattini_estimate(data, k);
        budget.admit(estimate)?;
        let witness = frattini_lift_witness(pres, data);
        return Ok(CentralReduction {
            holds: witness.is_some(),
            witness,
            exponent_gcd: gcd,
            central_order: c.len(),
            full_center,
            coset_tuples_total: estimate,
            coset_tuples_scanned: estimate,
            fallback: true,
        });
    }
    // smallest element of each coset xC
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if !seen[x] {
            reps.push(x);
            for &z in &c {
                seen[g.mul(x, z)] = true;
            }
        }
    }
    let base = reps.len() as u128;
    let total = base.saturating_pow(k as u32);
    budget.admit(total)?;
    let rels = Relators::new(pres, g);
    let hit = (0..reps.len()).into_par_iter().find_map_first(|first| {
        let mut images = vec![g.identity(); k];
        images[0] = reps[first];
        if !torsion_ok(pres, g, 0, images[0]) || !rels.hold_at(0, &images) {
            return None;
        }
        let cands: Vec<Vec<usize>> =
            (0..k).map(|i| if i == 0 { vec![reps[first]] } else { reps.clone() }).collect();
        let refs: Vec<&[usize]> = cands.iter().map(Vec::as_slice).collect();
        let mut found = None;
        let rank = fq.rank;
        dfs_from(&rels, &refs, &mut images, 1, &mut |im| {
            let ok = im.iter().enumerate().all(|(i, &x)| torsion_ok(pres, g, i, x))
                && fq.rank_of(im.iter().map(|&x| fq.coords(x))) == rank;
            if ok {
                found = Some(im.to_vec());
            }
            !ok
        });
        found
    });
    let (holds, witness, scanned) = match hit {
        Some(w) => {
            let pos = |x: usize| reps.binary_search(&x).expect("representative") as u128;
            let index = w.iter().fold(0u128, |acc, &x| acc * base + pos(x));
            (true, Some(w), index + 1)
        }
        None => (false, None, total),
    };
    Ok(CentralReduction {
        holds,
        witness,
        exponent_gcd: gcd,
        central_order: c.len(),
        full_center,
        coset_tuples_total: total,
        coset_tuples_scanned: scanned,
        fallback: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    fn s3_reduced() -> Presentation {
        Presentation::parse(
            "<σ,τ,x0,x1 | τ^2, x0^3, x1^3, τ^σ = τ^3, x0^σ = (x0 τ x0^-1 τ)^2>",
            Mode::AbstractFinite,
        )
        .unwrap()
    }

    #[test]
    fn s3_epimorphism_count() {
        let s3 = symmetric(3).unwrap();
        let c = count_epimorphisms(&s3_reduced(), &s3, Budget(DEFAULT_BUDGET)).unwrap();
        assert_eq!(c.epimorphisms, 36);
        assert_eq!(c.automorphisms, 6);
        assert_eq!(c.normal_subgroups, 6);
        assert_eq!(count_epimorphisms_naive(&s3_reduced(), &s3, Budget(DEFAULT_BUDGET)).unwrap(), 36);
    }

    #[test]
    fn budget_refusal_reports_estimate() {
        let g = obstruction_group_2_10();
        let p = Presentation::free(4, Mode::AbstractFinite);
        assert_eq!(
            count_epimorphisms(&p, &g, Budget(1000)).unwrap_err(),
            SearchError::BudgetExceeded { estimate: 1024u128.pow(4), budget: 1000 }
        );
    }

    #[test]
    fn mode_mismatch() {
        let p = Presentation::free(2, Mode::ProP(3));
        assert!(matches!(
            is_prop_quotient(&p, &symmetric(3).unwrap(), Budget(DEFAULT_BUDGET)),
            Err(SearchError::ModeMismatch { .. })
        ));
        let q = Presentation::free(2, Mode::ProPrimeTo2);
        assert!(count_epimorphisms(&q, &cyclic(4).unwrap(), Budget(DEFAULT_BUDGET)).is_err());
        assert_eq!(count_epimorphisms(&q, &cyclic(3).unwrap(), Budget(DEFAULT_BUDGET)).unwrap().epimorphisms, 8);
    }

    #[test]
    fn elementary_targets_use_linear_algebra() {
        let b = Budget(DEFAULT_BUDGET);
        let g = abelian(&[5, 5, 5]).unwrap();
        let pres = Presentation::parse("a^5 [a,b] [c,d] [e,f]", Mode::ProP(5)).unwrap();
        let v = is_prop_quotient(&pres, &g, b).unwrap();
        assert_eq!(v.strategy, QuotientStrategy::ElementaryRank);
        assert!(verify_epimorphism(&pres, &g, &v.witness.unwrap()));
        let tight = Presentation::parse("a b^2, c d", Mode::ProP(5)).unwrap();
        assert!(is_prop_quotient(&tight, &abelian(&[5, 5]).unwrap(), b).unwrap().holds);
        assert!(!is_prop_quotient(&tight, &g, b).unwrap().holds);
        assert!(!is_prop_quotient_with(&tight, &g, QuotientStrategy::Naive, b).unwrap().holds);
    }

    #[test]
    fn free_rank_decides() {
        let g = abelian(&[3, 3, 3]).unwrap();
        let b = Budget(DEFAULT_BUDGET);
        assert!(!is_prop_quotient(&Presentation::free(2, Mode::ProP(3)), &g, b).unwrap().holds);
        let v = is_prop_quotient(&Presentation::free(3, Mode::ProP(3)), &g, b).unwrap();
        assert!(v.holds);
        assert!(verify_epimorphism(&Presentation::free(3, Mode::ProP(3)), &g, &v.witness.unwrap()));
    }

    #[test]
    fn strategies_agree_on_small_cases() {
        let b = Budget(DEFAULT_BUDGET);
        let groups = [quaternion(), dihedral(4).unwrap(), cyclic(8).unwrap(), abelian(&[2, 4]).unwrap()];
        let rels = ["a^2 [a,b]", "a^4 [a,b]", "a^2 b^2", "[a,b]", "a^2 b^4 [a,b]"];
        for g in &groups {
            for r in rels {
                let p = Presentation::parse(r, Mode::ProP(2)).unwrap();
                let naive = is_prop_quotient_with(&p, g, QuotientStrategy::Naive, b).unwrap().holds;
                let lift = is_prop_quotient_with(&p, g, QuotientStrategy::FrattiniLift, b).unwrap();
                let auto = is_prop_quotient(&p, g, b).unwrap();
                assert_eq!(naive, lift.holds, "{r}");
                assert_eq!(naive, auto.holds, "{r}");
                if let Some(w) = auto.witness {
                    assert!(verify_epimorphism(&p, g, &w));
                }
            }
        }
    }
}

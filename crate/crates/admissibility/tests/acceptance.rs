//! Acceptance run: one line per criterion, with timings against the stated
//! limits. Exits nonzero on any unexpected outcome.
//!
//! Criterion 6 asks for zero failures of the metacyclic relation identity.
//! The sweep finds 136 failures, checked here against an independent
//! evaluator, so its line reads FAIL. The run asserts that exact outcome, so
//! any drift in either direction is caught. A companion line checks the
//! realizability conclusion the identity is used for. A second companion
//! shows the word vanishes in every case once the commutator factor is
//! taken as `[y,x]`, which with `x⁻¹yx = yᵗ` equals `y^{t-1}`.

mod common;

use std::time::{Duration, Instant};

use admissibility::brauer::{self, QZ};
use admissibility::engine::*;
use admissibility::group::*;
use admissibility::liedahl::AbelianFieldSpec;
use admissibility::local;
use admissibility::suite;
use admissibility::words::*;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET: Budget = Budget(1_000_000_000);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

struct Run {
    unexpected: Vec<String>,
}

impl Run {
    /// Runs a criterion; `expect_pass` is false only for the documented failure.
    fn criterion(&mut self, id: &str, limit: Option<Duration>, expect_pass: bool, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let mut o = f();
        let took = start.elapsed();
        if let Some(limit) = limit {
            if took > limit {
                o.pass = false;
                o.detail = format!("{} [over the {:?} limit]", o.detail, limit);
            }
        }
        let timing = match limit {
            Some(l) => format!("{took:.2?} of {l:?}"),
            None => format!("{took:.2?}"),
        };
        println!("criterion {id:<11} {}  {}  ({timing})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if o.pass != expect_pass {
            self.unexpected.push(id.to_string());
        }
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn census() -> Outcome {
    let c = suite::sensitive_count(BUDGET).unwrap();
    let summands = (c.quadratic_fields, c.cyclic_cubic_fields, c.s3_extensions, c.non_galois_cubic_fields);
    let listed = local::enumerate_sensitive_extensions(&c).len() as u64;
    outcome(
        c.total == 29 && c.to_string() == "29 = 1+1+(1+3+(4+18))+1" && summands == (3, 4, 6, 18) && listed == 29,
        format!("{c}, {listed} extensions listed"),
    )
}

fn epimorphisms() -> Outcome {
    let c = suite::s3_epimorphisms(BUDGET).unwrap();
    let s3 = symmetric(3).unwrap();
    let naive = count_epimorphisms_naive(&local::s3_counting_presentation(), &s3, BUDGET).unwrap();
    outcome(
        c.epimorphisms == 36 && c.normal_subgroups == 6 && c.automorphisms == 6 && naive == 36,
        format!("{} epimorphisms, |Aut| = {}, {} normal subgroups, naive count {naive}", c.epimorphisms, c.automorphisms, c.normal_subgroups),
    )
}

fn order_2_10() -> Outcome {
    let r = suite::order_2_10(BUDGET).unwrap();
    let q2i = &r.over_q2_i;
    outcome(
        r.over_q2.holds
            && r.witness_verified
            && !q2i.holds
            && !q2i.fallback
            && q2i.coset_tuples_total == 4096
            && q2i.coset_tuples_scanned == 4096,
        format!(
            "over Q2 TRUE (witness verified: {}), over Q2(i) FALSE after {} of {} coset tuples",
            r.witness_verified, q2i.coset_tuples_scanned, q2i.coset_tuples_total
        ),
    )
}

fn local_realizability() -> Outcome {
    let rows = suite::local_realizability(BUDGET).unwrap();
    let want = [true, false, true, false, true, false];
    let got: Vec<bool> = rows.iter().map(|r| r.holds).collect();
    let detail = rows.iter().map(|r| format!("{} over {}: {}", r.group, r.field, r.holds)).collect::<Vec<_>>().join("; ");
    outcome(got == want, detail)
}

/// Liedahl oracle: build every consistent tuple of the right order, keep those
/// isomorphic to the group, and test `t ≡ 1 (mod gcd(conductor, n))`.
fn liedahl_oracle(g: &FiniteGroup, conductor: u64) -> bool {
    consistent_metacyclic_params(g.order() as u64)
        .into_iter()
        .filter(|p| build_metacyclic(*p).is_ok_and(|h| h.is_isomorphic(g)))
        .any(|p| p.t % conductor.gcd(&p.n).max(1) == 1 % conductor.gcd(&p.n).max(1))
}

fn liedahl() -> Outcome {
    let rows = suite::liedahl_fixtures().unwrap();
    let want = [true, false, true, false];
    let conductors = [5u64, 100, 3, 36];
    let groups = [
        build_metacyclic(MetacyclicParams::new(5, 25, 25, 6).unwrap()).unwrap(),
        build_metacyclic(MetacyclicParams::new(3, 9, 9, 4).unwrap()).unwrap(),
    ];
    let mut ok = rows.len() == 4;
    for (k, row) in rows.iter().enumerate() {
        let g = &groups[k / 2];
        ok &= row.verdict.holds == want[k] && liedahl_oracle(g, conductors[k]) == want[k];
        if !want[k] {
            ok &= row.verdict.presentations_scanned == row.verdict.presentations_total;
        }
    }
    let w5 = rows[0].verdict.witness.map(|w| w.t);
    let w3 = rows[2].verdict.witness.map(|w| w.t);
    ok &= w5 == Some(6) && w3 == Some(4);
    let field = AbelianFieldSpec::cyclotomic(5).unwrap();
    ok &= admissibility::liedahl::verify_witness(&groups[0], &field, &rows[0].verdict.witness.unwrap());
    outcome(
        ok,
        format!(
            "M(5,25,25,6): TRUE over Q(μ5) with t = {}, FALSE over Q(μ100) after {} presentations; M(3,9,9,4): TRUE over Q(μ3) with t = {}, FALSE over Q(μ36)",
            w5.unwrap_or(0),
            rows[1].verdict.presentations_total,
            w3.unwrap_or(0)
        ),
    )
}

/// `x^a y^b` as `(a, b)` with `x^m = y^i`, `x⁻¹ y x = y^t`.
#[derive(Clone, Copy)]
struct Meta {
    m: u64,
    n: u64,
    i: u64,
    t: u64,
}

impl Meta {
    fn mul(&self, (a, b): (u64, u64), (c, d): (u64, u64)) -> (u64, u64) {
        let tc = (0..c).fold(1 % self.n, |acc, _| acc * self.t % self.n);
        let mut e = (b * tc + d) % self.n;
        let mut s = a + c;
        if s >= self.m {
            s -= self.m;
            e = (e + self.i) % self.n;
        }
        (s, e)
    }

    fn pow(&self, x: (u64, u64), k: u64) -> (u64, u64) {
        (0..k).fold((0, 0), |acc, _| self.mul(acc, x))
    }

    fn inv(&self, x: (u64, u64)) -> (u64, u64) {
        let order = (1..).find(|&k| self.pow(x, k) == (0, 0)).unwrap();
        self.pow(x, order - 1)
    }

    /// `(x⁻² yˢ)² x⁴ [x,y]` with `[x,y] = x⁻¹y⁻¹xy`, or `[y,x]` when `reversed`.
    fn relation(&self, s: u64, reversed: bool) -> (u64, u64) {
        let x = (1 % self.m, if self.m == 1 { self.i } else { 0 });
        let y = (0, 1 % self.n);
        let xi = self.inv(x);
        let u = self.mul(self.pow(xi, 2), self.pow(y, s));
        let comm = if reversed {
            self.mul(self.mul(self.inv(y), xi), self.mul(y, x))
        } else {
            self.mul(self.mul(xi, self.inv(y)), self.mul(x, y))
        };
        self.mul(self.mul(self.pow(u, 2), self.pow(x, 4)), comm)
    }
}

/// Independent sweep: parameters and exponents by direct enumeration, words
/// evaluated in normal-form arithmetic.
fn relation_oracle(bound: u64) -> (usize, usize, usize, usize) {
    let (mut groups, mut cases, mut failures, mut reversed) = (0, 0, 0, 0);
    let powers: Vec<u64> = (0..=bound.ilog2()).map(|k| 1 << k).collect();
    for &m in &powers {
        for &n in &powers {
            for t in 0..n {
                if n > 1 && (t % 2 == 0 || (0..m).fold(1, |acc, _| acc * t % n) != 1) {
                    continue;
                }
                for i in (0..n).filter(|i| (i * (t + n - 1)) % n == 0) {
                    groups += 1;
                    let meta = Meta { m, n, i, t };
                    let t_eff = t.max(1);
                    for s in (0..n).filter(|s| (s * (t_eff * t_eff + 1) % n * (t_eff * t_eff) + t_eff) % n == 1 % n) {
                        cases += 1;
                        if meta.relation(s, false) != (0, 0) {
                            failures += 1;
                        }
                        if meta.relation(s, true) != (0, 0) {
                            reversed += 1;
                        }
                    }
                }
            }
        }
    }
    (groups, cases, failures, reversed)
}

fn relation_identity() -> (Outcome, Outcome, Outcome) {
    let sweep = local::metacyclic_relation_sweep(16, BUDGET).unwrap();
    let (groups, cases, failures, reversed) = relation_oracle(16);
    let agree = (groups, cases, failures) == (sweep.groups, sweep.cases, sweep.failures.len());
    let first = sweep.failures.first().map(|f| format!("{} s={}", f.params, f.s)).unwrap_or_default();
    let literal = outcome(
        sweep.failures.is_empty() && sweep.unsolvable == 0,
        format!(
            "{} tuples, {} (tuple, s) cases, word not identity in {} cases over {} tuples (first {first}); independent evaluator agrees: {agree}",
            sweep.groups,
            sweep.cases,
            sweep.failures.len(),
            sweep.failing_groups
        ),
    );
    let companion = outcome(
        agree && sweep.failing_groups == sweep.failures_realizable_over_q2 && sweep.failures.len() == 136,
        format!("all {} failing tuples are still realizable over Q2", sweep.failures_realizable_over_q2),
    );
    let swapped = outcome(
        agree && reversed == 0 && sweep.reversed_commutator_failures == 0,
        format!(
            "with [y,x] in place of [x,y] the word vanishes in all {} cases (library {}, evaluator {} nonvanishing)",
            sweep.cases, sweep.reversed_commutator_failures, reversed
        ),
    );
    (literal, companion, swapped)
}

fn brauer_fixtures() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for p in [3u64, 5, 7] {
        let f = suite::brauer_examples(p).unwrap();
        let p3 = (p * p * p) as i64;
        ok &= f.split_invariants.len() == p as usize && f.split_invariants.iter().all(|&x| x == QZ::new(1, p3));
        ok &= f.inert_invariant == QZ::new(-1, (p * p) as i64);
        ok &= f.restricted_index == p * p * p;
        ok &= f.uniform.holds;
        ok &= matches!(
            f.same_place.obstruction,
            Some(brauer::ImageObstruction::Local { difference, .. }) if difference == QZ::new(2, p3)
        );
        ok &= !f.same_place.holds;
        notes.push(format!("p={p}: inert {}, obstruction 2/{p3}", f.inert_invariant));
    }
    outcome(ok, notes.join("; "))
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize, depth: u32) -> Word {
    if depth == 0 || rng.gen_bool(0.35) {
        return Word::gen_pow(rng.gen_range(0..rank), rng.gen_range(-3..=3));
    }
    match rng.gen_range(0..3) {
        0 => Word::product((0..rng.gen_range(2..4)).map(|_| random_word(rng, rank, depth - 1)).collect::<Vec<_>>()),
        1 => Word::commutator(random_word(rng, rank, depth - 1), random_word(rng, rank, depth - 1)),
        _ => random_word(rng, rank, depth - 1).pow(rng.gen_range(-4..=4)),
    }
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let corpus = common::corpus(64);
    let mut discrepancies = 0usize;
    let mut checks = 0usize;
    let relators: Vec<(usize, Word)> = (0..24)
        .map(|k| {
            let rank = 1 + k % 3;
            (rank, random_word(&mut rng, rank, 3))
        })
        .collect();
    for (rank, rel) in &relators {
        let names: Vec<String> = (0..*rank).map(|i| format!("x{i}")).collect();
        let pres = Presentation::new(names.clone(), vec![rel.clone()], Mode::AbstractFinite);
        for (_, g) in &corpus {
            let fast = count_epimorphisms(&pres, g, BUDGET).unwrap().epimorphisms;
            let slow = count_epimorphisms_naive(&pres, g, BUDGET).unwrap();
            checks += 1;
            discrepancies += usize::from(fast != slow);
            if let Some(p) = g.p_group_prime() {
                let pro = Presentation::new(names.clone(), vec![rel.clone()], Mode::ProP(p));
                let auto = is_prop_quotient(&pro, g, BUDGET).unwrap();
                checks += 1;
                discrepancies += usize::from(auto.holds != (slow > 0));
                discrepancies += usize::from(auto.witness.is_some_and(|w| !verify_epimorphism(&pro, g, &w)));
            }
        }
    }

    let mut degree_lists = 0;
    for a in 1..=64u64 {
        for b in a..=64 {
            for c in b..=64 {
                let degrees = [a, b, c];
                let l = a.lcm(&b).lcm(&c);
                if l > 64 || a * b * c > 1 << 16 {
                    continue;
                }
                degree_lists += 1;
                let list: &[u64] = if a == 1 { &degrees[1..] } else { &degrees };
                discrepancies += usize::from(brauer::max_order_in_relative_brauer(list) != brauer::max_order_brute_force(list));
            }
        }
    }

    let g = cyclic(30).unwrap();
    let pool: Vec<Subgroup> = {
        let s: Vec<Subgroup> = g.sylow_system().into_iter().map(|(_, s)| s).collect();
        let mut pool = vec![g.whole(), g.trivial_subgroup()];
        for (i, a) in s.iter().enumerate() {
            pool.push(a.clone());
            for b in &s[i + 1..] {
                let gens: Vec<usize> = a.members().iter().chain(b.members()).copied().collect();
                pool.push(g.subgroup_generated(&gens));
            }
        }
        pool
    };
    let mut instances = 0;
    for _ in 0..300 {
        let places = rng.gen_range(0..=12);
        let facts: Vec<LocalFact> = (0..places)
            .map(|v| {
                let place = admissibility::brauer::PlaceId::new(format!("v{v}"), [2, 3, 5, 7][rng.gen_range(0..4)]);
                let subs: Vec<Subgroup> = (0..rng.gen_range(1..3)).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
                LocalFact::wild(place, subs)
            })
            .collect();
        for (d, f) in [(Distinctness::AllDistinct, EdgeFilter::Any), (Distinctness::AllDistinct, EdgeFilter::AvoidResidueChar)] {
            instances += 1;
            let found = preadmissibility_search_with(&g, &facts, d, f);
            discrepancies += usize::from(found.is_some() != preadmissibility_exhaustive(&g, &facts, d, f));
            discrepancies += usize::from(found.is_some_and(|c| !schacher_check(&g, &c) || !c.all_places_distinct()));
        }
    }
    outcome(
        discrepancies == 0,
        format!(
            "{checks} search comparisons over {} groups, {degree_lists} degree lists, {instances} matching instances; {discrepancies} discrepancies",
            corpus.len()
        ),
    )
}

fn diagram() -> Outcome {
    let r = suite::diagram();
    let ledger = standard_ledger();
    let examples = ledger.examples.iter().filter(|e| e.name != "cyclic").count();
    outcome(
        r.passes() && r.is_dag && r.closure.len() == 19 && r.refuted.len() == 56 - 19 && examples == 6,
        format!(
            "closure of {} implications is a DAG, {} examples consistent, {} non-closure pairs refuted, {} unrefuted",
            r.closure.len(),
            examples,
            r.refuted.len(),
            r.unrefuted.len()
        ),
    )
}

fn main() {
    // `cargo test` passes harness flags such as `--nocapture`; a name filter
    // that does not mention this target skips it.
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    if !filters.is_empty() && !filters.iter().any(|f| "acceptance".contains(f.as_str())) {
        return;
    }
    let mut run = Run { unexpected: Vec::new() };
    run.criterion("1", secs(10), true, census);
    run.criterion("2", secs(5), true, epimorphisms);
    run.criterion("3", secs(60), true, order_2_10);
    run.criterion("4", None, true, local_realizability);
    run.criterion("5", secs(30), true, liedahl);
    let mut companions = None;
    run.criterion("6", None, false, || {
        let (literal, realizable, swapped) = relation_identity();
        companions = Some((realizable, swapped));
        literal
    });
    let (realizable, swapped) = companions.expect("sweep ran");
    run.criterion("6-companion", None, true, || realizable);
    run.criterion("6-swapped", None, true, || swapped);
    run.criterion("7", None, true, brauer_fixtures);
    run.criterion("8", None, true, oracle_equivalence);
    run.criterion("9", None, true, diagram);
    if run.unexpected.is_empty() {
        println!("acceptance: outcomes as recorded (criterion 6 fails as documented)");
    } else {
        println!("acceptance: unexpected outcome for criteria {}", run.unexpected.join(", "));
        std::process::exit(1);
    }
}

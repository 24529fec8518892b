//! Fixture recomputations: each function rebuilds one family of published
//! values from scratch, for the `paper-suite` presets and the acceptance tests.

use serde::Serialize;

use crate::brauer::{
    in_restriction_image, make_class, restrict, BrauerError, Divisor, ExtensionPlaceData, PlaceId, RestrictionImage, QZ,
};
use crate::engine::{ledger_check, standard_ledger, ImplicationDiagram, LedgerReport};
use crate::group::{abelian, build_metacyclic, obstruction_group_2_10, symmetric, MetacyclicParams};
use crate::liedahl::{liedahl_condition, AbelianFieldSpec, LiedahlError, LiedahlVerdict};
use crate::local::{
    count_sensitive_extensions, is_realizable_local, metacyclic_relation_sweep, presentation_of_max_p_extension,
    s3_counting_presentation, LocalError, LocalFieldParams, RelationSweep, SensitiveCensus,
};
use crate::words::{
    central_reduction_quotient_test, count_epimorphisms, verify_epimorphism, Budget, CentralReduction, EpimorphismCount,
    QuotientStrategy,
};

pub const PRESETS: [&str; 8] = [
    "sensitive-count",
    "s3-epimorphisms",
    "order-2-10",
    "local-realizability",
    "liedahl-fixtures",
    "metacyclic-identity",
    "brauer-examples",
    "diagram",
];

pub fn sensitive_count(budget: Budget) -> Result<SensitiveCensus, LocalError> {
    count_sensitive_extensions(budget)
}

pub fn s3_epimorphisms(budget: Budget) -> Result<EpimorphismCount, LocalError> {
    let s3 = symmetric(3)?;
    Ok(count_epimorphisms(&s3_counting_presentation(), &s3, budget)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderTwoTen {
    pub presentation_q2: String,
    pub over_q2: CentralReduction,
    pub witness_verified: bool,
    pub presentation_q2_i: String,
    pub over_q2_i: CentralReduction,
}

/// The order-2¹⁰ group against the pro-2 presentations of `Q_2` and `Q_2(i)`.
pub fn order_2_10(budget: Budget) -> Result<OrderTwoTen, LocalError> {
    let g = obstruction_group_2_10();
    let q2 = presentation_of_max_p_extension(&LocalFieldParams::q2())?;
    let q2i = presentation_of_max_p_extension(&LocalFieldParams::q2_i())?;
    let over_q2 = central_reduction_quotient_test(&q2, &g, budget)?;
    let witness_verified = over_q2.witness.as_ref().is_some_and(|w| verify_epimorphism(&q2, &g, w));
    let over_q2_i = central_reduction_quotient_test(&q2i, &g, budget)?;
    Ok(OrderTwoTen {
        presentation_q2: q2.to_string(),
        over_q2,
        witness_verified,
        presentation_q2_i: q2i.to_string(),
        over_q2_i,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RealizabilityRow {
    pub group: String,
    pub field: String,
    pub holds: bool,
    pub strategy: QuotientStrategy,
}

/// `(Z/p)³` over `Q_p(√p)` and `Q_p` for `p ∈ {3, 5}`; the order-2¹⁰ group
/// over `Q_2` and `Q_2(i)`.
pub fn local_realizability(budget: Budget) -> Result<Vec<RealizabilityRow>, LocalError> {
    let mut rows = Vec::new();
    for p in [3u64, 5] {
        let g = abelian(&[p as usize; 3])?;
        for (name, k) in [(format!("Q{p}(sqrt{p})"), LocalFieldParams::qp_sqrt_p(p)?), (format!("Q{p}"), LocalFieldParams::qp(p)?)] {
            let v = is_realizable_local(&g, &k, budget)?;
            rows.push(RealizabilityRow { group: format!("(Z/{p})^3"), field: name, holds: v.holds, strategy: v.strategy });
        }
    }
    let g = obstruction_group_2_10();
    for (name, k) in [("Q2", LocalFieldParams::q2()), ("Q2(i)", LocalFieldParams::q2_i())] {
        let v = is_realizable_local(&g, &k, budget)?;
        rows.push(RealizabilityRow { group: "order 2^10".into(), field: name.into(), holds: v.holds, strategy: v.strategy });
    }
    Ok(rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct LiedahlRow {
    pub group: String,
    pub field: String,
    pub verdict: LiedahlVerdict,
}

pub fn liedahl_fixtures() -> Result<Vec<LiedahlRow>, LiedahlError> {
    let cases = [((5, 25, 25, 6), [5u64, 100]), ((3, 9, 9, 4), [3, 36])];
    let mut rows = Vec::new();
    for ((m, n, i, t), conductors) in cases {
        let params = MetacyclicParams::new(m, n, i, t)?;
        let g = build_metacyclic(params)?;
        for c in conductors {
            let field = AbelianFieldSpec::cyclotomic(c)?;
            rows.push(LiedahlRow {
                group: format!("M({m},{n},{i},{t})"),
                field: field.to_string(),
                verdict: liedahl_condition(&g, &field)?,
            });
        }
    }
    Ok(rows)
}

pub fn metacyclic_identity(budget: Budget) -> Result<RelationSweep, LocalError> {
    metacyclic_relation_sweep(16, budget)
}

#[derive(Debug, Clone, Serialize)]
pub struct BrauerFixture {
    pub p: u64,
    /// Invariants after restriction at the `p` places over the split place.
    pub split_invariants: Vec<QZ>,
    /// Invariant after restriction at the place over the inert place.
    pub inert_invariant: QZ,
    pub restricted_index: u64,
    pub uniform: RestrictionImage,
    pub same_place: RestrictionImage,
}

fn place(label: &str, p: u64) -> PlaceId {
    PlaceId::new(label, p)
}

/// Invariant scaling under split and inert places, and restriction-image
/// membership for classes of index `p³`.
pub fn brauer_examples(p: u64) -> Result<BrauerFixture, BrauerError> {
    let p3 = p.pow(3) as i64;
    let c = make_class([(place("v1", p), QZ::new(1, p3)), (place("v2", p), QZ::new(-1, p3))])?;
    let split: Vec<Divisor> = (0..p).map(|i| Divisor::new(place(&format!("v1_{i}"), p), 1)).collect();
    let ext = ExtensionPlaceData::new(Some(p))
        .with_place(place("v1", p), split)?
        .with_place(place("v2", p), vec![Divisor::new(place("w2", p), p)])?;
    let r = restrict(&c, &ext)?;
    let split_invariants = (0..p).map(|i| r.invariant_at(&place(&format!("v1_{i}"), p))).collect();
    let inert_invariant = r.invariant_at(&place("w2", p));

    let top = make_class([(place("w1", p), QZ::new(1, p3)), (place("w2", p), QZ::new(-1, p3))])?;
    let uniform_ext = ExtensionPlaceData::new(Some(p3 as u64))
        .with_place(place("v1", p), vec![Divisor::new(place("w1", p), p3 as u64)])?
        .with_place(place("v2", p), vec![Divisor::new(place("w2", p), p3 as u64)])?;
    let uniform = in_restriction_image(&top, &uniform_ext)?;
    let same_ext = ExtensionPlaceData::new(None)
        .with_place(place("v", p), vec![Divisor::new(place("w1", p), 1), Divisor::new(place("w2", p), 1)])?;
    let same_place = in_restriction_image(&top, &same_ext)?;

    Ok(BrauerFixture { p, split_invariants, inert_invariant, restricted_index: r.index(), uniform, same_place })
}

pub fn diagram() -> LedgerReport {
    ledger_check(&ImplicationDiagram::standard(), &standard_ledger())
}

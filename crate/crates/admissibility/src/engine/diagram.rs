use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("condition id must be in 1..=9, got {0:?}")]
    BadCondition(String),
}

/// One of the eight admissibility conditions. Condition 9 is stored as 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ConditionId(u8);

impl ConditionId {
    pub const ALL: [ConditionId; 8] =
        [ConditionId(1), ConditionId(2), ConditionId(3), ConditionId(4), ConditionId(5), ConditionId(6), ConditionId(7), ConditionId(8)];

    pub fn new(id: u8) -> Result<Self, DiagramError> {
        match id {
            1..=8 => Ok(ConditionId(id)),
            9 => Ok(ConditionId(5)),
            _ => Err(DiagramError::BadCondition(id.to_string())),
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

impl FromStr for ConditionId {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        t.parse::<u8>().map_err(|_| DiagramError::BadCondition(s.to_string())).and_then(ConditionId::new)
    }
}

fn c(id: u8) -> ConditionId {
    ConditionId::new(id).expect("literal condition id")
}

pub type Implication = (ConditionId, ConditionId);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationDiagram {
    edges: BTreeSet<Implication>,
}

impl ImplicationDiagram {
    pub fn new(edges: impl IntoIterator<Item = Implication>) -> Self {
        ImplicationDiagram { edges: edges.into_iter().filter(|(a, b)| a != b).collect() }
    }

    pub fn standard() -> Self {
        let base = [(5, 4), (5, 6), (6, 3), (6, 7), (6, 8), (3, 2), (8, 2), (2, 1), (4, 1), (7, 1)];
        Self::new(base.iter().map(|&(a, b)| (c(a), c(b))))
    }

    pub fn edges(&self) -> &BTreeSet<Implication> {
        &self.edges
    }

    /// Transitive closure without the reflexive pairs.
    pub fn closure(&self) -> BTreeSet<Implication> {
        let mut reach: BTreeSet<Implication> = self.edges.clone();
        loop {
            let extra: Vec<Implication> = reach
                .iter()
                .flat_map(|&(a, b)| reach.range((b, c(1))..=(b, c(8))).map(move |&(_, d)| (a, d)))
                .filter(|&(a, d)| a != d && !reach.contains(&(a, d)))
                .collect();
            if extra.is_empty() {
                return reach;
            }
            reach.extend(extra);
        }
    }

    /// No two distinct conditions imply each other.
    pub fn is_dag(&self) -> bool {
        let cl = self.closure();
        cl.iter().all(|&(a, b)| !cl.contains(&(b, a)))
    }

    pub fn implies(&self, from: ConditionId, to: ConditionId) -> bool {
        from == to || self.closure().contains(&(from, to))
    }
}

/// Conditions an example is known to satisfy or violate; the rest are unknown.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub satisfied: BTreeSet<ConditionId>,
    pub violated: BTreeSet<ConditionId>,
}

impl Signature {
    pub fn new(satisfied: &[u8], violated: &[u8]) -> Result<Self, DiagramError> {
        let ids = |v: &[u8]| v.iter().map(|&i| ConditionId::new(i)).collect::<Result<BTreeSet<_>, _>>();
        Ok(Signature { satisfied: ids(satisfied)?, violated: ids(violated)? })
    }

    /// Satisfied conditions pushed forward along the closure, violated ones
    /// pulled back.
    pub fn propagate(&self, closure: &BTreeSet<Implication>) -> Signature {
        let mut out = self.clone();
        for &(a, b) in closure {
            if self.satisfied.contains(&a) {
                out.satisfied.insert(b);
            }
            if self.violated.contains(&b) {
                out.violated.insert(a);
            }
        }
        out
    }
}

/// A nilpotent group satisfies a condition iff each Sylow subgroup does.
pub fn combine_nilpotent(sylows: &[Signature]) -> Signature {
    let mut iter = sylows.iter();
    let Some(first) = iter.next() else {
        return Signature { satisfied: ConditionId::ALL.into_iter().collect(), violated: BTreeSet::new() };
    };
    let mut out = first.clone();
    for s in iter {
        out.satisfied = out.satisfied.intersection(&s.satisfied).copied().collect();
        out.violated.extend(s.violated.iter().copied());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerExample {
    pub name: String,
    pub setting: String,
    pub signature: Signature,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SeparationLedger {
    pub examples: Vec<LedgerExample>,
}

impl SeparationLedger {
    pub fn push(&mut self, name: &str, setting: &str, signature: Signature) {
        self.examples.push(LedgerExample { name: name.into(), setting: setting.into(), signature });
    }
}

/// The counterexamples as stated, before propagation.
pub fn standard_ledger() -> SeparationLedger {
    let sig = |s: &[u8], v: &[u8]| Signature::new(s, v).expect("literal ids");
    let mut l = SeparationLedger::default();
    l.push("A", "G semidirect G, not realizable over Q_p(sqrt p)", sig(&[4, 7], &[2]));
    l.push("B", "G = F_p^p over K = Q(i)", sig(&[8], &[7, 3]));
    l.push("C", "(Z/p)^3 over K = Q(sqrt p), M = Q(sqrt p, i)", sig(&[3], &[7, 8]));
    l.push("C-remark", "(Z/p)^3 over K = Q(sqrt p), wild", sig(&[3], &[4]));
    l.push("D", "K = Q(sqrt p), M cyclic of degree p", sig(&[4], &[7]));
    l.push("E", "M(p,p^2,0,p+1), K = Q(mu_p), M = Q(mu_4p^2)", sig(&[6], &[4]));
    l.push("cyclic", "any cyclic group over any number field", sig(&[1, 2, 3, 4, 5, 6, 7, 8], &[]));
    l
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inconsistency {
    pub example: String,
    pub source: ConditionId,
    pub target: ConditionId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerReport {
    pub closure: Vec<Implication>,
    pub is_dag: bool,
    pub inconsistencies: Vec<Inconsistency>,
    /// Each non-closure pair with the first example refuting it.
    pub refuted: BTreeMap<String, String>,
    pub unrefuted: Vec<Implication>,
}

impl LedgerReport {
    pub fn passes(&self) -> bool {
        self.is_dag && self.inconsistencies.is_empty() && self.unrefuted.is_empty()
    }
}

fn pair_key((a, b): Implication) -> String {
    format!("{}=>{}", a.get(), b.get())
}

pub fn ledger_check(diagram: &ImplicationDiagram, ledger: &SeparationLedger) -> LedgerReport {
    let closure = diagram.closure();
    let propagated: Vec<(&str, Signature)> =
        ledger.examples.iter().map(|e| (e.name.as_str(), e.signature.propagate(&closure))).collect();

    let mut inconsistencies = Vec::new();
    for (name, sig) in &propagated {
        for &a in &sig.satisfied {
            for &b in &sig.violated {
                if diagram.implies(a, b) {
                    inconsistencies.push(Inconsistency { example: name.to_string(), source: a, target: b });
                }
            }
        }
    }

    let mut refuted = BTreeMap::new();
    let mut unrefuted = Vec::new();
    for a in ConditionId::ALL {
        for b in ConditionId::ALL {
            if a == b || closure.contains(&(a, b)) {
                continue;
            }
            match propagated.iter().find(|(_, s)| s.satisfied.contains(&a) && s.violated.contains(&b)) {
                Some((name, _)) => {
                    refuted.insert(pair_key((a, b)), name.to_string());
                }
                None => unrefuted.push((a, b)),
            }
        }
    }

    LedgerReport { closure: closure.into_iter().collect(), is_dag: diagram.is_dag(), inconsistencies, refuted, unrefuted }
}

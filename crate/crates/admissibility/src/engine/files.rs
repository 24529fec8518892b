//! JSON inputs for the certificate checks.
//!
//! Groups are written in the short or JSON group-spec syntax; subgroups as a
//! name (`whole`, `trivial`, `center`, `derived`, `sylow:P`) or a list of
//! generating element indices.

use std::collections::BTreeMap;

use serde::Deserialize;
use thiserror::Error;

use super::{
    AdmissibilityCertificate, CertificateEntry, ConditionId, DiagramError, Distinctness, LocalFact, PrimeData,
    RealizedSubgroup, SeparationLedger, Signature, TransferInput,
};
use crate::brauer::PlaceId;
use crate::group::{FiniteGroup, GroupError, GroupSpec, Subgroup};
use crate::liedahl::{AbelianFieldSpec, LiedahlError};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("malformed input: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Liedahl(#[from] LiedahlError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("unknown subgroup {0:?}")]
    Subgroup(String),
    #[error("transfer input needs either `group` and `top` or `group_order` and `primes`")]
    TransferShape,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum SubgroupRef {
    Named(String),
    Generators(Vec<usize>),
}

impl SubgroupRef {
    pub fn resolve(&self, g: &FiniteGroup) -> Result<Subgroup, FileError> {
        match self {
            SubgroupRef::Generators(gens) => {
                if let Some(&bad) = gens.iter().find(|&&x| x >= g.order()) {
                    return Err(FileError::Subgroup(format!("element {bad}")));
                }
                Ok(g.subgroup_generated(gens))
            }
            SubgroupRef::Named(name) => match name.as_str() {
                "whole" => Ok(g.whole()),
                "trivial" => Ok(g.trivial_subgroup()),
                "center" => Ok(g.center()),
                "derived" => Ok(g.commutator_subgroup()),
                other => {
                    let p = other
                        .strip_prefix("sylow:")
                        .and_then(|p| p.trim().parse::<u64>().ok())
                        .ok_or_else(|| FileError::Subgroup(other.to_string()))?;
                    Ok(g.sylow_subgroup(p)?)
                }
            },
        }
    }
}

fn build_group(spec: &str) -> Result<FiniteGroup, FileError> {
    Ok(GroupSpec::parse(spec)?.build()?)
}

#[derive(Debug, Clone, Deserialize)]
pub struct PlaceFacts {
    pub label: String,
    pub p: u64,
    #[serde(default)]
    pub subgroups: Vec<SubgroupRef>,
    /// Subgroups realizable inside the tame part.
    #[serde(default)]
    pub tame: Vec<SubgroupRef>,
}

/// Local realizability facts for one group.
#[derive(Debug, Clone, Deserialize)]
pub struct FactsFile {
    pub group: String,
    /// Require distinct places only within each prime's pair.
    #[serde(default)]
    pub pairwise: bool,
    pub places: Vec<PlaceFacts>,
}

impl FactsFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn group(&self) -> Result<FiniteGroup, FileError> {
        build_group(&self.group)
    }

    pub fn distinctness(&self) -> Distinctness {
        if self.pairwise {
            Distinctness::Pairwise
        } else {
            Distinctness::AllDistinct
        }
    }

    pub fn facts(&self, g: &FiniteGroup) -> Result<Vec<LocalFact>, FileError> {
        self.places
            .iter()
            .map(|pf| {
                let mut realizable = Vec::new();
                for (refs, tame) in [(&pf.subgroups, false), (&pf.tame, true)] {
                    for r in refs {
                        realizable.push(RealizedSubgroup { subgroup: r.resolve(g)?, tame });
                    }
                }
                Ok(LocalFact::new(PlaceId::new(pf.label.clone(), pf.p), realizable))
            })
            .collect()
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct CertificateEntryFile {
    pub prime: u64,
    pub places: [PlaceId; 2],
    pub subgroups: [SubgroupRef; 2],
}

#[derive(Debug, Clone, Deserialize)]
pub struct CertificateFile {
    pub group: String,
    pub entries: Vec<CertificateEntryFile>,
}

impl CertificateFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn group(&self) -> Result<FiniteGroup, FileError> {
        build_group(&self.group)
    }

    pub fn certificate(&self, g: &FiniteGroup) -> Result<AdmissibilityCertificate, FileError> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                Ok(CertificateEntry {
                    prime: e.prime,
                    places: e.places.clone(),
                    subgroups: [e.subgroups[0].resolve(g)?, e.subgroups[1].resolve(g)?],
                })
            })
            .collect::<Result<_, FileError>>()?;
        Ok(AdmissibilityCertificate { entries })
    }
}

/// Transfer hypotheses. Per-prime data is either given directly or derived
/// from `group` and the abelian top field `top`.
#[derive(Debug, Clone, Deserialize)]
pub struct TransferFile {
    #[serde(default)]
    pub group: Option<String>,
    #[serde(default)]
    pub top: Option<String>,
    /// Number of places of the top field above each prime; default one.
    #[serde(default)]
    pub divisors: BTreeMap<u64, u32>,
    #[serde(default)]
    pub group_order: Option<u64>,
    #[serde(default)]
    pub primes: Option<Vec<PrimeData>>,
    pub admissible_over_base: bool,
    pub gn_over_top: bool,
    pub sensitive: bool,
}

impl TransferFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn input(&self) -> Result<TransferInput, FileError> {
        let (group_order, primes) = match (&self.group, &self.top, self.group_order, &self.primes) {
            (Some(g), Some(top), _, _) => {
                let g = build_group(g)?;
                let top: AbelianFieldSpec = top.parse()?;
                let counts: Vec<(u64, u32)> = self.divisors.iter().map(|(&p, &c)| (p, c)).collect();
                (g.order() as u64, super::prime_data_for(&g, &top, &counts)?)
            }
            (_, _, Some(order), Some(primes)) => (order, primes.clone()),
            _ => return Err(FileError::TransferShape),
        };
        Ok(TransferInput {
            group_order,
            admissible_over_base: self.admissible_over_base,
            gn_over_top: self.gn_over_top,
            sensitive: self.sensitive,
            primes,
        })
    }
}

#[derive(Debug, Clone, Deserialize)]
struct LedgerEntryFile {
    name: String,
    #[serde(default)]
    setting: String,
    #[serde(default)]
    satisfied: Vec<u8>,
    #[serde(default)]
    violated: Vec<u8>,
}

#[derive(Debug, Clone, Deserialize)]
struct LedgerFileShape {
    examples: Vec<LedgerEntryFile>,
}

/// Reads `{"examples": [{"name", "setting", "satisfied": [..], "violated": [..]}]}`.
pub fn parse_separation_ledger(text: &str) -> Result<SeparationLedger, FileError> {
    let shape: LedgerFileShape = serde_json::from_str(text)?;
    let mut ledger = SeparationLedger::default();
    for e in shape.examples {
        ledger.push(&e.name, &e.setting, Signature::new(&e.satisfied, &e.violated)?);
    }
    Ok(ledger)
}

/// Parses `"5=>4"` or `"(5)=>(4)"`.
pub fn parse_implication(text: &str) -> Result<(ConditionId, ConditionId), FileError> {
    let (a, b) = text.split_once("=>").ok_or_else(|| DiagramError::BadCondition(text.to_string()))?;
    Ok((a.parse()?, b.parse()?))
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::prime_divisors;
use crate::group::FiniteGroup;
use crate::liedahl::{liedahl_condition, AbelianFieldSpec, LiedahlError};

/// What is known about one prime `p | |G|` relative to the top field `M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeData {
    pub p: u64,
    /// Number of places of `M` above `p`.
    pub divisors_in_top: u32,
    pub sylow_metacyclic: bool,
    /// Liedahl's condition for the Sylow subgroup over `M`; `None` if unknown.
    pub liedahl_over_top: Option<bool>,
}

/// Inputs to the extension-field transfer, all supplied by the caller.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferInput {
    pub group_order: u64,
    pub admissible_over_base: bool,
    pub gn_over_top: bool,
    pub sensitive: bool,
    pub primes: Vec<PrimeData>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "route", rename_all = "kebab-case")]
pub enum PrimeRoute {
    /// More than one place of `M` above `p`.
    Divisors { count: u32 },
    /// Unique place above `p`; the Sylow subgroup is metacyclic and meets
    /// Liedahl's condition over `M`.
    MetacyclicLiedahl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Failure {
    NotMetacyclic { p: u64 },
    LiedahlFails { p: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum OutOfScope {
    EvenOrder,
    NotAdmissibleOverBase,
    NoGnProperty,
    SensitiveExtension,
    /// Prime data does not match the primes dividing `|G|`.
    PrimeMismatch { expected: Vec<u64>, given: Vec<u64> },
    LiedahlUnknown { p: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum TransferVerdict {
    Admissible { routes: Vec<(u64, PrimeRoute)> },
    NotAdmissible { failure: Failure },
    NotApplicable { reason: OutOfScope },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::NotMetacyclic { p } => write!(f, "unique divisor of {p} and a non-metacyclic Sylow {p}-subgroup"),
            Failure::LiedahlFails { p } => write!(f, "unique divisor of {p} and Liedahl's condition fails for the Sylow {p}-subgroup"),
        }
    }
}

impl fmt::Display for OutOfScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutOfScope::EvenOrder => write!(f, "even group order"),
            OutOfScope::NotAdmissibleOverBase => write!(f, "not admissible over the base field"),
            OutOfScope::NoGnProperty => write!(f, "GN-property over the top field not asserted"),
            OutOfScope::SensitiveExtension => write!(f, "sensitive extension"),
            OutOfScope::PrimeMismatch { expected, given } => write!(f, "prime data for {given:?}, group order needs {expected:?}"),
            OutOfScope::LiedahlUnknown { p } => write!(f, "Liedahl's condition at {p} not supplied"),
        }
    }
}

/// Admissibility over `M` of an odd-order group admissible over `K`, when
/// `M/K` is non-sensitive and the group has the GN-property over `M`. Outside
/// those hypotheses the verdict says so instead of guessing.
pub fn extension_admissibility_verdict(input: &TransferInput) -> TransferVerdict {
    let out = |reason| TransferVerdict::NotApplicable { reason };
    if input.group_order % 2 == 0 {
        return out(OutOfScope::EvenOrder);
    }
    if !input.admissible_over_base {
        return out(OutOfScope::NotAdmissibleOverBase);
    }
    if !input.gn_over_top {
        return out(OutOfScope::NoGnProperty);
    }
    if input.sensitive {
        return out(OutOfScope::SensitiveExtension);
    }
    let expected = prime_divisors(input.group_order);
    let mut given: Vec<u64> = input.primes.iter().map(|d| d.p).collect();
    given.sort_unstable();
    if given != expected {
        return out(OutOfScope::PrimeMismatch { expected, given });
    }
    let mut primes = input.primes.clone();
    primes.sort_by_key(|d| d.p);
    let mut routes = Vec::new();
    for d in &primes {
        let route = if d.divisors_in_top > 1 {
            PrimeRoute::Divisors { count: d.divisors_in_top }
        } else if !d.sylow_metacyclic {
            return TransferVerdict::NotAdmissible { failure: Failure::NotMetacyclic { p: d.p } };
        } else {
            match d.liedahl_over_top {
                Some(true) => PrimeRoute::MetacyclicLiedahl,
                Some(false) => return TransferVerdict::NotAdmissible { failure: Failure::LiedahlFails { p: d.p } },
                None => return out(OutOfScope::LiedahlUnknown { p: d.p }),
            }
        };
        routes.push((d.p, route));
    }
    TransferVerdict::Admissible { routes }
}

/// Fills in [`PrimeData`] from the group, with the top field abelian over `Q`
/// and divisor counts supplied per prime (missing primes count as one).
pub fn prime_data_for(
    g: &FiniteGroup,
    top: &AbelianFieldSpec,
    divisor_counts: &[(u64, u32)],
) -> Result<Vec<PrimeData>, LiedahlError> {
    g.sylow_system()
        .into_iter()
        .map(|(p, s)| {
            let (sylow, _) = g.subgroup_as_group(&s).expect("own subgroup");
            let (sylow_metacyclic, liedahl_over_top) = match liedahl_condition(&sylow, top) {
                Ok(v) => (true, Some(v.holds)),
                Err(LiedahlError::NotMetacyclic) => (false, None),
                Err(e) => return Err(e),
            };
            let divisors_in_top = divisor_counts.iter().find(|(q, _)| *q == p).map_or(1, |&(_, c)| c);
            Ok(PrimeData { p, divisors_in_top, sylow_metacyclic, liedahl_over_top })
        })
        .collect()
}

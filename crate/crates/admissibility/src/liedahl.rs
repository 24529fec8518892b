//! Liedahl's condition for metacyclic p-groups over abelian number fields.
//!
//! An abelian field `K` is the fixed field of a subgroup `H ≤ (Z/f)^×` inside
//! `Q(μ_f)`. For `M(m,n,i,t)` the condition asks for a presentation whose
//! automorphism `σ_{t,n}: ζ ↦ ζ^t` of `Q(μ_n)` fixes `K ∩ Q(μ_n)`, which
//! happens exactly when `t mod n` lies in the image of `H` described by
//! [`cyclotomic_intersection`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::{gcd, lcm};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{euler_phi, units_mod};
use crate::group::{enumerate_metacyclic_presentations, FiniteGroup, MetacyclicParams};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiedahlError {
    #[error("{0} is not a unit modulo the conductor {1}")]
    NotUnit(u64, u64),
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("{0} is not a squarefree integer other than 0 and 1")]
    BadQuadratic(i64),
    #[error("the group is not metacyclic")]
    NotMetacyclic,
    #[error("the group has order {0}, not a prime power")]
    NotPGroup(usize),
    #[error("the group is not solvable")]
    NotSolvable,
    #[error("cannot parse field {0:?}")]
    Parse(String),
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
}

/// The subfield of `Q(μ_conductor)` fixed by `subgroup`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianFieldSpec {
    pub conductor: u64,
    /// All elements of the fixing subgroup, sorted.
    pub subgroup: Vec<u64>,
}

impl AbelianFieldSpec {
    /// Fixed field of the subgroup generated by `generators`.
    pub fn new(conductor: u64, generators: &[u64]) -> Result<Self, LiedahlError> {
        if conductor == 0 {
            return Err(LiedahlError::ZeroConductor);
        }
        let reduce = |a: u64| if conductor == 1 { 0 } else { a % conductor };
        let mut members = BTreeSet::from([reduce(1)]);
        for &g in generators {
            let g = reduce(g);
            if gcd(g, conductor) != 1 && conductor > 1 {
                return Err(LiedahlError::NotUnit(g, conductor));
            }
            let mut frontier: Vec<u64> = members.iter().copied().collect();
            while let Some(x) = frontier.pop() {
                let y = reduce(x * g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(AbelianFieldSpec { conductor, subgroup: members.into_iter().collect() })
    }

    fn from_members(conductor: u64, members: impl IntoIterator<Item = u64>) -> Self {
        let subgroup: BTreeSet<u64> = members.into_iter().collect();
        AbelianFieldSpec { conductor, subgroup: subgroup.into_iter().collect() }
    }

    pub fn rationals() -> Self {
        AbelianFieldSpec { conductor: 1, subgroup: vec![0] }
    }

    /// `Q(μ_m)`.
    pub fn cyclotomic(m: u64) -> Result<Self, LiedahlError> {
        Self::new(m, &[])
    }

    /// `Q(i)`.
    pub fn gaussian() -> Self {
        Self::quadratic(-1).expect("Q(i)")
    }

    /// `Q(√d)` for squarefree `d ≠ 0, 1`: the kernel of the Kronecker character
    /// of the field discriminant.
    pub fn quadratic(d: i64) -> Result<Self, LiedahlError> {
        if d == 0 || d == 1 || !is_squarefree(d.unsigned_abs()) {
            return Err(LiedahlError::BadQuadratic(d));
        }
        let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
        let f = disc.unsigned_abs();
        Ok(Self::from_members(f, units_mod(f).into_iter().filter(|&a| kronecker(disc, a) == 1)))
    }

    /// Compositum of two abelian fields.
    pub fn compositum(&self, other: &AbelianFieldSpec) -> Self {
        let l = lcm(self.conductor, other.conductor);
        Self::from_members(
            l,
            units_mod(l).into_iter().filter(|&a| self.fixes_class(a) && other.fixes_class(a)),
        )
    }

    /// Whether the automorphism `ζ ↦ ζ^a` of `Q(μ_L)` (any `L` divisible by
    /// the conductor) fixes this field.
    pub fn fixes_class(&self, a: u64) -> bool {
        self.conductor == 1 || self.subgroup.binary_search(&(a % self.conductor)).is_ok()
    }

    /// `[K : Q]`
    pub fn degree(&self) -> u64 {
        euler_phi(self.conductor) / self.subgroup.len() as u64
    }
}

impl fmt::Display for AbelianFieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(μ_{})^<", self.conductor)?;
        for (k, a) in self.subgroup.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ">")
    }
}

impl FromStr for AbelianFieldSpec {
    type Err = LiedahlError;

    /// `rationals`, `gaussian`, `cyclotomic:m`, `quadratic:d`,
    /// `fixed:f:h1,h2` (fixed field of `⟨h1,h2⟩ ≤ (Z/f)^×`), and composita
    /// joined with `+`.
    fn from_str(text: &str) -> Result<Self, LiedahlError> {
        let bad = || LiedahlError::Parse(text.to_string());
        let mut acc: Option<AbelianFieldSpec> = None;
        for part in text.split('+') {
            let part = part.trim();
            let (name, arg) = part.split_once(':').unwrap_or((part, ""));
            let field = match name.trim() {
                "rationals" | "Q" => Self::rationals(),
                "gaussian" | "Q(i)" => Self::gaussian(),
                "cyclotomic" => Self::cyclotomic(arg.trim().parse().map_err(|_| bad())?)?,
                "quadratic" => Self::quadratic(arg.trim().parse().map_err(|_| bad())?)?,
                "fixed" => {
                    let (f, gens) = arg.split_once(':').unwrap_or((arg, ""));
                    let gens: Vec<u64> = gens
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(|s| s.trim().parse().map_err(|_| bad()))
                        .collect::<Result<_, _>>()?;
                    Self::new(f.trim().parse().map_err(|_| bad())?, &gens)?
                }
                _ => return Err(bad()),
            };
            acc = Some(match acc {
                None => field,
                Some(a) => a.compositum(&field),
            });
        }
        acc.ok_or_else(bad)
    }
}

fn is_squarefree(n: u64) -> bool {
    crate::arith::factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Kronecker symbol `(a / n)` for `n ≥ 1`.
pub fn kronecker(a: i64, n: u64) -> i8 {
    let mut n = n;
    let mut result = 1i8;
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        n >>= twos;
        if matches!(a.rem_euclid(8), 3 | 5) && twos % 2 == 1 {
            result = -result;
        }
    }
    // Jacobi symbol for odd n.
    let mut a = a.rem_euclid(n as i64) as u64;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// The subgroup of `(Z/n)^×` fixing `K ∩ Q(μ_n)`: the image of
/// `{a ∈ (Z/lcm(f,n))^× : a mod f ∈ H}` under reduction mod `n`.
pub fn cyclotomic_intersection(k: &AbelianFieldSpec, n: u64) -> Vec<u64> {
    let l = lcm(k.conductor, n);
    let reduce = |a: u64| if n == 1 { 0 } else { a % n };
    let image: BTreeSet<u64> =
        units_mod(l).into_iter().filter(|&a| k.fixes_class(a)).map(reduce).collect();
    image.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiedahlVerdict {
    pub holds: bool,
    /// First presentation, in `(m, n, i, t)` order, meeting the condition.
    pub witness: Option<MetacyclicParams>,
    /// Number of presentations examined; all of them when the verdict is false.
    pub presentations_scanned: usize,
    pub presentations_total: usize,
}

fn condition_holds(p: &MetacyclicParams, k: &AbelianFieldSpec) -> bool {
    let h = cyclotomic_intersection(k, p.n);
    let t = if p.n == 1 { 0 } else { p.t % p.n };
    h.binary_search(&t).is_ok()
}

/// Decides Liedahl's condition for the metacyclic p-group `g` over `k`.
pub fn liedahl_condition(g: &FiniteGroup, k: &AbelianFieldSpec) -> Result<LiedahlVerdict, LiedahlError> {
    if g.order() > 1 && g.p_group_prime().is_none() {
        return Err(LiedahlError::NotPGroup(g.order()));
    }
    let presentations = enumerate_metacyclic_presentations(g);
    if presentations.is_empty() {
        return Err(LiedahlError::NotMetacyclic);
    }
    Ok(liedahl_over_presentations(&presentations, k))
}

/// The condition evaluated on an explicit list of presentations of one group.
pub fn liedahl_over_presentations(presentations: &[MetacyclicParams], k: &AbelianFieldSpec) -> LiedahlVerdict {
    let hit = presentations.iter().position(|p| condition_holds(p, k));
    LiedahlVerdict {
        holds: hit.is_some(),
        witness: hit.map(|i| presentations[i]),
        presentations_scanned: hit.map_or(presentations.len(), |i| i + 1),
        presentations_total: presentations.len(),
    }
}

/// Checks a claimed witness: it must present `g` and meet the condition.
pub fn verify_witness(g: &FiniteGroup, k: &AbelianFieldSpec, witness: &MetacyclicParams) -> bool {
    condition_holds(witness, k)
        && crate::group::build_metacyclic(*witness).is_ok_and(|m| m.is_isomorphic(g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SylowStatus {
    Liedahl(LiedahlVerdict),
    NotMetacyclic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TameVerdict {
    pub holds: bool,
    pub per_prime: Vec<(u64, SylowStatus)>,
    /// First prime whose Sylow subgroup fails.
    pub failing_prime: Option<u64>,
}

/// Tame admissibility of a solvable group from its Sylow subgroups: every
/// Sylow subgroup must be metacyclic and satisfy Liedahl's condition.
pub fn tame_admissibility_criterion(
    sylows: &[(u64, FiniteGroup)],
    k: &AbelianFieldSpec,
) -> Result<TameVerdict, LiedahlError> {
    let mut per_prime = Vec::new();
    let mut failing_prime = None;
    for (p, s) in sylows {
        let status = match liedahl_condition(s, k) {
            Ok(v) => SylowStatus::Liedahl(v),
            Err(LiedahlError::NotMetacyclic) => SylowStatus::NotMetacyclic,
            Err(e) => return Err(e),
        };
        let ok = matches!(&status, SylowStatus::Liedahl(v) if v.holds);
        if !ok && failing_prime.is_none() {
            failing_prime = Some(*p);
        }
        per_prime.push((*p, status));
    }
    Ok(TameVerdict { holds: failing_prime.is_none(), per_prime, failing_prime })
}

/// [`tame_admissibility_criterion`] with the Sylow subgroups computed from `g`.
pub fn tame_admissibility(g: &FiniteGroup, k: &AbelianFieldSpec) -> Result<TameVerdict, LiedahlError> {
    if !g.is_solvable() {
        return Err(LiedahlError::NotSolvable);
    }
    let sylows: Vec<(u64, FiniteGroup)> = g
        .sylow_system()
        .into_iter()
        .map(|(p, s)| (p, g.subgroup_as_group(&s).expect("own subgroup").0))
        .collect();
    tame_admissibility_criterion(&sylows, k)
}

//! Brauer classes of number fields recorded by their local invariants.
//!
//! A class is a finitely supported map from places to `Q/Z` whose values sum
//! to zero. Over a number field index and exponent agree, so the index is
//! the lcm of the invariant denominators. Archimedean places (residue
//! characteristic 0) may carry invariants but are left out of the index.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_integer::{gcd, lcm, Integer};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{factorize, p_part, valuation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BrauerError {
    #[error("invariants sum to {0}, not 0 mod 1")]
    NonzeroSum(QZ),
    #[error("place {0:?} listed twice")]
    DuplicatePlace(String),
    #[error("no divisor data for place {0:?}")]
    MissingPlace(String),
    #[error("place {0:?} of the top field lies over no listed base place")]
    Uncovered(String),
    #[error("local degrees must be positive (place {0:?})")]
    BadDegree(String),
    #[error("divisors of {place:?} have total degree {total}, expected {expected}")]
    DegreeSum { place: String, total: u64, expected: u64 },
    #[error("divisor {0:?} has no tame data")]
    NoTameData(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// An element of `Q/Z`, kept reduced in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QZ(Ratio<i64>);

impl QZ {
    pub const ZERO: QZ = QZ(Ratio::new_raw(0, 1));

    pub fn new(numer: i64, denom: i64) -> QZ {
        QZ::from_ratio(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<i64>) -> QZ {
        QZ(r - r.floor())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    /// Order in `Q/Z`.
    pub fn order(&self) -> u64 {
        self.denom() as u64
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }
}

impl Add for QZ {
    type Output = QZ;
    fn add(self, o: QZ) -> QZ {
        QZ::from_ratio(self.0 + o.0)
    }
}

impl Neg for QZ {
    type Output = QZ;
    fn neg(self) -> QZ {
        QZ::from_ratio(-self.0)
    }
}

impl Mul<QZ> for u64 {
    type Output = QZ;
    fn mul(self, x: QZ) -> QZ {
        QZ::from_ratio(x.0 * Ratio::from_integer(self as i64))
    }
}

impl std::iter::Sum for QZ {
    fn sum<I: Iterator<Item = QZ>>(it: I) -> QZ {
        it.fold(QZ::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for QZ {
    type Err = BrauerError;
    fn from_str(s: &str) -> Result<QZ, BrauerError> {
        let bad = || BrauerError::Parse(s.to_string());
        let s = s.trim();
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(QZ::new(n, d))
    }
}

impl Serialize for QZ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QZ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<QZ, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A place of a number field: a label and its residue characteristic
/// (0 for archimedean places).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlaceId {
    pub label: String,
    #[serde(rename = "p")]
    pub residue_char: u64,
}

impl PlaceId {
    pub fn new(label: impl Into<String>, residue_char: u64) -> Self {
        PlaceId { label: label.into(), residue_char }
    }

    pub fn is_archimedean(&self) -> bool {
        self.residue_char == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct BrauerClass {
    invariants: BTreeMap<PlaceId, QZ>,
}

impl BrauerClass {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Nonzero local invariants, by place.
    pub fn invariants(&self) -> &BTreeMap<PlaceId, QZ> {
        &self.invariants
    }

    pub fn invariant_at(&self, place: &PlaceId) -> QZ {
        self.invariants.get(place).copied().unwrap_or(QZ::ZERO)
    }

    pub fn invariant_sum(&self) -> QZ {
        self.invariants.values().copied().sum()
    }

    /// Exponent, equal to the index: lcm of denominators at finite places.
    pub fn index(&self) -> u64 {
        self.invariants.iter().filter(|(v, _)| !v.is_archimedean()).fold(1, |acc, (_, x)| lcm(acc, x.order()))
    }

    fn from_map(map: BTreeMap<PlaceId, QZ>) -> Result<Self, BrauerError> {
        let c = BrauerClass { invariants: map.into_iter().filter(|(_, x)| !x.is_zero()).collect() };
        let s = c.invariant_sum();
        if s.is_zero() {
            Ok(c)
        } else {
            Err(BrauerError::NonzeroSum(s))
        }
    }
}

impl Add for &BrauerClass {
    type Output = BrauerClass;
    fn add(self, o: &BrauerClass) -> BrauerClass {
        let mut map = self.invariants.clone();
        for (v, x) in &o.invariants {
            let e = map.entry(v.clone()).or_insert(QZ::ZERO);
            *e = *e + *x;
        }
        BrauerClass::from_map(map).expect("sum of classes has zero invariant sum")
    }
}

impl Neg for &BrauerClass {
    type Output = BrauerClass;
    fn neg(self) -> BrauerClass {
        BrauerClass { invariants: self.invariants.iter().map(|(v, x)| (v.clone(), -*x)).collect() }
    }
}

impl fmt::Display for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (v, x)) in self.invariants.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {x}", v.label)?;
        }
        write!(f, "}}")
    }
}

/// Builds a class from local invariants, rejecting a nonzero sum.
pub fn make_class(support: impl IntoIterator<Item = (PlaceId, QZ)>) -> Result<BrauerClass, BrauerError> {
    let mut map = BTreeMap::new();
    let mut labels = BTreeSet::new();
    for (v, x) in support {
        if !labels.insert(v.label.clone()) {
            return Err(BrauerError::DuplicatePlace(v.label));
        }
        map.insert(v, x);
    }
    BrauerClass::from_map(map)
}

/// A place `w` of the top field over a base place, with `[M_w : K_v]` and
/// optionally its ramification index and residue degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisor {
    pub place: PlaceId,
    pub degree: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tame: Option<(u64, u64)>,
}

impl Divisor {
    pub fn new(place: PlaceId, degree: u64) -> Self {
        Divisor { place, degree, tame: None }
    }

    /// Local degree `e·f`.
    pub fn with_ramification(place: PlaceId, e: u64, f: u64) -> Self {
        Divisor { place, degree: e * f, tame: Some((e, f)) }
    }

    /// `[M_w ∩ tame(K_v) : K_v] = f · (prime-to-p part of e)`.
    pub fn tame_degree(&self) -> Option<u64> {
        let (e, f) = self.tame?;
        let p = self.place.residue_char;
        Some(if p == 0 { e * f } else { f * (e / p_part(e, p)) })
    }
}

/// How the places of a base field decompose in an extension.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ExtensionPlaceData {
    /// `[M : K]`, when known; each base place's local degrees must sum to it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u64>,
    pub places: BTreeMap<String, (PlaceId, Vec<Divisor>)>,
}

impl ExtensionPlaceData {
    pub fn new(degree: Option<u64>) -> Self {
        ExtensionPlaceData { degree, places: BTreeMap::new() }
    }

    pub fn add_place(&mut self, base: PlaceId, divisors: Vec<Divisor>) -> Result<(), BrauerError> {
        if divisors.is_empty() {
            return Err(BrauerError::MissingPlace(base.label));
        }
        if let Some(d) = divisors.iter().find(|d| d.degree == 0 || d.tame.is_some_and(|(e, f)| e * f != d.degree)) {
            return Err(BrauerError::BadDegree(d.place.label.clone()));
        }
        if let Some(expected) = self.degree {
            let total: u64 = divisors.iter().map(|d| d.degree).sum();
            if total != expected {
                return Err(BrauerError::DegreeSum { place: base.label, total, expected });
            }
        }
        if self.places.contains_key(&base.label) {
            return Err(BrauerError::DuplicatePlace(base.label));
        }
        self.places.insert(base.label.clone(), (base, divisors));
        Ok(())
    }

    pub fn with_place(mut self, base: PlaceId, divisors: Vec<Divisor>) -> Result<Self, BrauerError> {
        self.add_place(base, divisors)?;
        Ok(self)
    }

    /// `d_v = gcd_w [M_w : K_v]` per listed base place.
    pub fn local_gcds(&self) -> Vec<u64> {
        self.places.values().map(|(_, ds)| ds.iter().fold(0, |g, d| gcd(g, d.degree))).collect()
    }

    /// The same with each local degree replaced by its tame part.
    pub fn tame_local_gcds(&self) -> Result<Vec<u64>, BrauerError> {
        self.places
            .values()
            .map(|(_, ds)| {
                ds.iter().try_fold(0, |g, d| {
                    d.tame_degree().map(|t| gcd(g, t)).ok_or_else(|| BrauerError::NoTameData(d.place.label.clone()))
                })
            })
            .collect()
    }
}

/// Restriction to the top field: `inv_w = [M_w : K_v] · inv_v`.
pub fn restrict(c: &BrauerClass, ext: &ExtensionPlaceData) -> Result<BrauerClass, BrauerError> {
    let mut map = BTreeMap::new();
    for v in c.invariants.keys() {
        if !ext.places.contains_key(&v.label) {
            return Err(BrauerError::MissingPlace(v.label.clone()));
        }
    }
    for (base, divisors) in ext.places.values() {
        let x = c.invariant_at(base);
        for d in divisors {
            map.insert(d.place.clone(), d.degree * x);
        }
    }
    BrauerClass::from_map(map)
}

/// Largest element order in `{x ∈ ⊕_v (1/d_v)Z/Z : Σ x_v = 0}`: for each
/// prime `ℓ`, `ℓ` to the second-largest `ℓ`-adic valuation among the `d_v`.
pub fn max_order_in_relative_brauer(degrees: &[u64]) -> u64 {
    let primes: BTreeSet<u64> = degrees.iter().flat_map(|&d| factorize(d).into_iter().map(|(p, _)| p)).collect();
    primes
        .into_iter()
        .map(|l| {
            let mut vals: Vec<u32> = degrees.iter().map(|&d| valuation(d, l)).collect();
            vals.sort_unstable_by(|a, b| b.cmp(a));
            l.pow(vals.get(1).copied().unwrap_or(0))
        })
        .product()
}

/// Exhaustive version of [`max_order_in_relative_brauer`].
pub fn max_order_brute_force(degrees: &[u64]) -> u64 {
    let l = degrees.iter().fold(1, |a, &d| lcm(a, d));
    // x_v = k_v / d_v, written over the common denominator l.
    let mut best = 1;
    let mut ks = vec![0u64; degrees.len()];
    loop {
        let sum: u64 = ks.iter().zip(degrees).map(|(&k, &d)| k * (l / d)).sum();
        if sum % l == 0 {
            let order = ks.iter().zip(degrees).fold(1, |acc, (&k, &d)| lcm(acc, d / gcd(k, d)));
            best = best.max(order);
        }
        let mut i = 0;
        loop {
            if i == ks.len() {
                return best;
            }
            ks[i] += 1;
            if ks[i] < degrees[i] {
                break;
            }
            ks[i] = 0;
            i += 1;
        }
    }
}

/// Whether the relative Brauer group has an element of order `group_order`.
pub fn is_adequate_degree_data(group_order: u64, degrees: &[u64]) -> bool {
    max_order_in_relative_brauer(degrees) == group_order
}

pub fn is_adequate(group_order: u64, ext: &ExtensionPlaceData) -> bool {
    is_adequate_degree_data(group_order, &ext.local_gcds())
}

/// Adequacy inside the tame subgroup: local degrees cut down to tame parts.
pub fn is_tamely_adequate(group_order: u64, ext: &ExtensionPlaceData) -> Result<bool, BrauerError> {
    Ok(is_adequate_degree_data(group_order, &ext.tame_local_gcds()?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ImageObstruction {
    /// Two divisors of one base place demand incompatible base invariants;
    /// `difference` is the mismatch between the first two conflicting
    /// values (after dividing by their degrees).
    Local { base: String, first: String, second: String, difference: QZ },
    /// Every local choice exists but no choice has invariant sum zero.
    Global { residual: QZ, lcm: u64 },
}

impl fmt::Display for ImageObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImageObstruction::Local { base, first, second, difference } => {
                write!(f, "local at {base}: {first} and {second} differ by {difference}")
            }
            ImageObstruction::Global { residual, lcm } => {
                write!(f, "global: residual {residual} not in (1/{lcm})Z")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionImage {
    pub holds: bool,
    pub witness: Option<BrauerClass>,
    pub obstruction: Option<ImageObstruction>,
}

/// Solutions of `g·x = a` in `Q/Z`: `x0 + (1/g)Z`.
fn solve_scaled(g: u64, a: QZ) -> QZ {
    QZ::from_ratio(a.ratio() / Ratio::from_integer(g as i64))
}

/// Decides whether a class over the top field is restricted from the base,
/// returning a base class whose restriction equals it.
pub fn in_restriction_image(c: &BrauerClass, ext: &ExtensionPlaceData) -> Result<RestrictionImage, BrauerError> {
    let covered: BTreeSet<&PlaceId> = ext.places.values().flat_map(|(_, ds)| ds.iter().map(|d| &d.place)).collect();
    if let Some(w) = c.invariants.keys().find(|w| !covered.contains(w)) {
        return Err(BrauerError::Uncovered(w.label.clone()));
    }
    // Per base place: solution coset x0 + (1/G)Z of all g_w x = a_w.
    let mut local: Vec<(&PlaceId, QZ, u64)> = Vec::new();
    for (base, divisors) in ext.places.values() {
        let (first, rest) = divisors.split_first().expect("nonempty divisor list");
        let mut x0 = solve_scaled(first.degree, c.invariant_at(&first.place));
        let mut modulus = first.degree;
        for d in rest {
            let a = c.invariant_at(&d.place);
            // Search the current coset for a solution of d.degree · x = a.
            let step = QZ::new(1, modulus as i64);
            let found = (0..modulus).map(|k| x0 + k * step).find(|&x| d.degree * x == a);
            match found {
                Some(x) => {
                    x0 = x;
                    modulus = gcd(modulus, d.degree);
                }
                None => {
                    let difference = solve_scaled(first.degree, c.invariant_at(&first.place))
                        + -solve_scaled(d.degree, a);
                    return Ok(RestrictionImage {
                        holds: false,
                        witness: None,
                        obstruction: Some(ImageObstruction::Local {
                            base: base.label.clone(),
                            first: first.place.label.clone(),
                            second: d.place.label.clone(),
                            difference,
                        }),
                    });
                }
            }
        }
        local.push((base, x0, modulus));
    }
    let l = local.iter().fold(1, |a, &(_, _, g)| lcm(a, g));
    let total: QZ = local.iter().map(|&(_, x, _)| x).sum();
    if !(l * total).is_zero() {
        return Ok(RestrictionImage {
            holds: false,
            witness: None,
            obstruction: Some(ImageObstruction::Global { residual: total, lcm: l }),
        });
    }
    // total = j / l; cancel it with Σ k_v / G_v.
    let j = (total.numer() * (l as i64 / total.denom())) as u64 % l;
    let mut xs: Vec<QZ> = local.iter().map(|&(_, x, _)| x).collect();
    if j != 0 {
        let need = (l - j) as i64;
        if let Some(pos) = local.iter().rposition(|&(_, _, g)| g == l) {
            xs[pos] = xs[pos] + QZ::new(need, l as i64);
        } else {
            // Σ c_v (l / G_v) = 1 by iterated Bezout.
            let mut coeffs = vec![0i64; local.len()];
            let mut g_acc = 0i64;
            for (idx, &(_, _, g)) in local.iter().enumerate() {
                let u = (l / g) as i64;
                let e = g_acc.extended_gcd(&u);
                for c in coeffs.iter_mut().take(idx) {
                    *c *= e.x;
                }
                coeffs[idx] = e.y;
                g_acc = e.gcd;
            }
            debug_assert_eq!(g_acc, 1);
            for (idx, &(_, _, g)) in local.iter().enumerate() {
                xs[idx] = xs[idx] + QZ::new(coeffs[idx].rem_euclid(g as i64) * need % g as i64, g as i64);
            }
        }
    }
    let witness = BrauerClass::from_map(local.iter().zip(&xs).map(|(&(v, _, _), &x)| (v.clone(), x)).collect())?;
    debug_assert_eq!(&restrict(&witness, ext)?, c);
    Ok(RestrictionImage { holds: true, witness: Some(witness), obstruction: None })
}

/// A ledger file: base places, a class, and optionally extension data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerFile {
    #[serde(default)]
    pub places: Vec<PlaceId>,
    /// Invariants by place label, as `a/b` strings.
    #[serde(default)]
    pub class: BTreeMap<String, QZ>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u64>,
    /// Divisors by base place label; each divisor inherits the residue
    /// characteristic of its base place.
    pub divisors: BTreeMap<String, Vec<DivisorEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorEntry {
    pub label: String,
    pub degree: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<u64>,
}

impl LedgerFile {
    fn place(&self, label: &str) -> Result<PlaceId, BrauerError> {
        self.places.iter().find(|p| p.label == label).cloned().ok_or_else(|| BrauerError::MissingPlace(label.into()))
    }

    pub fn extension_data(&self) -> Result<Option<ExtensionPlaceData>, BrauerError> {
        let Some(ext) = &self.extension else { return Ok(None) };
        let mut data = ExtensionPlaceData::new(ext.degree);
        for (label, entries) in &ext.divisors {
            let base = self.place(label)?;
            let divisors = entries
                .iter()
                .map(|d| {
                    let place = PlaceId::new(d.label.clone(), base.residue_char);
                    match (d.e, d.f) {
                        (Some(e), Some(f)) if e * f == d.degree => Ok(Divisor::with_ramification(place, e, f)),
                        (None, None) => Ok(Divisor::new(place, d.degree)),
                        _ => Err(BrauerError::BadDegree(d.label.clone())),
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            data.add_place(base, divisors)?;
        }
        Ok(Some(data))
    }

    /// The class over the field whose places carry the labels in `class`:
    /// base places first, then divisors from the extension data.
    pub fn class(&self) -> Result<BrauerClass, BrauerError> {
        let ext = self.extension_data()?;
        let lookup = |label: &str| -> Result<PlaceId, BrauerError> {
            if let Ok(p) = self.place(label) {
                return Ok(p);
            }
            ext.iter()
                .flat_map(|e| e.places.values())
                .flat_map(|(_, ds)| ds.iter())
                .find(|d| d.place.label == label)
                .map(|d| d.place.clone())
                .ok_or_else(|| BrauerError::MissingPlace(label.into()))
        };
        make_class(self.class.iter().map(|(l, x)| lookup(l).map(|p| (p, *x))).collect::<Result<Vec<_>, _>>()?)
    }
}

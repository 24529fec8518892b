//! p-adic fields described by numeric invariants, the pro-p presentations of
//! their maximal p-extensions, local realizability of p-groups, and the
//! classification of local extensions for which realizability transfer is
//! not established.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use num_integer::gcd;

use crate::arith::{euler_phi, is_prime, p_part, pow_mod, units_mod, valuation};
use crate::group::{self, FiniteGroup};
use crate::words::{self, Budget, Mode, Presentation, QuotientVerdict, SearchError, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("inconsistent field invariants: {0}")]
    Inconsistent(String),
    #[error("no presentation available for p^s0 = 2 with even degree {0}")]
    Unsupported(u64),
    #[error("the group has order {order}, not a power of {p}")]
    NotPGroup { p: u64, order: usize },
    #[error("extension is sensitive (case {0}); no transfer route is known")]
    Sensitive(u8),
    #[error("transfer routes need an odd residue characteristic")]
    EvenResidue,
    #[error("no transfer route applies to {0}")]
    NoRoute(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Group(#[from] group::GroupError),
}

/// Numeric invariants of a finite extension `k` of `Q_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalFieldParams {
    pub p: u64,
    /// `[k : Q_p]`
    pub n: u64,
    pub e: u64,
    pub f: u64,
    /// Largest `s` with `μ_{p^s} ⊂ k`.
    pub s0: u32,
    /// Optional tame-closure data carried for reference only; nothing here
    /// evaluates it.
    pub tame: Option<TameData>,
}

/// Invariants of the tame part of the absolute Galois group: `μ_{p^s}` in the
/// maximal tame extension and the exponents `g`, `h` of the cyclotomic
/// action, modulo `p^s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TameData {
    pub s: u32,
    pub g: u64,
    pub h: u64,
}

impl LocalFieldParams {
    pub fn new(p: u64, e: u64, f: u64, s0: u32) -> Result<Self, LocalError> {
        if !is_prime(p) {
            return Err(LocalError::NotPrime(p));
        }
        if e == 0 || f == 0 {
            return Err(LocalError::Inconsistent("e and f must be positive".into()));
        }
        if p == 2 && s0 == 0 {
            return Err(LocalError::Inconsistent("every 2-adic field contains -1, so s0 >= 1".into()));
        }
        if s0 > 0 {
            // Q_p(μ_{p^s0}) is totally ramified of degree φ(p^s0).
            let phi = euler_phi(p.pow(s0));
            if e % phi != 0 {
                return Err(LocalError::Inconsistent(format!("μ_{} needs φ = {phi} to divide e = {e}", p.pow(s0))));
            }
        }
        Ok(LocalFieldParams { p, n: e * f, e, f, s0, tame: None })
    }

    pub fn with_tame(mut self, tame: TameData) -> Self {
        self.tame = Some(tame);
        self
    }

    /// `Q_p` itself.
    pub fn qp(p: u64) -> Result<Self, LocalError> {
        Self::new(p, 1, 1, u32::from(p == 2))
    }

    pub fn q2() -> Self {
        Self::new(2, 1, 1, 1).expect("Q_2")
    }

    /// `Q_2(i)`: ramified quadratic containing `μ_4`.
    pub fn q2_i() -> Self {
        Self::new(2, 2, 1, 2).expect("Q_2(i)")
    }

    /// `Q_p(√p)` for odd `p`; contains `μ_p` only for `p = 3`, and even then
    /// `√3 ≠ √-3` up to squares, so `s0 = 0`.
    pub fn qp_sqrt_p(p: u64) -> Result<Self, LocalError> {
        if p == 2 {
            return Err(LocalError::Inconsistent("Q_2(√2) is not covered by this constructor".into()));
        }
        Self::new(p, 2, 1, 0)
    }

    /// Residue field size `q = p^f`.
    pub fn q(&self) -> u64 {
        self.p.pow(self.f as u32)
    }

    /// `|μ_m(k)|`: prime-to-p roots of unity are those of the residue field.
    pub fn roots_of_unity_dividing(&self, m: u64) -> u64 {
        let pp = p_part(m, self.p);
        gcd(m / pp, self.q() - 1) * gcd(pp, self.p.pow(self.s0))
    }

    /// `|k^× / (k^×)^m| = m · |μ_m(k)| · p^{n·v_p(m)}`.
    pub fn power_class_count(&self, m: u64) -> u64 {
        m * self.roots_of_unity_dividing(m) * self.p.pow((self.n as u32) * valuation(m, self.p))
    }
}

impl fmt::Display for LocalFieldParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={},n={},e={},f={},s0={}", self.p, self.n, self.e, self.f, self.s0)
    }
}

fn key_values(text: &str) -> Result<Vec<(String, String)>, LocalError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_ascii_lowercase(), v.trim().to_string()))
                .ok_or_else(|| LocalError::Parse(kv.to_string()))
        })
        .collect()
}

fn number(v: &str) -> Result<u64, LocalError> {
    v.parse().map_err(|_| LocalError::Parse(v.to_string()))
}

impl FromStr for LocalFieldParams {
    type Err = LocalError;

    /// Accepts `Q3`, `Q2`, `Q2(i)`, `Q5(sqrt5)` or `p=3,e=2,f=1,s0=0`
    /// (`n` may be given and is checked against `e·f`).
    fn from_str(text: &str) -> Result<Self, LocalError> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = t.to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix('q') {
            if rest == "2(i)" {
                return Ok(Self::q2_i());
            }
            if let Some((p, inner)) = rest.split_once('(') {
                let p = number(p)?;
                if inner.trim_end_matches(')') == format!("sqrt{p}") {
                    return Self::qp_sqrt_p(p);
                }
                return Err(LocalError::Parse(text.into()));
            }
            return Self::qp(number(rest)?);
        }
        let (mut p, mut n, mut e, mut f, mut s0) = (None, None, None, None, None);
        for (k, v) in key_values(&t)? {
            let x = number(&v)?;
            match k.as_str() {
                "p" => p = Some(x),
                "n" => n = Some(x),
                "e" => e = Some(x),
                "f" => f = Some(x),
                "s0" => s0 = Some(x as u32),
                _ => return Err(LocalError::Parse(k)),
            }
        }
        let p = p.ok_or_else(|| LocalError::Parse("missing p".into()))?;
        let (e, f) = match (n, e, f) {
            (_, Some(e), Some(f)) => (e, f),
            (Some(n), Some(e), None) if e > 0 && n % e == 0 => (e, n / e),
            (Some(n), None, Some(f)) if f > 0 && n % f == 0 => (n / f, f),
            (Some(n), None, None) => (n, 1),
            _ => return Err(LocalError::Parse("need two of n, e, f".into())),
        };
        let k = Self::new(p, e, f, s0.unwrap_or(0))?;
        if n.is_some_and(|n| n != k.n) {
            return Err(LocalError::Inconsistent(format!("n must equal e·f = {}", k.n)));
        }
        Ok(k)
    }
}

/// Presentation of the Galois group of the maximal p-extension of `k` as a
/// pro-p group.
///
/// * no `p`-th roots of unity: free on `n + 1` generators;
/// * `p^s0 ≠ 2`: `x1^{p^s0} [x1,x2] [x3,x4] ⋯ [x_{n+1},x_{n+2}]`;
/// * `p^s0 = 2`, `n` odd: `x1^2 x2^4 [x2,x3] [x4,x5] ⋯ [x_{n+1},x_{n+2}]`.
pub fn presentation_of_max_p_extension(k: &LocalFieldParams) -> Result<Presentation, LocalError> {
    let mode = Mode::ProP(k.p);
    let n = k.n as usize;
    if k.s0 == 0 {
        return Ok(Presentation::free(n + 1, mode));
    }
    let names: Vec<String> = (1..=n + 2).map(|i| format!("x{i}")).collect();
    let q = k.p.pow(k.s0) as i64;
    let comm = |a: usize, b: usize| Word::commutator(Word::gen(a), Word::gen(b));
    let mut parts = Vec::new();
    let first_pair = if q != 2 {
        parts.push(Word::gen_pow(0, q));
        0
    } else if n % 2 == 1 {
        parts.push(Word::gen_pow(0, 2));
        parts.push(Word::gen_pow(1, 4));
        1
    } else {
        return Err(LocalError::Unsupported(k.n));
    };
    let mut a = first_pair;
    while a + 1 < n + 2 {
        parts.push(comm(a, a + 1));
        a += 2;
    }
    Ok(Presentation::new(names, vec![Word::product(parts)], mode))
}

/// Whether the p-group `g` is a Galois group over `k`, i.e. a quotient of the
/// maximal pro-p Galois group.
pub fn is_realizable_local(g: &FiniteGroup, k: &LocalFieldParams, budget: Budget) -> Result<QuotientVerdict, LocalError> {
    if g.order() > 1 && g.p_group_prime() != Some(k.p) {
        return Err(LocalError::NotPGroup { p: k.p, order: g.order() });
    }
    let pres = presentation_of_max_p_extension(k)?;
    Ok(words::is_prop_quotient(&pres, g, budget)?)
}

/// Named fields that the numeric invariants alone cannot single out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistinguishedField {
    /// `Q_3(ζ_9 + ζ_9⁻¹)`, the totally ramified cyclic cubic inside `Q_3(μ_9)`.
    RealCyclotomicNine,
    /// `Q_5(ρ_11)`, the unramified quintic.
    UnramifiedQuintic,
    /// `Q_3(ρ_7)`, the unramified sextic.
    UnramifiedSextic,
}

impl DistinguishedField {
    fn fits(self, base: &LocalFieldParams, rel_e: u64, rel_f: u64) -> bool {
        let (p, e, f) = match self {
            DistinguishedField::RealCyclotomicNine => (3, 3, 1),
            DistinguishedField::UnramifiedQuintic => (5, 1, 5),
            DistinguishedField::UnramifiedSextic => (3, 1, 6),
        };
        base.p == p && base.n == 1 && rel_e == e && rel_f == f
    }
}

impl FromStr for DistinguishedField {
    type Err = LocalError;

    fn from_str(s: &str) -> Result<Self, LocalError> {
        match s {
            "real-cyclotomic-nine" | "zeta9" => Ok(Self::RealCyclotomicNine),
            "unramified-quintic" | "rho11" => Ok(Self::UnramifiedQuintic),
            "unramified-sextic" | "rho7" => Ok(Self::UnramifiedSextic),
            _ => Err(LocalError::Parse(s.into())),
        }
    }
}

/// A finite extension `l / k` by its relative ramification and residue degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalExtensionSpec {
    pub base: LocalFieldParams,
    pub rel_e: u64,
    pub rel_f: u64,
    pub tag: Option<DistinguishedField>,
}

impl LocalExtensionSpec {
    pub fn new(base: LocalFieldParams, rel_e: u64, rel_f: u64) -> Result<Self, LocalError> {
        if rel_e == 0 || rel_f == 0 {
            return Err(LocalError::Inconsistent("relative degrees must be positive".into()));
        }
        Ok(LocalExtensionSpec { base, rel_e, rel_f, tag: None })
    }

    pub fn tagged(base: LocalFieldParams, tag: DistinguishedField) -> Result<Self, LocalError> {
        let (e, f) = match tag {
            DistinguishedField::RealCyclotomicNine => (3, 1),
            DistinguishedField::UnramifiedQuintic => (1, 5),
            DistinguishedField::UnramifiedSextic => (1, 6),
        };
        if !tag.fits(&base, e, f) {
            return Err(LocalError::Inconsistent(format!("{tag:?} does not extend {base}")));
        }
        Ok(LocalExtensionSpec { base, rel_e: e, rel_f: f, tag: Some(tag) })
    }

    /// `[l : k]`
    pub fn degree(&self) -> u64 {
        self.rel_e * self.rel_f
    }

    /// Degree and residue degree of the top field over `Q_p`; `s0` of the top
    /// field is not determined by these invariants and is not reported.
    pub fn top_degrees(&self) -> (u64, u64) {
        (self.base.n * self.degree(), self.base.f * self.rel_f)
    }

    /// Parses `e=3,f=1` or `e=3,f=1,tag=zeta9` over the given base.
    pub fn parse_over(base: LocalFieldParams, text: &str) -> Result<Self, LocalError> {
        let (mut e, mut f, mut tag) = (1, 1, None);
        for (k, v) in key_values(text)? {
            match k.as_str() {
                "e" => e = number(&v)?,
                "f" => f = number(&v)?,
                "r" => e = number(&v)?,
                "tag" => tag = Some(v.parse::<DistinguishedField>()?),
                _ => return Err(LocalError::Parse(k)),
            }
        }
        let spec = Self::new(base, e, f)?;
        match tag {
            Some(t) if !t.fits(&spec.base, e, f) => {
                Err(LocalError::Inconsistent(format!("{t:?} does not match e={e}, f={f}")))
            }
            t => Ok(LocalExtensionSpec { tag: t, ..spec }),
        }
    }
}

/// Why a p-group realizable over `k` has a Sylow-containing subgroup
/// realizable over `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "route", rename_all = "kebab-case")]
pub enum RouteTrace {
    Trivial,
    /// `[l:k]` prime to `p`.
    PrimeToP { degree: u64, p: u64 },
    /// Totally ramified after removing the prime-to-p unramified part:
    /// `⌈(n·r − 1)/2⌉ ≥ n + 1`.
    TotallyRamified { n: u64, r: u64, lhs: u64, rhs: u64 },
    /// Totally ramified cubic over `Q_3` other than the distinguished one:
    /// the tame invariants of the base survive.
    ParametersPreserved,
    /// Unramified p-part present: `⌈(n·r − 1)/2⌉ ≥ n + 2`.
    General { n: u64, r: u64, lhs: u64, rhs: u64 },
}

impl RouteTrace {
    /// Re-checks the inequality recorded in the trace.
    pub fn verify(&self) -> bool {
        match *self {
            RouteTrace::TotallyRamified { n, r, lhs, rhs } => {
                lhs == ceil_half(n * r) && rhs == n + 1 && lhs >= rhs
            }
            RouteTrace::General { n, r, lhs, rhs } => lhs == ceil_half(n * r) && rhs == n + 2 && lhs >= rhs,
            RouteTrace::PrimeToP { degree, p } => gcd(degree, p) == 1,
            RouteTrace::Trivial | RouteTrace::ParametersPreserved => true,
        }
    }
}

impl fmt::Display for RouteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RouteTrace::Trivial => write!(f, "trivial extension"),
            RouteTrace::PrimeToP { degree, p } => write!(f, "prime-to-p (gcd({degree},{p}) = 1)"),
            RouteTrace::TotallyRamified { n, r, lhs, rhs } => {
                write!(f, "totally-ramified, ceil(({n}*{r}-1)/2) = {lhs} >= n+1 = {rhs}")
            }
            RouteTrace::ParametersPreserved => write!(f, "totally-ramified, parameters preserved"),
            RouteTrace::General { n, r, lhs, rhs } => {
                write!(f, "general, ceil(({n}*{r}-1)/2) = {lhs} >= n+2 = {rhs}")
            }
        }
    }
}

/// `⌈(x − 1)/2⌉` for `x ≥ 1`.
fn ceil_half(x: u64) -> u64 {
    x / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SensitivityVerdict {
    /// Case 1 is the one where transfer is open; the others are excluded
    /// from the transfer argument.
    Sensitive { case: u8 },
    /// `route` is absent only for `p = 2`, where no transfer argument is made.
    NonSensitive { route: Option<RouteTrace> },
}

fn sensitive_case(ext: &LocalExtensionSpec) -> Option<u8> {
    let b = &ext.base;
    if ext.tag == Some(DistinguishedField::RealCyclotomicNine) && b.p == 3 && b.n == 1 {
        return Some(1);
    }
    match (b.p, b.n, ext.rel_e, ext.rel_f) {
        (5, 1, 1, 5) => Some(2),
        (3, 1..=3, 1, 3) => Some(3),
        (3, 1, 1, 6) => Some(4),
        _ => None,
    }
}

pub fn classify_extension(ext: &LocalExtensionSpec) -> SensitivityVerdict {
    match sensitive_case(ext) {
        Some(case) => SensitivityVerdict::Sensitive { case },
        None => SensitivityVerdict::NonSensitive { route: transfer_route(ext).ok() },
    }
}

/// The argument by which realizability over the base passes to the top field
/// (up to a Sylow-containing subgroup). Realizability over the base is the
/// caller's hypothesis; only the extension is inspected.
pub fn transfer_route(ext: &LocalExtensionSpec) -> Result<RouteTrace, LocalError> {
    if let Some(case) = sensitive_case(ext) {
        return Err(LocalError::Sensitive(case));
    }
    let p = ext.base.p;
    let r = ext.degree();
    if r == 1 {
        return Ok(RouteTrace::Trivial);
    }
    if p == 2 {
        return Err(LocalError::EvenResidue);
    }
    if gcd(r, p) == 1 {
        return Ok(RouteTrace::PrimeToP { degree: r, p });
    }
    // Pass to the intermediate field cut out by the prime-to-p part of the
    // residue extension.
    let f_p = p_part(ext.rel_f, p);
    let f_rest = ext.rel_f / f_p;
    let n = ext.base.n * f_rest;
    let r = r / f_rest;
    let lhs = ceil_half(n * r);
    if f_p == 1 {
        if lhs >= n + 1 {
            return Ok(RouteTrace::TotallyRamified { n, r, lhs, rhs: n + 1 });
        }
        if p == 3 && r == 3 && n == 1 {
            return Ok(RouteTrace::ParametersPreserved);
        }
    } else if lhs >= n + 2 {
        return Ok(RouteTrace::General { n, r, lhs, rhs: n + 2 });
    }
    Err(LocalError::NoRoute(format!("{} with e={}, f={}", ext.base, ext.rel_e, ext.rel_f)))
}

/// Independent count of `|U / U^m|` for `U = Z_p^×`, read off the finite
/// quotient `(Z/p^N)^×` with `N` large enough to stabilise.
pub fn unit_power_classes_brute_force(p: u64, m: u64) -> u64 {
    let big_n = 2 * valuation(m, p) + 3;
    let modulus = p.pow(big_n);
    let units = units_mod(modulus);
    let mut powers: Vec<u64> = units.iter().map(|&u| pow_mod(u, m, modulus)).collect();
    powers.sort_unstable();
    powers.dedup();
    (units.len() / powers.len()) as u64
}

/// One sensitive extension in the census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SensitiveExtension {
    pub case: u8,
    pub base_description: String,
    pub spec: LocalExtensionSpec,
}

/// Itemised count of sensitive extensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SensitiveCensus {
    pub case_real_cyclotomic: u64,
    pub case_unramified_quintic: u64,
    /// Case 3 base fields over `Q_3`, by degree.
    pub case_unramified_cubic_degree_one: u64,
    pub quadratic_fields: u64,
    pub cyclic_cubic_fields: u64,
    pub non_galois_cubic_fields: u64,
    pub case_unramified_sextic: u64,
    /// Epimorphisms from the reduced presentation onto `S_3`.
    pub s3_epimorphisms: u64,
    pub s3_automorphisms: usize,
    pub s3_extensions: u64,
    pub s3_involutions: u64,
    pub total: u64,
}

impl fmt::Display for SensitiveCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}+{}+({}+{}+({}+{}))+{}",
            self.total,
            self.case_real_cyclotomic,
            self.case_unramified_quintic,
            self.case_unramified_cubic_degree_one,
            self.quadratic_fields,
            self.cyclic_cubic_fields,
            self.non_galois_cubic_fields,
            self.case_unramified_sextic
        )
    }
}

/// The presentation whose epimorphisms onto `S_3` count the `S_3`-extensions
/// of `Q_3`, after the simplifications valid for images in `S_3`.
pub fn s3_counting_presentation() -> Presentation {
    Presentation::parse(
        "<σ,τ,x0,x1 | τ^2, x0^3, x1^3, τ^σ = τ^3, x0^σ = (x0 τ x0^-1 τ)^2>",
        Mode::AbstractFinite,
    )
    .expect("fixed presentation parses")
}

/// Computes every summand of the census.
pub fn count_sensitive_extensions(budget: Budget) -> Result<SensitiveCensus, LocalError> {
    let q3 = LocalFieldParams::qp(3)?;
    // Quadratic extensions of Q_3: nontrivial classes of Q_3^×/(Q_3^×)^2.
    let quadratic_fields = q3.power_class_count(2) - 1;
    // Cyclic cubics: lines in the mod-3 abelianization of the maximal
    // pro-3 quotient.
    let d = presentation_of_max_p_extension(&q3)?.abelianization_rank_mod(3) as u32;
    let cyclic_cubic_fields = (3u64.pow(d) - 1) / 2;
    let s3 = group::symmetric(3).expect("S_3");
    let count = words::count_epimorphisms(&s3_counting_presentation(), &s3, budget)?;
    let s3_involutions = s3.element_orders().iter().filter(|&&o| o == 2).count() as u64;
    Ok(SensitiveCensus::from_parts(quadratic_fields, cyclic_cubic_fields, &count, s3_involutions))
}

impl SensitiveCensus {
    /// Assembles the census from its computed inputs: each `S_3`-extension
    /// contributes one non-Galois cubic per involution of `S_3`.
    pub fn from_parts(
        quadratic_fields: u64,
        cyclic_cubic_fields: u64,
        s3: &words::EpimorphismCount,
        s3_involutions: u64,
    ) -> SensitiveCensus {
        let s3_extensions = s3.epimorphisms / s3.automorphisms as u64;
        let mut census = SensitiveCensus {
            case_real_cyclotomic: 1,
            case_unramified_quintic: 1,
            case_unramified_cubic_degree_one: 1,
            quadratic_fields,
            cyclic_cubic_fields,
            non_galois_cubic_fields: s3_involutions * s3_extensions,
            case_unramified_sextic: 1,
            s3_epimorphisms: s3.epimorphisms,
            s3_automorphisms: s3.automorphisms,
            s3_extensions,
            s3_involutions,
            total: 0,
        };
        census.total = census.case_real_cyclotomic
            + census.case_unramified_quintic
            + census.case_unramified_cubic_degree_one
            + census.quadratic_fields
            + census.cyclic_cubic_fields
            + census.non_galois_cubic_fields
            + census.case_unramified_sextic;
        census
    }
}

/// Lists the sensitive extensions behind a census, one entry per field.
pub fn enumerate_sensitive_extensions(census: &SensitiveCensus) -> Vec<SensitiveExtension> {
    let q3 = LocalFieldParams::qp(3).expect("Q_3");
    let q5 = LocalFieldParams::qp(5).expect("Q_5");
    let cubic_over = |base: LocalFieldParams, desc: String| SensitiveExtension {
        case: 3,
        base_description: desc,
        spec: LocalExtensionSpec::new(base, 1, 3).expect("unramified cubic"),
    };
    let mut out = vec![
        SensitiveExtension {
            case: 1,
            base_description: "Q3".into(),
            spec: LocalExtensionSpec::tagged(q3.clone(), DistinguishedField::RealCyclotomicNine).expect("tag fits"),
        },
        SensitiveExtension {
            case: 2,
            base_description: "Q5".into(),
            spec: LocalExtensionSpec::tagged(q5, DistinguishedField::UnramifiedQuintic).expect("tag fits"),
        },
    ];
    for _ in 0..census.case_unramified_cubic_degree_one {
        out.push(cubic_over(q3.clone(), "Q3".into()));
    }
    // Quadratic fields: the unramified one, then the ramified ones; only
    // Q_3(√-3) contains μ_3.
    for i in 0..census.quadratic_fields {
        let (desc, base) = match i {
            0 => ("Q3(√-1)".to_string(), LocalFieldParams::new(3, 1, 2, 0)),
            1 => ("Q3(√3)".to_string(), LocalFieldParams::new(3, 2, 1, 0)),
            2 => ("Q3(√-3)".to_string(), LocalFieldParams::new(3, 2, 1, 1)),
            _ => (format!("quadratic #{}", i + 1), LocalFieldParams::new(3, 2, 1, 0)),
        };
        out.push(cubic_over(base.expect("quadratic"), desc));
    }
    // Cyclic cubics: one unramified, the rest totally ramified.
    for i in 0..census.cyclic_cubic_fields {
        let (desc, base) = if i == 0 {
            ("unramified cubic".to_string(), LocalFieldParams::new(3, 1, 3, 0))
        } else {
            (format!("ramified cyclic cubic #{i}"), LocalFieldParams::new(3, 3, 1, 0))
        };
        out.push(cubic_over(base.expect("cubic"), desc));
    }
    // Non-Galois cubics are totally ramified (the unramified cubic is Galois).
    for i in 0..census.non_galois_cubic_fields {
        let base = LocalFieldParams::new(3, 3, 1, 0).expect("cubic");
        out.push(cubic_over(base, format!("non-Galois cubic #{}", i + 1)));
    }
    out.push(SensitiveExtension {
        case: 4,
        base_description: "Q3".into(),
        spec: LocalExtensionSpec::tagged(q3, DistinguishedField::UnramifiedSextic).expect("tag fits"),
    });
    out
}

/// One metacyclic 2-group and exponent `s` for which the relation word
/// `(x⁻² yˢ)² x⁴ [x,y]` does not vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub params: group::MetacyclicParams,
    pub s: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RelationSweep {
    pub groups: usize,
    /// (group, s) pairs evaluated.
    pub cases: usize,
    /// Groups for which `s(t² + 1) ≡ (1 - t)/t² (mod n)` has no solution.
    pub unsolvable: usize,
    pub failures: Vec<RelationFailure>,
    /// Parameter tuples with at least one failing `s`.
    pub failing_groups: usize,
    /// Failing groups that are nevertheless quotients of the maximal pro-2
    /// Galois group of `Q_2`.
    pub failures_realizable_over_q2: usize,
    /// Cases where the word with `[y,x]` in place of `[x,y]` does not vanish.
    pub reversed_commutator_failures: usize,
}

/// Solutions `s mod n` of `s(t² + 1) ≡ (1 - t)/t² (mod n)` for odd `t`.
pub fn relation_exponents(n: u64, t: u64) -> Vec<u64> {
    let n = n.max(1);
    let Some(t2inv) = crate::arith::inv_mod(t * t % n, n) else { return Vec::new() };
    let rhs = ((1 + n - t % n) % n) as u128 * t2inv as u128 % n as u128;
    let coeff = (t as u128 * t as u128 + 1) % n as u128;
    (0..n).filter(|&s| (s as u128 * coeff) % n as u128 == rhs).collect()
}

/// The relation word `(x⁻² yˢ)² x⁴ [x,y]` in `x, y`.
pub fn metacyclic_relation_word(s: u64) -> Word {
    relation_word_with(s, Word::commutator(Word::gen(0), Word::gen(1)))
}

/// `(x⁻² yˢ)² x⁴ [y,x]`: with `x⁻¹yx = yᵗ` the last factor is `y^{t-1}`.
pub fn metacyclic_relation_word_reversed(s: u64) -> Word {
    relation_word_with(s, Word::commutator(Word::gen(1), Word::gen(0)))
}

fn relation_word_with(s: u64, last: Word) -> Word {
    Word::product([
        Word::product([Word::gen_pow(0, -2), Word::gen_pow(1, s as i64)]).pow(2),
        Word::gen_pow(0, 4),
        last,
    ])
}

/// Evaluates the relation word on the standard generators of every
/// consistent `M(m, n, i, t)` with `m, n` powers of two up to `bound`, for
/// every `s` solving the exponent congruence.
pub fn metacyclic_relation_sweep(bound: u64, budget: Budget) -> Result<RelationSweep, LocalError> {
    let mut out = RelationSweep::default();
    let q2 = LocalFieldParams::q2();
    let powers: Vec<u64> = std::iter::successors(Some(1u64), |&x| Some(x * 2)).take_while(|&x| x <= bound).collect();
    for &m in &powers {
        for &n in &powers {
            for params in group::consistent_metacyclic_params(m * n).into_iter().filter(|p| p.m == m) {
                out.groups += 1;
                let exps = relation_exponents(n, params.t.max(1));
                if exps.is_empty() {
                    out.unsolvable += 1;
                    continue;
                }
                let g = group::build_metacyclic(params)?;
                let x = if m > 1 { n as usize } else { params.i as usize };
                let y = if n > 1 { 1 } else { 0 };
                let mut failed = false;
                for s in exps {
                    out.cases += 1;
                    if metacyclic_relation_word(s).evaluate(&g, &[x, y]) != g.identity() {
                        out.failures.push(RelationFailure { params, s });
                        failed = true;
                    }
                    if metacyclic_relation_word_reversed(s).evaluate(&g, &[x, y]) != g.identity() {
                        out.reversed_commutator_failures += 1;
                    }
                }
                if failed {
                    out.failing_groups += 1;
                    if is_realizable_local(&g, &q2, budget)?.holds {
                        out.failures_realizable_over_q2 += 1;
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_shapes() {
        let p = presentation_of_max_p_extension(&LocalFieldParams::qp(5).unwrap()).unwrap();
        assert_eq!((p.rank(), p.relators.len()), (2, 0));
        let p = presentation_of_max_p_extension(&LocalFieldParams::q2()).unwrap();
        assert_eq!(p.to_string(), "<x1,x2,x3 | x1^2 x2^4 [x2,x3]>");
        let p = presentation_of_max_p_extension(&LocalFieldParams::q2_i()).unwrap();
        assert_eq!(p.to_string(), "<x1,x2,x3,x4 | x1^4 [x1,x2] [x3,x4]>");
        let p = presentation_of_max_p_extension(&LocalFieldParams::qp_sqrt_p(5).unwrap()).unwrap();
        assert_eq!(p.rank(), 3);
        let k = LocalFieldParams::new(3, 2, 1, 1).unwrap();
        let p = presentation_of_max_p_extension(&k).unwrap();
        assert_eq!(p.to_string(), "<x1,x2,x3,x4 | x1^3 [x1,x2] [x3,x4]>");
        let even = LocalFieldParams::new(2, 2, 1, 1).unwrap();
        assert_eq!(presentation_of_max_p_extension(&even), Err(LocalError::Unsupported(2)));
    }

    #[test]
    fn parameter_validation() {
        assert!(LocalFieldParams::new(3, 1, 1, 1).is_err());
        assert!(LocalFieldParams::new(2, 1, 1, 0).is_err());
        assert!(LocalFieldParams::new(5, 2, 1, 1).is_err());
        assert!(LocalFieldParams::new(5, 4, 1, 1).is_ok());
        assert!(LocalFieldParams::new(4, 1, 1, 0).is_err());
        assert_eq!("p=3,n=2,e=2,f=1,s0=1".parse::<LocalFieldParams>().unwrap(), LocalFieldParams::new(3, 2, 1, 1).unwrap());
        assert_eq!("Q2(i)".parse::<LocalFieldParams>().unwrap(), LocalFieldParams::q2_i());
        assert_eq!("Q5(sqrt5)".parse::<LocalFieldParams>().unwrap().n, 2);
        assert!("p=3,n=3,e=2,f=1".parse::<LocalFieldParams>().is_err());
    }

    #[test]
    fn unit_formula_matches_brute_force_over_qp() {
        for p in [2u64, 3, 5, 7] {
            let k = LocalFieldParams::qp(p).unwrap();
            for m in 1..=12u64 {
                assert_eq!(
                    k.power_class_count(m),
                    m * unit_power_classes_brute_force(p, m),
                    "p={p} m={m}"
                );
            }
        }
        assert_eq!(LocalFieldParams::qp(3).unwrap().power_class_count(2), 4);
        assert_eq!(LocalFieldParams::q2().power_class_count(2), 8);
    }

    #[test]
    fn sensitive_cases_and_routes() {
        let q3 = LocalFieldParams::qp(3).unwrap();
        let zeta9 = LocalExtensionSpec::tagged(q3.clone(), DistinguishedField::RealCyclotomicNine).unwrap();
        assert_eq!(classify_extension(&zeta9), SensitivityVerdict::Sensitive { case: 1 });
        let q5 = LocalFieldParams::qp(5).unwrap();
        let unr5 = LocalExtensionSpec::new(q5, 1, 5).unwrap();
        assert_eq!(classify_extension(&unr5), SensitivityVerdict::Sensitive { case: 2 });
        assert_eq!(transfer_route(&unr5), Err(LocalError::Sensitive(2)));

        let other_cubic = LocalExtensionSpec::new(q3.clone(), 3, 1).unwrap();
        assert_eq!(transfer_route(&other_cubic).unwrap(), RouteTrace::ParametersPreserved);

        let q7 = LocalFieldParams::qp(7).unwrap();
        for (e, f) in [(1, 1), (1, 7), (7, 1), (2, 7), (49, 1)] {
            let ext = LocalExtensionSpec::new(q7.clone(), e, f).unwrap();
            assert!(matches!(classify_extension(&ext), SensitivityVerdict::NonSensitive { route: Some(_) }));
        }

        let ext = LocalExtensionSpec::new(LocalFieldParams::new(3, 2, 1, 0).unwrap(), 2, 3).unwrap();
        let route = transfer_route(&ext).unwrap();
        assert_eq!(route, RouteTrace::General { n: 2, r: 6, lhs: 6, rhs: 4 });
        assert!(route.verify());
        assert_eq!(route.to_string(), "general, ceil((2*6-1)/2) = 6 >= n+2 = 4");

        let prime_to_p = LocalExtensionSpec::new(q3, 2, 1).unwrap();
        assert_eq!(transfer_route(&prime_to_p).unwrap(), RouteTrace::PrimeToP { degree: 2, p: 3 });
    }

    #[test]
    fn every_odd_small_extension_gets_exactly_one_verdict() {
        for p in [3u64, 5, 7] {
            for (e, f) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (4, 1), (1, 4)] {
                let Ok(base) = LocalFieldParams::new(p, e, f, 0) else { continue };
                for re in 1..=9 {
                    for rf in 1..=9 {
                        let ext = LocalExtensionSpec::new(base.clone(), re, rf).unwrap();
                        match classify_extension(&ext) {
                            SensitivityVerdict::Sensitive { case } => assert!((2..=4).contains(&case)),
                            SensitivityVerdict::NonSensitive { route } => {
                                let route = route.unwrap_or_else(|| panic!("no route for {ext:?}"));
                                assert!(route.verify());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn census_breakdown() {
        let c = count_sensitive_extensions(Budget(words::DEFAULT_BUDGET)).unwrap();
        assert_eq!(c.quadratic_fields, 3);
        assert_eq!(c.cyclic_cubic_fields, 4);
        assert_eq!((c.s3_epimorphisms, c.s3_automorphisms, c.s3_extensions), (36, 6, 6));
        assert_eq!(c.non_galois_cubic_fields, 18);
        assert_eq!(c.total, 29);
        assert_eq!(c.to_string(), "29 = 1+1+(1+3+(4+18))+1");
        let list = enumerate_sensitive_extensions(&c);
        assert_eq!(list.len() as u64, c.total);
        for s in &list {
            assert_eq!(classify_extension(&s.spec), SensitivityVerdict::Sensitive { case: s.case });
        }
    }
}

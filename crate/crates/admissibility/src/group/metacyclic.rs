//! Metacyclic groups `M(m, n, i, t) = ⟨x, y | x^m = y^i, y^n = 1, x⁻¹yx = y^t⟩`.

use serde::{Deserialize, Serialize};

use super::{AssociativityCheck, FiniteGroup, GroupError};
use crate::arith;

/// Parameters of `M(m, n, i, t)`, with `i` and `t` reduced modulo `n`.
///
/// The group has order exactly `m·n` iff `t^m ≡ 1` and `i(t - 1) ≡ 0 (mod n)`;
/// [`MetacyclicParams::new`] rejects anything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MetacyclicParams {
    pub m: u64,
    pub n: u64,
    pub i: u64,
    pub t: u64,
}

impl MetacyclicParams {
    pub fn new(m: u64, n: u64, i: u64, t: u64) -> Result<Self, GroupError> {
        if m == 0 || n == 0 {
            return Err(GroupError::InvalidParameters("m and n must be positive".into()));
        }
        let (i, t) = (i % n, t % n);
        let p = MetacyclicParams { m, n, i, t };
        if !p.is_consistent() {
            return Err(GroupError::InvalidParameters(format!(
                "M({m},{n},{i},{t}) needs t^m ≡ 1 and i(t-1) ≡ 0 mod n"
            )));
        }
        Ok(p)
    }

    fn is_consistent(&self) -> bool {
        let n = self.n;
        if n == 1 {
            return true;
        }
        arith::inv_mod(self.t, n).is_some()
            && arith::pow_mod(self.t, self.m, n) == 1
            && (self.i as u128 * ((self.t + n - 1) % n) as u128) % n as u128 == 0
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    /// Order of the abelianization. The commutator subgroup is `⟨y^{t-1}⟩`,
    /// of order `n / gcd(t - 1, n)`.
    pub fn abelianization_order(&self) -> u64 {
        let derived = self.n / num_integer::gcd((self.t + self.n - 1) % self.n, self.n);
        self.order() / derived
    }
}

impl std::fmt::Display for MetacyclicParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "M({},{},{},{})", self.m, self.n, self.i, self.t)
    }
}

/// Table for `M(m, n, i, t)`: element `x^a y^b` has index `a·n + b`, and
/// `x^a y^b · x^c y^d = x^{a+c} y^{b t^c + d}` with `x^m = y^i` on overflow.
pub fn build_metacyclic(p: MetacyclicParams) -> Result<FiniteGroup, GroupError> {
    let (m, n, i, t) = (p.m as usize, p.n as usize, p.i as usize, p.t as usize);
    let order = m * n;
    let tpow: Vec<usize> = (0..m).map(|c| arith::pow_mod(t as u64, c as u64, n as u64) as usize).collect();
    let labels = (0..order)
        .map(|e| {
            let (a, b) = (e / n, e % n);
            match (a, b) {
                (0, 0) => "1".to_string(),
                (0, _) => format!("y^{b}"),
                (_, 0) => format!("x^{a}"),
                _ => format!("x^{a} y^{b}"),
            }
        })
        .collect();
    let mut hints = Vec::new();
    if m > 1 {
        hints.push(n);
    }
    if n > 1 {
        hints.push(1);
    }
    FiniteGroup::from_fn(
        order,
        0,
        super::DEFAULT_ORDER_CAP,
        Some(AssociativityCheck::Complete),
        Some(labels),
        hints,
        |u, v| {
            let (a, b, c, d) = (u / n, u % n, v / n, v % n);
            let mut e = (b * tpow[c] + d) % n;
            let mut s = a + c;
            if s >= m {
                s -= m;
                e = (e + i) % n;
            }
            s * n + e
        },
    )
}

/// Every consistent parameter tuple with `m·n = order`, ordered by `(m, i, t)`.
pub fn consistent_metacyclic_params(order: u64) -> Vec<MetacyclicParams> {
    let mut out = Vec::new();
    for m in arith::divisors(order) {
        let n = order / m;
        for i in 0..n {
            for t in arith::units_mod(n) {
                if let Ok(p) = MetacyclicParams::new(m, n, i, t) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Reads off parameters from a pair `(x, y)` with `⟨y⟩` normal and `G/⟨y⟩`
/// cyclic generated by `x`.
fn params_from_pair(g: &FiniteGroup, x: usize, y: usize, ycyc: &[usize]) -> Option<MetacyclicParams> {
    let n = g.element_order(y) as u64;
    let mut m = 1u64;
    let mut xm = x;
    let pos = |z: usize| ycyc.iter().position(|&w| w == z);
    while pos(xm).is_none() {
        xm = g.mul(xm, x);
        m += 1;
    }
    if m * n != g.order() as u64 {
        return None;
    }
    let i = pos(xm)? as u64;
    let t = pos(g.conjugate(y, x))? as u64;
    MetacyclicParams::new(m, n, i, t).ok()
}

/// All `(m, n, i, t)` with `M(m, n, i, t) ≅ G`, sorted. Computed intrinsically
/// by scanning pairs `(x, y)` where `⟨y⟩ ⊴ G` and `x` generates `G/⟨y⟩`.
pub fn enumerate_metacyclic_presentations(g: &FiniteGroup) -> Vec<MetacyclicParams> {
    let mut out = std::collections::BTreeSet::new();
    scan_pairs(g, |p| {
        out.insert(p);
        true
    });
    out.into_iter().collect()
}

/// Some metacyclic presentation of `G`, or `None`.
pub fn is_metacyclic(g: &FiniteGroup) -> Option<MetacyclicParams> {
    if let Some(fq) = g.frattini_quotient() {
        if fq.rank > 2 {
            return None;
        }
    }
    let mut found = None;
    scan_pairs(g, |p| {
        found = Some(p);
        false
    });
    found
}

fn scan_pairs(g: &FiniteGroup, mut visit: impl FnMut(MetacyclicParams) -> bool) {
    let order = g.order();
    for y in 0..order {
        // y^k for k in 0..n, so positions are discrete logs.
        let n = g.element_order(y);
        let mut ycyc = Vec::with_capacity(n);
        let mut z = g.identity();
        for _ in 0..n {
            ycyc.push(z);
            z = g.mul(z, y);
        }
        let mut in_y = vec![false; order];
        ycyc.iter().for_each(|&w| in_y[w] = true);
        if !g.generators().iter().all(|&s| in_y[g.conjugate(y, s)]) {
            continue;
        }
        let m_needed = order / n;
        for x in 0..order {
            // quick reject: x^m_needed must land in ⟨y⟩
            if !in_y[g.pow(x, m_needed as i64)] {
                continue;
            }
            if let Some(p) = params_from_pair(g, x, y, &ycyc) {
                if !visit(p) {
                    return;
                }
            }
        }
    }
}

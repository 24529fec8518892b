//! Finite groups stored as full multiplication tables.
//!
//! Elements are indices `0..order`. Tables are validated on construction
//! (Latin square, identity, associativity), after which every operation is a
//! table lookup. Subgroups are sorted member lists tagged with the identity of
//! the parent table so that mixing groups is caught early.

mod builders;
mod iso;
mod metacyclic;
mod spec_lang;
mod structure;

pub use builders::{
    abelian, central_extension, cyclic, dihedral, direct_product, heisenberg, obstruction_2_10_spec,
    obstruction_group_2_10, quaternion, semidirect_product, symmetric, unitriangular_semidirect, wreath_fp_cp,
    ActionGenerator, CentralExtensionSpec, CommutatorDatum,
};
pub use iso::Fingerprint;
pub use metacyclic::{
    build_metacyclic, consistent_metacyclic_params, enumerate_metacyclic_presentations, is_metacyclic,
    MetacyclicParams,
};
pub use spec_lang::{GroupSpec, SemidirectSpec};
pub use structure::FrattiniQuotient;

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Default ceiling on group order; larger tables must opt in explicitly.
pub const DEFAULT_ORDER_CAP: usize = 4096;
/// Hard ceiling imposed by the 16-bit table encoding.
pub const MAX_ORDER: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order {order} exceeds the configured cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("table has {got} entries, expected {expected}")]
    TableShape { got: usize, expected: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("row or column {0} of the table is not a permutation")]
    NotLatin(usize),
    #[error("element {0} is not a two-sided identity")]
    BadIdentity(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("invalid construction parameters: {0}")]
    InvalidParameters(String),
    #[error("{what} requires a p-group")]
    NotPGroup { what: &'static str },
    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group spec: {0}")]
    Spec(String),
}

/// How thoroughly [`FiniteGroup::from_table`] verifies associativity above
/// the exhaustive threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssociativityCheck {
    /// Exhaustive up to order 256, Light's test over a generating set above.
    Complete,
    /// Light's test is skipped above order 256; only seeded random triples are checked.
    Sampled(u32),
}

#[derive(Debug, Clone)]
pub struct TableOptions {
    pub order_cap: usize,
    pub associativity: AssociativityCheck,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions { order_cap: DEFAULT_ORDER_CAP, associativity: AssociativityCheck::Complete }
    }
}

impl TableOptions {
    pub fn with_cap(order_cap: usize) -> Self {
        TableOptions { order_cap, ..Self::default() }
    }
}

/// Stable identifier of a multiplication table (FNV-1a over the entries).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(u64);

#[derive(Debug, Default)]
struct Cache {
    automorphisms: OnceLock<usize>,
    fingerprint: OnceLock<Fingerprint>,
    frattini: OnceLock<Option<FrattiniQuotient>>,
}

#[derive(Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    identity: usize,
    inverses: Vec<u16>,
    orders: Vec<u32>,
    labels: Option<Vec<String>>,
    generators: Vec<usize>,
    id: GroupId,
    cache: Cache,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            order: self.order,
            table: self.table.clone(),
            identity: self.identity,
            inverses: self.inverses.clone(),
            orders: self.orders.clone(),
            labels: self.labels.clone(),
            generators: self.generators.clone(),
            id: self.id,
            cache: Cache::default(),
        }
    }
}

impl FiniteGroup {
    /// Validates and wraps a row-major multiplication table: `table[a * order + b] = a·b`.
    pub fn from_table(
        order: usize,
        table: Vec<usize>,
        identity: usize,
        opts: &TableOptions,
    ) -> Result<Self, GroupError> {
        let cap = opts.order_cap.min(MAX_ORDER);
        if order == 0 || order > cap {
            return Err(GroupError::TooLarge { order, cap });
        }
        if table.len() != order * order {
            return Err(GroupError::TableShape { got: table.len(), expected: order * order });
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return Err(GroupError::EntryOutOfRange { row: pos / order, col: pos % order, value: table[pos] });
        }
        if identity >= order {
            return Err(GroupError::BadIdentity(identity));
        }
        let compact: Vec<u16> = table.iter().map(|&v| v as u16).collect();
        drop(table);
        Self::assemble(order, compact, identity, Some(opts.associativity), None, Vec::new())
    }

    /// Internal constructor for builders that already produced a compact table.
    /// `assoc = None` skips the associativity check for tables derived from a
    /// validated group (quotients, subgroups).
    pub(crate) fn assemble(
        order: usize,
        table: Vec<u16>,
        identity: usize,
        assoc: Option<AssociativityCheck>,
        labels: Option<Vec<String>>,
        generator_hints: Vec<usize>,
    ) -> Result<Self, GroupError> {
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        for x in 0..order {
            if at(identity, x) != x || at(x, identity) != x {
                return Err(GroupError::BadIdentity(identity));
            }
        }
        let mut seen = vec![0u32; order];
        for r in 0..order {
            let stamp = r as u32 + 1;
            for c in 0..order {
                let v = at(r, c);
                if seen[v] == stamp {
                    return Err(GroupError::NotLatin(r));
                }
                seen[v] = stamp;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for c in 0..order {
            let stamp = c as u32 + 1;
            for r in 0..order {
                let v = at(r, c);
                if seen[v] == stamp {
                    return Err(GroupError::NotLatin(c));
                }
                seen[v] = stamp;
            }
        }
        let mut inverses = vec![0u16; order];
        for a in 0..order {
            let b = (0..order).find(|&b| at(a, b) == identity).expect("latin square has a solution");
            inverses[a] = b as u16;
        }

        let generators = if generator_hints.is_empty() {
            greedy_generators(order, identity, &table)
        } else {
            let reach = right_closure(order, identity, &table, &generator_hints);
            if reach.len() != order {
                return Err(GroupError::InvalidParameters("generator hints do not generate".into()));
            }
            generator_hints
        };
        if let Some(mode) = assoc {
            check_associativity(order, &table, &generators, mode)?;
        }

        let mut orders = vec![0u32; order];
        for a in 0..order {
            let mut x = a;
            let mut k = 1u32;
            while x != identity {
                x = at(x, a);
                k += 1;
            }
            orders[a] = k;
        }
        let id = GroupId(fnv(&table));
        Ok(FiniteGroup {
            order,
            table,
            identity,
            inverses,
            orders,
            labels,
            generators,
            id,
            cache: Cache::default(),
        })
    }

    /// Builds a group from a closed multiplication rule on `0..order`.
    pub(crate) fn from_fn(
        order: usize,
        identity: usize,
        cap: usize,
        assoc: Option<AssociativityCheck>,
        labels: Option<Vec<String>>,
        generator_hints: Vec<usize>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GroupError> {
        let cap = cap.min(MAX_ORDER);
        if order == 0 || order > cap {
            return Err(GroupError::TooLarge { order, cap });
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = mul(a, b);
                if v >= order {
                    return Err(GroupError::EntryOutOfRange { row: a, col: b, value: v });
                }
                table.push(v as u16);
            }
        }
        Self::assemble(order, table, identity, assoc, labels, generator_hints)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let k = e.rem_euclid(self.orders[a] as i64) as u64;
        let mut acc = self.identity;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `a^b = b⁻¹ a b`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// A generating set: the builder's hints if given, otherwise a greedy one.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => format!("g{a}"),
        }
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> usize {
        crate::arith::lcm_all(self.orders.iter().map(|&o| o as u64)) as usize
    }
}

/// A subgroup of a specific [`FiniteGroup`], as a sorted member list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent: GroupId,
    members: Vec<usize>,
}

impl serde::Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Subgroup", 2)?;
        st.serialize_field("order", &self.members.len())?;
        st.serialize_field("members", &self.members)?;
        st.end()
    }
}

impl Subgroup {
    pub(crate) fn new_unchecked(parent: GroupId, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { parent, members }
    }

    pub fn parent(&self) -> GroupId {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.members.iter().all(|&x| other.contains(x))
    }
}

fn fnv(table: &[u16]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &v in table {
        for byte in v.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

/// Everything reachable from the identity by right multiplication with `gens`.
fn right_closure(order: usize, identity: usize, table: &[u16], gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; order];
    seen[identity] = true;
    let mut list = vec![identity];
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &g in gens {
            let y = table[x * order + g] as usize;
            if !seen[y] {
                seen[y] = true;
                list.push(y);
            }
        }
        i += 1;
    }
    list
}

fn greedy_generators(order: usize, identity: usize, table: &[u16]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = vec![false; order];
    inside[identity] = true;
    let mut covered = 1;
    // Prefer elements of large order: they tend to give short generating sets.
    let mut cand: Vec<(usize, usize)> = (0..order)
        .map(|a| {
            let mut x = a;
            let mut k = 1;
            while x != identity && k <= order {
                x = table[x * order + a] as usize;
                k += 1;
            }
            (k, a)
        })
        .collect();
    cand.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    for (_, a) in cand {
        if covered == order {
            break;
        }
        if inside[a] {
            continue;
        }
        gens.push(a);
        let reach = right_closure(order, identity, table, &gens);
        covered = reach.len();
        for x in reach {
            inside[x] = true;
        }
    }
    gens
}

fn check_associativity(
    order: usize,
    table: &[u16],
    gens: &[usize],
    mode: AssociativityCheck,
) -> Result<(), GroupError> {
    let at = |a: usize, b: usize| table[a * order + b] as usize;
    if order <= 256 {
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NonAssociative(a, b, c));
                    }
                }
            }
        }
        return Ok(());
    }
    match mode {
        AssociativityCheck::Complete => {
            // Light's test: the elements g with (xg)y = x(gy) for all x, y form a
            // closed subset, so checking a generating set suffices.
            for &g in gens {
                for x in 0..order {
                    let xg = at(x, g);
                    for y in 0..order {
                        if at(xg, y) != at(x, at(g, y)) {
                            return Err(GroupError::NonAssociative(x, g, y));
                        }
                    }
                }
            }
        }
        AssociativityCheck::Sampled(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..n {
                let (a, b, c) = (rng.gen_range(0..order), rng.gen_range(0..order), rng.gen_range(0..order));
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(GroupError::NonAssociative(a, b, c));
                }
            }
        }
    }
    Ok(())
}

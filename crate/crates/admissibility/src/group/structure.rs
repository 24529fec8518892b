use super::{FiniteGroup, GroupError, Subgroup};
use crate::arith;

/// `G/Φ(G)` of a p-group identified with `F_p^d`: each element carries the
/// coordinates of its coset, packed base `p` into a `u64`.
#[derive(Debug, Clone)]
pub struct FrattiniQuotient {
    pub prime: u64,
    pub rank: usize,
    pub frattini: Vec<usize>,
    coords: Vec<u64>,
    /// For each packed coordinate vector, the elements of that coset.
    cosets: Vec<Vec<usize>>,
}

impl FrattiniQuotient {
    pub fn coords(&self, x: usize) -> u64 {
        self.coords[x]
    }

    pub fn coset(&self, packed: u64) -> &[usize] {
        &self.cosets[packed as usize]
    }

    pub fn quotient_order(&self) -> u64 {
        (self.prime).pow(self.rank as u32)
    }

    pub fn unpack(&self, mut v: u64) -> Vec<u64> {
        (0..self.rank)
            .map(|_| {
                let d = v % self.prime;
                v /= self.prime;
                d
            })
            .collect()
    }

    /// Whether the given elements generate the whole group (Burnside basis theorem).
    pub fn spans(&self, elems: &[usize]) -> bool {
        self.rank_of(elems.iter().map(|&x| self.coords[x])) == self.rank
    }

    /// Rank over `F_p` of a family of packed vectors.
    pub fn rank_of(&self, vecs: impl Iterator<Item = u64>) -> usize {
        let p = self.prime;
        let mut rows: Vec<Vec<u64>> = vecs.map(|v| self.unpack(v)).collect();
        let mut rank = 0;
        for col in 0..self.rank {
            let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
            rows.swap(rank, piv);
            let inv = arith::inv_mod(rows[rank][col], p).expect("nonzero mod prime");
            for c in 0..self.rank {
                rows[rank][c] = rows[rank][c] * inv % p;
            }
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != 0 {
                    let f = rows[r][col];
                    for c in 0..self.rank {
                        rows[r][c] = (rows[r][c] + p * p - f * rows[rank][c] % p) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl FiniteGroup {
    /// Sorted members of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut list = vec![self.identity];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    pub fn generates(&self, elems: &[usize]) -> bool {
        if let Some(fq) = self.frattini_quotient() {
            return fq.spans(elems);
        }
        self.closure(elems).len() == self.order
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        Subgroup::new_unchecked(self.id, self.closure(gens))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::new_unchecked(self.id, (0..self.order).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::new_unchecked(self.id, vec![self.identity])
    }

    /// Checks closure under multiplication and wraps `members` as a subgroup.
    pub fn subgroup_from_members(&self, members: Vec<usize>) -> Result<Subgroup, GroupError> {
        let sub = Subgroup::new_unchecked(self.id, members);
        if sub.members.is_empty() || sub.members.iter().any(|&x| x >= self.order) {
            return Err(GroupError::NotSubgroup);
        }
        for &a in &sub.members {
            for &b in &sub.members {
                if !sub.contains(self.mul(a, b)) {
                    return Err(GroupError::NotSubgroup);
                }
            }
        }
        Ok(sub)
    }

    fn check_parent(&self, h: &Subgroup) -> Result<(), GroupError> {
        if h.parent != self.id {
            return Err(GroupError::ForeignSubgroup);
        }
        Ok(())
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut current: Vec<usize> = gens.to_vec();
        loop {
            let members = self.closure(&current);
            let mut grew = false;
            let mut in_set = vec![false; self.order];
            for &m in &members {
                in_set[m] = true;
            }
            for &h in &current.clone() {
                for &g in &self.generators {
                    let c = self.conjugate(h, g);
                    if !in_set[c] {
                        in_set[c] = true;
                        current.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return members;
            }
        }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        h.parent == self.id
            && h.members.iter().all(|&x| self.generators.iter().all(|&g| h.contains(self.conjugate(x, g))))
    }

    pub fn center(&self) -> Subgroup {
        let gens = &self.generators;
        let members = (0..self.order)
            .filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup::new_unchecked(self.id, members)
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let gens = &self.generators;
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        Subgroup::new_unchecked(self.id, self.normal_closure(&comms))
    }

    /// `Some(p)` if the order is a power of the prime `p`; `None` for the trivial group too.
    pub fn p_group_prime(&self) -> Option<u64> {
        arith::prime_power(self.order as u64).map(|(p, _)| p)
    }

    /// Frattini subgroup of a p-group, computed as `G^p [G, G]`.
    pub fn frattini(&self) -> Result<Subgroup, GroupError> {
        if self.order == 1 {
            return Ok(self.trivial_subgroup());
        }
        let p = self.p_group_prime().ok_or(GroupError::NotPGroup { what: "Frattini subgroup" })?;
        let mut gens: Vec<usize> = self.commutator_subgroup().members.clone();
        gens.extend((0..self.order).map(|g| self.pow(g, p as i64)));
        gens.sort_unstable();
        gens.dedup();
        Ok(Subgroup::new_unchecked(self.id, self.closure(&gens)))
    }

    /// Cached `G/Φ(G)` coordinates; `None` unless the group is a nontrivial p-group.
    pub fn frattini_quotient(&self) -> Option<&FrattiniQuotient> {
        self.cache.frattini.get_or_init(|| self.build_frattini_quotient()).as_ref()
    }

    fn build_frattini_quotient(&self) -> Option<FrattiniQuotient> {
        let p = self.p_group_prime()?;
        let phi = self.frattini().ok()?;
        let index = self.order / phi.order();
        let rank = arith::valuation(index as u64, p) as usize;
        // Basis of G/Φ: pick elements outside the current span.
        let mut basis: Vec<usize> = Vec::new();
        let mut span = phi.members.clone();
        for g in 0..self.order {
            if span.len() == self.order {
                break;
            }
            if span.binary_search(&g).is_err() {
                basis.push(g);
                let mut gens = phi.members.clone();
                gens.extend(&basis);
                span = self.closure(&gens);
            }
        }
        debug_assert_eq!(basis.len(), rank);
        let mut coords = vec![u64::MAX; self.order];
        let mut cosets = vec![Vec::new(); index];
        for packed in 0..index as u64 {
            let mut rep = self.identity;
            let mut v = packed;
            for &b in &basis {
                rep = self.mul(rep, self.pow(b, (v % p) as i64));
                v /= p;
            }
            for &f in &phi.members {
                let x = self.mul(rep, f);
                coords[x] = packed;
                cosets[packed as usize].push(x);
            }
        }
        for c in &mut cosets {
            c.sort_unstable();
        }
        Some(FrattiniQuotient { prime: p, rank, frattini: phi.members, coords, cosets })
    }

    /// Minimal number of generators. Uses the Burnside basis theorem for
    /// p-groups and an exhaustive search over subsets otherwise.
    pub fn min_generators(&self) -> usize {
        if self.order == 1 {
            return 0;
        }
        if let Some(fq) = self.frattini_quotient() {
            return fq.rank;
        }
        self.min_generators_exhaustive()
    }

    /// Smallest `k` such that some `k`-subset generates, by brute force.
    pub fn min_generators_exhaustive(&self) -> usize {
        fn search(g: &FiniteGroup, chosen: &mut Vec<usize>, start: usize, k: usize) -> bool {
            if chosen.len() == k {
                return g.closure(chosen).len() == g.order;
            }
            for x in start..g.order {
                chosen.push(x);
                if search(g, chosen, x + 1, k) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        if self.order == 1 {
            return 0;
        }
        (1..self.generators.len())
            .find(|&k| search(self, &mut Vec::new(), 0, k))
            .unwrap_or(self.generators.len())
    }

    /// Quotient by a normal subgroup together with the projection map.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        self.check_parent(n)?;
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let mut proj = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if proj[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &m in &n.members {
                proj[self.mul(g, m)] = idx;
            }
        }
        let q = reps.len();
        let hints: Vec<usize> = {
            let mut h: Vec<usize> = self.generators.iter().map(|&g| proj[g]).collect();
            h.sort_unstable();
            h.dedup();
            h.retain(|&x| x != proj[self.identity]);
            h
        };
        let group = FiniteGroup::from_fn(
            q,
            proj[self.identity],
            super::MAX_ORDER,
            None,
            None,
            hints,
            |a, b| proj[self.mul(reps[a], reps[b])],
        )?;
        Ok((group, proj))
    }

    /// Extracts a subgroup as a group in its own right, with the embedding.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        self.check_parent(h)?;
        let pos = |x: usize| h.members.binary_search(&x).expect("closed subgroup");
        let group = FiniteGroup::from_fn(
            h.order(),
            pos(self.identity),
            super::MAX_ORDER,
            None,
            None,
            Vec::new(),
            |a, b| pos(self.mul(h.members[a], h.members[b])),
        )?;
        Ok((group, h.members.clone()))
    }

    /// Elementary divisors (prime powers, ascending) of an abelian group.
    pub fn abelian_invariants(&self) -> Result<Vec<u64>, GroupError> {
        if !self.is_abelian() {
            return Err(GroupError::InvalidParameters("abelian invariants of a nonabelian group".into()));
        }
        let mut out = Vec::new();
        for (p, _) in arith::factorize(self.order as u64) {
            // |A[p^k]| for k = 0, 1, ...
            let mut sizes = vec![1u64];
            let mut k = 1u32;
            loop {
                let pk = p.pow(k);
                let s = self.orders.iter().filter(|&&o| pk % o as u64 == 0).count() as u64;
                sizes.push(s);
                if s == *sizes.iter().rev().nth(1).unwrap() {
                    break;
                }
                k += 1;
            }
            // number of cyclic factors of order >= p^k
            let ge: Vec<u32> = sizes.windows(2).map(|w| arith::valuation(w[1] / w[0], p)).collect();
            for k in 0..ge.len() {
                let exactly = ge[k] - ge.get(k + 1).copied().unwrap_or(0);
                for _ in 0..exactly {
                    out.push(p.pow(k as u32 + 1));
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn abelianization_invariants(&self) -> Vec<u64> {
        let (ab, _) = self.quotient(&self.commutator_subgroup()).expect("derived subgroup is normal");
        ab.abelian_invariants().expect("abelianization is abelian")
    }

    pub fn is_solvable(&self) -> bool {
        let mut current = self.clone();
        loop {
            if current.order == 1 {
                return true;
            }
            let d = current.commutator_subgroup();
            if d.order() == current.order {
                return false;
            }
            current = current.subgroup_as_group(&d).expect("own subgroup").0;
        }
    }

    /// A Sylow p-subgroup, grown deterministically: while `P` is not Sylow
    /// there is `x ∈ N(P) \ P` with `x^p ∈ P`, and `⟨P, x⟩` has order `p|P|`.
    /// Scanning elements in index order makes the result reproducible.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup, GroupError> {
        if !arith::is_prime(p) {
            return Err(GroupError::InvalidParameters(format!("{p} is not prime")));
        }
        let target = arith::p_part(self.order as u64, p) as usize;
        if target == self.order {
            return Ok(self.whole());
        }
        let mut members = vec![self.identity];
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        while members.len() < target {
            let x = (0..self.order)
                .find(|&x| {
                    !inside[x]
                        && inside[self.pow(x, p as i64)]
                        && members.iter().all(|&m| inside[self.conjugate(m, x)])
                })
                .expect("a p-subgroup below Sylow order has a normalising p-element");
            let mut gens = members.clone();
            gens.push(x);
            members = self.closure(&gens);
            inside.iter_mut().for_each(|v| *v = false);
            for &m in &members {
                inside[m] = true;
            }
        }
        Ok(Subgroup::new_unchecked(self.id, members))
    }

    /// One Sylow subgroup per prime dividing the order.
    pub fn sylow_system(&self) -> Vec<(u64, Subgroup)> {
        arith::prime_divisors(self.order as u64)
            .into_iter()
            .map(|p| (p, self.sylow_subgroup(p).expect("prime")))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::group::*;

    #[test]
    fn abelian_invariants_of_products() {
        assert_eq!(abelian(&[4, 6]).unwrap().abelian_invariants().unwrap(), vec![2, 3, 4]);
        assert_eq!(abelian(&[2, 2, 8]).unwrap().abelian_invariants().unwrap(), vec![2, 2, 8]);
        assert_eq!(cyclic(1).unwrap().abelian_invariants().unwrap(), Vec::<u64>::new());
    }

    #[test]
    fn symmetric_three_structure() {
        let s3 = symmetric(3).unwrap();
        assert_eq!(s3.center().order(), 1);
        assert_eq!(s3.commutator_subgroup().order(), 3);
        assert_eq!(s3.abelianization_invariants(), vec![2]);
        assert_eq!(s3.min_generators(), 2);
        assert!(s3.is_solvable());
        assert_eq!(s3.sylow_subgroup(3).unwrap().order(), 3);
        assert_eq!(s3.sylow_subgroup(2).unwrap().order(), 2);
        assert!(!symmetric(5).unwrap().is_solvable());
    }

    #[test]
    fn quaternion_frattini() {
        let q = quaternion();
        assert_eq!(q.frattini().unwrap().order(), 2);
        assert_eq!(q.min_generators(), 2);
        assert_eq!(q.center().order(), 2);
    }

    #[test]
    fn quotient_of_dihedral_by_center() {
        let d = dihedral(4).unwrap();
        let z = d.center();
        let (q, proj) = d.quotient(&z).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.abelian_invariants().unwrap(), vec![2, 2]);
        for a in 0..d.order() {
            for b in 0..d.order() {
                assert_eq!(proj[d.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = symmetric(3).unwrap();
        let h = s3.sylow_subgroup(2).unwrap();
        assert_eq!(s3.quotient(&h).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn sylow_in_s4() {
        let s4 = symmetric(4).unwrap();
        let p2 = s4.sylow_subgroup(2).unwrap();
        assert_eq!(p2.order(), 8);
        let (d8, _) = s4.subgroup_as_group(&p2).unwrap();
        assert!(d8.is_isomorphic(&dihedral(4).unwrap()));
        assert_eq!(s4.sylow_subgroup(3).unwrap().order(), 3);
    }
}

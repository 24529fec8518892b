//! Homomorphism extension, isomorphism search and automorphism counting.

use super::FiniteGroup;

/// Cheap isomorphism invariants compared before any search.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)` pairs in increasing order.
    pub order_statistics: Vec<(u32, usize)>,
    pub center_order: usize,
    pub derived_order: usize,
    pub abelianization: Vec<u64>,
    pub frattini_order: Option<usize>,
}

impl FiniteGroup {
    pub fn fingerprint(&self) -> &Fingerprint {
        self.cache.fingerprint.get_or_init(|| {
            let mut stats = std::collections::BTreeMap::new();
            for &o in self.element_orders() {
                *stats.entry(o).or_insert(0usize) += 1;
            }
            Fingerprint {
                order: self.order(),
                order_statistics: stats.into_iter().collect(),
                center_order: self.center().order(),
                derived_order: self.commutator_subgroup().order(),
                abelianization: self.abelianization_invariants(),
                frattini_order: self.frattini_quotient().map(|f| f.frattini.len()),
            }
        })
    }

    /// Map defined on `⟨gens⟩` sending `gens[i] ↦ images[i]`, or `None` if no
    /// homomorphism does so. Unreached elements map to `usize::MAX`.
    pub(crate) fn partial_homomorphism(
        &self,
        gens: &[usize],
        images: &[usize],
        dst: &FiniteGroup,
    ) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order()];
        map[self.identity()] = dst.identity();
        let mut queue = vec![self.identity()];
        let mut qi = 0;
        while qi < queue.len() {
            let x = queue[qi];
            qi += 1;
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = dst.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// Extends `gens[i] ↦ images[i]` to a homomorphism on all of `self`.
    /// `None` if the generators do not generate or the assignment is inconsistent.
    pub fn extend_homomorphism(&self, gens: &[usize], images: &[usize], dst: &FiniteGroup) -> Option<Vec<usize>> {
        let map = self.partial_homomorphism(gens, images, dst)?;
        map.iter().all(|&v| v != usize::MAX).then_some(map)
    }

    /// A short generating set: a Frattini basis for p-groups, greedy otherwise.
    /// Elements of larger order are preferred.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.order()).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        if let Some(fq) = self.frattini_quotient() {
            for x in by_order {
                if gens.len() == fq.rank {
                    break;
                }
                let mut trial = gens.clone();
                trial.push(x);
                if fq.rank_of(trial.iter().map(|&y| fq.coords(y))) == trial.len() {
                    gens = trial;
                }
            }
            return gens;
        }
        let mut inside = vec![false; self.order()];
        inside[self.identity()] = true;
        for x in by_order {
            if inside.iter().all(|&b| b) {
                break;
            }
            if !inside[x] {
                gens.push(x);
                for y in self.closure(&gens) {
                    inside[y] = true;
                }
            }
        }
        gens
    }

    /// Backtracking search for bijective homomorphisms `self → other`,
    /// calling `visit` on each; stops when `visit` returns `false`.
    fn search_isomorphisms(&self, other: &FiniteGroup, mut visit: impl FnMut(&[usize]) -> bool) {
        if self.order() != other.order() || self.fingerprint() != other.fingerprint() {
            return;
        }
        let gens = self.small_generating_set();
        let mut images = Vec::with_capacity(gens.len());
        fn rec(
            src: &FiniteGroup,
            dst: &FiniteGroup,
            gens: &[usize],
            images: &mut Vec<usize>,
            visit: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            let depth = images.len();
            if depth == gens.len() {
                let map = src.extend_homomorphism(gens, images, dst).expect("checked at each level");
                let mut hit = vec![false; dst.order()];
                for &v in &map {
                    if hit[v] {
                        return true;
                    }
                    hit[v] = true;
                }
                return visit(&map);
            }
            let target = src.element_order(gens[depth]);
            let prev = dst.closure(images);
            for cand in 0..dst.order() {
                if dst.element_order(cand) != target || prev.binary_search(&cand).is_ok() {
                    continue;
                }
                images.push(cand);
                let ok = src.partial_homomorphism(&gens[..=depth], images, dst).is_some();
                if ok && !rec(src, dst, gens, images, visit) {
                    return false;
                }
                images.pop();
            }
            true
        }
        rec(self, other, &gens, &mut images, &mut visit);
    }

    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        let mut found = None;
        self.search_isomorphisms(other, |m| {
            found = Some(m.to_vec());
            false
        });
        found
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// `|Aut(G)|`, computed once and cached.
    pub fn automorphism_count(&self) -> usize {
        *self.cache.automorphisms.get_or_init(|| {
            let mut n = 0;
            self.search_isomorphisms(self, |_| {
                n += 1;
                true
            });
            n
        })
    }
}

//! Constructors for the concrete families used throughout the crate.

use serde::{Deserialize, Serialize};

use super::{build_metacyclic, AssociativityCheck, FiniteGroup, GroupError, MetacyclicParams, TableOptions};

fn complete() -> Option<AssociativityCheck> {
    Some(AssociativityCheck::Complete)
}

pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    abelian(&[n])
}

/// `Z/n_0 × Z/n_1 × ...`, element index in mixed radix with the first factor
/// least significant. Generator hints are the unit vectors.
pub fn abelian(invariants: &[usize]) -> Result<FiniteGroup, GroupError> {
    if invariants.iter().any(|&n| n == 0) {
        return Err(GroupError::InvalidParameters("cyclic factor of order 0".into()));
    }
    let order: usize = invariants.iter().product();
    if order > super::DEFAULT_ORDER_CAP {
        return Err(GroupError::TooLarge { order, cap: super::DEFAULT_ORDER_CAP });
    }
    let decode = |mut x: usize| -> Vec<usize> {
        invariants
            .iter()
            .map(|&n| {
                let d = x % n;
                x /= n;
                d
            })
            .collect()
    };
    let encode = |v: &[usize]| -> usize { v.iter().zip(invariants).rev().fold(0, |acc, (&d, &n)| acc * n + d) };
    let labels = (0..order)
        .map(|x| format!("({})", decode(x).iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let mut hints = Vec::new();
    let mut stride = 1;
    for &n in invariants {
        if n > 1 {
            hints.push(stride);
        }
        stride *= n;
    }
    FiniteGroup::from_fn(order, 0, super::DEFAULT_ORDER_CAP, complete(), Some(labels), hints, |a, b| {
        let (u, v) = (decode(a), decode(b));
        let s: Vec<usize> = u.iter().zip(&v).zip(invariants).map(|((x, y), n)| (x + y) % n).collect();
        encode(&s)
    })
}

/// `G × H` with index `g + |G|·h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (ng, nh) = (g.order(), h.order());
    let mut hints: Vec<usize> = g.generators().to_vec();
    hints.extend(h.generators().iter().map(|&y| ng * y));
    let labels = (0..ng * nh).map(|x| format!("({},{})", g.label(x % ng), h.label(x / ng))).collect();
    FiniteGroup::from_fn(
        ng * nh,
        g.identity() + ng * h.identity(),
        super::DEFAULT_ORDER_CAP,
        None,
        Some(labels),
        hints,
        |a, b| g.mul(a % ng, b % ng) + ng * h.mul(a / ng, b / ng),
    )
}

/// Symmetric group on `n <= 6` points. Permutations are indexed in
/// lexicographic order (identity first); `a·b` applies `a` first.
pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > 6 {
        return Err(GroupError::InvalidParameters(format!("symmetric group on {n} points")));
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(&mut Vec::new(), &mut vec![false; n], &mut perms);
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("permutation");
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    let hints = if n == 1 {
        Vec::new()
    } else {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let mut h = vec![index(&swap), index(&cycle)];
        h.dedup();
        h
    };
    FiniteGroup::from_fn(perms.len(), 0, super::DEFAULT_ORDER_CAP, complete(), Some(labels), hints, |a, b| {
        let comp: Vec<usize> = perms[a].iter().map(|&i| perms[b][i]).collect();
        index(&comp)
    })
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        out.push('(');
        let mut x = s;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Dihedral group of order `2n`, as `M(2, n, 0, n-1)`.
pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    let n = n as u64;
    build_metacyclic(MetacyclicParams::new(2, n, 0, (n - 1) % n.max(1))?)
}

/// Quaternion group of order 8, as `M(2, 4, 2, 3)`.
pub fn quaternion() -> FiniteGroup {
    build_metacyclic(MetacyclicParams::new(2, 4, 2, 3).expect("consistent")).expect("order 8")
}

/// A commutator `[g_j, g_k]` of base generators, as exponents on the center basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorDatum {
    pub pair: (usize, usize),
    pub value: Vec<u64>,
}

/// Class-2 data for a central extension `1 → Z → G → F_p^r → 1`.
///
/// Elements are written `g_0^{v_0} ⋯ g_{r-1}^{v_{r-1}} · z` with `0 <= v_j < p`
/// and `z` in the abelian group with invariants `center`. The group law is
/// fixed by the commutators `[g_j, g_k]` (central) and the powers `g_j^p`:
/// moving letters into normal form picks up `[g_j, g_k]^{v_j w_k}` for `j > k`
/// and `g_j^p` on every carry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralExtensionSpec {
    pub prime: u64,
    pub rank: usize,
    pub center: Vec<u64>,
    #[serde(default)]
    pub commutators: Vec<CommutatorDatum>,
    /// `g_j^p` for each base generator; missing entries are trivial.
    #[serde(default)]
    pub powers: Vec<Vec<u64>>,
    #[serde(default)]
    pub generator_names: Vec<String>,
    #[serde(default)]
    pub center_names: Vec<String>,
}

pub fn central_extension(spec: &CentralExtensionSpec, opts: &TableOptions) -> Result<FiniteGroup, GroupError> {
    let p = spec.prime as usize;
    let r = spec.rank;
    if !crate::arith::is_prime(spec.prime) {
        return Err(GroupError::InvalidParameters(format!("{} is not prime", spec.prime)));
    }
    if spec.center.iter().any(|&c| c == 0) {
        return Err(GroupError::InvalidParameters("central factor of order 0".into()));
    }
    let zk = spec.center.len();
    let reduce = |v: &[u64]| -> Result<Vec<usize>, GroupError> {
        if v.len() != zk {
            return Err(GroupError::InvalidParameters(format!("center vector {v:?} has wrong length")));
        }
        Ok(v.iter().zip(&spec.center).map(|(&x, &n)| (x % n) as usize).collect())
    };
    let neg = |v: &[usize]| -> Vec<usize> {
        v.iter().zip(&spec.center).map(|(&x, &n)| (n as usize - x) % n as usize).collect()
    };
    let mut comm = vec![vec![vec![0usize; zk]; r]; r];
    for d in &spec.commutators {
        let (j, k) = d.pair;
        if j >= r || k >= r || j == k {
            return Err(GroupError::InvalidParameters(format!("bad commutator pair {:?}", d.pair)));
        }
        let v = reduce(&d.value)?;
        if j > k {
            comm[j][k] = v;
        } else {
            comm[k][j] = neg(&v);
        }
    }
    let mut powers = vec![vec![0usize; zk]; r];
    if spec.powers.len() > r {
        return Err(GroupError::InvalidParameters("more power data than generators".into()));
    }
    for (j, v) in spec.powers.iter().enumerate() {
        powers[j] = reduce(v)?;
    }

    let base: usize = p.pow(r as u32);
    let zorder: usize = spec.center.iter().product::<u64>() as usize;
    let order = base * zorder;
    let cap = opts.order_cap.min(super::MAX_ORDER);
    if order > cap {
        return Err(GroupError::TooLarge { order, cap });
    }
    let zinv: Vec<usize> = spec.center.iter().map(|&n| n as usize).collect();
    let dv = |mut x: usize| -> Vec<usize> {
        (0..r)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let dz = |mut x: usize| -> Vec<usize> {
        zinv.iter()
            .map(|&n| {
                let d = x % n;
                x /= n;
                d
            })
            .collect()
    };
    let ez = |z: &[usize]| z.iter().zip(&zinv).rev().fold(0, |acc, (&d, &n)| acc * n + d);
    let ev = |v: &[usize]| v.iter().rev().fold(0, |acc, &d| acc * p + d);
    let vs: Vec<Vec<usize>> = (0..base).map(dv).collect();
    let zs: Vec<Vec<usize>> = (0..zorder).map(dz).collect();

    // cocycle[v][w] as a center index
    let mut cocycle = vec![0usize; base * base];
    for a in 0..base {
        for b in 0..base {
            let (v, w) = (&vs[a], &vs[b]);
            let mut z = vec![0usize; zk];
            for j in 0..r {
                for k in 0..j {
                    let m = v[j] * w[k];
                    if m != 0 {
                        for t in 0..zk {
                            z[t] = (z[t] + m * comm[j][k][t]) % zinv[t];
                        }
                    }
                }
                if v[j] + w[j] >= p {
                    for t in 0..zk {
                        z[t] = (z[t] + powers[j][t]) % zinv[t];
                    }
                }
            }
            cocycle[a * base + b] = ez(&z);
        }
    }
    let zadd = |x: usize, y: usize| -> usize {
        let s: Vec<usize> = zs[x].iter().zip(&zs[y]).zip(&zinv).map(|((a, b), n)| (a + b) % n).collect();
        ez(&s)
    };
    let mut zsum = vec![0usize; zorder * zorder];
    for x in 0..zorder {
        for y in 0..zorder {
            zsum[x * zorder + y] = zadd(x, y);
        }
    }
    let vadd: Vec<usize> = (0..base * base)
        .map(|ab| {
            let (v, w) = (&vs[ab / base], &vs[ab % base]);
            ev(&v.iter().zip(w).map(|(x, y)| (x + y) % p).collect::<Vec<_>>())
        })
        .collect();

    let gnames: Vec<String> = (0..r)
        .map(|j| spec.generator_names.get(j).cloned().unwrap_or_else(|| format!("g{}", j + 1)))
        .collect();
    let znames: Vec<String> = (0..zk)
        .map(|t| spec.center_names.get(t).cloned().unwrap_or_else(|| format!("z{}", t + 1)))
        .collect();
    let labels: Vec<String> = (0..order)
        .map(|x| {
            let mut parts = Vec::new();
            for (j, &e) in vs[x % base].iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(gnames[j].clone()),
                    _ => parts.push(format!("{}^{}", gnames[j], e)),
                }
            }
            for (t, &e) in zs[x / base].iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(znames[t].clone()),
                    _ => parts.push(format!("{}^{}", znames[t], e)),
                }
            }
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join(" ")
            }
        })
        .collect();

    let mut hints: Vec<usize> = (0..r).map(|j| p.pow(j as u32)).collect();
    let mut stride = 1;
    let mut center_basis = Vec::new();
    for &n in &zinv {
        if n > 1 {
            center_basis.push(base * stride);
        }
        stride *= n;
    }
    // Add central generators not reached from the base generators.
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (vx, zx) = (x % base, x / base);
        for y in 0..order {
            let (vy, zy) = (y % base, y / base);
            let z = zsum[zsum[zx * zorder + zy] * zorder + cocycle[vx * base + vy]];
            table.push((vadd[vx * base + vy] + base * z) as u16);
        }
    }
    let reach = super::right_closure(order, 0, &table, &hints);
    if reach.len() < order {
        let mut inside = vec![false; order];
        reach.iter().for_each(|&x| inside[x] = true);
        for c in center_basis {
            if !inside[c] {
                hints.push(c);
                super::right_closure(order, 0, &table, &hints).iter().for_each(|&x| inside[x] = true);
            }
        }
    }
    FiniteGroup::assemble(order, table, 0, Some(opts.associativity), Some(labels), hints)
}

/// Heisenberg group mod `p`: `⟨x, y⟩` with `u = [y, x]` central and `x^p = y^p = 1`.
pub fn heisenberg(p: u64) -> Result<FiniteGroup, GroupError> {
    central_extension(
        &CentralExtensionSpec {
            prime: p,
            rank: 2,
            center: vec![p],
            commutators: vec![CommutatorDatum { pair: (1, 0), value: vec![1] }],
            powers: Vec::new(),
            generator_names: vec!["x".into(), "y".into()],
            center_names: vec!["u".into()],
        },
        &TableOptions::default(),
    )
}

/// The order-`2^10` group generated by `a, b, c` with central commutators
/// `[c,b] = α`, `[c,a] = β`, `[b,a] = γ` of order 2, `a² = α`, and `b², c²`
/// central of order 4. It is a quotient of the maximal pro-2 Galois group of
/// `Q_2` but not of `Q_2(i)`.
pub fn obstruction_group_2_10() -> FiniteGroup {
    central_extension(&obstruction_2_10_spec(), &TableOptions::default()).expect("valid class-2 data")
}

pub fn obstruction_2_10_spec() -> CentralExtensionSpec {
    let e = |i: usize| {
        let mut v = vec![0u64; 5];
        v[i] = 1;
        v
    };
    CentralExtensionSpec {
        prime: 2,
        rank: 3,
        center: vec![2, 2, 2, 4, 4],
        commutators: vec![
            CommutatorDatum { pair: (2, 1), value: e(0) },
            CommutatorDatum { pair: (2, 0), value: e(1) },
            CommutatorDatum { pair: (1, 0), value: e(2) },
        ],
        powers: vec![e(0), e(3), e(4)],
        generator_names: vec!["a".into(), "b".into(), "c".into()],
        center_names: vec!["α".into(), "β".into(), "γ".into(), "b²".into(), "c²".into()],
    }
}

/// An automorphism of the normal factor attached to one acting element:
/// `images[i]` is the image of the `i`-th generator of the normal factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionGenerator {
    pub acting: usize,
    pub images: Vec<usize>,
}

/// `N ⋊ H` with `(n₁, h₁)(n₂, h₂) = (n₁ · h₁(n₂), h₁h₂)`; index `n + |N|·h`.
///
/// The acting elements must generate `H`; the action is extended along the
/// Cayley graph of `H`, which also verifies that it is a homomorphism.
pub fn semidirect_product(
    n: &FiniteGroup,
    h: &FiniteGroup,
    action: &[ActionGenerator],
    opts: &TableOptions,
) -> Result<FiniteGroup, GroupError> {
    let nn = n.order();
    let nh = h.order();
    let mut auts: Vec<(usize, Vec<usize>)> = Vec::new();
    for a in action {
        if a.acting >= nh {
            return Err(GroupError::InvalidParameters(format!("acting element {} out of range", a.acting)));
        }
        if a.images.len() != n.generators().len() || a.images.iter().any(|&x| x >= nn) {
            return Err(GroupError::InvalidParameters("automorphism images do not match generators".into()));
        }
        let map = n
            .extend_homomorphism(n.generators(), &a.images, n)
            .ok_or_else(|| GroupError::InvalidParameters(format!("images for {} are not a homomorphism", a.acting)))?;
        let mut hit = vec![false; nn];
        map.iter().for_each(|&x| hit[x] = true);
        if hit.iter().any(|&b| !b) {
            return Err(GroupError::InvalidParameters(format!("action of {} is not bijective", a.acting)));
        }
        auts.push((a.acting, map));
    }
    // Extend to all of H: φ(x·g) = φ(x) ∘ φ(g).
    let mut phi: Vec<Option<Vec<usize>>> = vec![None; nh];
    phi[h.identity()] = Some((0..nn).collect());
    let mut queue = vec![h.identity()];
    let mut qi = 0;
    while qi < queue.len() {
        let x = queue[qi];
        qi += 1;
        for (g, pg) in &auts {
            let px = phi[x].as_ref().expect("visited");
            let composed: Vec<usize> = (0..nn).map(|m| px[pg[m]]).collect();
            let y = h.mul(x, *g);
            match &phi[y] {
                Some(existing) if *existing != composed => {
                    return Err(GroupError::InvalidParameters("action is not a homomorphism".into()))
                }
                Some(_) => {}
                None => {
                    phi[y] = Some(composed);
                    queue.push(y);
                }
            }
        }
    }
    if queue.len() != nh {
        return Err(GroupError::InvalidParameters("acting elements do not generate the acting group".into()));
    }
    let phi: Vec<Vec<usize>> = phi.into_iter().map(|p| p.expect("all reached")).collect();
    let order = nn * nh;
    let cap = opts.order_cap.min(super::MAX_ORDER);
    if order > cap {
        return Err(GroupError::TooLarge { order, cap });
    }
    let mut hints: Vec<usize> = n.generators().to_vec();
    hints.extend(action.iter().map(|a| nn * a.acting));
    let labels = (0..order).map(|x| format!("({},{})", n.label(x % nn), h.label(x / nn))).collect();
    FiniteGroup::from_fn(
        order,
        n.identity() + nn * h.identity(),
        cap,
        Some(opts.associativity),
        Some(labels),
        hints,
        |a, b| {
            let (n1, h1, n2, h2) = (a % nn, a / nn, b % nn, b / nn);
            n.mul(n1, phi[h1][n2]) + nn * h.mul(h1, h2)
        },
    )
}

/// `F_p ≀ C_p = (Z/p)^p ⋊ Z/p` with the cyclic shift of coordinates.
pub fn wreath_fp_cp(p: usize) -> Result<FiniteGroup, GroupError> {
    let n = abelian(&vec![p; p])?;
    let h = cyclic(p)?;
    let images = (0..p).map(|i| p.pow(((i + 1) % p) as u32)).collect();
    semidirect_product(&n, &h, &[ActionGenerator { acting: 1, images }], &TableOptions::default())
}

/// `(Z/p)^3 ⋊ (Z/p)^3` where the acting generators move by the unitriangular
/// maps `(a,b,c) ↦ (a+b,b,c)` and `(a,b,c) ↦ (a+c,b,c)`; the third acts trivially.
pub fn unitriangular_semidirect(p: usize, opts: &TableOptions) -> Result<FiniteGroup, GroupError> {
    let n = abelian(&[p, p, p])?;
    let h = abelian(&[p, p, p])?;
    let (e0, e1, e2) = (1, p, p * p);
    let action = vec![
        ActionGenerator { acting: e0, images: vec![e0, e0 + e1, e2] },
        ActionGenerator { acting: e1, images: vec![e0, e1, e0 + e2] },
        ActionGenerator { acting: e2, images: vec![e0, e1, e2] },
    ];
    semidirect_product(&n, &h, &action, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_orders() {
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(symmetric(3).unwrap().label(0), "()");
        assert_eq!(symmetric(3).unwrap().center().order(), 1);
    }

    #[test]
    fn heisenberg_relations() {
        let g = heisenberg(3).unwrap();
        assert_eq!(g.order(), 27);
        let (x, y) = (g.generators()[0], g.generators()[1]);
        let u = g.commutator(y, x);
        assert_eq!(g.label(u), "u");
        assert_eq!(g.exponent(), 3);
        assert_eq!(g.center().members(), &g.closure(&[u])[..]);
        // mod 2 this is the dihedral group of order 8
        assert!(heisenberg(2).unwrap().is_isomorphic(&dihedral(4).unwrap()));
    }

    #[test]
    fn order_1024_group_matches_its_presentation() {
        let g = obstruction_group_2_10();
        assert_eq!(g.order(), 1024);
        let (a, b, c) = (g.generators()[0], g.generators()[1], g.generators()[2]);
        let name = |x| g.label(x);
        assert_eq!(name(g.commutator(b, a)), "γ");
        assert_eq!(name(g.commutator(c, a)), "β");
        assert_eq!(name(g.commutator(c, b)), "α");
        assert_eq!(name(g.pow(a, 2)), "α");
        assert_eq!(name(g.pow(b, 2)), "b²");
        assert_eq!(g.element_order(b), 8);
        assert_eq!(g.element_order(c), 8);
        assert_eq!(g.element_order(a), 4);
    }

    #[test]
    fn inconsistent_class_two_data_rejected() {
        // [b,a] of order 4 while a^2 is trivial and b^2 = 1 cannot be associative.
        let spec = CentralExtensionSpec {
            prime: 2,
            rank: 2,
            center: vec![4],
            commutators: vec![CommutatorDatum { pair: (1, 0), value: vec![1] }],
            powers: vec![],
            generator_names: vec![],
            center_names: vec![],
        };
        assert!(matches!(
            central_extension(&spec, &TableOptions::default()),
            Err(GroupError::NonAssociative(..))
        ));
    }

    #[test]
    fn wreath_product_order_and_class() {
        let w = wreath_fp_cp(3).unwrap();
        assert_eq!(w.order(), 81);
        assert_eq!(w.min_generators(), 2);
        assert!(!w.is_abelian());
    }

    #[test]
    fn semidirect_rejects_non_homomorphic_action() {
        let n = cyclic(5).unwrap();
        let h = cyclic(2).unwrap();
        // x ↦ x^2 has order 4 in Aut(Z/5), so it cannot be the image of an involution.
        let bad = [ActionGenerator { acting: 1, images: vec![2] }];
        assert!(semidirect_product(&n, &h, &bad, &TableOptions::default()).is_err());
        let good = [ActionGenerator { acting: 1, images: vec![4] }];
        let d5 = semidirect_product(&n, &h, &good, &TableOptions::default()).unwrap();
        assert!(d5.is_isomorphic(&dihedral(5).unwrap()));
    }

    #[test]
    fn unitriangular_semidirect_needs_five_generators_mod_three() {
        let g = unitriangular_semidirect(3, &TableOptions::default()).unwrap();
        assert_eq!(g.order(), 729);
        assert_eq!(g.min_generators(), 5);
    }
}

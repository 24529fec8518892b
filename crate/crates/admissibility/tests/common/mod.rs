#![allow(dead_code)]

use admissibility::group::*;

/// Named test groups of order at most `max`.
pub fn corpus(max: usize) -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    let mut push = |name: String, g: Result<FiniteGroup, GroupError>| {
        if let Ok(g) = g {
            if g.order() <= max {
                out.push((name, g));
            }
        }
    };
    for n in [1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16, 25, 27, 32, 64] {
        push(format!("C{n}"), cyclic(n));
    }
    for inv in [&[2, 2][..], &[2, 4], &[3, 3], &[2, 2, 2], &[2, 2, 4], &[4, 4], &[3, 9], &[2, 2, 2, 2], &[5, 5], &[2, 4, 8], &[4, 4, 4], &[3, 3, 3], &[8, 8, 8]] {
        push(format!("abelian{inv:?}"), abelian(inv));
    }
    for n in [3, 4, 5, 6, 8, 16, 32, 128, 256] {
        push(format!("D{n}"), dihedral(n));
    }
    push("S3".into(), symmetric(3));
    push("S4".into(), symmetric(4));
    push("Q8".into(), Ok(quaternion()));
    push("Heis3".into(), heisenberg(3));
    push("Heis5".into(), heisenberg(5));
    push("C2wrC2".into(), wreath_fp_cp(2));
    push("C3wrC3".into(), wreath_fp_cp(3));
    for order in [8u64, 16, 27, 32, 64].into_iter().filter(|&o| o as usize <= max) {
        let mut seen: Vec<Fingerprint> = Vec::new();
        for p in consistent_metacyclic_params(order) {
            if p.m == 1 {
                continue;
            }
            let Ok(g) = build_metacyclic(p) else { continue };
            if seen.contains(g.fingerprint()) {
                continue;
            }
            seen.push(g.fingerprint().clone());
            push(p.to_string(), Ok(g));
        }
    }
    if let (Ok(s3), Ok(c5)) = (symmetric(3), cyclic(5)) {
        push("S3xC5".into(), direct_product(&s3, &c5));
    }
    if let (Ok(q), Ok(c3)) = (Ok::<_, GroupError>(quaternion()), cyclic(3)) {
        push("Q8xC3".into(), direct_product(&q, &c3));
    }
    out
}

/// A few larger groups, up to order 512, for order-only checks.
pub fn large_groups() -> Vec<(String, FiniteGroup)> {
    let mut out = vec![
        ("D256".to_string(), dihedral(256).unwrap()),
        ("abelian[8,8,8]".to_string(), abelian(&[8, 8, 8]).unwrap()),
        ("C3wrC3".to_string(), wreath_fp_cp(3).unwrap()),
        ("S4xC5".to_string(), direct_product(&symmetric(4).unwrap(), &cyclic(5).unwrap()).unwrap()),
        ("order 2^9".to_string(), build_metacyclic(MetacyclicParams::new(16, 32, 0, 5).unwrap()).unwrap()),
        ("C3wrC3xC2".to_string(), direct_product(&wreath_fp_cp(3).unwrap(), &cyclic(2).unwrap()).unwrap()),
    ];
    out.retain(|(_, g)| g.order() <= 512);
    out
}

/// Groups from the corpus that are `p`-groups for some prime.
pub fn p_groups(max: usize) -> Vec<(String, u64, FiniteGroup)> {
    corpus(max).into_iter().filter_map(|(n, g)| g.p_group_prime().map(|p| (n, p, g))).collect()
}

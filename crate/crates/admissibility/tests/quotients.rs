use std::time::Instant;

use admissibility::group::*;
use admissibility::words::*;

#[test]
fn obstruction_group_over_q2_and_q2i() {
    let g = obstruction_group_2_10();
    let b = Budget(DEFAULT_BUDGET);

    let t = Instant::now();
    let q2i = Presentation::parse("x0^4 [x0,x1] [x2,x3]", Mode::ProP(2)).unwrap();
    let red = central_reduction_quotient_test(&q2i, &g, b).unwrap();
    assert!(!red.holds);
    assert!(!red.fallback);
    assert!(red.full_center);
    assert_eq!(red.central_order, 128);
    assert_eq!(red.coset_tuples_total, 4096);
    assert_eq!(red.coset_tuples_scanned, 4096);
    let q2 = Presentation::parse("a^2 b^4 [b,c]", Mode::ProP(2)).unwrap();
    let red = central_reduction_quotient_test(&q2, &g, b).unwrap();
    assert!(red.holds);
    assert!(verify_epimorphism(&q2, &g, red.witness.as_ref().unwrap()));
    eprintln!("{red:?} in {:?}", t.elapsed());
}

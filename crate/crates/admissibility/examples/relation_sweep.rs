use admissibility::local::metacyclic_relation_sweep;
use admissibility::words::Budget;

fn main() {
    let sweep = metacyclic_relation_sweep(16, Budget::from_env()).expect("sweep");
    println!(
        "groups {} cases {} unsolvable {} failures {} (realizable over Q2 anyway: {})",
        sweep.groups,
        sweep.cases,
        sweep.unsolvable,
        sweep.failures.len(),
        sweep.failures_realizable_over_q2
    );
    for f in sweep.failures.iter().take(20) {
        println!("  {} s={}", f.params, f.s);
    }
}

//! The order-2¹⁰ group against the pro-2 Galois groups of Q2 and Q2(i),
//! decided by enumerating generator images modulo a central subgroup.

use admissibility::group::obstruction_group_2_10;
use admissibility::local::{presentation_of_max_p_extension, LocalFieldParams};
use admissibility::words::{central_reduction_quotient_test, verify_epimorphism, Budget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = obstruction_group_2_10();
    println!("group of order {}, center of order {}", g.order(), g.center().order());
    for (name, field) in [("Q2", LocalFieldParams::q2()), ("Q2(i)", LocalFieldParams::q2_i())] {
        let pres = presentation_of_max_p_extension(&field)?;
        let r = central_reduction_quotient_test(&pres, &g, Budget::from_env())?;
        println!("over {name}: {pres}");
        println!(
            "  quotient {} | exponent gcd {} | central subgroup of order {} | {} of {} coset tuples",
            r.holds, r.exponent_gcd, r.central_order, r.coset_tuples_scanned, r.coset_tuples_total
        );
        if let Some(w) = &r.witness {
            let labels: Vec<String> = w.iter().map(|&x| g.label(x)).collect();
            println!("  witness [{}] verified: {}", labels.join(", "), verify_epimorphism(&pres, &g, w));
        }
    }
    Ok(())
}

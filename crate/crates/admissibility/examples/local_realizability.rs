//! Galois groups of maximal p-extensions of local fields, realizability of
//! p-groups, and the census of transfer-sensitive extensions.

use admissibility::group::abelian;
use admissibility::local::*;
use admissibility::words::Budget;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let budget = Budget::from_env();
    for p in [3u64, 5] {
        let g = abelian(&[p as usize; 3])?;
        for (name, k) in [(format!("Q{p}"), LocalFieldParams::qp(p)?), (format!("Q{p}(√{p})"), LocalFieldParams::qp_sqrt_p(p)?)] {
            let pres = presentation_of_max_p_extension(&k)?;
            let v = is_realizable_local(&g, &k, budget)?;
            println!("(Z/{p})^3 over {name:<9} {:<5} via {:?}; Galois group {pres}", v.holds, v.strategy);
        }
    }

    let census = count_sensitive_extensions(budget)?;
    println!("\nsensitive extensions: {census}");
    for e in enumerate_sensitive_extensions(&census).iter().take(8) {
        println!("  case {} over {:<16} e={} f={}", e.case, e.base_description, e.spec.rel_e, e.spec.rel_f);
    }

    // Non-sensitive extensions come with a transfer route.
    let base = LocalFieldParams::qp(7)?;
    for (e, f) in [(1, 2), (7, 1), (2, 3)] {
        let ext = LocalExtensionSpec::new(base.clone(), e, f)?;
        match classify_extension(&ext) {
            SensitivityVerdict::Sensitive { case } => println!("Q7 e={e} f={f}: sensitive (case {case})"),
            SensitivityVerdict::NonSensitive { route } => println!("Q7 e={e} f={f}: route {route:?}"),
        }
    }
    Ok(())
}

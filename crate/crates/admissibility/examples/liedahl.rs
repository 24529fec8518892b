//! Liedahl's condition for metacyclic p-groups over abelian number fields,
//! and the tame-admissibility test built from it.

use admissibility::group::*;
use admissibility::liedahl::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = build_metacyclic(MetacyclicParams::new(5, 25, 25, 6)?)?;
    for k in [AbelianFieldSpec::rationals(), AbelianFieldSpec::cyclotomic(5)?, AbelianFieldSpec::cyclotomic(100)?] {
        let v = liedahl_condition(&g, &k)?;
        let witness = v.witness.map_or("none".to_string(), |w| w.to_string());
        println!(
            "M(5,25,25,6) over {k:<16} degree {:<3} holds {:<5} witness {witness} ({} of {} presentations)",
            k.degree(),
            v.holds,
            v.presentations_scanned,
            v.presentations_total
        );
    }

    let k = AbelianFieldSpec::gaussian();
    for spec in ["symmetric:3", "metacyclic:3,9,9,4", "heisenberg:3"] {
        let g = GroupSpec::parse(spec)?.build()?;
        let t = tame_admissibility(&g, &k)?;
        println!("{spec:<20} tamely admissible over Q(i): {} (failing prime {:?})", t.holds, t.failing_prime);
    }
    Ok(())
}

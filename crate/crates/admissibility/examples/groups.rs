//! Building finite groups and reading off their structure.

use admissibility::group::*;

fn main() -> Result<(), GroupError> {
    for spec in ["symmetric:4", "metacyclic:5,25,25,6", "heisenberg:3", "abelian:2,4,8", "paper_2_10"] {
        let g = GroupSpec::parse(spec)?.build()?;
        let sylows: Vec<String> = g.sylow_system().iter().map(|(p, s)| format!("{p}:{}", s.order())).collect();
        println!(
            "{spec:<22} order {:<5} center {:<4} derived {:<4} exponent {:<4} sylows [{}]",
            g.order(),
            g.center().order(),
            g.commutator_subgroup().order(),
            g.exponent(),
            sylows.join(" ")
        );
        if let Some(fq) = g.frattini_quotient() {
            println!("{:<22} p-group of rank {} with Frattini subgroup of order {}", "", fq.rank, fq.frattini.len());
        }
    }

    // The same metacyclic group from different parameter tuples.
    let g = build_metacyclic(MetacyclicParams::new(2, 8, 0, 3)?)?;
    let presentations = enumerate_metacyclic_presentations(&g);
    println!("M(2,8,0,3) has {} metacyclic presentations:", presentations.len());
    for p in &presentations {
        println!("  {p}");
    }

    // Semidirect product with trivial action is the direct product.
    let (n, h) = (cyclic(3)?, cyclic(4)?);
    let action: Vec<ActionGenerator> =
        h.generators().iter().map(|&a| ActionGenerator { acting: a, images: n.generators().to_vec() }).collect();
    let sd = semidirect_product(&n, &h, &action, &TableOptions::default())?;
    println!("C3 ⋊ C4 (trivial action) ≅ C12: {}", sd.is_isomorphic(&cyclic(12)?));
    Ok(())
}

//! Counting epimorphisms from a finitely presented group onto a finite group.

use admissibility::group::{symmetric, GroupSpec};
use admissibility::local::s3_counting_presentation;
use admissibility::words::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let budget = Budget::from_env();

    let pres = s3_counting_presentation();
    let s3 = symmetric(3)?;
    let count = count_epimorphisms(&pres, &s3, budget)?;
    println!("{pres}");
    println!(
        "  onto S3: {} epimorphisms, |Aut(S3)| = {}, {} normal subgroups with quotient S3",
        count.epimorphisms, count.automorphisms, count.normal_subgroups
    );
    println!("  naive enumeration agrees: {}", count_epimorphisms_naive(&pres, &s3, budget)? == count.epimorphisms);

    // Surface groups of genus 1 and 2 onto a few small groups.
    for text in ["<a,b | [a,b]>", "<a,b,c,d | [a,b][c,d]>"] {
        let pres = Presentation::parse(text, Mode::AbstractFinite)?;
        for spec in ["cyclic:6", "symmetric:3", "quaternion"] {
            let g = GroupSpec::parse(spec)?.build()?;
            let c = count_epimorphisms(&pres, &g, budget)?;
            println!("{text:<24} onto {spec:<12} {:>6} epimorphisms", c.epimorphisms);
        }
    }

    // Over-budget searches are refused up front.
    let free = Presentation::free(4, Mode::AbstractFinite);
    let big = GroupSpec::parse("paper_2_10")?.build()?;
    match count_epimorphisms(&free, &big, Budget(1_000_000)) {
        Err(e) => println!("refused: {e}"),
        Ok(c) => println!("{} epimorphisms", c.epimorphisms),
    }
    Ok(())
}

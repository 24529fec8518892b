//! Certificates for Schacher's criterion from local facts, wildness, and the
//! transfer of admissibility to an extension field.

use admissibility::brauer::PlaceId;
use admissibility::engine::*;
use admissibility::group::*;
use admissibility::liedahl::AbelianFieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = symmetric(3)?;
    let (s2, s3) = (g.sylow_subgroup(2)?, g.sylow_subgroup(3)?);
    let facts = vec![
        LocalFact::wild(PlaceId::new("v2", 2), [s3.clone()]),
        LocalFact::wild(PlaceId::new("v13", 13), [s3]),
        LocalFact::tame(PlaceId::new("v5", 5), [s2.clone()]),
        LocalFact::tame(PlaceId::new("v7", 7), [s2]),
    ];
    match preadmissibility_search(&g, &facts) {
        Some(cert) => {
            for e in &cert.entries {
                println!("p = {}: {} and {}", e.prime, e.places[0].label, e.places[1].label);
            }
            println!("Schacher check: {}", schacher_check(&g, &cert));
        }
        None => println!("no certificate"),
    }
    match classify_wildness(&g, &facts, Distinctness::Pairwise) {
        Wildness::NonWildAvailable { .. } => println!("a certificate avoiding residue characteristics exists"),
        Wildness::Wild => println!("wild"),
    }

    // A file-driven run: the same facts as JSON.
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/facts_s3.json"))?;
    let file = FactsFile::parse(&text)?;
    let g = file.group()?;
    println!("facts file: certificate found = {}", preadmissibility_search(&g, &file.facts(&g)?).is_some());

    // Transfer to an extension M/K for a metacyclic group of order 125.
    let g = build_metacyclic(MetacyclicParams::new(5, 25, 0, 6)?)?;
    let top = AbelianFieldSpec::cyclotomic(100)?;
    for divisors in [2u32, 1] {
        let primes = prime_data_for(&g, &top, &[(5, divisors)])?;
        let input =
            TransferInput { group_order: 125, admissible_over_base: true, gn_over_top: true, sensitive: false, primes };
        println!("{divisors} place(s) above 5: {:?}", extension_admissibility_verdict(&input));
    }
    Ok(())
}

//! Brauer classes by local invariants: index, restriction, and membership in
//! the image of restriction.

use admissibility::brauer::*;

fn place(label: &str, p: u64) -> PlaceId {
    PlaceId::new(label, p)
}

fn main() -> Result<(), BrauerError> {
    let p = 3;
    let c = make_class([(place("v1", p), QZ::new(1, 27)), (place("v2", p), QZ::new(-1, 27))])?;
    println!("class {c} of index {}", c.index());

    // v1 splits completely, v2 is inert, in a degree-3 extension.
    let split: Vec<Divisor> = (0..p).map(|i| Divisor::new(place(&format!("w1.{i}"), p), 1)).collect();
    let ext = ExtensionPlaceData::new(Some(p)).with_place(place("v1", p), split)?.with_place(
        place("v2", p),
        vec![Divisor::new(place("w2", p), p)],
    )?;
    let r = restrict(&c, &ext)?;
    println!("restricted: {r} of index {}", r.index());

    let image = in_restriction_image(&r, &ext)?;
    println!("restricted class is in the image: {} (witness {})", image.holds, image.witness.unwrap_or_default());

    // Two places over one base place with different invariants cannot come from the base.
    let top = make_class([(place("w1", p), QZ::new(1, 27)), (place("w2", p), QZ::new(-1, 27))])?;
    let same = ExtensionPlaceData::new(None)
        .with_place(place("v", p), vec![Divisor::new(place("w1", p), 1), Divisor::new(place("w2", p), 1)])?;
    let image = in_restriction_image(&top, &same)?;
    if let Some(o) = image.obstruction {
        println!("not in the image: {o}");
    }

    for degrees in [&[2u64, 4][..], &[4, 4, 2], &[3, 9, 27], &[6, 10, 15]] {
        println!(
            "local degrees {degrees:?}: largest order {} (brute force {})",
            max_order_in_relative_brauer(degrees),
            max_order_brute_force(degrees)
        );
    }
    Ok(())
}

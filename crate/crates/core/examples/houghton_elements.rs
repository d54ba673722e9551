//! Points and rays for the Houghton instance: expansion, canonical forms and degrees.

use expansion_cubes::complex::{degree, moves_at};
use expansion_cubes::houghton::{canonicalize_h, expand_h, Domain, Houghton, HoughtonElement, HoughtonRawMap, Point, Tail};
use expansion_cubes::{apply_move, ExpansionInstance};

fn main() -> expansion_cubes::Result<()> {
    let h = Houghton::new(2)?;
    let ray = HoughtonElement::ray(1, vec![Point::new(2, 5)], 4)?;
    let (point, rest) = expand_h(&ray)?;
    println!("{ray:?}\n  -> {point:?} + {rest:?}");
    println!("coexpansions: {:?}", h.coexpansions(&[point, rest]));

    // a translation of branch 1 restricted to a tail is the straight ray on that tail
    let raw = HoughtonRawMap { points: vec![], tails: vec![(Tail::new(1, 3), Tail::new(1, 7))] };
    println!("canonical: {:?}", canonicalize_h(&raw, Domain::Tail(Tail::new(1, 3)))?);

    let mut v = h.base_vertex();
    for _ in 0..3 {
        let m = moves_at(&h, &v).into_iter().find(|m| m.is_expansion()).unwrap();
        v = apply_move(&h, &v, &m)?;
        println!("height {} degree {}", v.height(), degree(&h, &v));
    }
    Ok(())
}

//! Intersecting random cube pairs and comparing with vertex-set brute force.

use expansion_cubes::complex::{cube_intersection, cube_vertices, intersection_lemma_check};
use expansion_cubes::houghton::Houghton;
use expansion_cubes::oracle::{brute_cube_intersection, random_cube_pair, Sample, Seed};
use expansion_cubes::thompson::ThompsonV;

fn run<I: Sample>(inst: &I, seed: u64) -> expansion_cubes::Result<()> {
    let mut rng = Seed(seed).rng();
    let mut dims = [0usize; 5];
    let mut empty = 0;
    for _ in 0..200 {
        let (c, d) = random_cube_pair(inst, &mut rng, 6, 3);
        let meet = cube_intersection(inst, &c, &d)?;
        let corners = match &meet {
            Some(m) => cube_vertices(inst, m)?,
            None => Vec::new(),
        };
        assert_eq!(corners, brute_cube_intersection(inst, &c, &d));
        assert!(intersection_lemma_check(inst, &c, &d)?.passed());
        match meet {
            Some(m) => dims[m.dim()] += 1,
            None => empty += 1,
        }
    }
    println!("{}: empty {empty}, by dimension {dims:?}", inst.tag());
    Ok(())
}

fn main() -> expansion_cubes::Result<()> {
    run(&ThompsonV, 11)?;
    run(&Houghton::new(2)?, 12)
}

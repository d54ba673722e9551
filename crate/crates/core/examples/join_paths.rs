//! Common upper bounds with explicit ascending paths from both vertices.

use expansion_cubes::complex::join;
use expansion_cubes::houghton::Houghton;
use expansion_cubes::thompson::{ball_vertex, ThompsonV};

fn main() -> expansion_cubes::Result<()> {
    let a = ball_vertex(["0", "1"])?;
    let b = ball_vertex(["00", "01", "1"])?;
    let w = join(&ThompsonV, &a, &b)?;
    w.verify(&ThompsonV, &a, &b)?;
    println!("upper bound at height {}", w.upper.height());
    println!("{} steps from the first, {} from the second", w.from_first.steps.len(), w.from_second.steps.len());
    println!("path: {}", serde_json::to_string(&w.from_first.steps).unwrap());

    let h = Houghton::new(2)?;
    let (a, b) = (h.standard_vertex(&[3, 1]), h.standard_vertex(&[1, 4]));
    let w = join(&h, &a, &b)?;
    w.verify(&h, &a, &b)?;
    println!("H_2: heights {} and {} meet at height {}", a.height(), b.height(), w.upper.height());
    Ok(())
}

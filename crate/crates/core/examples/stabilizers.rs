//! Vertex stabilizers: permutations of the elements realized by group elements.

use expansion_cubes::complex::{is_subgroup, stabilizer};
use expansion_cubes::houghton::Houghton;
use expansion_cubes::thompson::{ball_vertex, ThompsonV};

fn main() -> expansion_cubes::Result<()> {
    for words in [vec![""], vec!["0", "1"], vec!["0", "10", "11"], vec!["00", "01", "10", "11"]] {
        let v = ball_vertex(words.iter().copied())?;
        let stab = stabilizer(&ThompsonV, &v)?;
        println!("V height {}: order {}, closed {}", v.height(), stab.len(), is_subgroup(&ThompsonV, &stab));
    }
    let swap = &stabilizer(&ThompsonV, &ball_vertex(["0", "1"])?)?[1];
    println!("nontrivial element at the halves: {swap}");

    let h = Houghton::new(2)?;
    let v = h.standard_vertex(&[3, 2]);
    let stab = stabilizer(&h, &v)?;
    println!("H_2 with 3 points: order {}", stab.len());
    Ok(())
}

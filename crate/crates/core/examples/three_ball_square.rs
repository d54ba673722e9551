//! The square spanned by expanding `B_0` and `B_10` at `{B_0, B_10, B_11}`.

use expansion_cubes::complex::{cube_vertices, cubes_at, Cube};
use expansion_cubes::thompson::{ball_vertex, PrefixMapTable, ThompsonV};

fn main() -> expansion_cubes::Result<()> {
    let v = ball_vertex(["0", "10", "11"])?;
    let all = cubes_at(&ThompsonV, &v, 3);
    for d in 0..=3 {
        println!("{} cubes of dimension {d}", all.iter().filter(|c| c.dim() == d).count());
    }

    let ball = |w: &str| PrefixMapTable::ball(w.parse().unwrap());
    let square = Cube::new(&ThompsonV, v, vec![ball("0"), ball("10")])?;
    assert!(all.contains(&square));
    for w in cube_vertices(&ThompsonV, &square)? {
        let labels: Vec<String> = w.elements().iter().map(|b| b.to_string()).collect();
        println!("  {{{}}}", labels.join(", "));
    }
    Ok(())
}

//! Breadth-first exploration from the root, exported as DOT and JSON.
//!
//! ```text
//! cargo run --example explore -- 3 ball.dot
//! ```

use expansion_cubes::complex::{bfs, BfsCaps};
use expansion_cubes::thompson::ThompsonV;
use expansion_cubes::ExpansionInstance;

fn main() -> std::io::Result<()> {
    let mut args = std::env::args().skip(1);
    let radius = args.next().and_then(|r| r.parse().ok()).unwrap_or(2);
    let g = bfs(&ThompsonV, &ThompsonV.base_vertex(), radius, BfsCaps::default());
    println!("radius {radius}: {} vertices, {} edges", g.vertices.len(), g.edges.len());
    for d in 0..=radius {
        let shell = g.distances.iter().filter(|&&x| x == d).count();
        println!("  distance {d}: {shell}");
    }
    match args.next() {
        Some(path) => std::fs::write(path, g.to_dot())?,
        None => println!("{}", g.to_json()),
    }
    Ok(())
}

//! Link graph at a vertex and the check that every clique spans a cube.

use expansion_cubes::complex::{check_flag, link_graph};
use expansion_cubes::houghton::Houghton;
use expansion_cubes::thompson::{ball_vertex, ThompsonV};

fn main() -> expansion_cubes::Result<()> {
    let v = ball_vertex(["00", "01", "1"])?;
    let link = link_graph(&ThompsonV, &v);
    println!("{} moves, {} disjoint pairs", link.len(), link.edges().len());
    let report = check_flag(&ThompsonV, &v, 6);
    println!(
        "V: {} cliques checked, largest {}, passed {}",
        report.cliques_checked,
        report.largest_clique,
        report.passed()
    );

    let h = Houghton::new(3)?;
    let w = h.standard_vertex(&[3, 2, 4]);
    let report = check_flag(&h, &w, 6);
    println!(
        "H_3: {} nodes, {} edges, largest clique {}, passed {}",
        report.nodes,
        report.edges,
        report.largest_clique,
        report.passed()
    );
    Ok(())
}

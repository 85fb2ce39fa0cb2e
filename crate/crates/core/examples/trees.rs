//! Parse a Brauer tree from JSON, list the trees with four edges and print
//! one of them as Graphviz.

use brauer_tilt::tree::{enumerate_trees, BrauerTree};

fn main() -> brauer_tilt::Result<()> {
    let text = r#"{
        "vertices": [0, 1, 2, 3],
        "edges": [[0, 1], [1, 2], [1, 3]],
        "cyclic_order": {"0": [0], "1": [0, 1, 2], "2": [1], "3": [2]},
        "exceptional": 0
    }"#;
    let claw = BrauerTree::from_json(text)?;
    println!(
        "parsed tree: {} edges, code {}",
        claw.edge_count(),
        claw.canonical_code()
    );
    println!(
        "isomorphic to the 3-star: {}",
        claw.is_isomorphic(&BrauerTree::star(3))
    );

    let trees = enumerate_trees(4)?;
    println!("{} trees with 4 edges:", trees.len());
    for t in &trees {
        println!("  {}", t.canonical_code());
    }
    print!("{}", BrauerTree::line(3).to_dot());
    Ok(())
}

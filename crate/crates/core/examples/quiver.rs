//! The Brauer quiver of a tree: A-cycles, path bases and multiplication.

use brauer_tilt::quiver::{BrauerQuiver, CycleId};
use brauer_tilt::tree::BrauerTree;

fn main() -> brauer_tilt::Result<()> {
    let q = BrauerQuiver::new(&BrauerTree::line(3));
    for c in q.cycle_ids() {
        let kind = if q.is_formal_loop(c) {
            " (formal loop)"
        } else {
            ""
        };
        println!("A-cycle {}: {:?}{kind}", c.0, q.cycle(c));
    }
    println!("dimension {}", q.dimension());
    for row in q.cartan_matrix() {
        println!("  {row:?}");
    }

    let paths = q.hom_basis(0, 1);
    println!("paths 0 -> 1: {paths:?}");
    let back = q.hom_basis(1, 0);
    // going 1 -> 0 and then 0 -> 1 closes the A-cycle at vertex 1
    let loop_ = q.multiply(&paths[0], &back[0])?;
    println!("composite: {loop_:?}");
    println!("successor of 1 on cycle 2: {}", q.successor(1, CycleId(2)));
    Ok(())
}

//! Two-term tilting complexes as maximal cliques of the compatibility graph.

use brauer_tilt::quiver::BrauerQuiver;
use brauer_tilt::tilting::enumerate_tiltings;
use brauer_tilt::tree::BrauerTree;

fn main() -> brauer_tilt::Result<()> {
    let q = BrauerQuiver::new(&BrauerTree::line(3));
    let tiltings = enumerate_tiltings(&q)?;
    println!("{} tilting complexes", tiltings.len());
    for t in &tiltings {
        println!(
            "{:<28} det {:>2}  K0 {:?}",
            t.label(),
            t.k0_determinant(),
            t.k0_matrix()
        );
    }
    Ok(())
}

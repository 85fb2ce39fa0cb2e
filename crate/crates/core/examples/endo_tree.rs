//! The Brauer tree of End(T) for each tilting complex on a small tree.

use brauer_tilt::endo::{cartan_matrix, endo_tree, is_star};
use brauer_tilt::quiver::BrauerQuiver;
use brauer_tilt::tilting::enumerate_tiltings;
use brauer_tilt::tree::BrauerTree;

fn main() -> brauer_tilt::Result<()> {
    let q = BrauerQuiver::new(&BrauerTree::line(3));
    for t in enumerate_tiltings(&q)?.iter().take(6) {
        let e = endo_tree(t, &q)?;
        println!("{}", t.label());
        println!("  Cartan {:?}", cartan_matrix(t, &q)?);
        for (g, order) in e.groups.iter().zip(&e.cyclic_orders) {
            println!("  A-cycle {} {:?}: {order:?}", g.cycle.0, g.kind);
        }
        println!(
            "  endomorphism tree {} star: {}",
            e.tree.canonical_code(),
            is_star(&e.tree)
        );
    }
    Ok(())
}

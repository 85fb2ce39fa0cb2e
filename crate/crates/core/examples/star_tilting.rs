//! Tilting complexes whose endomorphism ring is a Brauer star algebra, built
//! around each A-cycle.

use brauer_tilt::endo::{endo_tree, is_star, star_tilting, GroupKind};
use brauer_tilt::oracle::Oracle;
use brauer_tilt::quiver::BrauerQuiver;
use brauer_tilt::tree::BrauerTree;

fn main() -> brauer_tilt::Result<()> {
    let q = BrauerQuiver::new(&BrauerTree::line(4));
    let oracle = Oracle::new(&q);
    for c in q.cycle_ids() {
        for kind in [GroupKind::Sources, GroupKind::Sinks] {
            let t = star_tilting(&q, c, kind)?;
            let tilting = oracle
                .verify_tilting(t.summands())
                .iter()
                .all(|r| r.orthogonal);
            let star = is_star(&endo_tree(&t, &q)?.tree);
            println!(
                "cycle {} {kind:?}: {} tilting {tilting} star {star}",
                c.0,
                t.label()
            );
        }
    }
    Ok(())
}

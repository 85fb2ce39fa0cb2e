//! Check every prediction against the oracle on all trees up to an edge
//! bound (default 3, or the first argument).

use brauer_tilt::sweep::sweep;

fn main() -> brauer_tilt::Result<()> {
    let bound = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let report = sweep(bound, None)?;
    for t in &report.trees {
        println!(
            "{:<14} indecomposables {:>3} tiltings {:>4} stars {:>2}",
            t.code, t.indecomposables, t.tiltings, t.star_tiltings
        );
    }
    println!("star tally {:?}", report.star_tally);
    println!("discrepancies {}", report.discrepancies.len());
    Ok(())
}

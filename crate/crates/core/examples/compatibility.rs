//! Classify every pair of indecomposables on a tree and compare with the
//! oracle.

use brauer_tilt::compat::classify_pair;
use brauer_tilt::oracle::Oracle;
use brauer_tilt::quiver::BrauerQuiver;
use brauer_tilt::tree::BrauerTree;
use brauer_tilt::two_term::enumerate_indecomposables;
use std::collections::BTreeMap;

fn main() -> brauer_tilt::Result<()> {
    let tree = BrauerTree::from_bracket_code("(()(()))")?;
    let q = BrauerQuiver::new(&tree);
    let oracle = Oracle::new(&q);
    let objects = enumerate_indecomposables(&q);
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let mut disagreements = 0;
    for (i, a) in objects.iter().enumerate() {
        for b in &objects[i..] {
            let label = classify_pair(a, b, &q)?;
            *tally.entry(label.to_string()).or_default() += 1;
            if label.is_compatible() != oracle.compatible(a, b) {
                disagreements += 1;
            }
        }
    }
    for (label, count) in &tally {
        println!("{label:<18} {count}");
    }
    println!("disagreements with the oracle: {disagreements}");
    Ok(())
}

//! Every indecomposable two-term partial tilting complex of a small Brauer
//! tree algebra, with its projective terms and JSON form.

use brauer_tilt::quiver::BrauerQuiver;
use brauer_tilt::tree::BrauerTree;
use brauer_tilt::two_term::enumerate_indecomposables;

fn main() {
    let q = BrauerQuiver::new(&BrauerTree::star(3));
    let objects = enumerate_indecomposables(&q);
    println!("{} indecomposables on the 3-star", objects.len());
    for o in &objects {
        let (d0, d1) = o.terms();
        println!("{:<10} degree 0 {d0:?}, degree 1 {d1:?}", o.to_string());
    }
    println!(
        "{}",
        serde_json::to_string(&objects[objects.len() - 1]).unwrap()
    );
}

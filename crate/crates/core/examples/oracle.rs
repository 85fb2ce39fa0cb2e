//! Hom spaces in the homotopy category computed by linear algebra over a
//! prime field.

use brauer_tilt::oracle::{Complex, Oracle};
use brauer_tilt::quiver::BrauerQuiver;
use brauer_tilt::tree::BrauerTree;
use brauer_tilt::two_term::{enumerate_indecomposables, RealizedComplex};

fn main() {
    let q = BrauerQuiver::new(&BrauerTree::line(2));
    let oracle = Oracle::new(&q);
    println!("working over F_{}", oracle.prime());
    let objects = enumerate_indecomposables(&q);
    for a in &objects {
        for b in &objects {
            let [m, z, p] = oracle.object_hom_dims(a, b);
            println!("Hom({a}, {b}[s]) for s = -1, 0, 1: {m} {z} {p}");
        }
    }
    // P0 -> P0 with image the socle is not a partial tilting complex
    let bad = RealizedComplex::socle_quotient_presentation(0);
    println!(
        "P0/soc partial tilting: {}",
        oracle.verify_partial_tilting(&bad)
    );
    let x = Complex::of_object(&q, &objects[2]);
    let maps = oracle.hom_basis(&x, &x);
    let nonzero = maps.iter().filter(|f| !oracle.is_null_homotopic(f)).count();
    println!(
        "End({}) has a basis of {} chain maps, {nonzero} not null-homotopic",
        objects[2],
        maps.len()
    );
}

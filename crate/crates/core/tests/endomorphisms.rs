//! Cyclic orders of the endomorphism quiver checked by composing oracle
//! chain maps, plus negative controls that must be rejected.

use brauer_tilt::endo::{
    acycle_partition, cyclic_order, cyclic_order_with_greatest, endo_tree, is_star,
    normalize_cycle, star_tilting, Group, GroupKind,
};
use brauer_tilt::oracle::Oracle;
use brauer_tilt::quiver::{BrauerQuiver, CycleId};
use brauer_tilt::sweep::check_cyclic_order;
use brauer_tilt::tilting::{enumerate_tiltings, TiltingComplex};
use brauer_tilt::tree::{enumerate_trees, BrauerTree};
use brauer_tilt::two_term::TwoTermObject;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every group with at least `min` members on trees with up to 4 edges.
fn groups(min: usize) -> Vec<(BrauerQuiver, TiltingComplex, Group)> {
    let mut out = Vec::new();
    for tree in (1..=4).flat_map(|n| enumerate_trees(n).unwrap()) {
        let q = BrauerQuiver::new(&tree);
        for t in enumerate_tiltings(&q).unwrap() {
            for g in acycle_partition(&t, &q) {
                if g.members.len() >= min {
                    out.push((q.clone(), t.clone(), g));
                }
            }
        }
    }
    out
}

/// The first vertex of a member's ordering sequence on the group's cycle.
fn first_vertex(q: &BrauerQuiver, obj: &TwoTermObject, c: CycleId) -> usize {
    match obj {
        TwoTermObject::Stalk { vertex, .. } => *vertex,
        TwoTermObject::Diagram(d) => d.vertices_on(q, c)[0],
    }
}

#[test]
fn top_vertex_choice_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (q, t, g) in groups(2) {
        let base = normalize_cycle(&cyclic_order(&t, &g, &q).unwrap());
        for _ in 0..3 {
            let top = *q.cycle(g.cycle).choose(&mut rng).unwrap();
            let order = cyclic_order_with_greatest(&t, &g, &q, top).unwrap();
            assert_eq!(normalize_cycle(&order), base, "{} top {top}", t.label());
        }
    }
}

#[test]
fn computed_orders_pass_the_oracle() {
    for (q, t, g) in groups(2) {
        let oracle = Oracle::new(&q);
        let order = cyclic_order(&t, &g, &q).unwrap();
        check_cyclic_order(&oracle, &q, &t, &order).unwrap();
    }
}

#[test]
fn reversed_orders_fail_the_oracle() {
    let cases = groups(3);
    assert!(!cases.is_empty());
    for (q, t, g) in cases {
        let oracle = Oracle::new(&q);
        let mut order = cyclic_order(&t, &g, &q).unwrap();
        order.reverse();
        assert!(
            check_cyclic_order(&oracle, &q, &t, &order).is_err(),
            "{}",
            t.label()
        );
    }
}

/// Members starting at the same vertex are separated only by the parity
/// rule for empty spots; swapping them must break the cycle.
#[test]
fn swapping_members_with_a_shared_start_fails() {
    let mut tested = 0;
    for (q, t, g) in groups(3) {
        let oracle = Oracle::new(&q);
        let order = cyclic_order(&t, &g, &q).unwrap();
        let starts: Vec<usize> = order
            .iter()
            .map(|&i| first_vertex(&q, &t.summands()[i], g.cycle))
            .collect();
        for a in 0..order.len() {
            for b in a + 1..order.len() {
                if starts[a] != starts[b] {
                    continue;
                }
                let mut swapped = order.clone();
                swapped.swap(a, b);
                if normalize_cycle(&swapped) == normalize_cycle(&order) {
                    continue;
                }
                tested += 1;
                assert!(
                    check_cyclic_order(&oracle, &q, &t, &swapped).is_err(),
                    "{}: {swapped:?} accepted",
                    t.label()
                );
            }
        }
    }
    assert!(tested > 0);
}

#[test]
fn projectives_and_their_shift_give_back_the_tree() {
    for tree in (1..=4).flat_map(|n| enumerate_trees(n).unwrap()) {
        let q = BrauerQuiver::new(&tree);
        let n = q.vertex_count();
        for degree in [
            brauer_tilt::two_term::Degree::Zero,
            brauer_tilt::two_term::Degree::One,
        ] {
            let summands = (0..n).map(|x| TwoTermObject::stalk(x, degree)).collect();
            let t = TiltingComplex::new(summands, &q).unwrap();
            let e = endo_tree(&t, &q).unwrap();
            assert!(
                e.tree.is_isomorphic(&tree),
                "{} {degree:?}",
                tree.canonical_code()
            );
        }
    }
}

#[test]
fn star_from_the_middle_of_a_line() {
    let q = BrauerQuiver::new(&BrauerTree::line(3));
    for c in q.cycle_ids() {
        for kind in [GroupKind::Sources, GroupKind::Sinks] {
            let t = star_tilting(&q, c, kind).unwrap();
            let e = endo_tree(&t, &q).unwrap();
            assert!(is_star(&e.tree));
            assert!(e.tree.is_isomorphic(&BrauerTree::star(3)));
        }
    }
}

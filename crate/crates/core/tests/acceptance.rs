//! One line per acceptance criterion. Every criterion compares the
//! combinatorial side with the homological oracle or with brute force.

#![allow(clippy::needless_range_loop)]

use brauer_tilt::endo::{
    acycle_partition, cartan_matrix, cyclic_order, cyclic_order_with_greatest, endo_tree,
    happel_sum, is_star, normalize_cycle, star_tilting, GroupKind,
};
use brauer_tilt::oracle::{Complex, Oracle};
use brauer_tilt::quiver::BrauerQuiver;
use brauer_tilt::sweep::{check_cyclic_order, sweep};
use brauer_tilt::tilting::{enumerate_tiltings, CompatibilityGraph, TiltingComplex};
use brauer_tilt::tree::{enumerate_trees, BrauerTree};
use brauer_tilt::two_term::{enumerate_indecomposables, RealizedComplex};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn trees_up_to(max: usize) -> Vec<BrauerTree> {
    (1..=max)
        .flat_map(|n| enumerate_trees(n).unwrap())
        .collect()
}

fn criterion_1() -> Check {
    let mut pairs = 0;
    for tree in trees_up_to(4) {
        let q = BrauerQuiver::new(&tree);
        let oracle = Oracle::new(&q);
        let objects = enumerate_indecomposables(&q);
        let graph = CompatibilityGraph::new(objects.clone(), &q).map_err(|e| e.to_string())?;
        for i in 0..objects.len() {
            for j in i + 1..objects.len() {
                pairs += 1;
                if graph.label(i, j).is_compatible() != oracle.compatible(&objects[i], &objects[j])
                {
                    return Err(format!(
                        "{}: {} / {} classified {}",
                        tree.canonical_code(),
                        objects[i],
                        objects[j],
                        graph.label(i, j)
                    ));
                }
            }
        }
    }
    Ok(format!("{pairs} pairs agree"))
}

fn criterion_2() -> Check {
    let mut checked = 0;
    for tree in trees_up_to(4) {
        let q = BrauerQuiver::new(&tree);
        let oracle = Oracle::new(&q);
        for o in enumerate_indecomposables(&q) {
            checked += 1;
            if !oracle.verify_partial_tilting(&o.realize(&q)) {
                return Err(format!(
                    "{}: {o} has self-extensions",
                    tree.canonical_code()
                ));
            }
        }
        for x in 0..q.vertex_count() {
            if oracle.verify_partial_tilting(&RealizedComplex::socle_quotient_presentation(x)) {
                return Err(format!("{}: P{x}/soc passes", tree.canonical_code()));
            }
        }
    }
    Ok(format!("{checked} objects"))
}

fn criterion_3() -> Check {
    let mut pairs = 0;
    for tree in trees_up_to(3) {
        let q = BrauerQuiver::new(&tree);
        let oracle = Oracle::new(&q);
        let objects = enumerate_indecomposables(&q);
        for a in &objects {
            for b in &objects {
                pairs += 1;
                let [m, z, p] = oracle.object_hom_dims(a, b);
                let euler = z as i64 - m as i64 - p as i64;
                if euler != happel_sum(a, b, &q) {
                    return Err(format!(
                        "{a} / {b}: oracle {euler}, formula {}",
                        happel_sum(a, b, &q)
                    ));
                }
            }
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

/// Largest set of objects that are pairwise compatible according to the
/// oracle, by exhaustive extension.
fn oracle_clique_number(ok: &[Vec<bool>]) -> usize {
    fn grow(ok: &[Vec<bool>], chosen: &mut Vec<usize>, from: usize) -> usize {
        let mut best = chosen.len();
        for v in from..ok.len() {
            if chosen.iter().all(|&u| ok[u][v]) {
                chosen.push(v);
                best = best.max(grow(ok, chosen, v + 1));
                chosen.pop();
            }
        }
        best
    }
    grow(ok, &mut Vec::new(), 0)
}

fn count_oracle_cliques(ok: &[Vec<bool>], size: usize) -> usize {
    fn go(ok: &[Vec<bool>], chosen: &mut Vec<usize>, from: usize, size: usize) -> usize {
        if chosen.len() == size {
            return 1;
        }
        let mut total = 0;
        for v in from..ok.len() {
            if chosen.iter().all(|&u| ok[u][v]) {
                chosen.push(v);
                total += go(ok, chosen, v + 1, size);
                chosen.pop();
            }
        }
        total
    }
    go(ok, &mut Vec::new(), 0, size)
}

fn criterion_4() -> Check {
    let mut total = 0;
    for tree in trees_up_to(4) {
        let q = BrauerQuiver::new(&tree);
        let n = q.vertex_count();
        let oracle = Oracle::new(&q);
        let tiltings = enumerate_tiltings(&q).map_err(|e| e.to_string())?;
        for t in &tiltings {
            if let Some(r) = oracle
                .verify_tilting(t.summands())
                .iter()
                .find(|r| !r.orthogonal)
            {
                return Err(format!("{}: {} vs {}", t.label(), r.first, r.second));
            }
            if t.k0_determinant().abs() != 1 {
                return Err(format!("{}: determinant {}", t.label(), t.k0_determinant()));
            }
        }
        let objects = enumerate_indecomposables(&q);
        let ok: Vec<Vec<bool>> = objects
            .iter()
            .map(|a| {
                objects
                    .iter()
                    .map(|b| a != b && oracle.compatible(a, b))
                    .collect()
            })
            .collect();
        let omega = oracle_clique_number(&ok);
        if omega != n {
            return Err(format!(
                "{}: largest compatible set has {omega} objects",
                tree.canonical_code()
            ));
        }
        let expected = count_oracle_cliques(&ok, n);
        if expected != tiltings.len() {
            return Err(format!(
                "{}: {} tiltings enumerated, oracle finds {expected}",
                tree.canonical_code(),
                tiltings.len()
            ));
        }
        total += tiltings.len();
    }
    Ok(format!("{total} tiltings"))
}

/// Every tilting on trees with at most 3 edges, then 50 seeded samples from
/// the trees with 4 edges.
fn endo_corpus() -> Vec<(BrauerQuiver, Vec<TiltingComplex>)> {
    let mut out = Vec::new();
    for tree in trees_up_to(3) {
        let q = BrauerQuiver::new(&tree);
        let t = enumerate_tiltings(&q).unwrap();
        out.push((q, t));
    }
    let mut pool = Vec::new();
    for (k, tree) in enumerate_trees(4).unwrap().into_iter().enumerate() {
        let q = BrauerQuiver::new(&tree);
        for i in 0..enumerate_tiltings(&q).unwrap().len() {
            pool.push((k, i));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut chosen: Vec<(usize, usize)> = pool.choose_multiple(&mut rng, 50).copied().collect();
    chosen.sort();
    for (k, tree) in enumerate_trees(4).unwrap().into_iter().enumerate() {
        let q = BrauerQuiver::new(&tree);
        let all = enumerate_tiltings(&q).unwrap();
        let picked = chosen
            .iter()
            .filter(|(kk, _)| *kk == k)
            .map(|&(_, i)| all[i].clone())
            .collect();
        out.push((q, picked));
    }
    out
}

fn criterion_5(corpus: &[(BrauerQuiver, Vec<TiltingComplex>)]) -> Check {
    let mut checked = 0;
    for (q, tiltings) in corpus {
        let oracle = Oracle::new(q);
        for t in tiltings {
            checked += 1;
            let n = t.len();
            let cx: Vec<Complex> = t
                .summands()
                .iter()
                .map(|s| Complex::of_object(q, s))
                .collect();
            let cartan = cartan_matrix(t, q).map_err(|e| e.to_string())?;
            for a in 0..n {
                for b in 0..n {
                    let d = oracle.hom_dim(&cx[a], &cx[b], 0);
                    if cartan[a][b] != d {
                        return Err(format!(
                            "{}: entry ({a},{b}) {} vs oracle {d}",
                            t.label(),
                            cartan[a][b]
                        ));
                    }
                }
            }
            let e = endo_tree(t, q).map_err(|e| e.to_string())?;
            if e.tree.edge_count() != n {
                return Err(format!("{}: {} edges", t.label(), e.tree.edge_count()));
            }
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    let together = e
                        .groups
                        .iter()
                        .any(|g| g.members.contains(&a) && g.members.contains(&b));
                    if together != (cartan[a][b] == 1) {
                        return Err(format!(
                            "{}: summands {a} and {b} grouped {together}",
                            t.label()
                        ));
                    }
                }
            }
        }
    }
    Ok(format!("{checked} tiltings"))
}

fn criterion_6() -> Check {
    let mut tally = Vec::new();
    for tree in (2..=4).flat_map(|n| enumerate_trees(n).unwrap()) {
        let q = BrauerQuiver::new(&tree);
        let n = q.vertex_count();
        let mut stars = 0;
        for t in enumerate_tiltings(&q).map_err(|e| e.to_string())? {
            stars += usize::from(is_star(&endo_tree(&t, &q).map_err(|e| e.to_string())?.tree));
        }
        if stars != 2 * (n + 1) {
            return Err(format!("{}: {stars} star tiltings", tree.canonical_code()));
        }
        tally.push(stars);
    }
    Ok(format!("tallies {tally:?}"))
}

fn criterion_7() -> Check {
    let mut built = 0;
    for tree in trees_up_to(5) {
        let q = BrauerQuiver::new(&tree);
        let oracle = Oracle::new(&q);
        for c in q.cycle_ids() {
            for kind in [GroupKind::Sources, GroupKind::Sinks] {
                built += 1;
                let t = star_tilting(&q, c, kind).map_err(|e| e.to_string())?;
                let where_ = format!("{} cycle {} {kind:?}", tree.canonical_code(), c.0);
                if oracle
                    .verify_tilting(t.summands())
                    .iter()
                    .any(|r| !r.orthogonal)
                {
                    return Err(format!("{where_}: not tilting"));
                }
                if !is_star(&endo_tree(&t, &q).map_err(|e| e.to_string())?.tree) {
                    return Err(format!("{where_}: not a star"));
                }
            }
        }
    }
    Ok(format!("{built} constructions"))
}

fn criterion_8(corpus: &[(BrauerQuiver, Vec<TiltingComplex>)]) -> Check {
    let mut groups = 0;
    for (q, tiltings) in corpus {
        let oracle = Oracle::new(q);
        for t in tiltings {
            for g in acycle_partition(t, q)
                .into_iter()
                .filter(|g| g.members.len() >= 2)
            {
                groups += 1;
                let order = cyclic_order(t, &g, q).map_err(|e| e.to_string())?;
                check_cyclic_order(&oracle, q, t, &order)
                    .map_err(|e| format!("{}: {e}", t.label()))?;
            }
        }
    }
    Ok(format!("{groups} groups"))
}

fn criterion_9(corpus: &[(BrauerQuiver, Vec<TiltingComplex>)]) -> Check {
    let first = serde_json::to_vec(&sweep(3, None).map_err(|e| e.to_string())?).unwrap();
    let second = serde_json::to_vec(&sweep(3, None).map_err(|e| e.to_string())?).unwrap();
    if first != second {
        return Err("sweep output differs between runs".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut groups = 0;
    for (q, tiltings) in corpus {
        for t in tiltings {
            for g in acycle_partition(t, q)
                .into_iter()
                .filter(|g| g.members.len() >= 2)
            {
                groups += 1;
                let base = normalize_cycle(&cyclic_order(t, &g, q).map_err(|e| e.to_string())?);
                for _ in 0..3 {
                    let top = *q.cycle(g.cycle).choose(&mut rng).unwrap();
                    let other =
                        cyclic_order_with_greatest(t, &g, q, top).map_err(|e| e.to_string())?;
                    if normalize_cycle(&other) != base {
                        return Err(format!("{}: top {top} gives {other:?}", t.label()));
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} bytes identical, {groups} groups invariant",
        first.len()
    ))
}

fn main() {
    let corpus = endo_corpus();
    let results: Vec<(&str, Check)> = vec![
        ("1 compatibility matches the oracle, n <= 4", criterion_1()),
        (
            "2 diagrams are partial tilting, P/soc is not, n <= 4",
            criterion_2(),
        ),
        ("3 alternating Hom sum formula, n <= 3", criterion_3()),
        (
            "4 tilting verification and clique bound, n <= 4",
            criterion_4(),
        ),
        (
            "5 endomorphism ring Cartan and tree, n <= 3 plus 50 at n = 4",
            criterion_5(&corpus),
        ),
        (
            "6 2(n+1) star tiltings per tree, 2 <= n <= 4",
            criterion_6(),
        ),
        (
            "7 star construction on every A-cycle, n <= 5",
            criterion_7(),
        ),
        (
            "8 cyclic orders compose to nonzero loops",
            criterion_8(&corpus),
        ),
        (
            "9 determinism and top-vertex invariance",
            criterion_9(&corpus),
        ),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("PASS  {name}  ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}  ({detail})");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

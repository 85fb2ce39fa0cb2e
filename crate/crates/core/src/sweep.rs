//! Cross-checks of every combinatorial prediction against the oracle, per
//! tree and over all trees up to an edge bound.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::compat::CaseLabel;
use crate::endo::{
    acycle_partition, cartan_matrix, cyclic_order, cyclic_order_with_greatest, endo_tree,
    happel_sum, is_star, normalize_cycle, star_tilting, GroupKind,
};
use crate::error::Result;
use crate::oracle::{Complex, Oracle, DEFAULT_PRIME};
use crate::quiver::BrauerQuiver;
use crate::tilting::{tiltings_of_graph, CompatibilityGraph, TiltingComplex};
use crate::tree::{enumerate_trees_bounded, BrauerTree};
use crate::two_term::{enumerate_indecomposables, RealizedComplex, TwoTermObject};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub tree: String,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeSummary {
    pub edges: usize,
    pub code: String,
    pub indecomposables: usize,
    pub pairs: usize,
    pub compatible_pairs: usize,
    pub tiltings: usize,
    pub star_tiltings: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TreeReport {
    pub summary: TreeSummary,
    pub discrepancies: Vec<Discrepancy>,
}

/// Runs the classifier, the tilting enumeration and the endomorphism-ring
/// construction on one tree and compares each result with the oracle.
pub fn verify_tree(tree: &BrauerTree, prime: u64) -> Result<TreeReport> {
    let q = BrauerQuiver::new(tree);
    let oracle = Oracle::with_any_prime(&q, prime)?;
    let code = tree.canonical_code();
    let mut out = Vec::new();
    let mut flag = |check: &'static str, detail: String| {
        out.push(Discrepancy {
            tree: code.clone(),
            check,
            detail,
        })
    };

    let objects = enumerate_indecomposables(&q);
    let complexes: Vec<Complex> = objects.iter().map(|o| Complex::of_object(&q, o)).collect();
    let graph = CompatibilityGraph::new(objects.clone(), &q)?;

    // pairwise Hom dimensions at shifts -1, 0, 1, both orders
    let dims: Vec<Vec<[usize; 3]>> = complexes
        .par_iter()
        .map(|x| complexes.iter().map(|y| oracle.hom_dims(x, y)).collect())
        .collect();

    let mut compatible_pairs = 0;
    let mut pairs = 0;
    for i in 0..objects.len() {
        for j in i..objects.len() {
            pairs += 1;
            let label: CaseLabel = graph.label(i, j);
            let truth = dims[i][j][0] == 0 && dims[j][i][0] == 0;
            if label.is_compatible() {
                compatible_pairs += 1;
            }
            if label.is_compatible() != truth {
                flag(
                    "compatibility",
                    format!(
                        "{} / {}: {label}, oracle says {truth}",
                        objects[i], objects[j]
                    ),
                );
            }
            if graph.label(j, i) != label {
                flag("symmetry", format!("{} / {}", objects[i], objects[j]));
            }
            let euler = dims[i][j][1] as i64 - dims[i][j][0] as i64 - dims[i][j][2] as i64;
            let happel = happel_sum(&objects[i], &objects[j], &q);
            if euler != happel {
                flag(
                    "happel",
                    format!(
                        "{} / {}: oracle {euler}, formula {happel}",
                        objects[i], objects[j]
                    ),
                );
            }
        }
        if dims[i][i][0] != 0 || dims[i][i][2] != 0 {
            flag(
                "partial_tilting",
                format!("{} has self-extensions", objects[i]),
            );
        }
        if dims[i][i][1] < 2 {
            flag(
                "endomorphisms",
                format!("{} has {} endomorphisms", objects[i], dims[i][i][1]),
            );
        }
    }
    for x in 0..q.vertex_count() {
        if oracle.verify_partial_tilting(&RealizedComplex::socle_quotient_presentation(x)) {
            flag("socle_quotient", format!("P{x}/soc presentation passes"));
        }
    }

    let tiltings = match tiltings_of_graph(&graph, &q) {
        Ok(t) => t,
        Err(e) => {
            flag("tilting", e.to_string());
            Vec::new()
        }
    };
    let n = q.vertex_count();
    if graph.clique_number() > n {
        flag(
            "clique_bound",
            format!("clique of size {}", graph.clique_number()),
        );
    }
    let index_of = |o: &TwoTermObject| objects.iter().position(|x| x == o).expect("enumerated");
    let mut star_tiltings = 0;
    for t in &tiltings {
        let idx: Vec<usize> = t.summands().iter().map(index_of).collect();
        for &a in &idx {
            for &b in &idx {
                if dims[a][b][0] != 0 || dims[a][b][2] != 0 {
                    flag(
                        "verify_tilting",
                        format!("{}: {} vs {}", t.label(), objects[a], objects[b]),
                    );
                }
            }
        }
        match check_endo(&q, &oracle, t, |a, b| dims[idx[a]][idx[b]][1]) {
            Ok(star) => star_tiltings += usize::from(star),
            Err(detail) => flag("endo", format!("{}: {detail}", t.label())),
        }
    }
    if n >= 2 && star_tiltings != 2 * (n + 1) {
        flag(
            "star_count",
            format!("{star_tiltings} star tiltings, expected {}", 2 * (n + 1)),
        );
    }
    for c in q.cycle_ids() {
        for kind in [GroupKind::Sources, GroupKind::Sinks] {
            if let Err(detail) = check_star(&q, &oracle, c, kind) {
                flag("star_tilting", format!("cycle {} {kind:?}: {detail}", c.0));
            }
        }
    }

    Ok(TreeReport {
        summary: TreeSummary {
            edges: n,
            code: code.clone(),
            indecomposables: objects.len(),
            pairs,
            compatible_pairs,
            tiltings: tiltings.len(),
            star_tiltings,
        },
        discrepancies: out,
    })
}

/// Endomorphism-ring checks for one tilting complex; `hom0(a, b)` is the
/// oracle's `dim Hom(T_a, T_b)`. Returns whether the endomorphism tree is a
/// star.
pub fn check_endo(
    q: &BrauerQuiver,
    oracle: &Oracle,
    t: &TiltingComplex,
    hom0: impl Fn(usize, usize) -> usize,
) -> std::result::Result<bool, String> {
    let n = t.len();
    let cartan = cartan_matrix(t, q).map_err(|e| e.to_string())?;
    for a in 0..n {
        for b in 0..n {
            if cartan[a][b] != hom0(a, b) {
                return Err(format!(
                    "Cartan entry ({a},{b}) is {}, oracle {}",
                    cartan[a][b],
                    hom0(a, b)
                ));
            }
        }
    }
    let e = endo_tree(t, q).map_err(|e| e.to_string())?;
    if e.tree.edge_count() != n {
        return Err(format!(
            "endomorphism tree has {} edges",
            e.tree.edge_count()
        ));
    }
    for g in acycle_partition(t, q) {
        if g.members.len() < 2 {
            continue;
        }
        let order = cyclic_order(t, &g, q).map_err(|e| e.to_string())?;
        check_cyclic_order(oracle, q, t, &order)?;
        for &top in q.cycle(g.cycle) {
            let other = cyclic_order_with_greatest(t, &g, q, top).map_err(|e| e.to_string())?;
            if normalize_cycle(&other) != normalize_cycle(&order) {
                return Err(format!(
                    "cycle {} {:?}: order {order:?} becomes {other:?} with top vertex {top}",
                    g.cycle.0, g.kind
                ));
            }
        }
    }
    Ok(is_star(&e.tree))
}

/// Composes a nonzero morphism between consecutive summands all the way
/// around `order`, from every starting point, and requires the composite not
/// to be null-homotopic.
pub fn check_cyclic_order(
    oracle: &Oracle,
    q: &BrauerQuiver,
    t: &TiltingComplex,
    order: &[usize],
) -> std::result::Result<(), String> {
    let r = order.len();
    let cx: Vec<Complex> = order
        .iter()
        .map(|&i| Complex::of_object(q, &t.summands()[i]))
        .collect();
    let mut maps = Vec::with_capacity(r);
    for k in 0..r {
        let basis = oracle.hom_basis(&cx[k], &cx[(k + 1) % r]);
        if basis.len() != 1 {
            return Err(format!(
                "Hom({}, {}) has dimension {}",
                t.summands()[order[k]],
                t.summands()[order[(k + 1) % r]],
                basis.len()
            ));
        }
        maps.push(basis.into_iter().next().expect("one element"));
    }
    for start in 0..r {
        let mut acc = maps[start].clone();
        for step in 1..r {
            acc = oracle
                .compose_maps(&maps[(start + step) % r], &acc)
                .map_err(|e| e.to_string())?;
        }
        if oracle.is_null_homotopic(&acc) {
            return Err(format!(
                "composite around {order:?} from {} is null-homotopic",
                t.summands()[order[start]]
            ));
        }
    }
    Ok(())
}

pub fn check_star(
    q: &BrauerQuiver,
    oracle: &Oracle,
    c: crate::quiver::CycleId,
    kind: GroupKind,
) -> std::result::Result<(), String> {
    let t = star_tilting(q, c, kind).map_err(|e| e.to_string())?;
    for report in oracle.verify_tilting(t.summands()) {
        if !report.orthogonal {
            return Err(format!(
                "summands {} and {} are not orthogonal",
                report.first, report.second
            ));
        }
    }
    let e = endo_tree(&t, q).map_err(|e| e.to_string())?;
    if !is_star(&e.tree) {
        return Err(format!(
            "endomorphism tree {} is not a star",
            e.tree.to_json()
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub max_edges: usize,
    pub prime: u64,
    pub trees: Vec<TreeSummary>,
    /// Star tiltings per tree, keyed by edge count.
    pub star_tally: BTreeMap<usize, Vec<usize>>,
    pub discrepancies: Vec<Discrepancy>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Verifies every tree with at most `max_edges` edges. The report lists
/// trees by edge count, then in enumeration order, whatever the thread count.
pub fn sweep(max_edges: usize, prime: Option<u64>) -> Result<SweepReport> {
    let prime = prime.unwrap_or(DEFAULT_PRIME);
    let mut trees = Vec::new();
    for n in 1..=max_edges {
        trees.extend(enumerate_trees_bounded(n, max_edges)?);
    }
    let reports = trees
        .par_iter()
        .map(|t| verify_tree(t, prime))
        .collect::<Result<Vec<_>>>()?;
    let mut star_tally: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut summaries = Vec::new();
    let mut discrepancies = Vec::new();
    for r in reports {
        star_tally
            .entry(r.summary.edges)
            .or_default()
            .push(r.summary.star_tiltings);
        summaries.push(r.summary);
        discrepancies.extend(r.discrepancies);
    }
    Ok(SweepReport {
        max_edges,
        prime,
        trees: summaries,
        star_tally,
        discrepancies,
    })
}

/// Checks a single indecomposable against the oracle: no self-extensions.
pub fn verify_object(q: &BrauerQuiver, oracle: &Oracle, obj: &TwoTermObject) -> bool {
    oracle.verify_partial_tilting(&obj.realize(q))
}

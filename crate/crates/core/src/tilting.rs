//! Basic two-term tilting complexes as maximal cliques of the compatibility
//! graph.

use rayon::prelude::*;
use serde::Serialize;

use crate::compat::{classify_pair, CaseLabel};
use crate::error::{Error, Result};
use crate::quiver::BrauerQuiver;
use crate::two_term::{enumerate_indecomposables, TwoTermObject};

#[derive(Debug, Clone)]
pub struct CompatibilityGraph {
    objects: Vec<TwoTermObject>,
    labels: Vec<Vec<CaseLabel>>,
}

impl CompatibilityGraph {
    pub fn new(objects: Vec<TwoTermObject>, q: &BrauerQuiver) -> Result<Self> {
        let labels = objects
            .par_iter()
            .map(|a| objects.iter().map(|b| classify_pair(a, b, q)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Ok(Self { objects, labels })
    }

    pub fn objects(&self) -> &[TwoTermObject] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn label(&self, i: usize, j: usize) -> CaseLabel {
        self.labels[i][j]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.labels[i][j].is_compatible()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.adjacent(i, j)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.len())
            .map(|i| (i + 1..self.len()).filter(|&j| self.adjacent(i, j)).count())
            .sum()
    }

    /// All maximal cliques, each sorted, in lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let nbrs: Vec<Vec<usize>> = (0..n).map(|i| self.neighbors(i)).collect();
        let mut out: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .flat_map_iter(|v| {
                let p: Vec<usize> = nbrs[v].iter().copied().filter(|&u| u > v).collect();
                let x: Vec<usize> = nbrs[v].iter().copied().filter(|&u| u < v).collect();
                let mut found = Vec::new();
                bron_kerbosch(&nbrs, &mut vec![v], p, x, &mut found);
                found
            })
            .collect();
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    pub fn clique_number(&self) -> usize {
        self.maximal_cliques()
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

/// Bron–Kerbosch with pivoting on the vertex of `P ∪ X` with most
/// neighbours in `P`.
fn bron_kerbosch(
    nbrs: &[Vec<usize>],
    r: &mut Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (intersect(&p, &nbrs[u]).len(), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|v| !nbrs[pivot].contains(v))
        .collect();
    for v in candidates {
        r.push(v);
        bron_kerbosch(
            nbrs,
            r,
            intersect(&p, &nbrs[v]),
            intersect(&x, &nbrs[v]),
            out,
        );
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TiltingComplex {
    summands: Vec<TwoTermObject>,
    k0: Vec<Vec<i64>>,
}

impl TiltingComplex {
    /// Sorts the summands and computes the class matrix; fails unless the
    /// summands are `n` distinct objects with unimodular class matrix.
    pub fn new(mut summands: Vec<TwoTermObject>, q: &BrauerQuiver) -> Result<Self> {
        summands.sort();
        summands.dedup();
        for s in &summands {
            s.validate(q)?;
        }
        if summands.len() != q.vertex_count() {
            return Err(Error::InvalidObject(format!(
                "{} distinct summands, expected {}",
                summands.len(),
                q.vertex_count()
            )));
        }
        let k0 = k0_matrix(&summands, q.vertex_count());
        let det = determinant(&k0);
        if det.abs() != 1 {
            return Err(Error::Inconsistency(format!(
                "class matrix of {} has determinant {det}",
                labels(&summands)
            )));
        }
        Ok(Self { summands, k0 })
    }

    pub fn summands(&self) -> &[TwoTermObject] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn k0_matrix(&self) -> &[Vec<i64>] {
        &self.k0
    }

    pub fn k0_determinant(&self) -> i64 {
        determinant(&self.k0)
    }

    pub fn label(&self) -> String {
        labels(&self.summands)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "summands": self.summands,
            "k0": self.k0,
            "det": self.k0_determinant(),
        })
    }
}

fn labels(objs: &[TwoTermObject]) -> String {
    let parts: Vec<String> = objs.iter().map(TwoTermObject::label).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Row per summand: `+1` for each projective in degree 0, `-1` in degree 1.
pub fn k0_matrix(summands: &[TwoTermObject], n: usize) -> Vec<Vec<i64>> {
    summands
        .iter()
        .map(|s| {
            let mut row = vec![0; n];
            let (d0, d1) = s.terms();
            for x in d0 {
                row[x] += 1;
            }
            for x in d1 {
                row[x] -= 1;
            }
            row
        })
        .collect()
}

/// Exact integer determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Every basic two-term tilting complex, in sorted order.
pub fn enumerate_tiltings(q: &BrauerQuiver) -> Result<Vec<TiltingComplex>> {
    let graph = CompatibilityGraph::new(enumerate_indecomposables(q), q)?;
    tiltings_of_graph(&graph, q)
}

pub fn tiltings_of_graph(
    graph: &CompatibilityGraph,
    q: &BrauerQuiver,
) -> Result<Vec<TiltingComplex>> {
    let n = q.vertex_count();
    let mut out = Vec::new();
    for clique in graph.maximal_cliques() {
        let objs: Vec<TwoTermObject> = clique.iter().map(|&i| graph.objects()[i].clone()).collect();
        if clique.len() != n {
            return Err(Error::Inconsistency(format!(
                "maximal compatible set {} has {} summands, expected {n}",
                labels(&objs),
                clique.len()
            )));
        }
        out.push(TiltingComplex::new(objs, q)?);
    }
    out.sort();
    Ok(out)
}

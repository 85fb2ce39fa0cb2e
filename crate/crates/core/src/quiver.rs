//! The Brauer quiver of a tree, its A-cycles, and the path basis of the
//! Brauer tree algebra with multiplicity one.
//!
//! Morphisms `P_i -> P_j` between indecomposable projectives are spanned by
//! directed paths `i -> j` surviving the relations. Composition `p ∘ q`
//! concatenates `q` then `p`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::BrauerTree;

/// Index of an A-cycle. There is one A-cycle per tree vertex; those coming
/// from leaves are formal loops containing a single quiver vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CycleId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub cycle: CycleId,
}

#[derive(Debug, Clone)]
pub struct BrauerQuiver {
    tree: BrauerTree,
    cycles: Vec<Vec<usize>>,
    // the two A-cycles through each quiver vertex, and the position there
    memberships: Vec<[(CycleId, usize); 2]>,
    cartan: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasisKind {
    Identity,
    Path { cycle: CycleId, length: usize },
    Socle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PathBasisElement {
    pub source: usize,
    pub target: usize,
    pub kind: BasisKind,
}

impl PathBasisElement {
    pub fn identity(vertex: usize) -> Self {
        Self {
            source: vertex,
            target: vertex,
            kind: BasisKind::Identity,
        }
    }

    pub fn socle(vertex: usize) -> Self {
        Self {
            source: vertex,
            target: vertex,
            kind: BasisKind::Socle,
        }
    }

    pub fn is_proper_path(&self) -> bool {
        matches!(self.kind, BasisKind::Path { .. })
    }
}

impl BrauerQuiver {
    pub fn new(tree: &BrauerTree) -> Self {
        let n = tree.edge_count();
        let cycles: Vec<Vec<usize>> = (0..tree.vertex_count())
            .map(|v| tree.cyclic_order(v).to_vec())
            .collect();
        let mut memberships = vec![Vec::with_capacity(2); n];
        for (c, cycle) in cycles.iter().enumerate() {
            for (pos, &x) in cycle.iter().enumerate() {
                memberships[x].push((CycleId(c), pos));
            }
        }
        let memberships: Vec<[(CycleId, usize); 2]> =
            memberships.into_iter().map(|m| [m[0], m[1]]).collect();
        let mut q = Self {
            tree: tree.clone(),
            cycles,
            memberships,
            cartan: Vec::new(),
        };
        q.cartan = (0..n)
            .map(|i| (0..n).map(|j| q.hom_basis(i, j).len() as u32).collect())
            .collect();
        q
    }

    pub fn tree(&self) -> &BrauerTree {
        &self.tree
    }

    pub fn vertex_count(&self) -> usize {
        self.memberships.len()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycle_ids(&self) -> impl Iterator<Item = CycleId> {
        (0..self.cycles.len()).map(CycleId)
    }

    /// Quiver vertices of an A-cycle in arrow order.
    pub fn cycle(&self, c: CycleId) -> &[usize] {
        &self.cycles[c.0]
    }

    pub fn cycle_len(&self, c: CycleId) -> usize {
        self.cycles[c.0].len()
    }

    pub fn is_formal_loop(&self, c: CycleId) -> bool {
        self.cycles[c.0].len() == 1
    }

    /// The two A-cycles through `x`, formal loops included.
    pub fn cycles_of(&self, x: usize) -> [CycleId; 2] {
        let [(a, _), (b, _)] = self.memberships[x];
        [a, b]
    }

    pub fn on_cycle(&self, x: usize, c: CycleId) -> bool {
        self.cycles_of(x).contains(&c)
    }

    pub fn other_cycle(&self, x: usize, c: CycleId) -> CycleId {
        let [a, b] = self.cycles_of(x);
        if a == c {
            b
        } else {
            debug_assert_eq!(b, c);
            a
        }
    }

    /// The unique A-cycle containing two distinct vertices, if any.
    pub fn common_cycle(&self, x: usize, y: usize) -> Option<CycleId> {
        if x == y {
            return None;
        }
        let cy = self.cycles_of(y);
        self.cycles_of(x).into_iter().find(|c| cy.contains(c))
    }

    fn position(&self, x: usize, c: CycleId) -> usize {
        self.memberships[x]
            .iter()
            .find(|(cc, _)| *cc == c)
            .map(|&(_, p)| p)
            .expect("vertex lies on cycle")
    }

    pub fn successor(&self, x: usize, c: CycleId) -> usize {
        let cyc = &self.cycles[c.0];
        cyc[(self.position(x, c) + 1) % cyc.len()]
    }

    pub fn predecessor(&self, x: usize, c: CycleId) -> usize {
        let cyc = &self.cycles[c.0];
        cyc[(self.position(x, c) + cyc.len() - 1) % cyc.len()]
    }

    /// Number of arrows on the directed path `from -> to` inside `c`.
    pub fn distance(&self, c: CycleId, from: usize, to: usize) -> usize {
        let len = self.cycle_len(c);
        (self.position(to, c) + len - self.position(from, c)) % len
    }

    /// Vertices on the directed path `from -> to` in `c`, both ends included.
    pub fn path_vertices(&self, c: CycleId, from: usize, to: usize) -> Vec<usize> {
        let cyc = &self.cycles[c.0];
        let start = self.position(from, c);
        (0..=self.distance(c, from, to))
            .map(|k| cyc[(start + k) % cyc.len()])
            .collect()
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out = Vec::new();
        for c in self.cycle_ids().filter(|&c| !self.is_formal_loop(c)) {
            let cyc = self.cycle(c);
            for (k, &x) in cyc.iter().enumerate() {
                out.push(Arrow {
                    source: x,
                    target: cyc[(k + 1) % cyc.len()],
                    cycle: c,
                });
            }
        }
        out
    }

    /// Basis of `Hom(P_i, P_j)`: identity and socle when `i == j`, the unique
    /// path `i -> j` when the two share an A-cycle, nothing otherwise.
    pub fn hom_basis(&self, i: usize, j: usize) -> Vec<PathBasisElement> {
        if i == j {
            return vec![PathBasisElement::identity(i), PathBasisElement::socle(i)];
        }
        match self.common_cycle(i, j) {
            Some(c) => vec![PathBasisElement {
                source: i,
                target: j,
                kind: BasisKind::Path {
                    cycle: c,
                    length: self.distance(c, i, j),
                },
            }],
            None => Vec::new(),
        }
    }

    /// `p ∘ q`: first `q`, then `p`. `Ok(None)` is the zero morphism.
    pub fn multiply(
        &self,
        p: &PathBasisElement,
        q: &PathBasisElement,
    ) -> Result<Option<PathBasisElement>> {
        if q.target != p.source {
            return Err(Error::NotComposable(format!(
                "{}->{} after {}->{}",
                p.source, p.target, q.source, q.target
            )));
        }
        Ok(match (q.kind, p.kind) {
            (BasisKind::Identity, _) => Some(*p),
            (_, BasisKind::Identity) => Some(*q),
            (BasisKind::Socle, _) | (_, BasisKind::Socle) => None,
            (
                BasisKind::Path {
                    cycle: cq,
                    length: lq,
                },
                BasisKind::Path {
                    cycle: cp,
                    length: lp,
                },
            ) => {
                if cq != cp {
                    return Ok(None);
                }
                let total = lq + lp;
                let len = self.cycle_len(cq);
                if total < len {
                    Some(PathBasisElement {
                        source: q.source,
                        target: p.target,
                        kind: BasisKind::Path {
                            cycle: cq,
                            length: total,
                        },
                    })
                } else if total == len {
                    Some(PathBasisElement::socle(q.source))
                } else {
                    None
                }
            }
        })
    }

    /// `dim Hom(P_i, P_j)` for all pairs.
    pub fn cartan_matrix(&self) -> &[Vec<u32>] {
        &self.cartan
    }

    pub fn dimension(&self) -> usize {
        self.cartan.iter().flatten().map(|&d| d as usize).sum()
    }

    pub fn max_cycle_len(&self) -> usize {
        self.cycles.iter().map(Vec::len).max().unwrap_or(1)
    }

    /// Graphviz rendering; arrows of one A-cycle share a color.
    pub fn to_dot(&self) -> String {
        const COLORS: [&str; 8] = [
            "red",
            "blue",
            "darkgreen",
            "orange",
            "purple",
            "brown",
            "teal",
            "magenta",
        ];
        let mut s = String::from("digraph brauer_quiver {\n");
        for x in 0..self.vertex_count() {
            let formal = self
                .cycles_of(x)
                .iter()
                .filter(|&&c| self.is_formal_loop(c))
                .count();
            let _ = writeln!(s, "  q{x} [label=\"{x}\", formal_loops={formal}];");
        }
        for a in self.arrows() {
            let _ = writeln!(
                s,
                "  q{} -> q{} [color={}, label=\"c{}\"];",
                a.source,
                a.target,
                COLORS[a.cycle.0 % COLORS.len()],
                a.cycle.0
            );
        }
        s.push_str("}\n");
        s
    }
}

/// `Hom(P_i, P_j)` dimensions of the algebra of `tree`.
pub fn cartan_matrix_algebra(tree: &BrauerTree) -> Vec<Vec<u32>> {
    BrauerQuiver::new(tree).cartan_matrix().to_vec()
}

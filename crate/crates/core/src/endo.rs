//! The Brauer tree of the endomorphism ring of a two-term tilting complex.
//!
//! Summands are the edges. Each A-cycle `Υ` of the algebra contributes up
//! to two vertices: a source group and a sink group. The source group of `Υ`
//! holds the degree 0 stalks on `Υ` and the diagrams whose only vertex on `Υ`
//! is a degree-one source; the sink group is dual.

use std::cmp::Ordering;

use serde::Serialize;

use crate::compat::is_compatible;
use crate::error::{Error, Result};
use crate::quiver::{BrauerQuiver, CycleId};
use crate::tilting::TiltingComplex;
use crate::tree::BrauerTree;
use crate::two_term::{Degree, Diagram, Mark, TwoTermObject};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Sources,
    Sinks,
}

impl GroupKind {
    fn mark(self) -> Mark {
        match self {
            GroupKind::Sources => Mark::Source,
            GroupKind::Sinks => Mark::Sink,
        }
    }

    fn degree(self) -> Degree {
        match self {
            GroupKind::Sources => Degree::Zero,
            GroupKind::Sinks => Degree::One,
        }
    }

    /// Whether an empty spot at the 1-based `position` beats every vertex.
    fn empty_is_greatest(self, position: usize) -> bool {
        match self {
            GroupKind::Sources => position % 2 == 1,
            GroupKind::Sinks => position.is_multiple_of(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Group {
    pub cycle: CycleId,
    pub kind: GroupKind,
    /// Indices into the summands of the tilting complex, ascending.
    pub members: Vec<usize>,
}

/// `Σ_{r,s} (-1)^{r-s} dim Hom_A(X^r, Y^s)` from the Cartan matrix of the
/// algebra. Equals the alternating sum of `dim Hom(X, Y[i])` for any pair.
pub fn happel_sum(a: &TwoTermObject, b: &TwoTermObject, q: &BrauerQuiver) -> i64 {
    let c = q.cartan_matrix();
    let (a0, a1) = a.terms();
    let (b0, b1) = b.terms();
    let block = |xs: &[usize], ys: &[usize]| -> i64 {
        xs.iter()
            .flat_map(|&x| ys.iter().map(move |&y| c[x][y] as i64))
            .sum()
    };
    block(&a0, &b0) + block(&a1, &b1) - block(&a0, &b1) - block(&a1, &b0)
}

/// `dim Hom(X, Y)` in the homotopy category for compatible `X`, `Y`.
pub fn hom_dim(a: &TwoTermObject, b: &TwoTermObject, q: &BrauerQuiver) -> Result<usize> {
    if !is_compatible(a, b, q)? {
        return Err(Error::NotCompatible(format!("{a} and {b}")));
    }
    let d = happel_sum(a, b, q);
    usize::try_from(d)
        .map_err(|_| Error::Inconsistency(format!("negative dimension {d} for {a}, {b}")))
}

pub fn cartan_matrix(t: &TiltingComplex, q: &BrauerQuiver) -> Result<Vec<Vec<usize>>> {
    let s = t.summands();
    s.iter()
        .map(|a| s.iter().map(|b| hom_dim(a, b, q)).collect())
        .collect()
}

/// The vertex of `d` on `c`, when it is the only one and a degree-one
/// vertex with role `mark`.
fn lonely_end_on(q: &BrauerQuiver, d: &Diagram, c: CycleId, mark: Mark) -> Option<usize> {
    match d.vertices_on(q, c)[..] {
        [y] if d.is_degree_one(y) && d.mark(y) == mark => Some(y),
        _ => None,
    }
}

fn belongs(q: &BrauerQuiver, obj: &TwoTermObject, c: CycleId, kind: GroupKind) -> bool {
    match obj {
        TwoTermObject::Stalk { vertex, degree } => {
            *degree == kind.degree() && q.on_cycle(*vertex, c)
        }
        TwoTermObject::Diagram(d) => lonely_end_on(q, d, c, kind.mark()).is_some(),
    }
}

/// All source and sink groups, one pair per A-cycle, empty ones included.
pub fn acycle_partition(t: &TiltingComplex, q: &BrauerQuiver) -> Vec<Group> {
    let mut out = Vec::new();
    for c in q.cycle_ids() {
        for kind in [GroupKind::Sources, GroupKind::Sinks] {
            let members = t
                .summands()
                .iter()
                .enumerate()
                .filter(|(_, s)| belongs(q, s, c, kind))
                .map(|(i, _)| i)
                .collect();
            out.push(Group {
                cycle: c,
                kind,
                members,
            });
        }
    }
    out
}

/// Vertex sequence used for the lexicographic comparison: the vertex on the
/// group's A-cycle, then the remaining marked vertices along the walk.
fn sequence(q: &BrauerQuiver, obj: &TwoTermObject, group: &Group) -> Vec<usize> {
    match obj {
        TwoTermObject::Stalk { vertex, .. } => vec![*vertex],
        TwoTermObject::Diagram(d) => {
            let y =
                lonely_end_on(q, d, group.cycle, group.kind.mark()).expect("member of the group");
            d.marked_from(y)
        }
    }
}

fn compare(
    q: &BrauerQuiver,
    a: &[usize],
    b: &[usize],
    cycle: CycleId,
    greatest: usize,
    kind: GroupKind,
) -> Ordering {
    let (mut cycle, mut top) = (cycle, greatest);
    for pos in 0.. {
        match (a.get(pos), b.get(pos)) {
            (None, None) => return Ordering::Equal,
            (Some(&x), Some(&y)) if x == y => {
                // the walk leaves `x` through its other A-cycle
                top = x;
                cycle = q.other_cycle(x, cycle);
            }
            (Some(&x), Some(&y)) => {
                // closer to `top` along the arrows means smaller distance,
                // which ranks higher
                return q.distance(cycle, top, y).cmp(&q.distance(cycle, top, x));
            }
            (None, Some(_)) => {
                return if kind.empty_is_greatest(pos + 1) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            (Some(_), None) => {
                return if kind.empty_is_greatest(pos + 1) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
    }
    unreachable!()
}

/// The summands of a group listed along the arrows of the endomorphism
/// quiver, starting from the greatest one.
pub fn cyclic_order(t: &TiltingComplex, group: &Group, q: &BrauerQuiver) -> Result<Vec<usize>> {
    let greatest = *q
        .cycle(group.cycle)
        .iter()
        .min()
        .expect("A-cycles are nonempty");
    cyclic_order_with_greatest(t, group, q, greatest)
}

/// As `cyclic_order`, with `greatest` as the fixed top vertex on the group's
/// A-cycle. The resulting cyclic sequence does not depend on this choice.
pub fn cyclic_order_with_greatest(
    t: &TiltingComplex,
    group: &Group,
    q: &BrauerQuiver,
    greatest: usize,
) -> Result<Vec<usize>> {
    if group.members.len() < 2 {
        return Err(Error::GroupTooSmall(group.members.len()));
    }
    if !q.on_cycle(greatest, group.cycle) {
        return Err(Error::Config(format!(
            "vertex {greatest} is not on A-cycle {}",
            group.cycle.0
        )));
    }
    let mut keyed: Vec<(Vec<usize>, usize)> = group
        .members
        .iter()
        .map(|&i| (sequence(q, &t.summands()[i], group), i))
        .collect();
    keyed.sort_by(|(a, _), (b, _)| compare(q, b, a, group.cycle, greatest, group.kind));
    Ok(keyed.into_iter().map(|(_, i)| i).collect())
}

/// Rotates a cyclic sequence to start at its smallest entry.
pub fn normalize_cycle(order: &[usize]) -> Vec<usize> {
    let Some(start) = order
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
    else {
        return Vec::new();
    };
    order[start..]
        .iter()
        .chain(&order[..start])
        .copied()
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct EndoTree {
    /// Nonempty groups; group `k` is vertex `k` of `tree`.
    pub groups: Vec<Group>,
    pub cyclic_orders: Vec<Vec<usize>>,
    pub tree: BrauerTree,
}

impl EndoTree {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "groups": self.groups,
            "cyclic_orders": self.cyclic_orders,
            "tree": self.tree,
            "is_star": is_star(&self.tree),
        })
    }
}

/// Assembles the groups into a Brauer tree and checks it against the
/// Cartan matrix.
pub fn endo_tree(t: &TiltingComplex, q: &BrauerQuiver) -> Result<EndoTree> {
    let n = t.len();
    let groups: Vec<Group> = acycle_partition(t, q)
        .into_iter()
        .filter(|g| !g.members.is_empty())
        .collect();
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, g) in groups.iter().enumerate() {
        for &i in &g.members {
            ends[i].push(k);
        }
    }
    let mut edges = Vec::with_capacity(n);
    for (i, e) in ends.iter().enumerate() {
        match e[..] {
            [a, b] => edges.push([a, b]),
            _ => {
                return Err(Error::Inconsistency(format!(
                    "summand {} lies in {} groups",
                    t.summands()[i],
                    e.len()
                )))
            }
        }
    }
    let cyclic_orders = groups
        .iter()
        .map(|g| {
            if g.members.len() == 1 {
                Ok(g.members.clone())
            } else {
                cyclic_order(t, g, q)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let tree = BrauerTree::new(groups.len(), edges, cyclic_orders.clone(), 0)
        .map_err(|e| Error::Inconsistency(format!("groups do not form a Brauer tree: {e}")))?;
    let cartan = cartan_matrix(t, q)?;
    for i in 0..n {
        for j in 0..n {
            let shared = i == j || ends[i].iter().any(|g| ends[j].contains(g));
            let expected = if i == j { 2 } else { usize::from(shared) };
            if cartan[i][j] != expected {
                return Err(Error::Inconsistency(format!(
                    "Cartan entry ({i},{j}) is {} but the groups predict {expected}",
                    cartan[i][j]
                )));
            }
        }
    }
    Ok(EndoTree {
        groups,
        cyclic_orders,
        tree,
    })
}

pub fn is_star(tree: &BrauerTree) -> bool {
    (0..tree.vertex_count()).any(|v| tree.degree(v) == tree.edge_count())
}

/// The tilting complex whose summands all lie in the source group (or sink
/// group) of `cycle`: stalks on `cycle`, and for every other vertex `x` the
/// diagram from `x` whose only vertex on `cycle` is a degree-one source
/// (sink).
pub fn star_tilting(q: &BrauerQuiver, cycle: CycleId, kind: GroupKind) -> Result<TiltingComplex> {
    let tree = q.tree();
    if cycle.0 >= q.cycle_count() {
        return Err(Error::IndexOutOfRange {
            index: cycle.0,
            len: q.cycle_count(),
        });
    }
    // breadth-first search over tree vertices from the centre, remembering
    // the edge path to each
    let mut paths: Vec<Option<Vec<usize>>> = vec![None; tree.vertex_count()];
    paths[cycle.0] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([cycle.0]);
    while let Some(v) = queue.pop_front() {
        let path = paths[v].clone().expect("visited");
        for &e in tree.cyclic_order(v) {
            let [a, b] = tree.endpoints(e);
            let w = if a == v { b } else { a };
            if paths[w].is_none() {
                let mut p = path.clone();
                p.push(e);
                paths[w] = Some(p);
                queue.push_back(w);
            }
        }
    }
    let mut summands = Vec::with_capacity(q.vertex_count());
    for x in 0..q.vertex_count() {
        if q.on_cycle(x, cycle) {
            summands.push(TwoTermObject::stalk(x, kind.degree()));
            continue;
        }
        let far = tree
            .endpoints(x)
            .into_iter()
            .max_by_key(|&v| paths[v].as_ref().map_or(0, Vec::len))
            .expect("edge has endpoints");
        let marked = paths[far].clone().expect("tree is connected");
        summands.push(TwoTermObject::diagram(
            q,
            &marked,
            kind == GroupKind::Sources,
        )?);
    }
    TiltingComplex::new(summands, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilting::enumerate_tiltings;

    fn algebra(q: &BrauerQuiver, degree: Degree) -> TiltingComplex {
        let s = (0..q.vertex_count())
            .map(|x| TwoTermObject::stalk(x, degree))
            .collect();
        TiltingComplex::new(s, q).unwrap()
    }

    #[test]
    fn happel_examples() {
        let q = BrauerQuiver::new(&BrauerTree::line(2));
        let p0 = TwoTermObject::stalk(0, Degree::Zero);
        let p1 = TwoTermObject::stalk(1, Degree::Zero);
        let d = TwoTermObject::string(&q, 0, 1).unwrap();
        assert_eq!(hom_dim(&p0, &p1, &q).unwrap(), 1);
        assert_eq!(hom_dim(&p0, &d, &q).unwrap(), 1);
        assert_eq!(hom_dim(&d, &d, &q).unwrap(), 2);
        let bad = TwoTermObject::stalk(1, Degree::One);
        assert!(matches!(
            hom_dim(&p0, &bad, &q),
            Err(Error::NotCompatible(_))
        ));
    }

    #[test]
    fn algebra_reproduces_its_tree() {
        for t in [
            BrauerTree::line(3),
            BrauerTree::star(4),
            BrauerTree::line(1),
        ] {
            let q = BrauerQuiver::new(&t);
            for degree in [Degree::Zero, Degree::One] {
                let e = endo_tree(&algebra(&q, degree), &q).unwrap();
                assert_eq!(e.tree.edge_count(), t.edge_count());
                assert!(e.tree.is_isomorphic(&t), "{degree:?} {}", e.tree.to_json());
            }
        }
    }

    #[test]
    fn leaf_groups_share_a_formal_loop() {
        let q = BrauerQuiver::new(&BrauerTree::line(2));
        let t = TiltingComplex::new(
            vec![
                TwoTermObject::stalk(0, Degree::Zero),
                TwoTermObject::string(&q, 0, 1).unwrap(),
            ],
            &q,
        )
        .unwrap();
        let groups = acycle_partition(&t, &q);
        let shared: Vec<&Group> = groups.iter().filter(|g| g.members == [0, 1]).collect();
        assert_eq!(shared.len(), 1);
        // tree vertex 0 is the leaf at edge 0
        assert_eq!(shared[0].cycle, CycleId(0));
        assert_eq!(shared[0].kind, GroupKind::Sources);
    }

    #[test]
    fn stars_from_every_cycle() {
        let q = BrauerQuiver::new(&BrauerTree::line(3));
        for c in q.cycle_ids() {
            for kind in [GroupKind::Sources, GroupKind::Sinks] {
                let t = star_tilting(&q, c, kind).unwrap();
                let e = endo_tree(&t, &q).unwrap();
                assert!(is_star(&e.tree));
            }
        }
        let l2 = BrauerQuiver::new(&BrauerTree::line(2));
        assert_eq!(
            star_tilting(&l2, CycleId(1), GroupKind::Sources).unwrap(),
            algebra(&l2, Degree::Zero)
        );
    }

    #[test]
    fn every_small_tilting_has_a_tree() {
        for t in [BrauerTree::line(3), BrauerTree::star(3)] {
            let q = BrauerQuiver::new(&t);
            for tilt in enumerate_tiltings(&q).unwrap() {
                let e = endo_tree(&tilt, &q).unwrap();
                assert_eq!(e.tree.edge_count(), 3);
            }
        }
    }

    #[test]
    fn star_detection() {
        assert!(is_star(&BrauerTree::star(3)));
        assert!(!is_star(&BrauerTree::line(3)));
        assert!(is_star(&BrauerTree::line(2)) && is_star(&BrauerTree::line(1)));
    }
}

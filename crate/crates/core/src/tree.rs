//! Brauer trees of type `(n, 1)`: planar trees with a cyclic order of the
//! incident edges at every vertex.
//!
//! Two trees are isomorphic when a bijection of vertices and edges preserves
//! incidence and every cyclic order up to rotation. Reversing all cyclic
//! orders (a reflection) is *not* an isomorphism here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest edge count accepted by [`enumerate_trees`].
pub const DEFAULT_MAX_EDGES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerTree {
    vertex_count: usize,
    edges: Vec<[usize; 2]>,
    cyclic_order: Vec<Vec<usize>>,
    exceptional: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTree {
    vertices: Vec<usize>,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    cyclic_order: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    exceptional: Option<usize>,
    #[serde(default)]
    multiplicity: Option<u64>,
}

impl BrauerTree {
    /// Builds and validates a tree. `cyclic_order[v]` lists the edges at `v`
    /// in clockwise order.
    pub fn new(
        vertex_count: usize,
        edges: Vec<[usize; 2]>,
        cyclic_order: Vec<Vec<usize>>,
        exceptional: usize,
    ) -> Result<Self> {
        if vertex_count < 2 {
            return Err(Error::NotATree(format!(
                "need at least two vertices, got {vertex_count}"
            )));
        }
        if edges.len() + 1 != vertex_count {
            return Err(Error::NotATree(format!(
                "{} vertices need {} edges, got {}",
                vertex_count,
                vertex_count - 1,
                edges.len()
            )));
        }
        if cyclic_order.len() != vertex_count {
            return Err(Error::CyclicOrder(format!(
                "expected {} vertex orders, got {}",
                vertex_count,
                cyclic_order.len()
            )));
        }
        if exceptional >= vertex_count {
            return Err(Error::Syntax(format!(
                "exceptional vertex {exceptional} does not exist"
            )));
        }

        let mut parent: Vec<usize> = (0..vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut incident = vec![BTreeSet::new(); vertex_count];
        for (e, &[a, b]) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::Syntax(format!(
                    "edge {e} references a missing vertex"
                )));
            }
            if a == b {
                return Err(Error::NotATree(format!("edge {e} is a loop")));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::NotATree(format!("edge {e} closes a cycle")));
            }
            parent[ra] = rb;
            incident[a].insert(e);
            incident[b].insert(e);
        }
        // V - 1 acyclic edges on V vertices are always connected; kept as a
        // guard for the union-find above.
        let root = find(&mut parent, 0);
        if (0..vertex_count).any(|v| find(&mut parent, v) != root) {
            return Err(Error::NotATree("graph is disconnected".into()));
        }

        for (v, order) in cyclic_order.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &e in order {
                if !seen.insert(e) {
                    return Err(Error::CyclicOrder(format!(
                        "edge {e} repeated in the order at vertex {v}"
                    )));
                }
                if !incident[v].contains(&e) {
                    return Err(Error::CyclicOrder(format!(
                        "edge {e} is not incident to vertex {v}"
                    )));
                }
            }
            if seen != incident[v] {
                return Err(Error::CyclicOrder(format!(
                    "order at vertex {v} misses incident edges"
                )));
            }
        }

        Ok(Self {
            vertex_count,
            edges,
            cyclic_order,
            exceptional,
        })
    }

    /// Parses the JSON tree format
    /// `{"vertices": [..], "edges": [[a,b],..], "cyclic_order": {"v": [..]}, "exceptional": v}`.
    ///
    /// Orders may be omitted for vertices of degree at most two, where the
    /// cyclic order is forced. A `"multiplicity"` field other than 1 is
    /// rejected.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawTree = serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
        if let Some(m) = raw.multiplicity {
            if m != 1 {
                return Err(Error::Multiplicity(m));
            }
        }
        let vertex_count = raw.vertices.len();
        let ids: BTreeSet<usize> = raw.vertices.iter().copied().collect();
        if ids.len() != vertex_count || ids.iter().next_back().is_some_and(|&m| m >= vertex_count) {
            return Err(Error::Syntax(
                "vertex ids must be exactly 0..V-1 without repeats".into(),
            ));
        }
        let mut orders: Vec<Option<Vec<usize>>> = vec![None; vertex_count];
        for (key, order) in raw.cyclic_order {
            let v: usize = key
                .trim()
                .parse()
                .map_err(|_| Error::Syntax(format!("bad vertex key {key:?}")))?;
            if v >= vertex_count {
                return Err(Error::Syntax(format!(
                    "cyclic order for missing vertex {v}"
                )));
            }
            orders[v] = Some(order);
        }
        let mut incident = vec![Vec::new(); vertex_count];
        for (e, &[a, b]) in raw.edges.iter().enumerate() {
            if a < vertex_count && b < vertex_count {
                incident[a].push(e);
                if a != b {
                    incident[b].push(e);
                }
            }
        }
        let mut cyclic_order = Vec::with_capacity(vertex_count);
        for (v, order) in orders.into_iter().enumerate() {
            match order {
                Some(o) => cyclic_order.push(o),
                None if incident[v].len() <= 2 => cyclic_order.push(incident[v].clone()),
                None => {
                    return Err(Error::CyclicOrder(format!(
                        "vertex {v} has degree {} but no cyclic order",
                        incident[v].len()
                    )))
                }
            }
        }
        Self::new(
            vertex_count,
            raw.edges,
            cyclic_order,
            raw.exceptional.unwrap_or(0),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialization is infallible")
    }

    /// The path with `n` edges; edge `i` joins vertices `i` and `i + 1`.
    pub fn line(n: usize) -> Self {
        assert!(n >= 1);
        let edges = (0..n).map(|i| [i, i + 1]).collect();
        let cyclic_order = (0..=n)
            .map(|v| match v {
                0 => vec![0],
                v if v == n => vec![n - 1],
                v => vec![v - 1, v],
            })
            .collect();
        Self::new(n + 1, edges, cyclic_order, 0).expect("line is a valid tree")
    }

    /// The star with `n` edges around vertex 0, clockwise order `0, 1, .., n-1`.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1);
        let edges = (0..n).map(|i| [0, i + 1]).collect();
        let mut cyclic_order = vec![(0..n).collect::<Vec<_>>()];
        cyclic_order.extend((0..n).map(|i| vec![i]));
        Self::new(n + 1, edges, cyclic_order, 0).expect("star is a valid tree")
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn endpoints(&self, edge: usize) -> [usize; 2] {
        self.edges[edge]
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn cyclic_order(&self, vertex: usize) -> &[usize] {
        &self.cyclic_order[vertex]
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.cyclic_order[vertex].len()
    }

    pub fn exceptional(&self) -> usize {
        self.exceptional
    }

    /// The same tree with every cyclic order reversed.
    pub fn mirror(&self) -> Self {
        let cyclic_order = self
            .cyclic_order
            .iter()
            .map(|o| o.iter().rev().copied().collect())
            .collect();
        Self {
            cyclic_order,
            ..self.clone()
        }
    }

    /// Renames edges by `edge_perm[old] = new` and vertices by
    /// `vertex_perm[old] = new`.
    pub fn relabeled(&self, edge_perm: &[usize], vertex_perm: &[usize]) -> Result<Self> {
        let n = self.edge_count();
        let mut edges = vec![[0, 0]; n];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            edges[edge_perm[e]] = [vertex_perm[a], vertex_perm[b]];
        }
        let mut cyclic_order = vec![Vec::new(); self.vertex_count];
        for (v, order) in self.cyclic_order.iter().enumerate() {
            cyclic_order[vertex_perm[v]] = order.iter().map(|&e| edge_perm[e]).collect();
        }
        Self::new(
            self.vertex_count,
            edges,
            cyclic_order,
            vertex_perm[self.exceptional],
        )
    }

    fn other_end(&self, edge: usize, vertex: usize) -> usize {
        let [a, b] = self.edges[edge];
        if a == vertex {
            b
        } else {
            a
        }
    }

    /// Bracket encoding of the planted tree rooted at `root` whose first
    /// root edge is `cyclic_order[root][start]`.
    fn encode_from(&self, root: usize, start: usize) -> String {
        fn walk(tree: &BrauerTree, v: usize, entered_by: usize, out: &mut String) {
            let order = &tree.cyclic_order[v];
            let pos = order.iter().position(|&e| e == entered_by).unwrap();
            for k in 1..order.len() {
                let e = order[(pos + k) % order.len()];
                out.push('(');
                walk(tree, tree.other_end(e, v), e, out);
                out.push(')');
            }
        }
        let mut out = String::with_capacity(2 * self.edge_count());
        let order = &self.cyclic_order[root];
        for k in 0..order.len() {
            let e = order[(start + k) % order.len()];
            out.push('(');
            walk(self, self.other_end(e, root), e, &mut out);
            out.push(')');
        }
        out
    }

    /// Deterministic text code; equal codes exactly for isomorphic trees.
    pub fn canonical_code(&self) -> String {
        (0..self.vertex_count)
            .flat_map(|v| (0..self.degree(v)).map(move |s| (v, s)))
            .map(|(v, s)| self.encode_from(v, s))
            .min()
            .expect("a tree has at least one edge")
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.edge_count() == other.edge_count() && self.canonical_code() == other.canonical_code()
    }

    /// Rebuilds a tree from a bracket code. Edges are numbered in the order
    /// their opening brackets appear; vertex 0 is the root.
    pub fn from_bracket_code(code: &str) -> Result<Self> {
        let mut edges: Vec<[usize; 2]> = Vec::new();
        let mut orders: Vec<Vec<usize>> = vec![Vec::new()];
        let mut stack = vec![0usize];
        for ch in code.chars() {
            match ch {
                '(' => {
                    let parent = *stack.last().unwrap();
                    let child = orders.len();
                    let e = edges.len();
                    edges.push([parent, child]);
                    orders[parent].push(e);
                    orders.push(vec![e]);
                    stack.push(child);
                }
                ')' => {
                    if stack.len() < 2 {
                        return Err(Error::Syntax(format!("unbalanced bracket code {code:?}")));
                    }
                    stack.pop();
                }
                c => return Err(Error::Syntax(format!("unexpected {c:?} in bracket code"))),
            }
        }
        if stack.len() != 1 || edges.is_empty() {
            return Err(Error::Syntax(format!("unbalanced bracket code {code:?}")));
        }
        Self::new(orders.len(), edges, orders, 0)
    }

    /// Graphviz rendering with edges labeled by id and the clockwise order
    /// noted on each vertex.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph brauer_tree {\n");
        for v in 0..self.vertex_count {
            let order: Vec<String> = self.cyclic_order[v].iter().map(|e| e.to_string()).collect();
            let shape = if v == self.exceptional {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(
                s,
                "  v{v} [shape={shape}, label=\"{v}\", xlabel=\"[{}]\"];",
                order.join(",")
            );
        }
        for (e, [a, b]) in self.edges.iter().enumerate() {
            let _ = writeln!(s, "  v{a} -- v{b} [label=\"{e}\"];");
        }
        s.push_str("}\n");
        s
    }
}

struct OrderMap<'a>(&'a [Vec<usize>]);

impl Serialize for OrderMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, order) in self.0.iter().enumerate() {
            map.serialize_entry(&v.to_string(), order)?;
        }
        map.end()
    }
}

impl Serialize for BrauerTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let vertices: Vec<usize> = (0..self.vertex_count).collect();
        let mut st = serializer.serialize_struct("BrauerTree", 4)?;
        st.serialize_field("vertices", &vertices)?;
        st.serialize_field("edges", &self.edges)?;
        st.serialize_field("cyclic_order", &OrderMap(&self.cyclic_order))?;
        st.serialize_field("exceptional", &self.exceptional)?;
        st.end()
    }
}

fn dyck_words(n: usize) -> Vec<String> {
    fn go(open: usize, close: usize, n: usize, cur: &mut String, out: &mut Vec<String>) {
        if cur.len() == 2 * n {
            out.push(cur.clone());
            return;
        }
        if open < n {
            cur.push('(');
            go(open + 1, close, n, cur, out);
            cur.pop();
        }
        if close < open {
            cur.push(')');
            go(open, close + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut String::new(), &mut out);
    out
}

/// One representative per isomorphism class of Brauer trees with `n` edges,
/// sorted by canonical code.
pub fn enumerate_trees(n: usize) -> Result<Vec<BrauerTree>> {
    enumerate_trees_bounded(n, DEFAULT_MAX_EDGES)
}

pub fn enumerate_trees_bounded(n: usize, max_edges: usize) -> Result<Vec<BrauerTree>> {
    if n == 0 || n > max_edges {
        return Err(Error::EdgeBound { n, max: max_edges });
    }
    let codes: BTreeSet<String> = dyck_words(n)
        .iter()
        .map(|w| {
            BrauerTree::from_bracket_code(w)
                .expect("Dyck words encode trees")
                .canonical_code()
        })
        .collect();
    codes
        .iter()
        .map(|c| BrauerTree::from_bracket_code(c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const L2: &str = r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2]],"cyclic_order":{"0":[0],"1":[0,1],"2":[1]},"exceptional":0}"#;
    const S3: &str = r#"{"vertices":[0,1,2,3],"edges":[[0,1],[0,2],[0,3]],"cyclic_order":{"0":[0,1,2],"1":[0],"2":[1],"3":[2]},"exceptional":0}"#;

    #[test]
    fn parses_line_and_star() {
        let l2 = BrauerTree::from_json(L2).unwrap();
        assert_eq!(l2.edge_count(), 2);
        assert_eq!(l2.cyclic_order(1), &[0, 1]);
        let s3 = BrauerTree::from_json(S3).unwrap();
        assert_eq!(s3.edge_count(), 3);
        assert_eq!(s3, BrauerTree::star(3));
    }

    #[test]
    fn rejects_cycle() {
        let text =
            r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2],[0,2]],"cyclic_order":{},"exceptional":0}"#;
        let err = BrauerTree::from_json(text).unwrap_err();
        assert!(matches!(err, Error::NotATree(_)), "{err}");
    }

    #[test]
    fn rejects_duplicate_edge_in_order() {
        let text = r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2]],"cyclic_order":{"1":[0,0,1]},"exceptional":0}"#;
        assert!(matches!(
            BrauerTree::from_json(text),
            Err(Error::CyclicOrder(_))
        ));
    }

    #[test]
    fn rejects_higher_multiplicity() {
        let text = r#"{"vertices":[0,1],"edges":[[0,1]],"exceptional":0,"multiplicity":3}"#;
        assert!(matches!(
            BrauerTree::from_json(text),
            Err(Error::Multiplicity(3))
        ));
    }

    #[test]
    fn rejects_malformed_json() {
        assert!(matches!(
            BrauerTree::from_json("{\"vertices\": [0,1"),
            Err(Error::Syntax(_))
        ));
    }

    #[test]
    fn missing_order_on_high_degree_vertex() {
        let text = r#"{"vertices":[0,1,2,3],"edges":[[0,1],[0,2],[0,3]],"exceptional":0}"#;
        assert!(matches!(
            BrauerTree::from_json(text),
            Err(Error::CyclicOrder(_))
        ));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let t = BrauerTree::from_json(S3).unwrap();
        assert_eq!(t.to_json(), S3);
        let again = BrauerTree::from_json(&t.to_json()).unwrap();
        assert_eq!(again.to_json(), t.to_json());
    }

    #[test]
    fn canonical_code_ignores_labels_and_rotation() {
        let l2 = BrauerTree::line(2);
        let swapped = l2.relabeled(&[1, 0], &[2, 1, 0]).unwrap();
        assert_eq!(l2.canonical_code(), swapped.canonical_code());

        let s3 = BrauerTree::star(3);
        let mut orders: Vec<Vec<usize>> = (0..4).map(|v| s3.cyclic_order(v).to_vec()).collect();
        orders[0] = vec![1, 2, 0];
        let rotated = BrauerTree::new(4, s3.edges().to_vec(), orders, 0).unwrap();
        assert!(s3.is_isomorphic(&rotated));
        assert!(!s3.is_isomorphic(&BrauerTree::line(3)));
    }

    #[test]
    fn star_is_its_own_mirror() {
        let s3 = BrauerTree::star(3);
        assert!(s3.is_isomorphic(&s3.mirror()));
    }

    #[test]
    fn small_tree_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_trees(n).unwrap().len()).collect();
        // Unrooted plane trees with n edges, reflections distinguished.
        assert_eq!(counts, vec![1, 1, 2, 3, 6, 14]);
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(7).is_err());
    }

    #[test]
    fn bracket_code_round_trip() {
        for t in enumerate_trees(5).unwrap() {
            let code = t.canonical_code();
            assert_eq!(BrauerTree::from_bracket_code(&code).unwrap(), t);
        }
    }

    #[test]
    fn dot_mentions_every_edge() {
        let dot = BrauerTree::line(3).to_dot();
        for e in 0..3 {
            assert!(dot.contains(&format!("label=\"{e}\"")));
        }
    }
}

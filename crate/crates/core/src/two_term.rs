//! Indecomposable two-term complexes of projectives: stalks and diagrams.
//!
//! A diagram is a walk on the Brauer quiver without repeated vertices. Its
//! marked vertices alternate between sources (summands in degree 0) and sinks
//! (summands in degree 1); consecutive marked vertices are joined by the
//! directed path from the source to the sink inside one A-cycle, and the walk
//! changes A-cycle at every interior marked vertex.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{Arrow, BrauerQuiver, CycleId, PathBasisElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Zero,
    One,
}

impl Degree {
    pub fn as_int(self) -> i32 {
        match self {
            Degree::Zero => 0,
            Degree::One => 1,
        }
    }

    pub fn from_int(d: i64) -> Result<Self> {
        match d {
            0 => Ok(Degree::Zero),
            1 => Ok(Degree::One),
            other => Err(Error::InvalidObject(format!(
                "degree {other} is not 0 or 1"
            ))),
        }
    }
}

/// Role of a quiver vertex in a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mark {
    Source,
    Sink,
    Unmarked,
}

impl Mark {
    pub fn is_marked(self) -> bool {
        !matches!(self, Mark::Unmarked)
    }

    fn opposite(self) -> Mark {
        match self {
            Mark::Source => Mark::Sink,
            Mark::Sink => Mark::Source,
            Mark::Unmarked => Mark::Unmarked,
        }
    }
}

/// One differential component: the path from `source` to `sink` in `cycle`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub source: usize,
    pub sink: usize,
    pub cycle: CycleId,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    // canonical orientation: lexicographically smaller of the two directions
    traversed: Vec<usize>,
    marked: Vec<usize>,
    first_is_source: bool,
    segment_cycles: Vec<CycleId>,
}

impl Diagram {
    /// Builds the diagram with the given marked vertices; the first one is a
    /// source when `first_is_source`, and roles alternate from there.
    pub fn from_marked(q: &BrauerQuiver, marked: &[usize], first_is_source: bool) -> Result<Self> {
        if marked.len() < 2 {
            return Err(Error::InvalidObject(
                "a diagram needs at least two marked vertices".into(),
            ));
        }
        let mut traversed = vec![marked[0]];
        let mut segment_cycles = Vec::with_capacity(marked.len() - 1);
        let mut is_source = first_is_source;
        for w in marked.windows(2) {
            let (x, y) = (w[0], w[1]);
            if x >= q.vertex_count() || y >= q.vertex_count() {
                return Err(Error::InvalidObject(format!(
                    "vertex out of range in {marked:?}"
                )));
            }
            let c = q
                .common_cycle(x, y)
                .ok_or_else(|| Error::InvalidObject(format!("{x} and {y} share no A-cycle")))?;
            if segment_cycles.last() == Some(&c) {
                return Err(Error::InvalidObject(format!(
                    "walk stays in one A-cycle at marked vertex {x}"
                )));
            }
            let step: Vec<usize> = if is_source {
                q.path_vertices(c, x, y)
            } else {
                let mut p = q.path_vertices(c, y, x);
                p.reverse();
                p
            };
            traversed.extend_from_slice(&step[1..]);
            segment_cycles.push(c);
            is_source = !is_source;
        }
        let distinct: BTreeSet<usize> = traversed.iter().copied().collect();
        if distinct.len() != traversed.len() {
            return Err(Error::InvalidObject(format!(
                "walk {traversed:?} repeats a vertex"
            )));
        }
        Ok(Self {
            traversed,
            marked: marked.to_vec(),
            first_is_source,
            segment_cycles,
        }
        .canonical())
    }

    /// Builds a diagram from its JSON fields and checks that `traversed`
    /// is the walk `marked` determines. `marked` and `traversed` are read in
    /// the same direction. Without `sources` the role of the first vertex is
    /// read off the first arrow, which is ambiguous on an A-cycle of length 2.
    pub fn from_parts(
        q: &BrauerQuiver,
        marked: &[usize],
        traversed: &[usize],
        sources: Option<&[usize]>,
    ) -> Result<Self> {
        if marked.len() < 2 || traversed.len() < 2 {
            return Err(Error::InvalidObject(
                "a diagram has at least two vertices".into(),
            ));
        }
        if traversed.iter().any(|&x| x >= q.vertex_count()) {
            return Err(Error::InvalidObject(format!(
                "vertex out of range in {traversed:?}"
            )));
        }
        let first_is_source = match sources {
            Some(src) => src.contains(&marked[0]),
            None => {
                let (a, b) = (traversed[0], traversed[1]);
                let c = q
                    .common_cycle(a, b)
                    .ok_or_else(|| Error::InvalidObject(format!("{a} and {b} are not adjacent")))?;
                match (q.successor(a, c) == b, q.predecessor(a, c) == b) {
                    (true, false) => true,
                    (false, true) => false,
                    (true, true) => {
                        return Err(Error::InvalidObject(format!(
                            "orientation of {a}-{b} is ambiguous without \"sources\""
                        )))
                    }
                    (false, false) => {
                        return Err(Error::InvalidObject(format!(
                            "{a} and {b} are not adjacent"
                        )))
                    }
                }
            }
        };
        let built = Self::from_marked(q, marked, first_is_source)?;
        let mut expected = traversed.to_vec();
        if built.traversed != expected {
            expected.reverse();
            if built.traversed != expected {
                return Err(Error::InvalidObject(format!(
                    "traversed list {traversed:?} does not match marked {marked:?}"
                )));
            }
        }
        if let Some(src) = sources {
            let mut given = src.to_vec();
            given.sort_unstable();
            let mut actual = built.sources();
            actual.sort_unstable();
            if given != actual {
                return Err(Error::InvalidObject(format!(
                    "sources {src:?} do not alternate along {marked:?}"
                )));
            }
        }
        Ok(built)
    }

    fn reversed(&self) -> Self {
        let last_role_source = if self.marked.len() % 2 == 1 {
            self.first_is_source
        } else {
            !self.first_is_source
        };
        Self {
            traversed: self.traversed.iter().rev().copied().collect(),
            marked: self.marked.iter().rev().copied().collect(),
            first_is_source: last_role_source,
            segment_cycles: self.segment_cycles.iter().rev().copied().collect(),
        }
    }

    fn canonical(self) -> Self {
        let rev: Vec<usize> = self.traversed.iter().rev().copied().collect();
        if rev < self.traversed {
            self.reversed()
        } else {
            self
        }
    }

    pub fn traversed(&self) -> &[usize] {
        &self.traversed
    }

    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    pub fn contains(&self, x: usize) -> bool {
        self.traversed.contains(&x)
    }

    fn marked_index(&self, x: usize) -> Option<usize> {
        self.marked.iter().position(|&m| m == x)
    }

    fn role_at(&self, k: usize) -> Mark {
        if k.is_multiple_of(2) == self.first_is_source {
            Mark::Source
        } else {
            Mark::Sink
        }
    }

    pub fn mark(&self, x: usize) -> Mark {
        match self.marked_index(x) {
            Some(k) => self.role_at(k),
            None => Mark::Unmarked,
        }
    }

    /// Marked and an end of the walk.
    pub fn is_degree_one(&self, x: usize) -> bool {
        self.marked.first() == Some(&x) || self.marked.last() == Some(&x)
    }

    pub fn endpoints(&self) -> [usize; 2] {
        [self.marked[0], *self.marked.last().unwrap()]
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.marked.len())
            .filter(|&k| self.role_at(k) == Mark::Source)
            .map(|k| self.marked[k])
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.marked.len())
            .filter(|&k| self.role_at(k) == Mark::Sink)
            .map(|k| self.marked[k])
            .collect()
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.segment_cycles
            .iter()
            .enumerate()
            .map(|(k, &cycle)| {
                let (x, y) = (self.marked[k], self.marked[k + 1]);
                if self.role_at(k) == Mark::Source {
                    Segment {
                        source: x,
                        sink: y,
                        cycle,
                    }
                } else {
                    Segment {
                        source: y,
                        sink: x,
                        cycle,
                    }
                }
            })
            .collect()
    }

    /// The arrow joining `traversed[k]` and `traversed[k + 1]`.
    pub fn steps(&self) -> Vec<Arrow> {
        let mut out = Vec::with_capacity(self.traversed.len() - 1);
        let mut k = 0;
        for (s, &cycle) in self.segment_cycles.iter().enumerate() {
            let forward = self.role_at(s) == Mark::Source;
            let end = self.marked[s + 1];
            while self.traversed[k] != end {
                let (a, b) = (self.traversed[k], self.traversed[k + 1]);
                out.push(if forward {
                    Arrow {
                        source: a,
                        target: b,
                        cycle,
                    }
                } else {
                    Arrow {
                        source: b,
                        target: a,
                        cycle,
                    }
                });
                k += 1;
            }
        }
        out
    }

    /// Traversed vertices lying on `c`.
    pub fn vertices_on(&self, q: &BrauerQuiver, c: CycleId) -> Vec<usize> {
        self.traversed
            .iter()
            .copied()
            .filter(|&x| q.on_cycle(x, c))
            .collect()
    }

    /// Marked vertices read along the walk starting from the end `y`.
    pub fn marked_from(&self, y: usize) -> Vec<usize> {
        if self.marked[0] == y {
            self.marked.clone()
        } else {
            debug_assert_eq!(*self.marked.last().unwrap(), y);
            self.marked.iter().rev().copied().collect()
        }
    }

    /// The sub-walk between traversed positions `lo..=hi`; both ends must be
    /// marked.
    pub fn sub_walk(&self, q: &BrauerQuiver, lo: usize, hi: usize) -> Result<Diagram> {
        let part = &self.traversed[lo..=hi];
        let marked: Vec<usize> = part
            .iter()
            .copied()
            .filter(|&x| self.mark(x).is_marked())
            .collect();
        if marked.first() != part.first() || marked.last() != part.last() {
            return Err(Error::InvalidObject(
                "sub-walk must end at marked vertices".into(),
            ));
        }
        let first_is_source = self.mark(marked[0]) == Mark::Source;
        Diagram::from_marked(q, &marked, first_is_source)
    }

    /// Vertices and arrows of `self` all occur in `other`.
    pub fn is_sub_walk_of(&self, other: &Diagram) -> bool {
        let steps = other.steps();
        self.traversed.iter().all(|x| other.contains(*x))
            && self.steps().iter().all(|a| steps.contains(a))
    }

    /// ASCII rendering of the marked walk, e.g. `0>1<2` for source 0, sink 1,
    /// source 2.
    pub fn label(&self) -> String {
        let mut s = self.marked[0].to_string();
        for k in 1..self.marked.len() {
            s.push(if self.role_at(k - 1) == Mark::Source {
                '>'
            } else {
                '<'
            });
            s.push_str(&self.marked[k].to_string());
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwoTermObject {
    Stalk { vertex: usize, degree: Degree },
    Diagram(Diagram),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum ObjectJson {
    Stalk {
        vertex: usize,
        degree: i64,
    },
    Diagram {
        marked: Vec<usize>,
        traversed: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sources: Option<Vec<usize>>,
    },
}

impl TwoTermObject {
    pub fn stalk(vertex: usize, degree: Degree) -> Self {
        TwoTermObject::Stalk { vertex, degree }
    }

    pub fn diagram(q: &BrauerQuiver, marked: &[usize], first_is_source: bool) -> Result<Self> {
        Diagram::from_marked(q, marked, first_is_source).map(TwoTermObject::Diagram)
    }

    /// Single-segment diagram with the given source and sink.
    pub fn string(q: &BrauerQuiver, source: usize, sink: usize) -> Result<Self> {
        Self::diagram(q, &[source, sink], true)
    }

    pub fn as_diagram(&self) -> Option<&Diagram> {
        match self {
            TwoTermObject::Diagram(d) => Some(d),
            TwoTermObject::Stalk { .. } => None,
        }
    }

    pub fn is_stalk(&self) -> bool {
        matches!(self, TwoTermObject::Stalk { .. })
    }

    /// Checks the object is well formed over `q`.
    pub fn validate(&self, q: &BrauerQuiver) -> Result<()> {
        match self {
            TwoTermObject::Stalk { vertex, .. } if *vertex < q.vertex_count() => Ok(()),
            TwoTermObject::Stalk { vertex, .. } => Err(Error::InvalidObject(format!(
                "stalk vertex {vertex} out of range"
            ))),
            TwoTermObject::Diagram(d) => {
                let again = Diagram::from_parts(q, d.marked(), d.traversed(), Some(&d.sources()))?;
                if &again == d {
                    Ok(())
                } else {
                    Err(Error::InvalidObject(
                        "diagram does not match this algebra".into(),
                    ))
                }
            }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        match self {
            TwoTermObject::Stalk { vertex, .. } => *vertex == x,
            TwoTermObject::Diagram(d) => d.contains(x),
        }
    }

    /// Summands in degree 0 and degree 1.
    pub fn terms(&self) -> (Vec<usize>, Vec<usize>) {
        match self {
            TwoTermObject::Stalk {
                vertex,
                degree: Degree::Zero,
            } => (vec![*vertex], vec![]),
            TwoTermObject::Stalk {
                vertex,
                degree: Degree::One,
            } => (vec![], vec![*vertex]),
            TwoTermObject::Diagram(d) => (d.sources(), d.sinks()),
        }
    }

    pub fn realize(&self, q: &BrauerQuiver) -> RealizedComplex {
        let (degree0, degree1) = self.terms();
        let mut differential = vec![vec![None; degree0.len()]; degree1.len()];
        if let TwoTermObject::Diagram(d) = self {
            for seg in d.segments() {
                let col = degree0.iter().position(|&x| x == seg.source).unwrap();
                let row = degree1.iter().position(|&x| x == seg.sink).unwrap();
                let path = q.hom_basis(seg.source, seg.sink);
                debug_assert_eq!(path.len(), 1);
                differential[row][col] = Some(path[0]);
            }
        }
        RealizedComplex {
            degree0,
            degree1,
            differential,
        }
    }

    pub fn label(&self) -> String {
        match self {
            TwoTermObject::Stalk { vertex, degree } => format!("P{vertex}[{}]", degree.as_int()),
            TwoTermObject::Diagram(d) => d.label(),
        }
    }

    fn to_raw(&self) -> ObjectJson {
        match self {
            TwoTermObject::Stalk { vertex, degree } => ObjectJson::Stalk {
                vertex: *vertex,
                degree: degree.as_int() as i64,
            },
            TwoTermObject::Diagram(d) => ObjectJson::Diagram {
                marked: d.marked().to_vec(),
                traversed: d.traversed().to_vec(),
                sources: Some(d.sources()),
            },
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_raw()).expect("object serialization is infallible")
    }

    pub fn from_json_value(value: &serde_json::Value, q: &BrauerQuiver) -> Result<Self> {
        let raw: ObjectJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidObject(e.to_string()))?;
        let obj = match raw {
            ObjectJson::Stalk { vertex, degree } => Self::stalk(vertex, Degree::from_int(degree)?),
            ObjectJson::Diagram {
                marked,
                traversed,
                sources,
            } => TwoTermObject::Diagram(Diagram::from_parts(
                q,
                &marked,
                &traversed,
                sources.as_deref(),
            )?),
        };
        obj.validate(q)?;
        Ok(obj)
    }
}

impl fmt::Display for TwoTermObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for TwoTermObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_raw().serialize(s)
    }
}

/// A two-term complex `P_0 -> P_1` written out as a matrix of basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedComplex {
    pub degree0: Vec<usize>,
    pub degree1: Vec<usize>,
    /// `differential[row][col]`: component from `degree0[col]` to `degree1[row]`.
    pub differential: Vec<Vec<Option<PathBasisElement>>>,
}

impl RealizedComplex {
    pub fn new(
        degree0: Vec<usize>,
        degree1: Vec<usize>,
        differential: Vec<Vec<Option<PathBasisElement>>>,
    ) -> Result<Self> {
        if differential.len() != degree1.len()
            || differential.iter().any(|row| row.len() != degree0.len())
        {
            return Err(Error::InvalidObject(
                "differential has the wrong shape".into(),
            ));
        }
        for (r, row) in differential.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                if let Some(p) = entry {
                    if p.source != degree0[c] || p.target != degree1[r] {
                        return Err(Error::InvalidObject(format!(
                            "entry ({r},{c}) does not map P{} to P{}",
                            degree0[c], degree1[r]
                        )));
                    }
                }
            }
        }
        Ok(Self {
            degree0,
            degree1,
            differential,
        })
    }

    /// `P_x -> P_x` whose image is the socle; its cokernel is `P_x/soc(P_x)`.
    pub fn socle_quotient_presentation(x: usize) -> Self {
        Self {
            degree0: vec![x],
            degree1: vec![x],
            differential: vec![vec![Some(PathBasisElement::socle(x))]],
        }
    }
}

/// How the common arrows meet an end of an intersection component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EndKind {
    /// the common arrow points into the end vertex
    Sink,
    /// the common arrow leaves the end vertex
    Source,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EndInfo {
    pub vertex: usize,
    pub kind: Option<EndKind>,
    pub first: Mark,
    pub second: Mark,
    pub first_degree_one: bool,
    pub second_degree_one: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionComponent {
    /// Vertices in the walk order of the first diagram.
    pub vertices: Vec<usize>,
    pub ends: [EndInfo; 2],
    #[serde(skip)]
    first_range: (usize, usize),
}

impl IntersectionComponent {
    pub fn is_single_vertex(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// Connected pieces of the common part of two diagrams, where two common
/// vertices are connected when both walks use the same arrow between them.
pub fn intersection(d1: &Diagram, d2: &Diagram) -> Vec<IntersectionComponent> {
    let steps1 = d1.steps();
    let steps2 = d2.steps();
    let t = d1.traversed();
    let end_info = |x: usize, kind: Option<EndKind>| EndInfo {
        vertex: x,
        kind,
        first: d1.mark(x),
        second: d2.mark(x),
        first_degree_one: d1.is_degree_one(x),
        second_degree_one: d2.is_degree_one(x),
    };
    let mut out = Vec::new();
    let mut k = 0;
    while k < t.len() {
        if !d2.contains(t[k]) {
            k += 1;
            continue;
        }
        let lo = k;
        while k + 1 < t.len() && steps2.contains(&steps1[k]) {
            k += 1;
        }
        let hi = k;
        let (lo_kind, hi_kind) = if lo == hi {
            (None, None)
        } else {
            let first = steps1[lo];
            let last = steps1[hi - 1];
            (
                Some(if first.source == t[lo] {
                    EndKind::Source
                } else {
                    EndKind::Sink
                }),
                Some(if last.target == t[hi] {
                    EndKind::Sink
                } else {
                    EndKind::Source
                }),
            )
        };
        out.push(IntersectionComponent {
            vertices: t[lo..=hi].to_vec(),
            ends: [end_info(t[lo], lo_kind), end_info(t[hi], hi_kind)],
            first_range: (lo, hi),
        });
        k += 1;
    }
    out
}

/// The part of `d1` relevant to `d2`: the common component completed at
/// each end. An end at an unmarked vertex of `d1` is extended to the nearest
/// marked vertex; an end marked in `d1` only is kept; an end marked in both
/// is extended to the next marked vertex of `d1` when there is one.
pub fn restriction(q: &BrauerQuiver, d1: &Diagram, d2: &Diagram) -> Result<Diagram> {
    let comps = intersection(d1, d2);
    if comps.len() != 1 {
        return Err(Error::RestrictionUndefined(format!(
            "intersection has {} components",
            comps.len()
        )));
    }
    if comps[0].is_single_vertex() {
        return Err(Error::RestrictionUndefined(
            "intersection is a single vertex".into(),
        ));
    }
    let (lo, hi) = comps[0].first_range;
    let t = d1.traversed();
    let extend = |start: usize, down: bool| -> usize {
        let step = |i: usize| {
            if down {
                i.checked_sub(1)
            } else {
                (i + 1 < t.len()).then_some(i + 1)
            }
        };
        let x = t[start];
        let move_to_marked = |mut i: usize| {
            while let Some(j) = step(i) {
                i = j;
                if d1.mark(t[i]).is_marked() {
                    break;
                }
            }
            i
        };
        match (d1.mark(x).is_marked(), d2.mark(x).is_marked()) {
            (false, _) => move_to_marked(start),
            (true, false) => start,
            (true, true) => move_to_marked(start),
        }
    };
    d1.sub_walk(q, extend(lo, true), extend(hi, false))
}

/// All stalks and one representative of every diagram, sorted.
pub fn enumerate_indecomposables(q: &BrauerQuiver) -> Vec<TwoTermObject> {
    let mut out: Vec<TwoTermObject> = (0..q.vertex_count())
        .flat_map(|x| {
            [
                TwoTermObject::stalk(x, Degree::Zero),
                TwoTermObject::stalk(x, Degree::One),
            ]
        })
        .collect();
    out.extend(
        enumerate_diagrams(q)
            .into_iter()
            .map(TwoTermObject::Diagram),
    );
    out.sort();
    out
}

pub fn enumerate_diagrams(q: &BrauerQuiver) -> Vec<Diagram> {
    struct Search<'a> {
        q: &'a BrauerQuiver,
        used: Vec<bool>,
        marked: Vec<usize>,
        found: BTreeSet<Diagram>,
    }

    impl Search<'_> {
        fn grow(&mut self, role: Mark, last_cycle: Option<CycleId>, first_is_source: bool) {
            let x = *self.marked.last().unwrap();
            for c in self.q.cycles_of(x) {
                if Some(c) == last_cycle || self.q.is_formal_loop(c) {
                    continue;
                }
                for &y in self.q.cycle(c) {
                    if y == x {
                        continue;
                    }
                    let mut step = if role == Mark::Source {
                        self.q.path_vertices(c, x, y)
                    } else {
                        let mut p = self.q.path_vertices(c, y, x);
                        p.reverse();
                        p
                    };
                    step.remove(0);
                    if step.iter().any(|&v| self.used[v]) {
                        continue;
                    }
                    for &v in &step {
                        self.used[v] = true;
                    }
                    self.marked.push(y);
                    let d = Diagram::from_marked(self.q, &self.marked, first_is_source)
                        .expect("search only builds valid walks");
                    self.found.insert(d);
                    self.grow(role.opposite(), Some(c), first_is_source);
                    self.marked.pop();
                    for &v in &step {
                        self.used[v] = false;
                    }
                }
            }
        }
    }

    let mut search = Search {
        q,
        used: vec![false; q.vertex_count()],
        marked: Vec::new(),
        found: BTreeSet::new(),
    };
    for x in 0..q.vertex_count() {
        for role in [Mark::Source, Mark::Sink] {
            search.used[x] = true;
            search.marked.push(x);
            search.grow(role, None, role == Mark::Source);
            search.marked.pop();
            search.used[x] = false;
        }
    }
    search.found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::BrauerTree;

    fn quiver(t: BrauerTree) -> BrauerQuiver {
        BrauerQuiver::new(&t)
    }

    #[test]
    fn counts_for_small_trees() {
        assert_eq!(
            enumerate_indecomposables(&quiver(BrauerTree::line(1))).len(),
            2
        );
        let l2 = enumerate_indecomposables(&quiver(BrauerTree::line(2)));
        assert_eq!(l2.len(), 6);
        assert_eq!(l2.iter().filter(|o| !o.is_stalk()).count(), 2);
        let s3 = quiver(BrauerTree::star(3));
        let objs = enumerate_indecomposables(&s3);
        assert_eq!(objs.len(), 12);
        assert!(objs
            .iter()
            .filter_map(|o| o.as_diagram())
            .all(|d| d.marked().len() == 2));
    }

    #[test]
    fn reversal_gives_the_same_diagram() {
        let q = quiver(BrauerTree::line(3));
        // tree vertex 1 carries the 2-cycle {0,1}, vertex 2 carries {1,2}
        let a = Diagram::from_marked(&q, &[0, 1, 2], true).unwrap();
        let b = Diagram::from_marked(&q, &[2, 1, 0], true).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.mark(1), Mark::Sink);
        assert!(a.is_degree_one(0) && a.is_degree_one(2) && !a.is_degree_one(1));
    }

    #[test]
    fn rejects_repeated_vertex() {
        let q = quiver(BrauerTree::star(3));
        // two segments in the same cycle
        assert!(Diagram::from_marked(&q, &[0, 1, 2], true).is_err());
        assert!(Diagram::from_marked(&q, &[0], true).is_err());
    }

    #[test]
    fn realize_single_segment() {
        let q = quiver(BrauerTree::line(2));
        let d = TwoTermObject::string(&q, 0, 1).unwrap();
        let r = d.realize(&q);
        assert_eq!(r.degree0, vec![0]);
        assert_eq!(r.degree1, vec![1]);
        assert_eq!(r.differential, vec![vec![Some(q.hom_basis(0, 1)[0])]]);

        let stalk = TwoTermObject::stalk(0, Degree::One).realize(&q);
        assert!(stalk.degree0.is_empty());
        assert_eq!(stalk.degree1, vec![0]);
    }

    #[test]
    fn from_parts_checks_walk() {
        let q = quiver(BrauerTree::star(3));
        let d = Diagram::from_parts(&q, &[0, 2], &[0, 1, 2], None).unwrap();
        assert_eq!(d.sources(), vec![0]);
        // 0 is a sink here: the path 1 -> 2 -> 0 is traversed backwards
        let d = Diagram::from_parts(&q, &[0, 1], &[0, 2, 1], None).unwrap();
        assert_eq!(d.sinks(), vec![0]);
        assert!(Diagram::from_parts(&q, &[0, 1], &[0, 1, 2], None).is_err());
        assert!(Diagram::from_parts(&q, &[0, 1], &[0, 1, 0], None).is_err());
        assert!(Diagram::from_parts(&q, &[0, 2], &[0, 1, 2], Some(&[2])).is_err());

        let l2 = quiver(BrauerTree::line(2));
        assert!(Diagram::from_parts(&l2, &[0, 1], &[0, 1], None).is_err());
        let d = Diagram::from_parts(&l2, &[0, 1], &[0, 1], Some(&[1])).unwrap();
        assert_eq!(d.sources(), vec![1]);
    }

    #[test]
    fn json_shapes() {
        let q = quiver(BrauerTree::line(2));
        let s = TwoTermObject::stalk(1, Degree::Zero);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"kind":"stalk","vertex":1,"degree":0}"#
        );
        let d = TwoTermObject::string(&q, 1, 0).unwrap();
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(
            text,
            r#"{"kind":"diagram","marked":[0,1],"traversed":[0,1],"sources":[1]}"#
        );
        let back =
            TwoTermObject::from_json_value(&serde_json::from_str(&text).unwrap(), &q).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn intersection_examples() {
        let l2 = quiver(BrauerTree::line(2));
        let a = Diagram::from_marked(&l2, &[0, 1], true).unwrap();
        let b = Diagram::from_marked(&l2, &[1, 0], true).unwrap();
        let comps = intersection(&a, &b);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.is_single_vertex()));

        let s3 = quiver(BrauerTree::star(3));
        let a = Diagram::from_marked(&s3, &[0, 1], true).unwrap();
        let b = Diagram::from_marked(&s3, &[0, 2], true).unwrap();
        let comps = intersection(&a, &b);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].vertices, vec![0, 1]);
        assert_eq!(comps[0].ends[0].kind, Some(EndKind::Source));
        assert_eq!(comps[0].ends[1].kind, Some(EndKind::Sink));
        assert_eq!(comps[0].ends[1].second, Mark::Unmarked);

        // diagrams in different branches of a star of stars
        let l4 = quiver(BrauerTree::line(4));
        let a = Diagram::from_marked(&l4, &[0, 1], true).unwrap();
        let b = Diagram::from_marked(&l4, &[2, 3], true).unwrap();
        assert!(intersection(&a, &b).is_empty());
    }

    #[test]
    fn restriction_rules() {
        let l3 = quiver(BrauerTree::line(3));
        // d2 = 0 > 1 < 2 contains d1 = 0 > 1; 0 and 1 are marked in both
        let d1 = Diagram::from_marked(&l3, &[0, 1], true).unwrap();
        let d2 = Diagram::from_marked(&l3, &[0, 1, 2], true).unwrap();
        assert_eq!(restriction(&l3, &d1, &d2).unwrap(), d1);
        // vertex 1 is marked in both, so the restriction of d2 continues to 2
        assert_eq!(restriction(&l3, &d2, &d1).unwrap(), d2);

        // end at a vertex marked only in d1: no completion
        let s3 = quiver(BrauerTree::star(3));
        let short = Diagram::from_marked(&s3, &[0, 1], true).unwrap();
        let long = Diagram::from_marked(&s3, &[0, 2], true).unwrap();
        assert_eq!(restriction(&s3, &short, &long).unwrap(), short);
        // the restriction of the longer string is completed to its sink
        assert_eq!(restriction(&s3, &long, &short).unwrap(), long);

        let l2 = quiver(BrauerTree::line(2));
        let a = Diagram::from_marked(&l2, &[0, 1], true).unwrap();
        let b = Diagram::from_marked(&l2, &[1, 0], true).unwrap();
        assert!(matches!(
            restriction(&l2, &a, &b),
            Err(Error::RestrictionUndefined(_))
        ));
    }
}

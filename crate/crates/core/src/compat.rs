//! Pairwise compatibility of indecomposable two-term partial tilting
//! complexes: whether `Hom(T_i, T_j[-1]) = 0 = Hom(T_j, T_i[-1])`, decided
//! from the diagrams alone.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::quiver::BrauerQuiver;
use crate::two_term::{intersection, restriction, Degree, Diagram, EndKind, Mark, TwoTermObject};

/// Which lemma rules a pair out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// disjoint diagrams, a degree-one sink and a degree-one source alone on
    /// a shared A-cycle
    Lemma2,
    /// the intersection is disconnected
    Lemma3,
    /// a single common vertex in a forbidden position
    Lemma4,
    /// sink/source intersection with incomparable restrictions
    Lemma5,
    /// sink/sink intersection with nested restrictions
    Lemma6,
    /// source/source intersection with nested restrictions
    Lemma7,
    /// degree 0 stalk against a diagram
    Lemma8,
    /// degree 1 stalk against a diagram
    Lemma9,
    /// stalks on one A-cycle in different degrees
    Lemma10,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::Lemma2 => "lemma2",
            Reason::Lemma3 => "lemma3",
            Reason::Lemma4 => "lemma4",
            Reason::Lemma5 => "lemma5",
            Reason::Lemma6 => "lemma6",
            Reason::Lemma7 => "lemma7",
            Reason::Lemma8 => "lemma8",
            Reason::Lemma9 => "lemma9",
            Reason::Lemma10 => "lemma10",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    Case1a,
    Case1b,
    Case1c,
    Case1d,
    Case1e,
    Case1f,
    Case2a,
    Case2b,
    Case3,
    Incompatible(Reason),
}

impl CaseLabel {
    pub fn is_compatible(self) -> bool {
        !matches!(self, CaseLabel::Incompatible(_))
    }

    pub fn code(self) -> &'static str {
        match self {
            CaseLabel::Case1a => "1a",
            CaseLabel::Case1b => "1b",
            CaseLabel::Case1c => "1c",
            CaseLabel::Case1d => "1d",
            CaseLabel::Case1e => "1e",
            CaseLabel::Case1f => "1f",
            CaseLabel::Case2a => "2a",
            CaseLabel::Case2b => "2b",
            CaseLabel::Case3 => "3",
            CaseLabel::Incompatible(_) => "incompatible",
        }
    }

    pub fn reason(self) -> Option<Reason> {
        match self {
            CaseLabel::Incompatible(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason() {
            Some(r) => write!(f, "incompatible({})", r.code()),
            None => f.write_str(self.code()),
        }
    }
}

/// One line of the pairwise listing.
#[derive(Debug, Clone, Serialize)]
pub struct PairRecord {
    pub t1: TwoTermObject,
    pub t2: TwoTermObject,
    pub case: &'static str,
    pub compatible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
}

impl PairRecord {
    pub fn new(t1: &TwoTermObject, t2: &TwoTermObject, label: CaseLabel) -> Self {
        Self {
            t1: t1.clone(),
            t2: t2.clone(),
            case: label.code(),
            compatible: label.is_compatible(),
            reason: label.reason().map(Reason::code),
        }
    }
}

/// The branch of the classification that applies to the pair. Symmetric in
/// its arguments.
pub fn classify_pair(
    t1: &TwoTermObject,
    t2: &TwoTermObject,
    q: &BrauerQuiver,
) -> Result<CaseLabel> {
    t1.validate(q)?;
    t2.validate(q)?;
    Ok(match (t1, t2) {
        (
            TwoTermObject::Stalk {
                vertex: x,
                degree: dx,
            },
            TwoTermObject::Stalk {
                vertex: y,
                degree: dy,
            },
        ) => stalks(q, *x, *dx, *y, *dy),
        (TwoTermObject::Stalk { vertex, degree }, TwoTermObject::Diagram(d))
        | (TwoTermObject::Diagram(d), TwoTermObject::Stalk { vertex, degree }) => {
            stalk_and_diagram(q, *vertex, *degree, d)
        }
        (TwoTermObject::Diagram(a), TwoTermObject::Diagram(b)) => diagrams(q, a, b),
    })
}

pub fn is_compatible(t1: &TwoTermObject, t2: &TwoTermObject, q: &BrauerQuiver) -> Result<bool> {
    classify_pair(t1, t2, q).map(CaseLabel::is_compatible)
}

fn stalks(q: &BrauerQuiver, x: usize, dx: Degree, y: usize, dy: Degree) -> CaseLabel {
    // a vertex shares its formal loops and cycles with itself
    let share = x == y || q.common_cycle(x, y).is_some();
    if !share || dx == dy {
        CaseLabel::Case3
    } else {
        CaseLabel::Incompatible(Reason::Lemma10)
    }
}

/// `d` meets the A-cycle through `x` only in `m`, and `m` is a degree-one
/// vertex with the given role.
fn lonely_end_near(q: &BrauerQuiver, x: usize, d: &Diagram, role: Mark) -> bool {
    d.endpoints().into_iter().any(|m| {
        d.mark(m) == role
            && q.common_cycle(x, m)
                .is_some_and(|c| d.vertices_on(q, c) == [m])
    })
}

fn stalk_and_diagram(q: &BrauerQuiver, x: usize, degree: Degree, d: &Diagram) -> CaseLabel {
    let (role, other, label, reason) = match degree {
        Degree::Zero => (Mark::Source, Mark::Sink, CaseLabel::Case2a, Reason::Lemma8),
        Degree::One => (Mark::Sink, Mark::Source, CaseLabel::Case2b, Reason::Lemma9),
    };
    let ok = if d.contains(x) {
        d.mark(x) == role && d.is_degree_one(x)
    } else {
        !lonely_end_near(q, x, d, other)
    };
    if ok {
        label
    } else {
        CaseLabel::Incompatible(reason)
    }
}

/// The only vertex of `d` on some A-cycle is a degree-one vertex with
/// `role`; returns those A-cycles.
fn lonely_cycles(q: &BrauerQuiver, d: &Diagram, role: Mark) -> Vec<crate::quiver::CycleId> {
    d.endpoints()
        .into_iter()
        .filter(|&m| d.mark(m) == role)
        .flat_map(|m| q.cycles_of(m))
        .filter(|&c| !q.is_formal_loop(c) && d.vertices_on(q, c).len() == 1)
        .collect()
}

fn diagrams(q: &BrauerQuiver, a: &Diagram, b: &Diagram) -> CaseLabel {
    let shares_cycle = a.traversed().iter().any(|&x| {
        b.traversed()
            .iter()
            .any(|&y| x == y || q.common_cycle(x, y).is_some())
    });
    if !shares_cycle {
        return CaseLabel::Case1a;
    }
    let comps = intersection(a, b);
    if comps.is_empty() {
        let clash = |s: &Diagram, t: &Diagram| {
            let sinks = lonely_cycles(q, s, Mark::Sink);
            lonely_cycles(q, t, Mark::Source)
                .iter()
                .any(|c| sinks.contains(c))
        };
        return if clash(a, b) || clash(b, a) {
            CaseLabel::Incompatible(Reason::Lemma2)
        } else {
            CaseLabel::Case1b
        };
    }
    if comps.len() > 1 {
        return CaseLabel::Incompatible(Reason::Lemma3);
    }
    let comp = &comps[0];
    if comp.is_single_vertex() {
        let e = comp.ends[0];
        let ok = (e.first == Mark::Unmarked && e.second == Mark::Unmarked)
            || (e.first == e.second
                && e.first.is_marked()
                && e.first_degree_one
                && e.second_degree_one);
        return if ok {
            CaseLabel::Case1c
        } else {
            CaseLabel::Incompatible(Reason::Lemma4)
        };
    }
    let ra = restriction(q, a, b).expect("one component with several vertices");
    let rb = restriction(q, b, a).expect("one component with several vertices");
    let nested = ra.is_sub_walk_of(&rb) || rb.is_sub_walk_of(&ra);
    let common_degree_one = a
        .endpoints()
        .into_iter()
        .any(|x| b.is_degree_one(x) && a.mark(x) == b.mark(x));
    let kinds = [comp.ends[0].kind, comp.ends[1].kind];
    match kinds {
        [Some(EndKind::Sink), Some(EndKind::Sink)] => {
            if !nested || common_degree_one {
                CaseLabel::Case1e
            } else {
                CaseLabel::Incompatible(Reason::Lemma6)
            }
        }
        [Some(EndKind::Source), Some(EndKind::Source)] => {
            if !nested || common_degree_one {
                CaseLabel::Case1f
            } else {
                CaseLabel::Incompatible(Reason::Lemma7)
            }
        }
        _ => {
            if nested {
                CaseLabel::Case1d
            } else {
                CaseLabel::Incompatible(Reason::Lemma5)
            }
        }
    }
}

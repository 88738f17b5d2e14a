use alloc::vec::Vec;

use serde::Serialize;

use super::Bridge;
use crate::graph::{Vertex, VertexSet};

/// How to translate a solution across one effective rule application, from
/// the reduced graph back to the graph before the application.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LiftStep {
    /// `N_{2,3}(anchor)` was replaced by `pendant`; `stand_in` is a removed
    /// neighbor of the anchor.
    Pendant { anchor: Vertex, pendant: Vertex, stand_in: Vertex },
    /// Both poles were forced with pendants and `N_{2,3}(v, w)` removed.
    BothForced {
        v: Vertex,
        w: Vertex,
        v_pendant: Vertex,
        w_pendant: Vertex,
        v_stand_in: Vertex,
        w_stand_in: Vertex,
        bridge: Bridge,
    },
    /// An induced `P3` interior became the single vertex `y`.
    Merged { y: Vertex, middle: Vertex },
    /// Any other interior became the two-vertex gadget `y`, `y2`.
    Either { v: Vertex, w: Vertex, y: Vertex, y2: Vertex },
}

impl LiftStep {
    fn lift(&self, d: &mut VertexSet) {
        match *self {
            LiftStep::Pendant { anchor, pendant, stand_in } => lift_pendant(d, anchor, pendant, stand_in),
            LiftStep::BothForced { v, w, v_pendant, w_pendant, v_stand_in, w_stand_in, bridge } => {
                lift_pendant(d, v, v_pendant, v_stand_in);
                lift_pendant(d, w, w_pendant, w_stand_in);
                match bridge {
                    Bridge::None => {}
                    Bridge::Common { y, via } => replace(d, y, via),
                    Bridge::Path { y, y2, via } => {
                        replace(d, y, via.0);
                        replace(d, y2, via.1);
                    }
                }
            }
            LiftStep::Merged { y, middle } => replace(d, y, middle),
            LiftStep::Either { v, w, y, y2 } => {
                let hit = d.remove(&y) | d.remove(&y2);
                if hit {
                    d.insert(v);
                    d.insert(w);
                }
            }
        }
    }
}

/// A pendant in the set is moved onto its anchor; if the anchor is already
/// there, the pendant was a witness and a removed neighbor takes that role.
fn lift_pendant(d: &mut VertexSet, anchor: Vertex, pendant: Vertex, stand_in: Vertex) {
    if d.remove(&pendant) {
        if d.contains(&anchor) {
            d.insert(stand_in);
        } else {
            d.insert(anchor);
        }
    }
}

fn replace(d: &mut VertexSet, from: Vertex, to: Vertex) {
    if d.remove(&from) {
        d.insert(to);
    }
}

/// The effective applications of a reduction run, in order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<LiftStep>,
}

impl ReductionTrace {
    /// Maps a dominating set of the reduced graph to one of the original graph
    /// that is no larger. Semitotal dominating sets stay semitotal.
    pub fn lift(&self, d: &VertexSet) -> VertexSet {
        let mut out = d.clone();
        for step in self.steps.iter().rev() {
            step.lift(&mut out);
        }
        out
    }
}

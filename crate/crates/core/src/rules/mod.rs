//! The reduction rules and their fixpoint driver.
//!
//! * Rule 1 shrinks `N_{2,3}(v)` to one pendant whenever `N3(v)` is nonempty.
//! * Rule 2 looks at a pair `v, w` whose sealed vertices `N3(v, w)` cannot be
//!   dominated by three vertices of `N_{2,3}(v, w)` and forces `v`, `w` or
//!   both into every solution with pendant gadgets.
//! * Rule 3 collapses the interior of a simple region with at least five
//!   non-pole vertices into one or two vertices.
//!
//! Every application keeps the minimum sds size unchanged. An application
//! whose output is isomorphic to its input counts as ineffective; the driver
//! stops after a sweep without effective applications.

mod families;
mod lift;
mod reduce;

use alloc::vec::Vec;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::neighborhoods::{pair_partition, vertex_partition};
use crate::planar::SimpleRegion;

pub use families::{compute_families, CandidateFamilies};
pub use lift::{LiftStep, ReductionTrace};
pub use reduce::{reduce, reduce_traced, ReductionReport, RuleCounts, Sizes};

pub(crate) use families::{family_emptiness, min_cover_of};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RuleKind {
    #[serde(rename = "R1")]
    R1,
    #[serde(rename = "R2-case1")]
    R2Case1,
    #[serde(rename = "R2-case2")]
    R2Case2,
    #[serde(rename = "R2-case3")]
    R2Case3,
    #[serde(rename = "R3-case1")]
    R3Case1,
    #[serde(rename = "R3-case2")]
    R3Case2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Site {
    Vertex(Vertex),
    Pair(Vertex, Vertex),
}

/// What one rule invocation did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleApplication {
    /// The case whose guard held; `None` when no case applies.
    pub rule: Option<RuleKind>,
    pub site: Site,
    pub removed: VertexSet,
    pub added: VertexSet,
    /// False when the graph was returned unchanged, either because no case
    /// applies or because the replacement would be isomorphic to the input.
    pub effective: bool,
}

/// A replacement the rule wants to make, before the effectiveness check.
#[derive(Clone, Debug)]
pub(crate) struct Plan {
    pub rule: RuleKind,
    pub site: Site,
    /// Vertices the replacement attaches to; they stay in the graph.
    pub poles: Vec<Vertex>,
    pub removed: VertexSet,
    pub added: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub lift: LiftStep,
}

pub(crate) enum Decision {
    /// No replacement; carries the case whose guard held, if any.
    Keep(Option<RuleKind>),
    Replace(Plan),
}

impl Plan {
    /// Whether committing would shrink `(|V|, |E|)` lexicographically. Only
    /// such replacements are carried out; this rules out every output
    /// isomorphic to the input and bounds the number of applications.
    pub(crate) fn shrinks(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let m = g.edge_count();
        let lost_edges = self
            .removed
            .iter()
            .map(|&r| g.nbrs(r).iter().filter(|&&x| !self.removed.contains(&x) || x > r).count())
            .sum::<usize>();
        let after = (n - self.removed.len() + self.added.len(), m - lost_edges + self.edges.len());
        after < (n, m)
    }

    pub(crate) fn commit(&self, g: &mut Graph) {
        for &r in self.removed.iter() {
            g.remove_vertex(r);
        }
        for &a in &self.added {
            g.add_vertex(a);
        }
        for &(a, b) in &self.edges {
            g.add_edge(a, b);
        }
    }

    fn application(&self, effective: bool) -> RuleApplication {
        RuleApplication {
            rule: Some(self.rule),
            site: self.site,
            removed: if effective { self.removed.clone() } else { VertexSet::new() },
            added: if effective { self.added.iter().copied().collect() } else { VertexSet::new() },
            effective,
        }
    }
}

/// Removes `N_{2,3}(center)` and hangs a fresh pendant on `center`. `None`
/// when there is nothing to remove.
fn pendant_plan(g: &Graph, center: Vertex, rule: RuleKind, site: Site) -> Option<Plan> {
    let removed = vertex_partition(g, center).n23();
    let stand_in = *removed.first()?;
    let pendant = g.next_fresh_id();
    Some(Plan {
        rule,
        site,
        poles: alloc::vec![center],
        removed,
        added: alloc::vec![pendant],
        edges: alloc::vec![(center, pendant)],
        lift: LiftStep::Pendant { anchor: center, pendant, stand_in },
    })
}

pub(crate) fn decide_rule1(g: &Graph, v: Vertex) -> Decision {
    if vertex_partition(g, v).n3.is_empty() {
        return Decision::Keep(None);
    }
    match pendant_plan(g, v, RuleKind::R1, Site::Vertex(v)) {
        Some(plan) => Decision::Replace(plan),
        None => Decision::Keep(Some(RuleKind::R1)),
    }
}

pub(crate) fn decide_rule2(g: &Graph, v: Vertex, w: Vertex) -> Decision {
    let part = pair_partition(g, v, w);
    let empty = family_emptiness(g, &part);
    if !empty.d {
        return Decision::Keep(None);
    }
    let site = Site::Pair(v, w);
    let one_sided = |center, rule| match pendant_plan(g, center, rule, site) {
        Some(plan) => Decision::Replace(plan),
        // Nothing to shrink: adding a pendant would only grow the graph.
        None => Decision::Keep(Some(rule)),
    };
    match (empty.dv, empty.dw) {
        (true, true) => Decision::Replace(case1_plan(g, v, w, part.n23())),
        (false, true) => one_sided(v, RuleKind::R2Case2),
        (true, false) => one_sided(w, RuleKind::R2Case3),
        (false, false) => Decision::Keep(None),
    }
}

/// `N_{2,3}(v, w)` minus the vertices that give a pole its only short route
/// to a kept vertex beyond its own neighborhood. Such a route can carry the
/// pole's witness, so it must survive.
fn case1_removal(g: &Graph, v: Vertex, w: Vertex, n23: VertexSet) -> VertexSet {
    let mut removed = n23;
    loop {
        let bridging = removed.iter().copied().find(|&x| {
            [v, w]
                .into_iter()
                .filter(|&p| g.has_edge(x, p))
                .any(|p| g.nbrs(x).iter().any(|&k| k != v && k != w && !removed.contains(&k) && !g.has_edge(p, k)))
        });
        match bridging {
            Some(x) => {
                removed.remove(&x);
            }
            None => return removed,
        }
    }
}

fn case1_plan(g: &Graph, v: Vertex, w: Vertex, n23: VertexSet) -> Plan {
    let removed = case1_removal(g, v, w, n23);
    let fresh = g.next_fresh_id();
    let (vp, wp) = (fresh, fresh + 1);
    let (nv, nw) = (g.nbrs(v), g.nbrs(w));
    let first_in = |ns: &alloc::collections::BTreeSet<Vertex>| removed.iter().copied().find(|x| ns.contains(x));
    let mut added = alloc::vec![vp, wp];
    let mut edges = alloc::vec![(v, vp), (w, wp)];
    let bridge = if let Some(c) = removed.iter().copied().find(|x| nv.contains(x) && nw.contains(x)) {
        let y = fresh + 2;
        added.push(y);
        edges.extend([(v, y), (y, w)]);
        Bridge::Common { y, via: c }
    } else if let Some((x, x2)) = removed
        .iter()
        .filter(|x| nv.contains(x))
        .find_map(|&x| g.nbrs(x).iter().find(|z| removed.contains(z) && nw.contains(z)).map(|&z| (x, z)))
    {
        let (y, y2) = (fresh + 2, fresh + 3);
        added.extend([y, y2]);
        edges.extend([(v, y), (y, y2), (y2, w)]);
        Bridge::Path { y, y2, via: (x, x2) }
    } else {
        Bridge::None
    };
    // An undominatable part of N3(v, w) lies next to each pole, so both
    // stand-ins exist.
    let v_stand_in = first_in(nv).expect("removed vertex adjacent to v");
    let w_stand_in = first_in(nw).expect("removed vertex adjacent to w");
    Plan {
        rule: RuleKind::R2Case1,
        site: Site::Pair(v, w),
        poles: alloc::vec![v, w],
        removed,
        added,
        edges,
        lift: LiftStep::BothForced { v, w, v_pendant: vp, w_pendant: wp, v_stand_in, w_stand_in, bridge },
    }
}

pub(crate) fn decide_rule3(g: &Graph, region: &SimpleRegion) -> Decision {
    let (v, w) = region.poles;
    if region.size() < 5 {
        return Decision::Keep(None);
    }
    let fresh = g.next_fresh_id();
    let site = Site::Pair(v, w);
    let inner = g.induced_subgraph(&region.interior).expect("validated region");
    if let Some(middle) = p3_middle(&inner) {
        Decision::Replace(Plan {
            rule: RuleKind::R3Case1,
            site,
            poles: alloc::vec![v, w],
            removed: region.interior.clone(),
            added: alloc::vec![fresh],
            edges: alloc::vec![(v, fresh), (fresh, w)],
            lift: LiftStep::Merged { y: fresh, middle },
        })
    } else {
        let (y, y2) = (fresh, fresh + 1);
        Decision::Replace(Plan {
            rule: RuleKind::R3Case2,
            site,
            poles: alloc::vec![v, w],
            removed: region.interior.clone(),
            added: alloc::vec![y, y2],
            edges: alloc::vec![(v, y), (v, y2), (y, w), (y2, w)],
            lift: LiftStep::Either { v, w, y, y2 },
        })
    }
}

/// The middle vertex when `h` is an induced path on three vertices.
fn p3_middle(h: &Graph) -> Option<Vertex> {
    if h.vertex_count() != 3 {
        return None;
    }
    let p3 = Graph::from_edges([], [(0, 1), (1, 2)]).expect("static path");
    if !crate::iso::is_isomorphic_small(h, &p3).expect("three vertices") {
        return None;
    }
    h.vertices().find(|&x| h.nbrs(x).len() == 2)
}

/// How a Rule 2 Case 1 application kept short pole-to-pole connections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Bridge {
    None,
    /// `y` stands for the removed common neighbor `via`.
    Common {
        y: Vertex,
        via: Vertex,
    },
    /// `v - y - y2 - w` stands for the removed path `v - via.0 - via.1 - w`.
    Path {
        y: Vertex,
        y2: Vertex,
        via: (Vertex, Vertex),
    },
}

fn run(g: &Graph, decision: Decision, site: Site) -> (Graph, RuleApplication) {
    match decision {
        Decision::Keep(rule) => (
            g.clone(),
            RuleApplication { rule, site, removed: VertexSet::new(), added: VertexSet::new(), effective: false },
        ),
        Decision::Replace(plan) => {
            if !plan.shrinks(g) {
                return (g.clone(), plan.application(false));
            }
            let mut out = g.clone();
            plan.commit(&mut out);
            (out, plan.application(true))
        }
    }
}

/// Rule 1 at `v`.
pub fn apply_rule1(g: &Graph, v: Vertex) -> Result<(Graph, RuleApplication)> {
    g.check_vertex(v)?;
    Ok(run(g, decide_rule1(g, v), Site::Vertex(v)))
}

/// Rule 2 at the pair `v, w`.
pub fn apply_rule2(g: &Graph, v: Vertex, w: Vertex) -> Result<(Graph, RuleApplication)> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(crate::Error::IdenticalPoles(v));
    }
    Ok(run(g, decide_rule2(g, v, w), Site::Pair(v, w)))
}

/// Rule 3 on a simple region of `g`.
pub fn apply_rule3(g: &Graph, region: &SimpleRegion) -> Result<(Graph, RuleApplication)> {
    region.validate(g)?;
    let (v, w) = region.poles;
    Ok(run(g, decide_rule3(g, region), Site::Pair(v, w)))
}

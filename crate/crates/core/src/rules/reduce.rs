use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use serde::Serialize;

use super::lift::ReductionTrace;
use super::{decide_rule1, decide_rule2, decide_rule3, min_cover_of, Decision, Plan, RuleKind};
use crate::graph::{Graph, Vertex};
use crate::neighborhoods::vertex_partition;
use crate::planar::simple::simple_regions;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Sizes {
    pub vertices: usize,
    pub edges: usize,
}

impl Sizes {
    pub fn of(g: &Graph) -> Self {
        Sizes { vertices: g.vertex_count(), edges: g.edge_count() }
    }
}

/// Effective applications per rule case.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RuleCounts {
    #[serde(rename = "R1")]
    pub r1: usize,
    #[serde(rename = "R2-case1")]
    pub r2_case1: usize,
    #[serde(rename = "R2-case2")]
    pub r2_case2: usize,
    #[serde(rename = "R2-case3")]
    pub r2_case3: usize,
    #[serde(rename = "R3-case1")]
    pub r3_case1: usize,
    #[serde(rename = "R3-case2")]
    pub r3_case2: usize,
}

impl RuleCounts {
    pub fn total(&self) -> usize {
        self.r1 + self.r2_case1 + self.r2_case2 + self.r2_case3 + self.r3_case1 + self.r3_case2
    }

    pub fn get(&self, rule: RuleKind) -> usize {
        match rule {
            RuleKind::R1 => self.r1,
            RuleKind::R2Case1 => self.r2_case1,
            RuleKind::R2Case2 => self.r2_case2,
            RuleKind::R2Case3 => self.r2_case3,
            RuleKind::R3Case1 => self.r3_case1,
            RuleKind::R3Case2 => self.r3_case2,
        }
    }

    fn bump(&mut self, rule: RuleKind) {
        let slot = match rule {
            RuleKind::R1 => &mut self.r1,
            RuleKind::R2Case1 => &mut self.r2_case1,
            RuleKind::R2Case2 => &mut self.r2_case2,
            RuleKind::R2Case3 => &mut self.r2_case3,
            RuleKind::R3Case1 => &mut self.r3_case1,
            RuleKind::R3Case2 => &mut self.r3_case2,
        };
        *slot += 1;
    }
}

/// Summary of a reduction run. Contains no timing, so equal inputs give
/// equal reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReductionReport {
    pub input: Sizes,
    pub output: Sizes,
    pub applications: RuleCounts,
    /// Sweeps performed, including the final one without effective
    /// applications.
    pub sweeps: usize,
    /// Share of input vertices removed, in percent.
    pub reduction_percent: f64,
}

/// Applies Rules 1–3 until a full sweep changes nothing.
///
/// A sweep runs Rule 1 at every vertex in ascending order, then Rule 2 at
/// every unordered pair in lexicographic order, then Rule 3 at every simple
/// region between vertices at distance at most two. Fresh vertices get ids
/// above every id seen so far.
pub fn reduce(g: &Graph) -> (Graph, ReductionReport) {
    let (out, report, _) = reduce_traced(g);
    (out, report)
}

/// Like [`reduce`], also returning what is needed to lift solutions back.
pub fn reduce_traced(g: &Graph) -> (Graph, ReductionReport, ReductionTrace) {
    let mut d = Driver::new(g.clone());
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let before = d.counts.total();
        d.rule1_pass();
        d.rule2_pass();
        d.rule3_pass();
        if d.counts.total() == before {
            break;
        }
    }
    let input = Sizes::of(g);
    let output = Sizes::of(&d.g);
    let removed = input.vertices.saturating_sub(output.vertices);
    let reduction_percent = if input.vertices == 0 { 0.0 } else { 100.0 * removed as f64 / input.vertices as f64 };
    let report = ReductionReport { input, output, applications: d.counts, sweeps, reduction_percent };
    (d.g, report, d.trace)
}

/// What a pair far from `x` needs to know about `x` for Rule 2: the fewest
/// vertices of `N_{2,3}(x)` dominating `N3(x)` (4 standing for "more than
/// three"), and whether `N_{2,3}(x)` is a single pendant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Local {
    cover: u8,
    lone_pendant: bool,
}

impl Local {
    fn of(g: &Graph, x: Vertex) -> Self {
        let part = vertex_partition(g, x);
        let n23 = part.n23();
        let cover = min_cover_of(g, &part.n3, &n23, 3).map_or(4, |c| c as u8);
        let lone_pendant = n23.len() == 1 && n23.iter().all(|&z| g.nbrs(z).len() == 1);
        Local { cover, lone_pendant }
    }

    /// Whether some pair `x, w` with `w` at distance four or more could be
    /// reduced by Rule 2.
    fn active(&self) -> bool {
        self.cover >= 3 && !self.lone_pendant
    }
}

struct Driver {
    g: Graph,
    counts: RuleCounts,
    trace: ReductionTrace,
    local: BTreeMap<Vertex, Local>,
    active: BTreeSet<Vertex>,
}

impl Driver {
    fn new(g: Graph) -> Self {
        let mut d = Driver {
            g,
            counts: RuleCounts::default(),
            trace: ReductionTrace::default(),
            local: BTreeMap::new(),
            active: BTreeSet::new(),
        };
        let all: Vec<Vertex> = d.g.vertices().collect();
        d.refresh(all);
        d
    }

    fn refresh(&mut self, vertices: impl IntoIterator<Item = Vertex>) {
        for x in vertices {
            if !self.g.contains(x) {
                self.local.remove(&x);
                self.active.remove(&x);
                continue;
            }
            let info = Local::of(&self.g, x);
            if info.active() {
                self.active.insert(x);
            } else {
                self.active.remove(&x);
            }
            self.local.insert(x, info);
        }
    }

    /// Commits the decision if it shrinks the graph.
    fn apply(&mut self, decision: Decision) -> bool {
        let Decision::Replace(plan) = decision else {
            return false;
        };
        if !plan.shrinks(&self.g) {
            return false;
        }
        self.commit(plan);
        true
    }

    fn commit(&mut self, plan: Plan) {
        let before = (self.g.vertex_count(), self.g.edge_count());
        let mut touched: BTreeSet<Vertex> = plan.poles.iter().copied().collect();
        for &r in plan.removed.iter() {
            touched.insert(r);
            touched.extend(self.g.nbrs(r).iter().copied());
        }
        let mut stale: BTreeSet<Vertex> = BTreeSet::new();
        for &t in &touched {
            stale.extend(self.g.ball(t, 2));
        }
        plan.commit(&mut self.g);
        touched.extend(plan.added.iter().copied());
        for &t in touched.iter().filter(|t| self.g.contains(**t)) {
            stale.extend(self.g.ball(t, 2));
        }
        let after = (self.g.vertex_count(), self.g.edge_count());
        assert!(after < before, "{:?} did not shrink the graph", plan.rule);
        self.counts.bump(plan.rule);
        self.trace.steps.push(plan.lift);
        self.refresh(stale);
    }

    fn next_vertex(&self, after: Option<Vertex>) -> Option<Vertex> {
        match after {
            None => self.g.vertices().next(),
            Some(v) => self.g.vertices_after(v).next(),
        }
    }

    fn rule1_pass(&mut self) {
        let mut cursor = None;
        while let Some(v) = self.next_vertex(cursor) {
            let decision = decide_rule1(&self.g, v);
            self.apply(decision);
            cursor = Some(v);
        }
    }

    /// Pairs closer than four are decided directly. Farther pairs split into
    /// independent halves, and unless one pole is active the rule either
    /// does not apply or would reproduce the graph, so they are skipped.
    fn rule2_pass(&mut self) {
        let mut cursor = None;
        while let Some(v) = self.next_vertex(cursor) {
            cursor = Some(v);
            let mut near = self.g.ball(v, 3);
            let mut w_cursor = v;
            while self.g.contains(v) {
                let Some(w) = self.next_partner(v, w_cursor, &near) else {
                    break;
                };
                w_cursor = w;
                let decision = decide_rule2(&self.g, v, w);
                if self.apply(decision) && self.g.contains(v) {
                    near = self.g.ball(v, 3);
                }
            }
        }
    }

    fn next_partner(&self, v: Vertex, after: Vertex, near: &BTreeSet<Vertex>) -> Option<Vertex> {
        use core::ops::Bound::{Excluded, Unbounded};
        if self.active.contains(&v) {
            return self.g.vertices_after(after).next();
        }
        let a = near.range((Excluded(after), Unbounded)).copied().find(|x| self.g.contains(*x));
        let b = self.active.range((Excluded(after), Unbounded)).next().copied();
        match (a, b) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn rule3_pass(&mut self) {
        let mut cursor = None;
        while let Some(v) = self.next_vertex(cursor) {
            cursor = Some(v);
            let partners: Vec<Vertex> = self.g.ball(v, 2).into_iter().filter(|&w| w > v).collect();
            for w in partners {
                if !self.g.contains(v) || !self.g.contains(w) {
                    continue;
                }
                if self.g.nbrs(v).intersection(self.g.nbrs(w)).nth(4).is_none() {
                    continue;
                }
                for region in simple_regions(&self.g, v, w) {
                    if region.validate(&self.g).is_ok() {
                        let decision = decide_rule3(&self.g, &region);
                        self.apply(decision);
                    }
                }
            }
        }
    }
}

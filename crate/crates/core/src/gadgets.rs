//! Hardness constructions as graph transformers: the bipartite gadget turning
//! a dominating set instance into a semitotal one, and the flip that turns a
//! dominating set of a split graph into a semitotal dominating set.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::oracle::{solve_exact_bounded, violation, DominationKind, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    OriginalX,
    OriginalY,
    /// Pendant of an `X` vertex, also adjacent to `d1`.
    A,
    /// Pendant of a `Y` vertex, also adjacent to `d2`.
    B,
    U1,
    U2,
    D1,
    D2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteGadgetOutput {
    pub graph: Graph,
    pub roles: BTreeMap<Vertex, Role>,
    /// The original vertex each `A` or `B` pendant hangs from.
    pub pendant_of: BTreeMap<Vertex, Vertex>,
    pub u1: Vertex,
    pub d1: Vertex,
    pub u2: Vertex,
    pub d2: Vertex,
    /// `X ∪ {u2, d1} ∪ B`.
    pub part_x: VertexSet,
    /// `Y ∪ {u1, d2} ∪ A`.
    pub part_y: VertexSet,
}

/// Adds a pendant `a_i` to every `x_i ∈ X` and `b_j` to every `y_j ∈ Y`, and
/// two edges `u1 d1`, `u2 d2` with `d1` joined to every `a_i` and `d2` to
/// every `b_j`.
///
/// Fresh ids follow the largest original id: the `a_i` in ascending order of
/// `x_i`, then the `b_j`, then `u1, d1, u2, d2`.
pub fn bipartite_gadget(g: &Graph, part_x: &VertexSet, part_y: &VertexSet) -> Result<BipartiteGadgetOutput> {
    if part_x.is_empty() || part_y.is_empty() {
        return Err(Error::EmptyPart);
    }
    g.check_vertices(part_x.iter().chain(part_y.iter()))?;
    if part_x.iter().any(|x| part_y.contains(x)) {
        return Err(Error::NotBipartite("parts overlap"));
    }
    if part_x.len() + part_y.len() != g.vertex_count() {
        return Err(Error::NotBipartite("parts do not cover every vertex"));
    }
    if g.edges().any(|(u, v)| part_x.contains(&u) == part_x.contains(&v)) {
        return Err(Error::NotBipartite("an edge joins two vertices of the same part"));
    }

    let mut out = g.clone();
    let mut roles = BTreeMap::new();
    let mut pendant_of = BTreeMap::new();
    let mut next = g.next_fresh_id();
    let mut fresh = || {
        let id = next;
        next += 1;
        id
    };
    let mut new_x: VertexSet = part_x.clone();
    let mut new_y: VertexSet = part_y.clone();
    let mut a_side = Vec::new();
    let mut b_side = Vec::new();
    for &x in part_x.iter() {
        roles.insert(x, Role::OriginalX);
        let a = fresh();
        out.add_edge(x, a);
        roles.insert(a, Role::A);
        pendant_of.insert(a, x);
        new_y.insert(a);
        a_side.push(a);
    }
    for &y in part_y.iter() {
        roles.insert(y, Role::OriginalY);
        let b = fresh();
        out.add_edge(y, b);
        roles.insert(b, Role::B);
        pendant_of.insert(b, y);
        new_x.insert(b);
        b_side.push(b);
    }
    let (u1, d1, u2, d2) = (fresh(), fresh(), fresh(), fresh());
    out.add_edge(u1, d1);
    out.add_edge(u2, d2);
    for &a in &a_side {
        out.add_edge(d1, a);
    }
    for &b in &b_side {
        out.add_edge(d2, b);
    }
    roles.extend([(u1, Role::U1), (d1, Role::D1), (u2, Role::U2), (d2, Role::D2)]);
    new_x.extend([u2, d1]);
    new_y.extend([u1, d2]);
    Ok(BipartiteGadgetOutput { graph: out, roles, pendant_of, u1, d1, u2, d2, part_x: new_x, part_y: new_y })
}

/// Oracle comparison of `γ(G)` with `γ_t2(G′)` for a gadget output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetEquivalenceReport {
    pub input_vertices: usize,
    pub output_vertices: usize,
    /// `γ(G)`.
    pub gamma: usize,
    /// The lexicographically smallest minimum dominating set of `G`.
    pub min_dominating_set: VertexSet,
    /// `γ_t2(G′)`.
    pub gamma_t2_output: usize,
    pub min_semitotal_set: VertexSet,
    /// `γ(G) + 2`.
    pub expected: usize,
    /// Whether `γ_t2(G′) = γ(G) + 2`.
    pub holds: bool,
    /// `min_dominating_set ∪ {d1, d2}` and the first clause it violates as a
    /// semitotal dominating set of `G′`, if any.
    pub forward_candidate: VertexSet,
    pub forward_violation: Option<Violation>,
}

pub fn check_gadget_equivalence(
    g: &Graph,
    out: &BipartiteGadgetOutput,
    oracle_bound: usize,
) -> Result<GadgetEquivalenceReport> {
    let plain = solve_exact_bounded(g, DominationKind::Plain, None, oracle_bound)?;
    let semi = solve_exact_bounded(&out.graph, DominationKind::Semitotal, None, oracle_bound)?;
    let ds = plain.solution().expect("every graph has a dominating set").chosen.clone();
    // The gadget has no isolated vertices, so a semitotal set exists.
    let sds = semi.solution().expect("gadget output has no isolated vertex").chosen.clone();
    let mut forward = ds.clone();
    forward.extend([out.d1, out.d2]);
    let forward_violation = violation(&out.graph, &forward, DominationKind::Semitotal);
    let expected = ds.len() + 2;
    Ok(GadgetEquivalenceReport {
        input_vertices: g.vertex_count(),
        output_vertices: out.graph.vertex_count(),
        gamma: ds.len(),
        gamma_t2_output: sds.len(),
        holds: sds.len() == expected,
        expected,
        min_dominating_set: ds,
        min_semitotal_set: sds,
        forward_candidate: forward,
        forward_violation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_vertices(self.clique.iter().chain(self.independent.iter()))?;
        if self.clique.iter().any(|v| self.independent.contains(v)) {
            return Err(Error::InvalidSplitPartition("the parts overlap"));
        }
        if self.clique.len() + self.independent.len() != g.vertex_count() {
            return Err(Error::InvalidSplitPartition("the parts do not cover every vertex"));
        }
        let k: Vec<Vertex> = self.clique.to_vec();
        if k.iter().enumerate().any(|(i, &u)| k[i + 1..].iter().any(|&v| !g.has_edge(u, v))) {
            return Err(Error::InvalidSplitPartition("the clique misses an edge"));
        }
        if self.independent.iter().any(|&v| g.nbrs(v).iter().any(|x| self.independent.contains(x))) {
            return Err(Error::InvalidSplitPartition("the independent set has an edge"));
        }
        Ok(())
    }
}

/// Splits the vertices into a clique and an independent set if possible.
///
/// Uses the degree-sequence test of Hammer and Simeone: with degrees sorted
/// non-increasingly (ties by ascending id) and `m` the largest index with
/// `d_m >= m - 1`, the graph is split exactly when
/// `d_1 + … + d_m = m(m - 1) + d_{m+1} + … + d_n`, and then the first `m`
/// vertices form the clique.
pub fn recognize_split(g: &Graph) -> Option<SplitPartition> {
    let mut order: Vec<(usize, Vertex)> = g.vertices().map(|v| (g.nbrs(v).len(), v)).collect();
    order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let m = order.iter().enumerate().filter(|(i, (d, _))| *d >= *i).map(|(i, _)| i + 1).max().unwrap_or(0);
    let head: usize = order[..m].iter().map(|(d, _)| d).sum();
    let tail: usize = order[m..].iter().map(|(d, _)| d).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let clique: VertexSet = order[..m].iter().map(|&(_, v)| v).collect();
    let independent: VertexSet = order[m..].iter().map(|&(_, v)| v).collect();
    Some(SplitPartition { clique, independent })
}

/// Turns a dominating set of a split graph into a semitotal dominating set
/// with at most one more vertex.
///
/// Every member in the independent part is replaced by its smallest clique
/// neighbor; a singleton result gains its smallest neighbor as witness.
pub fn split_flip(g: &Graph, part: &SplitPartition, d: &VertexSet) -> Result<VertexSet> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooSmallGraph(n));
    }
    part.validate(g)?;
    g.check_vertices(d.iter())?;
    if let Some(Violation::Undominated(v)) = violation(g, d, DominationKind::Plain) {
        return Err(Error::NotDominating(v));
    }
    let mut out = VertexSet::new();
    for &v in d.iter() {
        if part.clique.contains(&v) {
            out.insert(v);
        } else {
            let k = g.nbrs(v).iter().copied().find(|x| part.clique.contains(x));
            out.insert(k.ok_or(Error::NoCliqueNeighbor(v))?);
        }
    }
    if out.len() == 1 {
        let x = *out.iter().next().expect("one member");
        let witness = g.nbrs(x).iter().next().copied().ok_or(Error::NoCliqueNeighbor(x))?;
        out.insert(witness);
    }
    Ok(out)
}

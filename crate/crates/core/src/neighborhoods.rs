//! Three-way splits of a neighborhood by how strongly each vertex connects to
//! the rest of the graph.
//!
//! For a vertex `v`, `N1(v)` holds neighbors with a neighbor outside `N[v]`,
//! `N2(v)` the remaining neighbors adjacent to `N1(v)`, and `N3(v)` the rest,
//! which are sealed inside `N[v]`. The pair version does the same for the
//! joined neighborhood of two poles.

use alloc::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexPartition {
    pub center: Vertex,
    pub n1: VertexSet,
    pub n2: VertexSet,
    pub n3: VertexSet,
}

impl VertexPartition {
    /// `N_{2,3}(v)`.
    pub fn n23(&self) -> VertexSet {
        self.n2.union(&self.n3).copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairPartition {
    pub poles: (Vertex, Vertex),
    /// `(N(v) ∪ N(w)) \ {v, w}`.
    pub joint: VertexSet,
    pub n1: VertexSet,
    pub n2: VertexSet,
    pub n3: VertexSet,
}

impl PairPartition {
    /// `N_{2,3}(v, w)`.
    pub fn n23(&self) -> VertexSet {
        self.n2.union(&self.n3).copied().collect()
    }
}

pub fn partition_vertex(g: &Graph, v: Vertex) -> Result<VertexPartition> {
    g.check_vertex(v)?;
    Ok(vertex_partition(g, v))
}

pub(crate) fn vertex_partition(g: &Graph, v: Vertex) -> VertexPartition {
    let around = g.nbrs(v);
    let inside = |x: &Vertex| *x == v || around.contains(x);
    let (n1, n2, n3) = split(g, around, inside);
    VertexPartition { center: v, n1, n2, n3 }
}

/// Partition of the joined neighborhood of `v` and `w`. Poles never belong
/// to the joint set, even when they are adjacent.
pub fn partition_pair(g: &Graph, v: Vertex, w: Vertex) -> Result<PairPartition> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::IdenticalPoles(v));
    }
    Ok(pair_partition(g, v, w))
}

pub(crate) fn pair_partition(g: &Graph, v: Vertex, w: Vertex) -> PairPartition {
    let joint: BTreeSet<Vertex> = g.nbrs(v).union(g.nbrs(w)).copied().filter(|&x| x != v && x != w).collect();
    let inside = |x: &Vertex| *x == v || *x == w || joint.contains(x);
    let (n1, n2, n3) = split(g, &joint, inside);
    PairPartition { poles: (v, w), joint: joint.into(), n1, n2, n3 }
}

fn split<F>(g: &Graph, ground: &BTreeSet<Vertex>, inside: F) -> (VertexSet, VertexSet, VertexSet)
where
    F: Fn(&Vertex) -> bool,
{
    let n1: VertexSet = ground.iter().copied().filter(|&u| g.nbrs(u).iter().any(|x| !inside(x))).collect();
    let mut n2 = VertexSet::new();
    let mut n3 = VertexSet::new();
    for &u in ground.iter().filter(|u| !n1.contains(u)) {
        if g.nbrs(u).iter().any(|x| n1.contains(x)) {
            n2.insert(u);
        } else {
            n3.insert(u);
        }
    }
    (n1, n2, n3)
}

/// Whether `N(inner) ⊆ N[outer]`.
pub fn is_confined(g: &Graph, inner: Vertex, outer: Vertex) -> Result<bool> {
    let outer_nbrs = g.neighbors(outer)?;
    Ok(g.neighbors(inner)?.iter().all(|x| *x == outer || outer_nbrs.contains(x)))
}

//! Immutable simple undirected graphs with stable vertex identifiers.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::ops::{Deref, DerefMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex identifier. Identifiers are never reused: vertices introduced by a
/// reduction rule get ids strictly greater than every id already present.
pub type Vertex = u32;

/// An ordered set of vertex identifiers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn into_inner(self) -> BTreeSet<Vertex> {
        self.0
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.0.iter().copied().collect()
    }
}

impl Deref for VertexSet {
    type Target = BTreeSet<Vertex>;

    fn deref(&self) -> &Self::Target {
        &self.0
    }
}

impl DerefMut for VertexSet {
    fn deref_mut(&mut self) -> &mut Self::Target {
        &mut self.0
    }
}

impl From<BTreeSet<Vertex>> for VertexSet {
    fn from(set: BTreeSet<Vertex>) -> Self {
        Self(set)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(arr: [Vertex; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl Extend<Vertex> for VertexSet {
    fn extend<I: IntoIterator<Item = Vertex>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = alloc::collections::btree_set::IntoIter<Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = alloc::collections::btree_set::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A simple undirected graph: no self-loops, no parallel edges.
///
/// Vertices iterate in ascending id order. Values are immutable from the
/// outside; the reduction rules build modified copies.
///
/// Serializes as `{"vertices": [...], "edges": [[u, v], ...]}` with `u < v`
/// and both lists sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    edges: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { vertices: g.vertices().collect(), edges: g.edges().collect() }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::from_edges(r.vertices, r.edges)
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from explicit vertices plus an edge list. Edge
    /// endpoints are added as vertices; duplicate edges collapse.
    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut builder = GraphBuilder::new();
        for v in vertices {
            builder.add_vertex(v);
        }
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    /// Vertices strictly greater than `v`, ascending.
    pub fn vertices_after(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        use core::ops::Bound::{Excluded, Unbounded};
        self.adj.range((Excluded(v), Unbounded)).map(|(&u, _)| u)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&BTreeSet<Vertex>> {
        self.adj.get(&v).ok_or(Error::UnknownVertex(v))
    }

    /// Neighbor lookup for ids already known to be present.
    pub(crate) fn nbrs(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[&v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.neighbors(v).map(BTreeSet::len)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Each edge once, smaller endpoint first, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// The smallest id strictly greater than every id in the graph.
    pub fn next_fresh_id(&self) -> Vertex {
        self.max_vertex().map_or(0, |v| v + 1)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_vertices<'a, I: IntoIterator<Item = &'a Vertex>>(&self, vs: I) -> Result<()> {
        vs.into_iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        let mut set: VertexSet = self.neighbors(v)?.iter().copied().collect();
        set.insert(v);
        Ok(set)
    }

    /// Length of a shortest `u`-`v` path; `None` when `v` is unreachable.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        Ok(self.distances_from(u, None)?.get(&v).copied())
    }

    /// BFS distances from `source`, optionally cut off after `limit` hops.
    pub fn distances_from(&self, source: Vertex, limit: Option<usize>) -> Result<BTreeMap<Vertex, usize>> {
        self.check_vertex(source)?;
        let mut dist = BTreeMap::new();
        dist.insert(source, 0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            if limit.is_some_and(|l| du >= l) {
                continue;
            }
            for &x in self.nbrs(u) {
                if let alloc::collections::btree_map::Entry::Vacant(e) = dist.entry(x) {
                    e.insert(du + 1);
                    queue.push_back(x);
                }
            }
        }
        Ok(dist)
    }

    /// Vertices within `radius` hops of `v` (including `v`).
    pub(crate) fn ball(&self, v: Vertex, radius: usize) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::from([v]);
        let mut frontier = alloc::vec![v];
        for _ in 0..radius {
            let mut next = Vec::new();
            for &u in &frontier {
                for &x in self.nbrs(u) {
                    if seen.insert(x) {
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        seen
    }

    /// `G[s]`: vertex set `s`, all edges of `self` with both ends in `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_vertices(s.iter())?;
        let mut adj = BTreeMap::new();
        let mut twice = 0;
        for &v in s.iter() {
            let ns: BTreeSet<Vertex> = self.nbrs(v).iter().copied().filter(|x| s.contains(x)).collect();
            twice += ns.len();
            adj.insert(v, ns);
        }
        Ok(Graph { adj, edges: twice / 2 })
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp: VertexSet = self.distances_from(v, None).expect("vertex is present").into_keys().collect();
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.adj.iter().filter(|(_, ns)| ns.is_empty()).map(|(&v, _)| v).collect()
    }

    /// A proper two-coloring `(X, Y)`, if one exists. In every component the
    /// smallest vertex goes to `X`.
    pub fn two_coloring(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color: BTreeMap<Vertex, bool> = BTreeMap::new();
        for s in self.vertices() {
            if color.contains_key(&s) {
                continue;
            }
            color.insert(s, false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[&u];
                for &x in self.nbrs(u) {
                    match color.get(&x) {
                        Some(&cx) if cx == cu => return None,
                        Some(_) => {}
                        None => {
                            color.insert(x, !cu);
                            queue.push_back(x);
                        }
                    }
                }
            }
        }
        let x = color.iter().filter(|(_, &c)| !c).map(|(&v, _)| v).collect();
        let y = color.iter().filter(|(_, &c)| c).map(|(&v, _)| v).collect();
        Some((x, y))
    }

    /// Relabels vertices to `0..n` preserving order. Returns the new graph and
    /// the old id of each new id.
    pub fn compacted(&self) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertices().collect();
        let index: BTreeMap<Vertex, Vertex> = old.iter().enumerate().map(|(i, &v)| (v, i as Vertex)).collect();
        let adj = self.adj.iter().map(|(v, ns)| (index[v], ns.iter().map(|x| index[x]).collect())).collect();
        (Graph { adj, edges: self.edges }, old)
    }

    pub(crate) fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert_ne!(u, v);
        self.add_vertex(u);
        self.add_vertex(v);
        if self.adj.get_mut(&u).expect("present").insert(v) {
            self.adj.get_mut(&v).expect("present").insert(u);
            self.edges += 1;
        }
    }

    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        if let Some(ns) = self.adj.get_mut(&u) {
            if ns.remove(&v) {
                self.adj.get_mut(&v).expect("symmetric adjacency").remove(&u);
                self.edges -= 1;
            }
        }
    }

    pub(crate) fn remove_vertex(&mut self, v: Vertex) {
        if let Some(ns) = self.adj.remove(&v) {
            self.edges -= ns.len();
            for x in ns {
                self.adj.get_mut(&x).expect("symmetric adjacency").remove(&v);
            }
        }
    }
}

/// Exclusive-access constructor for [`Graph`].
#[derive(Debug, Default)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: Vertex) -> &mut Self {
        self.graph.add_vertex(v);
        self
    }

    /// Adds `{u, v}`; repeated edges are ignored, loops are rejected.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.graph.add_edge(u, v);
        Ok(self)
    }

    pub fn build(self) -> Graph {
        self.graph
    }
}

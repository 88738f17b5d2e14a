use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A combinatorial embedding: the clockwise order of neighbors around every
/// vertex. Each rotation starts at the smallest neighbor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    rotation: BTreeMap<Vertex, Vec<Vertex>>,
}

/// A directed edge `(from, to)`; every face is a cyclic sequence of darts.
pub type Dart = (Vertex, Vertex);

impl Embedding {
    /// Builds an embedding from clockwise neighbor orders, rotating each to
    /// start at its smallest neighbor. Use [`Embedding::check`] to validate.
    pub fn from_rotation_unchecked(rotation: BTreeMap<Vertex, Vec<Vertex>>) -> Self {
        let rotation = rotation
            .into_iter()
            .map(|(v, mut order)| {
                if let Some(pos) = order.iter().enumerate().min_by_key(|(_, &x)| x).map(|(i, _)| i) {
                    order.rotate_left(pos);
                }
                (v, order)
            })
            .collect();
        Embedding { rotation }
    }

    pub fn rotation(&self, v: Vertex) -> Option<&[Vertex]> {
        self.rotation.get(&v).map(Vec::as_slice)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.rotation.keys().copied()
    }

    /// The neighbor following `u` clockwise around `v`.
    pub fn next_cw(&self, v: Vertex, u: Vertex) -> Option<Vertex> {
        let order = self.rotation.get(&v)?;
        let i = order.iter().position(|&x| x == u)?;
        Some(order[(i + 1) % order.len()])
    }

    /// The neighbor preceding `u` clockwise around `v`.
    pub fn next_ccw(&self, v: Vertex, u: Vertex) -> Option<Vertex> {
        let order = self.rotation.get(&v)?;
        let i = order.iter().position(|&x| x == u)?;
        Some(order[(i + order.len() - 1) % order.len()])
    }

    /// The dart after `(u, v)` along its face.
    pub fn next_dart(&self, (u, v): Dart) -> Dart {
        (v, self.next_ccw(v, u).expect("dart of this embedding"))
    }

    /// All faces as dart cycles, each starting at its smallest dart, sorted.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen: BTreeSet<Dart> = BTreeSet::new();
        let mut faces = Vec::new();
        for (&u, order) in &self.rotation {
            for &v in order {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = (u, v);
                while seen.insert(d) {
                    face.push(d);
                    d = self.next_dart(d);
                }
                let start = face.iter().enumerate().min_by_key(|(_, d)| **d).map_or(0, |(i, _)| i);
                face.rotate_left(start);
                faces.push(face);
            }
        }
        faces.sort();
        faces
    }

    /// Face count, with one face for every isolated vertex.
    pub fn face_count(&self) -> usize {
        self.faces().len() + self.rotation.values().filter(|o| o.is_empty()).count()
    }

    /// Checks that the rotations describe `g` and that Euler's formula holds
    /// on every component, which certifies planarity.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if !self.rotation.keys().copied().eq(g.vertices()) {
            return Err(Error::EmbeddingMismatch("vertex sets differ"));
        }
        for (&v, order) in &self.rotation {
            let set: BTreeSet<Vertex> = order.iter().copied().collect();
            if set.len() != order.len() || &set != g.nbrs(v) {
                return Err(Error::EmbeddingMismatch("a rotation does not list the neighbors exactly once"));
            }
        }
        let components = g.components().len();
        let expected = g.edge_count() + 2 * components - g.vertex_count();
        if self.face_count() != expected {
            return Err(Error::EmbeddingMismatch("face count violates Euler's formula"));
        }
        Ok(())
    }
}

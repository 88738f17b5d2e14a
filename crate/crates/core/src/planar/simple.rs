use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A region between two poles whose non-pole vertices are all common
/// neighbors of the poles: at most two boundary vertices and an interior
/// sealed off from everything else.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleRegion {
    pub poles: (Vertex, Vertex),
    /// Boundary vertices other than the poles.
    pub boundary: VertexSet,
    pub interior: VertexSet,
}

impl SimpleRegion {
    /// Number of non-pole vertices.
    pub fn size(&self) -> usize {
        self.boundary.len() + self.interior.len()
    }

    /// Re-checks the region against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let (v, w) = self.poles;
        g.check_vertex(v)?;
        g.check_vertex(w)?;
        if v == w {
            return Err(Error::IdenticalPoles(v));
        }
        if self.boundary.len() > 2 {
            return Err(Error::InvalidRegion("more than two boundary vertices"));
        }
        if !self.boundary.is_disjoint(&self.interior) {
            return Err(Error::InvalidRegion("boundary and interior overlap"));
        }
        let (nv, nw) = (g.nbrs(v), g.nbrs(w));
        if self.boundary.iter().chain(self.interior.iter()).any(|x| !nv.contains(x) || !nw.contains(x)) {
            return Err(Error::InvalidRegion("a non-pole vertex is not a common neighbor of the poles"));
        }
        let sealed = self.interior.iter().all(|&z| {
            g.nbrs(z).iter().all(|x| *x == v || *x == w || self.boundary.contains(x) || self.interior.contains(x))
        });
        if !sealed {
            return Err(Error::InvalidRegion("an interior vertex has a neighbor outside the region"));
        }
        if self.interior.len() >= 3 {
            shrinkable(g, &self.boundary, &self.interior)?;
        }
        Ok(())
    }
}

/// The shape an interior of three or more vertices must have before Rule 3
/// may collapse it. In a plane drawing the interior is a linear forest whose
/// ends alone touch the boundary, which always passes; other graphs can
/// violate each condition, and then collapsing loses a cheap solution.
fn shrinkable(g: &Graph, boundary: &VertexSet, interior: &VertexSet) -> Result<()> {
    let inner_degree = |z: &Vertex| g.nbrs(*z).iter().filter(|x| interior.contains(x)).count();
    let seen_by_boundary = |z: &Vertex| boundary.iter().any(|b| g.nbrs(*b).contains(z));
    if interior.iter().all(seen_by_boundary) {
        return Err(Error::InvalidRegion("the boundary dominates the interior"));
    }
    let full = interior.len() - 1;
    let inner_edges: usize = interior.iter().map(inner_degree).sum::<usize>() / 2;
    let is_p3 = interior.len() == 3 && inner_edges == 2;
    for z in interior.iter() {
        if inner_degree(z) == full {
            if !is_p3 {
                return Err(Error::InvalidRegion("one interior vertex dominates the interior"));
            }
            if seen_by_boundary(z) {
                return Err(Error::InvalidRegion("the middle of the interior path touches the boundary"));
            }
        }
    }
    Ok(())
}

/// Interior-disjoint simple regions between `v` and `w`.
///
/// Among the common neighbors `C` of the poles, every choice of two boundary
/// vertices `b < b'` leaves as interior the largest subset of `C \ {b, b'}`
/// whose vertices only see the poles, `b`, `b'` and each other. Interiors of
/// three or more vertices must also have a shape Rule 3 can collapse (the
/// boundary does not dominate them, and only a `P3` has a vertex dominating
/// the rest, which then avoids the boundary). The largest such interior wins
/// (ties go to the lexicographically smallest boundary), its
/// interior is taken out of `C`, and the search repeats until the interior
/// comes out empty.
pub fn find_simple_regions(g: &Graph, v: Vertex, w: Vertex) -> Result<Vec<SimpleRegion>> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::IdenticalPoles(v));
    }
    Ok(simple_regions(g, v, w))
}

pub(crate) fn simple_regions(g: &Graph, v: Vertex, w: Vertex) -> Vec<SimpleRegion> {
    let mut common: BTreeSet<Vertex> = g.nbrs(v).intersection(g.nbrs(w)).copied().collect();
    let mut out = Vec::new();
    while common.len() >= 3 {
        let Some((b, b2, interior)) = best_region(g, v, w, &common) else {
            break;
        };
        for z in &interior {
            common.remove(z);
        }
        out.push(SimpleRegion { poles: (v, w), boundary: VertexSet::from([b, b2]), interior });
    }
    out
}

/// The best boundary pair for the candidate set `common`, with its interior,
/// or `None` when no pair leaves a usable nonempty interior.
fn best_region(g: &Graph, v: Vertex, w: Vertex, common: &BTreeSet<Vertex>) -> Option<(Vertex, Vertex, VertexSet)> {
    let members: Vec<Vertex> = common.iter().copied().collect();
    let dirty: BTreeSet<Vertex> = members
        .iter()
        .copied()
        .filter(|&z| g.nbrs(z).iter().any(|x| *x != v && *x != w && !common.contains(x)))
        .collect();
    let inner = |z: Vertex| g.nbrs(z).iter().copied().filter(|x| common.contains(x));

    // Components of the graph induced on the candidates.
    let mut comp: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut comps: Vec<Vec<Vertex>> = Vec::new();
    for &s in &members {
        if comp.contains_key(&s) {
            continue;
        }
        let id = comps.len();
        let mut stack = alloc::vec![s];
        let mut list = Vec::new();
        comp.insert(s, id);
        while let Some(x) = stack.pop() {
            list.push(x);
            for y in inner(x) {
                if let alloc::collections::btree_map::Entry::Vacant(e) = comp.entry(y) {
                    e.insert(id);
                    stack.push(y);
                }
            }
        }
        comps.push(list);
    }
    let clean_part = |list: &[Vertex], removed: &[Vertex]| -> usize {
        let mut seen: BTreeSet<Vertex> = removed.iter().copied().collect();
        let mut total = 0;
        for &s in list {
            if seen.contains(&s) {
                continue;
            }
            seen.insert(s);
            let mut stack = alloc::vec![s];
            let (mut size, mut clean) = (0, true);
            while let Some(x) = stack.pop() {
                size += 1;
                clean &= !dirty.contains(&x);
                for y in inner(x) {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            if clean {
                total += size;
            }
        }
        total
    };
    let contrib: Vec<usize> = comps.iter().map(|c| clean_part(c, &[])).collect();
    let base: usize = contrib.iter().sum();
    // Gain from removing a single vertex from its component.
    let single: BTreeMap<Vertex, isize> = members
        .iter()
        .map(|&b| {
            let k = comp[&b];
            (b, clean_part(&comps[k], &[b]) as isize - contrib[k] as isize)
        })
        .collect();

    let mut ranked: Vec<(usize, Vertex, Vertex)> = Vec::new();
    for (i, &b) in members.iter().enumerate() {
        for &b2 in &members[i + 1..] {
            let score = if comp[&b] == comp[&b2] {
                let k = comp[&b];
                base - contrib[k] + clean_part(&comps[k], &[b, b2])
            } else {
                (base as isize + single[&b] + single[&b2]) as usize
            };
            if score > 0 {
                ranked.push((score, b, b2));
            }
        }
    }
    ranked.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    ranked.into_iter().find_map(|(score, b, b2)| {
        let interior = sealed_interior(g, v, w, common, b, b2);
        debug_assert_eq!(interior.len(), score);
        let boundary = VertexSet::from([b, b2]);
        (interior.len() < 3 || shrinkable(g, &boundary, &interior).is_ok()).then_some((b, b2, interior))
    })
}

/// Greatest subset `I` of `common \ {b, b2}` with `N(z) ⊆ {v, w, b, b2} ∪ I`
/// for every `z ∈ I`.
pub(crate) fn sealed_interior(
    g: &Graph,
    v: Vertex,
    w: Vertex,
    common: &BTreeSet<Vertex>,
    b: Vertex,
    b2: Vertex,
) -> VertexSet {
    let mut interior: BTreeSet<Vertex> = common.iter().copied().filter(|&z| z != b && z != b2).collect();
    loop {
        let leaking: Vec<Vertex> = interior
            .iter()
            .copied()
            .filter(|&z| g.nbrs(z).iter().any(|x| *x != v && *x != w && *x != b && *x != b2 && !interior.contains(x)))
            .collect();
        if leaking.is_empty() {
            return interior.into();
        }
        for z in leaking {
            interior.remove(&z);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_graphs::*;

    /// Poles 0, 1; boundary 2, 3; interior 4-5-6 as a path; everything
    /// adjacent to both poles.
    fn p3_region() -> Graph {
        let mut edges = alloc::vec![(4, 5), (5, 6)];
        for x in 2..7 {
            edges.push((0, x));
            edges.push((1, x));
        }
        graph(7, &edges)
    }

    #[test]
    fn finds_the_p3_region() {
        let regions = find_simple_regions(&p3_region(), 0, 1).unwrap();
        assert_eq!(regions.len(), 1);
        assert_eq!(regions[0].boundary, VertexSet::from([2, 3]));
        assert_eq!(regions[0].interior, VertexSet::from([4, 5, 6]));
        regions[0].validate(&p3_region()).unwrap();
    }

    #[test]
    fn four_cycle_has_no_interior() {
        assert!(find_simple_regions(&cycle(4), 0, 2).unwrap().is_empty());
    }

    #[test]
    fn no_common_neighbors() {
        assert!(find_simple_regions(&path(5), 0, 4).unwrap().is_empty());
    }

    #[test]
    fn leaking_vertices_become_boundary() {
        // common neighbors 2..=6 of poles 0, 1; vertex 2 and 6 have outside
        // neighbors 7 and 8, the rest form a path 2-3-4-5-6.
        let mut edges = alloc::vec![(2, 7), (6, 8), (2, 3), (3, 4), (4, 5), (5, 6)];
        for x in 2..7 {
            edges.push((0, x));
            edges.push((1, x));
        }
        let g = graph(9, &edges);
        let regions = find_simple_regions(&g, 0, 1).unwrap();
        assert_eq!(regions.len(), 1);
        assert_eq!(regions[0].boundary, VertexSet::from([2, 6]));
        assert_eq!(regions[0].interior, VertexSet::from([3, 4, 5]));
    }

    #[test]
    fn validation_rejects_open_interiors() {
        let g = p3_region();
        let bad = SimpleRegion { poles: (0, 1), boundary: VertexSet::from([2]), interior: VertexSet::from([4, 5]) };
        assert!(matches!(bad.validate(&g), Err(Error::InvalidRegion(_))));
    }
}

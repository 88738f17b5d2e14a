use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use serde::Serialize;

use super::embedding::{Dart, Embedding};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// The closed area between two short paths from `v` to `w` in a plane
/// graph, together with every vertex drawn in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    pub poles: (Vertex, Vertex),
    /// Both paths run from `v` to `w`. Equal paths bound a region without
    /// area.
    pub boundary_paths: [Vec<Vertex>; 2],
    /// `V(R)`: boundary vertices and everything inside.
    pub vertices: VertexSet,
    /// Where the paths part, they enclose a cycle; one dart per cycle whose
    /// face lies inside the region.
    pub inside: Vec<Dart>,
}

impl Region {
    /// Vertices on the boundary paths, poles included.
    pub fn boundary(&self) -> VertexSet {
        self.boundary_paths.iter().flatten().copied().collect()
    }

    /// Vertices strictly inside.
    pub fn interior(&self) -> VertexSet {
        let b = self.boundary();
        self.vertices.iter().copied().filter(|x| !b.contains(x)).collect()
    }

    /// Number of vertices other than the poles.
    pub fn size(&self) -> usize {
        self.vertices.len() - 2
    }

    fn boundary_edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.boundary_paths.iter().flat_map(|p| p.windows(2).map(|e| edge(e[0], e[1]))).collect()
    }
}

fn edge(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    (a.min(b), a.max(b))
}

/// Faces of an embedding, indexed by dart.
#[derive(Debug)]
pub(crate) struct FaceMap<'a> {
    emb: &'a Embedding,
    faces: Vec<Vec<Dart>>,
    face_of: BTreeMap<Dart, usize>,
}

impl<'a> FaceMap<'a> {
    pub(crate) fn new(emb: &'a Embedding) -> Self {
        let faces = emb.faces();
        let face_of = faces.iter().enumerate().flat_map(|(i, f)| f.iter().map(move |&d| (d, i))).collect();
        FaceMap { emb, faces, face_of }
    }

    /// Faces reachable from the face of `start` without crossing `walls`.
    /// `None` if that reaches the face of `(start.1, start.0)` as well, or a
    /// face with a vertex rejected by `allowed`.
    fn side(
        &self,
        walls: &BTreeSet<(Vertex, Vertex)>,
        start: Dart,
        allowed: &dyn Fn(Vertex) -> bool,
    ) -> Option<BTreeSet<usize>> {
        let first = *self.face_of.get(&start)?;
        let other = *self.face_of.get(&(start.1, start.0))?;
        let mut seen = BTreeSet::from([first]);
        let mut stack = alloc::vec![first];
        while let Some(f) = stack.pop() {
            if f == other {
                return None;
            }
            for &(a, b) in &self.faces[f] {
                if !allowed(a) {
                    return None;
                }
                if walls.contains(&edge(a, b)) {
                    continue;
                }
                let next = self.face_of[&(b, a)];
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        Some(seen)
    }

    fn vertices_of(&self, faces: &BTreeSet<usize>) -> BTreeSet<Vertex> {
        faces.iter().flat_map(|&f| self.faces[f].iter().map(|d| d.0)).collect()
    }

    /// Faces inside `r`.
    fn faces_of(&self, r: &Region) -> BTreeSet<usize> {
        let walls = r.boundary_edges();
        r.inside.iter().flat_map(|&d| self.side(&walls, d, &|_| true).unwrap_or_default()).collect()
    }
}

/// Regions bounded by the confluent paths `p1` and `p2`. Wherever the
/// paths part they enclose a cycle, and each cycle contributes one of its
/// sides; `allowed` must accept every vertex drawn there, and the sides must
/// not overlap. Identical paths give the region without area.
pub(crate) fn regions_between(
    faces: &FaceMap<'_>,
    p1: &[Vertex],
    p2: &[Vertex],
    allowed: &dyn Fn(Vertex) -> bool,
) -> Vec<Region> {
    let (v, w) = (p1[0], p1[p1.len() - 1]);
    let paths = [p1.to_vec(), p2.to_vec()];
    let boundary: BTreeSet<Vertex> = p1.iter().chain(p2).copied().collect();
    let Some(lenses) = lenses(p1, p2) else {
        return Vec::new();
    };
    if lenses.is_empty() {
        return alloc::vec![Region {
            poles: (v, w),
            boundary_paths: paths,
            vertices: boundary.into(),
            inside: Vec::new()
        }];
    }
    if !confluent(faces.emb, p1, p2) {
        return Vec::new();
    }
    let walls: BTreeSet<(Vertex, Vertex)> = paths.iter().flat_map(|p| p.windows(2).map(|e| edge(e[0], e[1]))).collect();
    let ok = |x: Vertex| boundary.contains(&x) || allowed(x);
    // Both sides of every cycle, when acceptable.
    let sides: Vec<Vec<(Dart, BTreeSet<usize>)>> = lenses
        .iter()
        .map(|&d| {
            [d, (d.1, d.0)].into_iter().filter_map(|start| faces.side(&walls, start, &ok).map(|f| (start, f))).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut pick: Vec<usize> = alloc::vec![0; sides.len()];
    if sides.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let chosen: Vec<&(Dart, BTreeSet<usize>)> = pick.iter().zip(&sides).map(|(&i, s)| &s[i]).collect();
        let disjoint = chosen.iter().enumerate().all(|(i, a)| chosen[i + 1..].iter().all(|b| a.1.is_disjoint(&b.1)));
        if disjoint {
            let mut vertices = boundary.clone();
            for (_, f) in &chosen {
                vertices.extend(faces.vertices_of(f));
            }
            out.push(Region {
                poles: (v, w),
                boundary_paths: paths.clone(),
                vertices: vertices.into(),
                inside: chosen.iter().map(|(d, _)| *d).collect(),
            });
        }
        // Next combination.
        let mut i = 0;
        loop {
            if i == pick.len() {
                return out;
            }
            pick[i] += 1;
            if pick[i] < sides[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// For two `v`-`w` paths meeting their shared vertices in the same order,
/// one dart of `p1` on each cycle the two paths enclose between
/// consecutive shared vertices. `None` when the order differs.
fn lenses(p1: &[Vertex], p2: &[Vertex]) -> Option<Vec<Dart>> {
    let shared: Vec<(usize, usize)> =
        p1.iter().enumerate().filter_map(|(i, x)| p2.iter().position(|y| y == x).map(|j| (i, j))).collect();
    if shared.windows(2).any(|s| s[1].1 <= s[0].1) {
        return None;
    }
    Some(
        shared
            .windows(2)
            .filter(|s| !(s[1].0 == s[0].0 + 1 && s[1].1 == s[0].1 + 1))
            .map(|s| (p1[s[0].0], p1[s[0].0 + 1]))
            .collect(),
    )
}

/// Whether two simple paths are confluent in `emb`: they never cross, at
/// a shared vertex or along a shared stretch of edges.
pub fn confluent(emb: &Embedding, p1: &[Vertex], p2: &[Vertex]) -> bool {
    let on2: BTreeSet<Vertex> = p2.iter().copied().collect();
    let e2: BTreeSet<(Vertex, Vertex)> = p2.windows(2).map(|e| edge(e[0], e[1])).collect();
    let mut i = 0;
    while i < p1.len() {
        if !on2.contains(&p1[i]) {
            i += 1;
            continue;
        }
        // Grow the shared stretch p1[i..=j] along common edges.
        let mut j = i;
        while j + 1 < p1.len() && e2.contains(&edge(p1[j], p1[j + 1])) {
            j += 1;
        }
        if crosses_at(emb, p1, i, j, p2) {
            return false;
        }
        i = j + 1;
    }
    true
}

/// Whether `p2` crosses `p1` at the stretch `p1[i..=j]`, which `p2` also
/// traverses.
fn crosses_at(emb: &Embedding, p1: &[Vertex], i: usize, j: usize, p2: &[Vertex]) -> bool {
    let stretch = &p1[i..=j];
    let k = p2.iter().position(|x| *x == p1[i]).expect("shared vertex");
    let l = p2.iter().position(|x| *x == p1[j]).expect("shared vertex");
    let (k, l) = (k.min(l), k.max(l));
    if i == 0 || j + 1 == p1.len() || k == 0 || l + 1 == p2.len() {
        return false;
    }
    let a = [(p1[i], p1[i - 1]), (p1[j], p1[j + 1])];
    let b = [(p2[k], p2[k - 1]), (p2[l], p2[l + 1])];
    let around = darts_around(emb, stretch);
    let pos = |d: Dart| around.iter().position(|x| *x == d);
    let (Some(a0), Some(a1), Some(b0), Some(b1)) = (pos(a[0]), pos(a[1]), pos(b[0]), pos(b[1])) else {
        return false;
    };
    let (lo, hi) = (a0.min(a1), a0.max(a1));
    let inside = |p: usize| lo < p && p < hi;
    inside(b0) != inside(b1)
}

/// The darts leaving the path `stretch` in cyclic order around it.
fn darts_around(emb: &Embedding, stretch: &[Vertex]) -> Vec<Dart> {
    let Some(order) = emb.rotation(stretch[0]) else {
        return Vec::new();
    };
    if stretch.len() == 1 {
        return order.iter().map(|&x| (stretch[0], x)).collect();
    }
    let inner: BTreeSet<(Vertex, Vertex)> = stretch.windows(2).map(|e| edge(e[0], e[1])).collect();
    let start = (stretch[0], stretch[1]);
    let (mut cur, mut prev) = start;
    let mut out = Vec::new();
    loop {
        let x = emb.next_cw(cur, prev).expect("vertex of the embedding");
        if inner.contains(&edge(cur, x)) {
            prev = cur;
            cur = x;
        } else {
            out.push((cur, x));
            prev = x;
        }
        if (cur, prev) == start {
            return out;
        }
    }
}

/// Whether two regions only meet along their boundaries.
fn non_crossing(faces: &FaceMap<'_>, r1: &Region, f1: &BTreeSet<usize>, r2: &Region, f2: &BTreeSet<usize>) -> bool {
    if !f1.is_disjoint(f2) {
        return false;
    }
    if r1.interior().iter().any(|x| r2.vertices.contains(x)) || r2.interior().iter().any(|x| r1.vertices.contains(x)) {
        return false;
    }
    let inner_edge = |f: &BTreeSet<usize>, (a, b): (Vertex, Vertex)| {
        faces.face_of.get(&(a, b)).is_some_and(|x| f.contains(x))
            && faces.face_of.get(&(b, a)).is_some_and(|x| f.contains(x))
    };
    if r2.boundary_edges().into_iter().any(|e| inner_edge(f1, e))
        || r1.boundary_edges().into_iter().any(|e| inner_edge(f2, e))
    {
        return false;
    }
    r1.boundary_paths.iter().all(|p| r2.boundary_paths.iter().all(|q| confluent(faces.emb, p, q)))
}

/// A set of pairwise non-crossing regions whose poles come from `base_set`
/// and which contain no other base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionDecomposition {
    pub base_set: VertexSet,
    pub regions: Vec<Region>,
}

/// One edge per region, between its poles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnderlyingMultigraph {
    pub vertices: VertexSet,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl UnderlyingMultigraph {
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().map(|&(a, b)| usize::from(a == v) + usize::from(b == v)).sum()
    }

    pub fn degree_sum(&self) -> usize {
        self.vertices.iter().map(|&v| self.degree(v)).sum()
    }
}

impl RegionDecomposition {
    /// `V(ℜ)`, everything inside some region.
    pub fn covered(&self) -> VertexSet {
        self.regions.iter().flat_map(|r| r.vertices.iter().copied()).collect()
    }

    pub fn multigraph(&self) -> UnderlyingMultigraph {
        UnderlyingMultigraph { vertices: self.base_set.clone(), edges: self.regions.iter().map(|r| r.poles).collect() }
    }

    /// Largest region count the bound `3|D| - 6` allows, for `|D| ≥ 3`.
    pub fn region_bound(&self) -> Option<usize> {
        (self.base_set.len() >= 3).then(|| 3 * self.base_set.len() - 6)
    }

    /// Re-checks every region and every pair of regions against `g`.
    pub fn validate(&self, g: &Graph, emb: &Embedding) -> Result<()> {
        emb.check(g)?;
        g.check_vertices(self.base_set.iter())?;
        let faces = FaceMap::new(emb);
        let mut inside = Vec::new();
        for r in &self.regions {
            check_region(g, &faces, &self.base_set, r)?;
            inside.push(faces.faces_of(r));
        }
        for (i, r1) in self.regions.iter().enumerate() {
            for (j, r2) in self.regions.iter().enumerate().skip(i + 1) {
                if !non_crossing(&faces, r1, &inside[i], r2, &inside[j]) {
                    return Err(Error::InvalidRegion("two regions cross"));
                }
            }
        }
        Ok(())
    }
}

fn check_region(g: &Graph, faces: &FaceMap<'_>, base: &VertexSet, r: &Region) -> Result<()> {
    let (v, w) = r.poles;
    if !base.contains(&v) || !base.contains(&w) || v == w {
        return Err(Error::InvalidRegion("poles must be two base vertices"));
    }
    for p in &r.boundary_paths {
        if p.len() < 2 || p.len() > 4 || p[0] != v || p[p.len() - 1] != w {
            return Err(Error::InvalidRegion("boundary path is not a v-w path of length at most 3"));
        }
        if p.windows(2).any(|e| !g.has_edge(e[0], e[1])) {
            return Err(Error::InvalidRegion("boundary path uses a missing edge"));
        }
    }
    let near = |x: Vertex| x == v || x == w || g.has_edge(x, v) || g.has_edge(x, w);
    let redrawn = regions_between(faces, &r.boundary_paths[0], &r.boundary_paths[1], &|_| true);
    if !redrawn.iter().any(|x| x.inside == r.inside && x.vertices == r.vertices) {
        return Err(Error::InvalidRegion("vertex set does not match the embedding"));
    }
    if !r.vertices.iter().all(|&x| near(x)) {
        return Err(Error::InvalidRegion("a vertex of the region is not a neighbor of a pole"));
    }
    if r.vertices.iter().any(|x| base.contains(x) && *x != v && *x != w) {
        return Err(Error::InvalidRegion("region contains a third base vertex"));
    }
    Ok(())
}

/// A region with the faces it covers.
type Placed = (Region, BTreeSet<usize>);

/// Builds a maximal decomposition greedily: among all regions between pairs
/// of `d` at distance at most three, repeatedly commit the one adding the
/// most new vertices (then the largest, then the first pair in order) that
/// crosses no committed region, until no region adds anything. Finally,
/// parallel regions are merged where one region can hold both.
pub fn build_decomposition(g: &Graph, emb: &Embedding, d: &VertexSet) -> Result<RegionDecomposition> {
    emb.check(g)?;
    g.check_vertices(d.iter())?;
    if d.len() < 3 {
        return Err(Error::BaseSetTooSmall(d.len()));
    }
    if let Some(x) = g.vertices().find(|&x| !d.contains(&x) && !g.nbrs(x).iter().any(|y| d.contains(y))) {
        return Err(Error::NotDominating(x));
    }
    let faces = FaceMap::new(emb);
    let base: Vec<Vertex> = d.to_vec();
    let mut candidates: Vec<Vec<(Region, BTreeSet<usize>)>> = Vec::new();
    for (i, &v) in base.iter().enumerate() {
        let near = g.ball(v, 3);
        for &w in &base[i + 1..] {
            if !near.contains(&w) {
                continue;
            }
            let allowed = |x: Vertex| !d.contains(&x) && (g.has_edge(x, v) || g.has_edge(x, w));
            let paths = short_paths(g, v, w, d);
            let mut found = Vec::new();
            for (a, p1) in paths.iter().enumerate() {
                for p2 in &paths[a..] {
                    for r in regions_between(&faces, p1, p2, &allowed) {
                        let f = faces.faces_of(&r);
                        found.push((r, f));
                    }
                }
            }
            candidates.push(found);
        }
    }

    let mut regions: Vec<Placed> = Vec::new();
    let mut covered: BTreeSet<Vertex> = BTreeSet::new();
    loop {
        let mut best: Option<((usize, usize), &Placed)> = None;
        for cand @ (r, f) in candidates.iter().flatten() {
            let gain = r.vertices.iter().filter(|x| !covered.contains(x)).count();
            let key = (gain, r.vertices.len());
            if gain == 0 || best.is_some_and(|(b, _)| b >= key) {
                continue;
            }
            if regions.iter().all(|(q, qf)| non_crossing(&faces, q, qf, r, f)) {
                best = Some((key, cand));
            }
        }
        let Some((_, cand)) = best else {
            break;
        };
        covered.extend(cand.0.vertices.iter().copied());
        regions.push(cand.clone());
    }
    merge_parallel(&faces, &candidates, &mut regions);
    Ok(RegionDecomposition { base_set: d.clone(), regions: regions.into_iter().map(|(r, _)| r).collect() })
}

/// Replaces two regions with the same poles by one candidate containing
/// both, as long as that crosses nothing else. Coverage never shrinks.
fn merge_parallel(
    faces: &FaceMap<'_>,
    candidates: &[Vec<(Region, BTreeSet<usize>)>],
    regions: &mut Vec<(Region, BTreeSet<usize>)>,
) {
    'again: loop {
        for i in 0..regions.len() {
            for j in i + 1..regions.len() {
                if regions[i].0.poles != regions[j].0.poles {
                    continue;
                }
                let need: BTreeSet<Vertex> =
                    regions[i].0.vertices.iter().chain(regions[j].0.vertices.iter()).copied().collect();
                let merged = candidates.iter().flatten().find(|(r, f)| {
                    r.poles == regions[i].0.poles
                        && need.iter().all(|x| r.vertices.contains(x))
                        && regions
                            .iter()
                            .enumerate()
                            .all(|(k, (q, qf))| k == i || k == j || non_crossing(faces, q, qf, r, f))
                });
                if let Some(m) = merged {
                    let m = m.clone();
                    regions.remove(j);
                    regions[i] = m;
                    continue 'again;
                }
            }
        }
        return;
    }
}

/// Simple `v`-`w` paths with at most three edges avoiding the other vertices
/// of `d`, shortest first.
fn short_paths(g: &Graph, v: Vertex, w: Vertex, d: &VertexSet) -> Vec<Vec<Vertex>> {
    let free = |x: Vertex| x != v && x != w && !d.contains(&x);
    let mut out = Vec::new();
    if g.has_edge(v, w) {
        out.push(alloc::vec![v, w]);
    }
    for &a in g.nbrs(v).iter().filter(|&&a| free(a)) {
        if g.has_edge(a, w) {
            out.push(alloc::vec![v, a, w]);
        }
    }
    for &a in g.nbrs(v).iter().filter(|&&a| free(a)) {
        for &b in g.nbrs(a).iter().filter(|&&b| free(b) && g.has_edge(b, w)) {
            out.push(alloc::vec![v, a, b, w]);
        }
    }
    out
}

//! Isomorphism test for small graphs by backtracking over degree-compatible
//! bijections.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest graph accepted by [`is_isomorphic_small`].
pub const DEFAULT_ISO_BOUND: usize = 16;

/// Decides `g ≅ h` for graphs with at most [`DEFAULT_ISO_BOUND`] vertices.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_bounded(g, h, DEFAULT_ISO_BOUND)
}

pub fn is_isomorphic_bounded(g: &Graph, h: &Graph, bound: usize) -> Result<bool> {
    for x in [g, h] {
        if x.vertex_count() > bound {
            return Err(Error::SizeBoundExceeded { size: x.vertex_count(), bound });
        }
    }
    Ok(is_isomorphic_fixing(g, h, &[]))
}

/// Decides whether an isomorphism `g → h` exists that maps each `(a, b)` in
/// `fixed` to each other. No size bound; callers keep the graphs small.
/// Pairs naming absent vertices make the answer `false`.
pub(crate) fn is_isomorphic_fixing(g: &Graph, h: &Graph, fixed: &[(Vertex, Vertex)]) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let a = Dense::new(g);
    let b = Dense::new(h);
    let mut da: Vec<usize> = a.deg.clone();
    let mut db: Vec<usize> = b.deg.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }

    let n = a.n;
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for &(x, y) in fixed {
        let (Some(i), Some(j)) = (a.index(x), b.index(y)) else {
            return false;
        };
        if map[i] == j {
            continue;
        }
        if map[i] != usize::MAX || used[j] {
            return false;
        }
        map[i] = j;
        used[j] = true;
        order.push(i);
    }
    // The fixed prefix must itself be consistent.
    for (p, &i) in order.iter().enumerate() {
        if a.deg[i] != b.deg[map[i]] {
            return false;
        }
        for &k in &order[..p] {
            if a.adj[i][k] != b.adj[map[i]][map[k]] {
                return false;
            }
        }
    }
    let prefix = order.len();
    // Remaining vertices: prefer ones adjacent to already-placed vertices,
    // then high degree, so adjacency constraints prune early.
    let mut placed: Vec<bool> = (0..n).map(|i| map[i] != usize::MAX).collect();
    while order.len() < n {
        let next = (0..n)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| {
                let links = order.iter().filter(|&&k| a.adj[i][k]).count();
                (links, a.deg[i], core::cmp::Reverse(i))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    extend(&a, &b, &order, prefix, &mut map, &mut used)
}

fn extend(a: &Dense, b: &Dense, order: &[usize], pos: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if pos == order.len() {
        return true;
    }
    let i = order[pos];
    for j in 0..b.n {
        if used[j] || a.deg[i] != b.deg[j] {
            continue;
        }
        if order[..pos].iter().any(|&k| a.adj[i][k] != b.adj[j][map[k]]) {
            continue;
        }
        map[i] = j;
        used[j] = true;
        if extend(a, b, order, pos + 1, map, used) {
            return true;
        }
        used[j] = false;
        map[i] = usize::MAX;
    }
    false
}

struct Dense {
    n: usize,
    ids: Vec<Vertex>,
    deg: Vec<usize>,
    adj: Vec<Vec<bool>>,
}

impl Dense {
    fn new(g: &Graph) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        let n = ids.len();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            let (i, j) = (ids.binary_search(&u).unwrap(), ids.binary_search(&v).unwrap());
            adj[i][j] = true;
            adj[j][i] = true;
        }
        let deg = adj.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
        Dense { n, ids, deg, adj }
    }

    fn index(&self, v: Vertex) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_graphs::*;

    #[test]
    fn relabeled_paths_are_isomorphic() {
        let p = Graph::from_edges([], [(10, 20), (20, 30)]).unwrap();
        assert!(is_isomorphic_small(&path(3), &p).unwrap());
    }

    #[test]
    fn distinguishes_small_graphs() {
        assert!(!is_isomorphic_small(&path(3), &complete(3)).unwrap());
        assert!(!is_isomorphic_small(&star(3), &path(4)).unwrap());
        assert!(!is_isomorphic_small(&cycle(6), &graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])).unwrap());
    }

    #[test]
    fn enforces_bound() {
        let err = is_isomorphic_small(&path(17), &path(17)).unwrap_err();
        assert_eq!(err, Error::SizeBoundExceeded { size: 17, bound: 16 });
    }

    #[test]
    fn fixed_pairs_constrain_the_map() {
        // path 0-1-2: endpoint 0 may map to endpoint 2 but not to the middle.
        let p = path(3);
        assert!(is_isomorphic_fixing(&p, &p, &[(0, 2)]));
        assert!(!is_isomorphic_fixing(&p, &p, &[(0, 1)]));
        assert!(!is_isomorphic_fixing(&p, &p, &[(0, 7)]));
    }
}

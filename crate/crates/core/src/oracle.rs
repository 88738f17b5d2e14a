//! Validity checks and exact exponential-time solvers for plain, total and
//! semitotal domination.

use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Default largest graph handed to [`solve_exact`].
pub const DEFAULT_ORACLE_BOUND: usize = 20;
/// No oracle bound may exceed this; the solver packs vertex sets into `u64`.
pub const ORACLE_HARD_CEILING: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominationKind {
    Plain,
    Total,
    Semitotal,
}

impl DominationKind {
    pub const ALL: [DominationKind; 3] = [Self::Plain, Self::Total, Self::Semitotal];

    /// Conventional abbreviation: `ds`, `tds` or `sds`.
    pub fn abbreviation(self) -> &'static str {
        match self {
            Self::Plain => "ds",
            Self::Total => "tds",
            Self::Semitotal => "sds",
        }
    }
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationSolution {
    pub kind: DominationKind,
    pub chosen: VertexSet,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Optimal(DominationSolution),
    Infeasible,
}

impl Outcome {
    pub fn size(&self) -> Option<usize> {
        self.solution().map(|s| s.size)
    }

    pub fn solution(&self) -> Option<&DominationSolution> {
        match self {
            Outcome::Optimal(s) => Some(s),
            Outcome::Infeasible => None,
        }
    }
}

/// The first clause a candidate set violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", content = "vertex", rename_all = "snake_case")]
pub enum Violation {
    /// Neither in the set nor adjacent to a member.
    Undominated(Vertex),
    /// No neighbor in the set (total domination).
    NoTotalNeighbor(Vertex),
    /// A member without another member within distance two.
    NoWitness(Vertex),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Undominated(v) => write!(f, "undominated vertex {v}"),
            Violation::NoTotalNeighbor(v) => write!(f, "no neighbor in the set for vertex {v}"),
            Violation::NoWitness(v) => write!(f, "no witness for vertex {v}"),
        }
    }
}

pub fn verify_domination(g: &Graph, d: &VertexSet, kind: DominationKind) -> Result<bool> {
    Ok(find_violation(g, d, kind)?.is_none())
}

/// Checks vertices in ascending order: domination first, then (for the
/// semitotal kind) witnesses of members.
pub fn find_violation(g: &Graph, d: &VertexSet, kind: DominationKind) -> Result<Option<Violation>> {
    g.check_vertices(d.iter())?;
    Ok(violation(g, d, kind))
}

pub(crate) fn violation(g: &Graph, d: &VertexSet, kind: DominationKind) -> Option<Violation> {
    for v in g.vertices() {
        let hit = g.nbrs(v).iter().any(|x| d.contains(x));
        match kind {
            DominationKind::Total if !hit => return Some(Violation::NoTotalNeighbor(v)),
            DominationKind::Plain | DominationKind::Semitotal if !hit && !d.contains(&v) => {
                return Some(Violation::Undominated(v))
            }
            _ => {}
        }
    }
    if kind == DominationKind::Semitotal {
        for &x in d.iter() {
            if !has_witness(g, d, x) {
                return Some(Violation::NoWitness(x));
            }
        }
    }
    None
}

fn has_witness(g: &Graph, d: &VertexSet, x: Vertex) -> bool {
    g.nbrs(x).iter().any(|&y| d.contains(&y) || g.nbrs(y).iter().any(|&z| z != x && d.contains(&z)))
}

/// Minimum set of the given kind using the default vertex bound.
///
/// Among minimum sets, the lexicographically smallest (as ascending vertex
/// sequences) is returned. A `size_cap` turns optima larger than the cap into
/// [`Outcome::Infeasible`].
pub fn solve_exact(g: &Graph, kind: DominationKind, size_cap: Option<usize>) -> Result<Outcome> {
    solve_exact_bounded(g, kind, size_cap, DEFAULT_ORACLE_BOUND)
}

pub fn solve_exact_bounded(g: &Graph, kind: DominationKind, size_cap: Option<usize>, bound: usize) -> Result<Outcome> {
    if bound > ORACLE_HARD_CEILING {
        return Err(Error::InvalidParameter(alloc::format!(
            "oracle bound {bound} exceeds the ceiling of {ORACLE_HARD_CEILING}"
        )));
    }
    let n = g.vertex_count();
    if n > bound {
        return Err(Error::OracleBoundExceeded { size: n, bound });
    }
    if kind != DominationKind::Plain && !g.isolated_vertices().is_empty() {
        return Ok(Outcome::Infeasible);
    }
    let search = Search::new(g, kind);
    let cap = size_cap.unwrap_or(n).min(n);
    for k in 0..=cap {
        let mut found = None;
        search.run(0, k, 0, 0, &mut Vec::with_capacity(k), &mut |picks| {
            found = Some(search.set_of(picks));
            true
        });
        if let Some(chosen) = found {
            return Ok(Outcome::Optimal(DominationSolution { kind, size: chosen.len(), chosen }));
        }
    }
    Ok(Outcome::Infeasible)
}

/// Every minimum set of the given kind, in lexicographic order. Empty when
/// no set of the kind exists.
pub fn all_minimum_bounded(g: &Graph, kind: DominationKind, bound: usize) -> Result<Vec<VertexSet>> {
    let Some(k) = solve_exact_bounded(g, kind, None, bound)?.size() else {
        return Ok(Vec::new());
    };
    let search = Search::new(g, kind);
    let mut all = Vec::new();
    search.run(0, k, 0, 0, &mut Vec::with_capacity(k), &mut |picks| {
        all.push(search.set_of(picks));
        false
    });
    Ok(all)
}

struct Search {
    kind: DominationKind,
    n: usize,
    ids: Vec<Vertex>,
    /// Vertices each vertex dominates: closed neighborhood, or open for total.
    cover: Vec<u64>,
    /// Vertices that can dominate each vertex (symmetric to `cover`).
    dominators: Vec<u64>,
    /// Vertices within distance two, excluding the vertex itself.
    near: Vec<u64>,
    /// Largest cover size among vertices `i..`.
    best_cover_from: Vec<u32>,
    all: u64,
}

impl Search {
    fn new(g: &Graph, kind: DominationKind) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        let n = ids.len();
        let idx = |v: Vertex| ids.binary_search(&v).expect("vertex present");
        let open: Vec<u64> = ids.iter().map(|&v| g.nbrs(v).iter().fold(0u64, |m, &x| m | 1 << idx(x))).collect();
        let cover: Vec<u64> = match kind {
            DominationKind::Total => open.clone(),
            _ => (0..n).map(|i| open[i] | 1 << i).collect(),
        };
        let near = (0..n)
            .map(|i| {
                let mut m = open[i];
                let mut rest = open[i];
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    m |= open[j];
                }
                m & !(1 << i)
            })
            .collect();
        let mut best_cover_from = alloc::vec![0u32; n + 1];
        for i in (0..n).rev() {
            best_cover_from[i] = best_cover_from[i + 1].max(cover[i].count_ones());
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Search { kind, n, ids, dominators: cover.clone(), cover, near, best_cover_from, all }
    }

    fn set_of(&self, picks: &[usize]) -> VertexSet {
        picks.iter().map(|&i| self.ids[i]).collect()
    }

    /// Extends `picks` by exactly `left` more vertices from `start..`, in
    /// lexicographic order, handing each valid set to `found` until it
    /// returns `true`.
    fn run(
        &self,
        start: usize,
        left: usize,
        chosen: u64,
        dominated: u64,
        picks: &mut Vec<usize>,
        found: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let missing = self.all & !dominated;
        if left == 0 {
            return missing == 0 && self.witnessed(chosen) && found(picks);
        }
        if self.n - start < left {
            return false;
        }
        if missing != 0 {
            if missing.count_ones() > left as u32 * self.best_cover_from[start] {
                return false;
            }
            let u = missing.trailing_zeros() as usize;
            if self.dominators[u] >> start == 0 {
                return false;
            }
        }
        for i in start..self.n {
            picks.push(i);
            if self.run(i + 1, left - 1, chosen | 1 << i, dominated | self.cover[i], picks, found) {
                return true;
            }
            picks.pop();
        }
        false
    }

    fn witnessed(&self, chosen: u64) -> bool {
        if self.kind != DominationKind::Semitotal {
            return true;
        }
        let mut rest = chosen;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.near[i] & chosen == 0 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_graphs::*;
    use DominationKind::*;

    fn size(g: &Graph, kind: DominationKind) -> Option<usize> {
        solve_exact(g, kind, None).unwrap().size()
    }

    #[test]
    fn verify_small_cases() {
        let k2 = path(2);
        assert!(verify_domination(&k2, &VertexSet::from([0, 1]), Semitotal).unwrap());
        assert!(!verify_domination(&k2, &VertexSet::from([0]), Semitotal).unwrap());
        let s = star(3);
        let center = VertexSet::from([0]);
        assert!(verify_domination(&s, &center, Plain).unwrap());
        assert!(!verify_domination(&s, &center, Semitotal).unwrap());
        assert_eq!(find_violation(&s, &center, Semitotal).unwrap(), Some(Violation::NoWitness(0)));
        assert_eq!(find_violation(&s, &center, Total).unwrap(), Some(Violation::NoTotalNeighbor(0)));
        assert!(verify_domination(&s, &VertexSet::from([7]), Plain).is_err());
    }

    #[test]
    fn optimum_sizes() {
        assert_eq!(size(&path(2), Semitotal), Some(2));
        assert_eq!(size(&star(3), Semitotal), Some(2));
        assert_eq!(size(&cycle(5), Semitotal), Some(2));
        assert_eq!(size(&star(3), Total), Some(2));
        assert_eq!(size(&cycle(6), Plain), Some(2));
        assert_eq!(size(&cycle(6), Total), Some(4));
        assert_eq!(size(&graph(1, &[]), Semitotal), None);
        assert_eq!(size(&graph(1, &[]), Plain), Some(1));
    }

    #[test]
    fn lexicographic_tie_break() {
        // {0, 1} leaves 3 undominated on C5
        let out = solve_exact(&cycle(5), Semitotal, None).unwrap();
        assert_eq!(out.solution().unwrap().chosen, VertexSet::from([0, 2]));
        let out = solve_exact(&star(3), Semitotal, None).unwrap();
        assert_eq!(out.solution().unwrap().chosen, VertexSet::from([0, 1]));
    }

    #[test]
    fn size_cap_makes_large_optima_infeasible() {
        assert_eq!(solve_exact(&cycle(6), Total, Some(3)).unwrap(), Outcome::Infeasible);
        assert_eq!(solve_exact(&cycle(6), Total, Some(4)).unwrap().size(), Some(4));
    }

    #[test]
    fn bounds_enforced() {
        let err = solve_exact(&path(21), Plain, None).unwrap_err();
        assert_eq!(err, Error::OracleBoundExceeded { size: 21, bound: 20 });
        assert!(solve_exact_bounded(&path(21), Plain, None, 65).is_err());
        assert_eq!(solve_exact_bounded(&path(21), Plain, None, 64).unwrap().size(), Some(7));
    }

    #[test]
    fn every_minimum_set_is_listed() {
        let all = all_minimum_bounded(&cycle(4), Plain, 20).unwrap();
        assert_eq!(all.len(), 6);
        let sds = all_minimum_bounded(&cycle(5), Semitotal, 20).unwrap();
        let expected: Vec<VertexSet> =
            [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]].into_iter().map(VertexSet::from).collect();
        assert_eq!(sds, expected);
        assert!(all_minimum_bounded(&graph(2, &[]), Total, 20).unwrap().is_empty());
    }
}

use alloc::vec::Vec;

use serde::Serialize;

use super::region::RegionDecomposition;
use super::simple::simple_regions;
use crate::graph::{Graph, Vertex};
use crate::neighborhoods::pair_partition;

/// Most non-pole vertices in a simple region of a reduced graph.
pub const SIMPLE_REGION_BOUND: usize = 4;
/// Most vertices besides the poles in one region of a reduced graph.
pub const REGION_SIZE_BOUND: usize = 87;
/// Most `N1(v, w)` vertices in one region of a reduced graph.
pub const REGION_N1_BOUND: usize = 4;
/// Vertices outside every region, per base vertex.
pub const OUTSIDE_FACTOR: usize = 97;
/// Kernel vertices per unit of solution size.
pub const KERNEL_FACTOR: usize = 358;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: usize,
    pub bound: usize,
    pub pass: bool,
}

impl Verdict {
    pub fn at_most(value: usize, bound: usize) -> Self {
        Verdict { value, bound, pass: value <= bound }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionStats {
    pub poles: (Vertex, Vertex),
    pub size: Verdict,
    pub n1: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub base_size: usize,
    pub regions: Vec<RegionStats>,
    /// `|ℜ| ≤ 3|D| - 6`; absent when `|D| < 3`.
    pub region_count: Option<Verdict>,
    /// Sum of degrees in the underlying multigraph against `2|ℜ|`.
    pub handshake: Verdict,
    /// Vertices in neither a region nor the base set, against `97|D|`.
    pub outside: Verdict,
    pub all_pass: bool,
}

/// Measures a decomposition against the size bounds that hold for reduced
/// planar graphs.
pub fn decomposition_stats(g: &Graph, dec: &RegionDecomposition) -> BoundReport {
    let regions: Vec<RegionStats> = dec
        .regions
        .iter()
        .map(|r| {
            let (v, w) = r.poles;
            let n1 = pair_partition(g, v, w).n1;
            RegionStats {
                poles: r.poles,
                size: Verdict::at_most(r.size(), REGION_SIZE_BOUND),
                n1: Verdict::at_most(r.vertices.iter().filter(|x| n1.contains(x)).count(), REGION_N1_BOUND),
            }
        })
        .collect();
    let region_count = dec.region_bound().map(|b| Verdict::at_most(dec.regions.len(), b));
    let degree_sum = dec.multigraph().degree_sum();
    let handshake =
        Verdict { value: degree_sum, bound: 2 * dec.regions.len(), pass: degree_sum == 2 * dec.regions.len() };
    let covered = dec.covered();
    let outside_count = g.vertices().filter(|x| !covered.contains(x) && !dec.base_set.contains(x)).count();
    let outside = Verdict::at_most(outside_count, OUTSIDE_FACTOR * dec.base_set.len());
    let all_pass = regions.iter().all(|r| r.size.pass && r.n1.pass)
        && region_count.map_or(true, |v| v.pass)
        && handshake.pass
        && outside.pass;
    BoundReport { base_size: dec.base_set.len(), regions, region_count, handshake, outside, all_pass }
}

/// `n_reduced ≤ 358 k`.
pub fn kernel_bound_check(n_reduced: usize, k: usize) -> Verdict {
    Verdict::at_most(n_reduced, KERNEL_FACTOR * k)
}

/// Size of the largest simple region between any two vertices of `g`.
pub fn simple_region_check(g: &Graph) -> Verdict {
    let mut largest = 0;
    for v in g.vertices() {
        let near = g.distances_from(v, Some(2)).expect("own vertex");
        for (&w, _) in near.range(v + 1..) {
            for r in simple_regions(g, v, w) {
                largest = largest.max(r.size());
            }
        }
    }
    Verdict::at_most(largest, SIMPLE_REGION_BOUND)
}

//! Planarity, simple regions and region decompositions.

mod embedding;
mod lr;
mod region;
pub(crate) mod simple;
mod stats;

pub use embedding::{Dart, Embedding};
pub use region::{build_decomposition, confluent, Region, RegionDecomposition, UnderlyingMultigraph};
pub use simple::{find_simple_regions, SimpleRegion};
pub use stats::{
    decomposition_stats, kernel_bound_check, simple_region_check, BoundReport, RegionStats, Verdict, KERNEL_FACTOR,
    OUTSIDE_FACTOR, REGION_N1_BOUND, REGION_SIZE_BOUND, SIMPLE_REGION_BOUND,
};

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar,
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar => None,
        }
    }
}

/// Left-right planarity test. Planar graphs come with a rotation system.
pub fn test_planarity(g: &Graph) -> Planarity {
    match lr::lr_planarity(g) {
        Some(e) => Planarity::Planar(e),
        None => Planarity::NonPlanar,
    }
}

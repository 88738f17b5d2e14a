use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::neighborhoods::{pair_partition, PairPartition};

/// The sets of at most three vertices that dominate `N3(v, w)`, drawn from
/// `N_{2,3}(v, w)` and optionally one pole.
///
/// A member dominates itself and its neighbors. Every vertex that can
/// dominate part of `N3(v, w)` lies in `N_{2,3}(v, w) ∪ {v, w}`, so an empty
/// `family_d` means every solution avoiding both poles spends at least four
/// vertices there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateFamilies {
    pub poles: (Vertex, Vertex),
    /// Subsets of `N_{2,3}(v, w)`.
    pub family_d: Vec<VertexSet>,
    /// Sets containing `v`, the rest drawn from `N_{2,3}(v, w)`.
    pub family_dv: Vec<VertexSet>,
    /// Sets containing `w`, the rest drawn from `N_{2,3}(v, w)`.
    pub family_dw: Vec<VertexSet>,
}

/// Exhaustive enumeration of the three candidate families. Members are listed
/// by size, then lexicographically.
pub fn compute_families(g: &Graph, v: Vertex, w: Vertex) -> Result<CandidateFamilies> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::IdenticalPoles(v));
    }
    let part = pair_partition(g, v, w);
    let ground = part.n23().to_vec();
    let covers = |set: &[Vertex]| part.n3.iter().all(|t| set.iter().any(|&x| x == *t || g.nbrs(x).contains(t)));
    let mut family_d = Vec::new();
    let mut family_dv = Vec::new();
    let mut family_dw = Vec::new();
    for_each_subset(&ground, 3, |s| {
        if covers(s) {
            family_d.push(s.iter().copied().collect());
        }
    });
    for (pole, family) in [(v, &mut family_dv), (w, &mut family_dw)] {
        for_each_subset(&ground, 2, |s| {
            let mut with_pole: Vec<Vertex> = s.to_vec();
            with_pole.push(pole);
            if covers(&with_pole) {
                family.push(with_pole.into_iter().collect());
            }
        });
    }
    Ok(CandidateFamilies { poles: (v, w), family_d, family_dv, family_dw })
}

/// Visits all subsets of `ground` with at most `max` elements, by size and
/// then lexicographically.
fn for_each_subset<F: FnMut(&[Vertex])>(ground: &[Vertex], max: usize, mut f: F) {
    fn rec<F: FnMut(&[Vertex])>(ground: &[Vertex], start: usize, left: usize, buf: &mut Vec<Vertex>, f: &mut F) {
        if left == 0 {
            f(buf);
            return;
        }
        for i in start..ground.len() {
            buf.push(ground[i]);
            rec(ground, i + 1, left - 1, buf, f);
            buf.pop();
        }
    }
    let mut buf = Vec::new();
    for size in 0..=max.min(ground.len()) {
        rec(ground, 0, size, &mut buf, &mut f);
    }
}

/// Which families are nonempty; all the rule needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct FamilyEmptiness {
    pub d: bool,
    pub dv: bool,
    pub dw: bool,
}

pub(crate) fn family_emptiness(g: &Graph, part: &PairPartition) -> FamilyEmptiness {
    let (v, w) = part.poles;
    let targets = part.n3.to_vec();
    let index = |x: &Vertex| targets.binary_search(x).ok();
    let words = targets.len().div_ceil(64);
    let mask_of = |x: Vertex| {
        let mut m = Bits::zero(words);
        for i in g.nbrs(x).iter().chain([&x]).filter_map(index) {
            m.set(i);
        }
        m
    };
    let masks: Vec<Bits> = part.n23().iter().map(|&x| mask_of(x)).collect();
    let full = Bits::full(targets.len());
    let d = min_cover(&full, &masks, 3).is_some();
    let dv = min_cover(&full.minus(&mask_of(v)), &masks, 2).is_some();
    let dw = min_cover(&full.minus(&mask_of(w)), &masks, 2).is_some();
    FamilyEmptiness { d: !d, dv: !dv, dw: !dw }
}

/// Fewest vertices of `ground` whose closed neighborhoods cover `target`, if
/// that number is at most `limit`.
pub(crate) fn min_cover_of(g: &Graph, target: &VertexSet, ground: &VertexSet, limit: usize) -> Option<usize> {
    let targets = target.to_vec();
    let words = targets.len().div_ceil(64);
    let masks: Vec<Bits> = ground
        .iter()
        .map(|&x| {
            let mut m = Bits::zero(words);
            for i in g.nbrs(x).iter().chain([&x]).filter_map(|y| targets.binary_search(y).ok()) {
                m.set(i);
            }
            m
        })
        .collect();
    min_cover(&Bits::full(targets.len()), &masks, limit)
}

fn min_cover(target: &Bits, masks: &[Bits], limit: usize) -> Option<usize> {
    if target.is_zero() {
        return Some(0);
    }
    // Only the parts of each mask inside the target matter; masks contained
    // in another mask never help.
    let mut useful: Vec<Bits> = masks.iter().map(|m| m.and(target)).filter(|m| !m.is_zero()).collect();
    useful.sort_by_key(|m| core::cmp::Reverse(m.count()));
    useful.dedup();
    let mut kept: Vec<Bits> = Vec::new();
    for m in useful {
        if !kept.iter().any(|k| m.is_subset(k)) {
            kept.push(m);
        }
    }
    let need = target.count();
    for size in 1..=limit {
        // The largest mask bounds what `size` masks can cover.
        if kept.first().map_or(true, |m| m.count() * size < need) {
            continue;
        }
        if covers_with(target, &kept, size, 0, &Bits::zero(target.words.len())) {
            return Some(size);
        }
    }
    None
}

fn covers_with(target: &Bits, masks: &[Bits], left: usize, start: usize, acc: &Bits) -> bool {
    if left == 0 {
        return target.is_subset(acc);
    }
    (start..masks.len()).any(|i| covers_with(target, masks, left - 1, i + 1, &acc.or(&masks[i])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn zero(words: usize) -> Self {
        Bits { words: alloc::vec![0; words] }
    }

    fn full(len: usize) -> Self {
        let mut b = Self::zero(len.div_ceil(64));
        for i in 0..len {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&o.words).map(|(a, b)| a & b).collect() }
    }

    fn or(&self, o: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&o.words).map(|(a, b)| a | b).collect() }
    }

    fn minus(&self, o: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&o.words).map(|(a, b)| a & !b).collect() }
    }

    fn is_subset(&self, o: &Bits) -> bool {
        self.words.iter().zip(&o.words).all(|(a, b)| a & !b == 0)
    }
}

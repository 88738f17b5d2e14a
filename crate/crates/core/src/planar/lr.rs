//! Left-right planarity test with embedding construction (after Brandes,
//! "The left-right planarity test"). All depth-first searches run on explicit
//! stacks so deep graphs cannot overflow the call stack.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::embedding::Embedding;
use crate::graph::{Graph, Vertex};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        core::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State {
    n: usize,
    adj: Vec<Vec<usize>>,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    roots: Vec<usize>,
    // Oriented edges, indexed by edge id.
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: BTreeMap<(usize, usize), usize>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<isize>,
    ordered: Vec<Vec<usize>>,
    // Testing phase.
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<Option<ConflictPair>>,
    lowpt_edge: Vec<usize>,
    reference: Vec<Option<usize>>,
    side: Vec<isize>,
}

/// Runs the test; returns a clockwise rotation system when `g` is planar.
pub(crate) fn lr_planarity(g: &Graph) -> Option<Embedding> {
    let ids: Vec<Vertex> = g.vertices().collect();
    let n = ids.len();
    let m = g.edge_count();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let index = |v: Vertex| ids.binary_search(&v).expect("vertex present");
    let adj: Vec<Vec<usize>> = ids.iter().map(|&v| g.nbrs(v).iter().map(|&x| index(x)).collect()).collect();
    let mut s = State {
        n,
        adj,
        height: vec![NONE; n],
        parent_edge: vec![None; n],
        roots: Vec::new(),
        src: Vec::with_capacity(m),
        dst: Vec::with_capacity(m),
        oriented: BTreeMap::new(),
        out: vec![Vec::new(); n],
        lowpt: Vec::with_capacity(m),
        lowpt2: Vec::with_capacity(m),
        nesting_depth: Vec::with_capacity(m),
        ordered: vec![Vec::new(); n],
        stack: Vec::new(),
        stack_bottom: Vec::new(),
        lowpt_edge: Vec::new(),
        reference: Vec::new(),
        side: Vec::new(),
    };
    for v in 0..n {
        if s.height[v] == NONE {
            s.height[v] = 0;
            s.roots.push(v);
            s.orient(v);
        }
    }
    s.order_by_nesting();
    s.stack_bottom = vec![None; m];
    s.lowpt_edge = vec![NONE; m];
    s.reference = vec![None; m];
    s.side = vec![1; m];
    for i in 0..s.roots.len() {
        if !s.test(s.roots[i]) {
            return None;
        }
    }
    for e in 0..m {
        s.nesting_depth[e] *= s.sign(e);
    }
    s.order_by_nesting();
    Some(s.embed(&ids))
}

impl State {
    fn order_by_nesting(&mut self) {
        for v in 0..self.n {
            let mut list = self.out[v].clone();
            list.sort_by_key(|&e| self.nesting_depth[e]);
            self.ordered[v] = list;
        }
    }

    fn orient(&mut self, root: usize) {
        let mut dfs = vec![root];
        let mut next = vec![0usize; self.n];
        // Edge whose child subtree just finished and still needs its
        // post-processing at the parent.
        let mut pending: Vec<Option<usize>> = vec![None; self.n];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            if let Some(vw) = pending[v].take() {
                self.finish_orientation(v, vw, e);
                next[v] += 1;
            }
            while next[v] < self.adj[v].len() {
                let w = self.adj[v][next[v]];
                if self.oriented.contains_key(&(v, w)) || self.oriented.contains_key(&(w, v)) {
                    next[v] += 1;
                    continue;
                }
                let vw = self.src.len();
                self.src.push(v);
                self.dst.push(w);
                self.oriented.insert((v, w), vw);
                self.out[v].push(vw);
                self.lowpt.push(self.height[v]);
                self.lowpt2.push(self.height[v]);
                self.nesting_depth.push(0);
                if self.height[w] == NONE {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = self.height[v] + 1;
                    pending[v] = Some(vw);
                    dfs.push(v);
                    dfs.push(w);
                    break;
                }
                self.lowpt[vw] = self.height[w];
                self.finish_orientation(v, vw, e);
                next[v] += 1;
            }
        }
    }

    fn finish_orientation(&mut self, v: usize, vw: usize, e: Option<usize>) {
        self.nesting_depth[vw] = 2 * self.lowpt[vw] as isize;
        if self.lowpt2[vw] < self.height[v] {
            self.nesting_depth[vw] += 1;
        }
        if let Some(e) = e {
            if self.lowpt[vw] < self.lowpt[e] {
                self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                self.lowpt[e] = self.lowpt[vw];
            } else if self.lowpt[vw] > self.lowpt[e] {
                self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
            } else {
                self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
            }
        }
    }

    fn test(&mut self, root: usize) -> bool {
        let mut dfs = vec![root];
        let mut next = vec![0usize; self.n];
        let mut resumed = vec![false; self.n];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            let mut descended = false;
            while next[v] < self.ordered[v].len() {
                let ei = self.ordered[v][next[v]];
                let w = self.dst[ei];
                if !resumed[v] {
                    self.stack_bottom[ei] = self.stack.last().copied();
                    if self.parent_edge[w] == Some(ei) {
                        resumed[v] = true;
                        dfs.push(v);
                        dfs.push(w);
                        descended = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        left: Interval::default(),
                        right: Interval { low: Some(ei), high: Some(ei) },
                    });
                }
                resumed[v] = false;
                if self.lowpt[ei] < self.height[v] {
                    if ei == self.ordered[v][0] {
                        let e = e.expect("a return edge implies a parent edge");
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e.expect("a return edge implies a parent edge")) {
                        return false;
                    }
                }
                next[v] += 1;
            }
            if !descended {
                if let Some(e) = e {
                    self.remove_back_edges(e);
                }
            }
        }
        true
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.empty() && self.lowpt[i.high.expect("nonempty interval")] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.empty(), p.right.empty()) {
            (true, _) => self.lowpt[p.right.low.expect("nonempty")],
            (_, true) => self.lowpt[p.left.low.expect("nonempty")],
            _ => self.lowpt[p.left.low.expect("nonempty")].min(self.lowpt[p.right.low.expect("nonempty")]),
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        while let Some(mut q) = self.stack.pop() {
            if !q.left.empty() {
                q.swap();
            }
            if !q.left.empty() {
                return false;
            }
            let q_low = q.right.low.expect("nonempty right interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.expect("nonempty")] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.stack.last().copied() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked nonempty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(low) = p.right.low {
                self.reference[low] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.empty() {
                p.left = q.left;
            } else if let Some(low) = p.left.low {
                self.reference[low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.empty() && p.right.empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().expect("checked nonempty");
            if let Some(low) = p.left.low {
                self.side[low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.reference[low] = p.right.low;
                    self.side[low] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.reference[low] = p.left.low;
                    self.side[low] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().copied().unwrap_or_default();
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    /// Resolves the side of `e` by following its reference chain.
    fn sign(&mut self, e: usize) -> isize {
        let mut chain = vec![e];
        while let Some(r) = self.reference[*chain.last().expect("nonempty")] {
            chain.push(r);
        }
        // The last edge has no reference; fold signs back down the chain.
        let mut acc = self.side[*chain.last().expect("nonempty")];
        for &x in chain.iter().rev().skip(1) {
            self.side[x] *= acc;
            self.reference[x] = None;
            acc = self.side[x];
        }
        self.side[e]
    }

    fn embed(&self, ids: &[Vertex]) -> Embedding {
        let mut rot = Rotations::new(self.n);
        for v in 0..self.n {
            let mut prev = None;
            for &e in &self.ordered[v] {
                let w = self.dst[e];
                rot.add_cw(v, w, prev);
                prev = Some(w);
            }
        }
        let mut left_ref = vec![NONE; self.n];
        let mut right_ref = vec![NONE; self.n];
        for &root in &self.roots {
            let mut dfs = vec![root];
            let mut next = vec![0usize; self.n];
            while let Some(v) = dfs.pop() {
                while next[v] < self.ordered[v].len() {
                    let ei = self.ordered[v][next[v]];
                    next[v] += 1;
                    let w = self.dst[ei];
                    if self.parent_edge[w] == Some(ei) {
                        rot.add_first(w, v);
                        left_ref[v] = w;
                        right_ref[v] = w;
                        dfs.push(v);
                        dfs.push(w);
                        break;
                    }
                    if self.side[ei] == 1 {
                        rot.add_cw(w, v, Some(right_ref[w]));
                    } else {
                        rot.add_ccw(w, v, Some(left_ref[w]));
                        left_ref[w] = v;
                    }
                }
            }
        }
        rot.into_embedding(ids)
    }
}

/// Doubly linked cyclic neighbor orders under construction.
struct Rotations {
    links: Vec<BTreeMap<usize, (usize, usize)>>,
    first: Vec<Option<usize>>,
}

impl Rotations {
    fn new(n: usize) -> Self {
        Rotations { links: vec![BTreeMap::new(); n], first: vec![None; n] }
    }

    /// Inserts `end` clockwise right after `reference` around `start`.
    fn add_cw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        let Some(r) = reference else {
            self.links[start].insert(end, (end, end));
            self.first[start] = Some(end);
            return;
        };
        let (r_cw, _) = self.links[start][&r];
        self.links[start].get_mut(&r).expect("reference present").0 = end;
        self.links[start].insert(end, (r_cw, r));
        self.links[start].get_mut(&r_cw).expect("neighbor present").1 = end;
    }

    /// Inserts `end` counterclockwise right before `reference` around `start`.
    fn add_ccw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        let Some(r) = reference else {
            self.add_cw(start, end, None);
            return;
        };
        let (_, r_ccw) = self.links[start][&r];
        self.add_cw(start, end, Some(r_ccw));
        if self.first[start] == Some(r) {
            self.first[start] = Some(end);
        }
    }

    fn add_first(&mut self, start: usize, end: usize) {
        let reference = self.first[start];
        self.add_ccw(start, end, reference);
    }

    fn into_embedding(self, ids: &[Vertex]) -> Embedding {
        let mut rotation = BTreeMap::new();
        for (v, links) in self.links.iter().enumerate() {
            let mut order = Vec::with_capacity(links.len());
            if let Some(&start) = links.keys().next() {
                let mut x = start;
                loop {
                    order.push(ids[x]);
                    x = links[&x].0;
                    if x == start {
                        break;
                    }
                }
            }
            rotation.insert(ids[v], order);
        }
        Embedding::from_rotation_unchecked(rotation)
    }
}

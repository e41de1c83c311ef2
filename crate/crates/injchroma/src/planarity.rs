//! Exact planarity testing via the left-right (DFS orientation) criterion.
//!
//! Two passes over each connected component: a DFS orientation pass computing
//! `lowpt`, `lowpt2` and nesting depths, then a testing pass that maintains a
//! stack of conflict pairs of return-edge intervals and rejects exactly when
//! two return edges are forced onto the same side. Only the decision is
//! produced; no embedding is extracted.

use crate::graph::Graph;

/// Oriented-edge id: edge `k` of the edge list yields directions `2k` and
/// `2k + 1`.
type Dir = usize;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Interval {
    low: Option<Dir>,
    high: Option<Dir>,
}

const EMPTY: Interval = Interval {
    low: None,
    high: None,
};

impl Interval {
    #[inline]
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    l: Interval,
    r: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.l, &mut self.r);
    }
}

struct LrState<'a> {
    g: &'a Graph,
    /// Endpoints of undirected edge `k`; direction `2k` runs `.0 -> .1`.
    ends: Vec<(usize, usize)>,
    /// Direction ids leaving each vertex, in DFS orientation order.
    out: Vec<Vec<Dir>>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<Option<Dir>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    lowpt_edge: Vec<Option<Dir>>,
    refs: Vec<Option<Dir>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl<'a> LrState<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let ends = g.edges();
        let m2 = 2 * ends.len();
        let mut incident: Vec<Vec<Dir>> = vec![Vec::new(); n];
        for (k, &(u, v)) in ends.iter().enumerate() {
            incident[u].push(2 * k);
            incident[v].push(2 * k + 1);
        }
        LrState {
            g,
            ends,
            out: incident,
            oriented: vec![false; m2],
            height: vec![NONE; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m2],
            lowpt2: vec![0; m2],
            nesting: vec![0; m2],
            lowpt_edge: vec![None; m2],
            refs: vec![None; m2],
            stack_bottom: vec![0; m2],
            stack: Vec::new(),
        }
    }

    #[inline]
    fn source(&self, d: Dir) -> usize {
        let (u, v) = self.ends[d / 2];
        if d % 2 == 0 {
            u
        } else {
            v
        }
    }

    #[inline]
    fn target(&self, d: Dir) -> usize {
        let (u, v) = self.ends[d / 2];
        if d % 2 == 0 {
            v
        } else {
            u
        }
    }

    fn orient(&mut self, root: usize) {
        self.height[root] = 0;
        self.dfs1(root);
    }

    fn dfs1(&mut self, v: usize) {
        let e = self.parent_edge[v];
        let candidates: Vec<Dir> = self.out[v].clone();
        for d in candidates {
            if self.oriented[d] || self.oriented[d ^ 1] {
                continue;
            }
            self.oriented[d] = true;
            let w = self.target(d);
            self.lowpt[d] = self.height[v];
            self.lowpt2[d] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = Some(d);
                self.height[w] = self.height[v] + 1;
                self.dfs1(w);
            } else {
                self.lowpt[d] = self.height[w];
            }
            self.nesting[d] = 2 * self.lowpt[d];
            if self.lowpt2[d] < self.height[v] {
                self.nesting[d] += 1; // chordal, inner nesting
            }
            if let Some(pe) = e {
                if self.lowpt[d] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[d]);
                    self.lowpt[pe] = self.lowpt[d];
                } else if self.lowpt[d] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[d]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[d]);
                }
            }
        }
    }

    /// Reorders every vertex's oriented out-edges by nesting depth so the
    /// first edge always carries the lowest return point.
    fn sort_adjacency(&mut self) {
        let nesting = std::mem::take(&mut self.nesting);
        for v in 0..self.g.order() {
            let mut kept: Vec<Dir> = self.out[v]
                .iter()
                .copied()
                .filter(|&d| self.oriented[d])
                .collect();
            kept.sort_by_key(|&d| nesting[d]);
            self.out[v] = kept;
        }
        self.nesting = nesting;
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let outgoing: Vec<Dir> = self.out[v].clone();
        for (idx, &ei) in outgoing.iter().enumerate() {
            self.stack_bottom[ei] = self.stack.len();
            let w = self.target(ei);
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    l: EMPTY,
                    r: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < self.height[v] {
                // ei has a return edge strictly below v
                if idx == 0 {
                    let pe = e.expect("root edges cannot return below height 0");
                    self.lowpt_edge[pe] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e.expect("non-root")) {
                    return false;
                }
            }
        }
        if let Some(pe) = e {
            self.remove_back_edges(pe);
        }
        true
    }

    fn add_constraints(&mut self, ei: Dir, e: Dir) -> bool {
        let mut p = ConflictPair { l: EMPTY, r: EMPTY };
        // Merge the return edges of ei into p.r.
        loop {
            let mut q = self.stack.pop().expect("ei pushed at least one pair");
            if !q.l.is_empty() {
                q.swap();
            }
            if !q.l.is_empty() {
                return false;
            }
            let q_low = q.r.low.expect("popped interval is nonempty");
            if self.lowpt[q_low] > self.lowpt[e] {
                // interval strictly above the parent's low point: merge
                if p.r.is_empty() {
                    p.r.high = q.r.high;
                } else {
                    self.refs[p.r.low.unwrap()] = q.r.high;
                }
                p.r.low = q.r.low;
            } else {
                // align with the parent's low-point edge
                self.refs[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // Merge conflicting return edges of earlier siblings into p.l.
        while self
            .stack
            .last()
            .map(|t| self.conflicting(&t.l, ei) || self.conflicting(&t.r, ei))
            .unwrap_or(false)
        {
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.r, ei) {
                q.swap();
            }
            if self.conflicting(&q.r, ei) {
                return false;
            }
            // q.r is below lowpt(ei): fold it into p.r
            if let Some(prl) = p.r.low {
                self.refs[prl] = q.r.high;
            }
            if q.r.low.is_some() {
                p.r.low = q.r.low;
            }
            if p.l.is_empty() {
                p.l.high = q.l.high;
            } else {
                self.refs[p.l.low.unwrap()] = q.l.high;
            }
            p.l.low = q.l.low;
        }
        if !(p.l.is_empty() && p.r.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    #[inline]
    fn conflicting(&self, i: &Interval, b: Dir) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.l.low, p.r.low) {
            (Some(a), Some(b)) => self.lowpt[a].min(self.lowpt[b]),
            (Some(a), None) => self.lowpt[a],
            (None, Some(b)) => self.lowpt[b],
            (None, None) => unreachable!("empty conflict pair on stack"),
        }
    }

    fn remove_back_edges(&mut self, e: Dir) {
        let u = self.source(e);
        // Drop conflict pairs whose return edges all end at u.
        while self
            .stack
            .last()
            .map(|p| self.lowest(p) == self.height[u])
            .unwrap_or(false)
        {
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            // Trim interval ends returning exactly to u.
            while let Some(h) = p.l.high {
                if self.target(h) == u {
                    p.l.high = self.refs[h];
                } else {
                    break;
                }
            }
            if p.l.high.is_none() && p.l.low.is_some() {
                self.refs[p.l.low.unwrap()] = p.r.low;
                p.l.low = None;
            }
            while let Some(h) = p.r.high {
                if self.target(h) == u {
                    p.r.high = self.refs[h];
                } else {
                    break;
                }
            }
            if p.r.high.is_none() && p.r.low.is_some() {
                self.refs[p.r.low.unwrap()] = p.l.low;
                p.r.low = None;
            }
            self.stack.push(p);
        }
    }
}

/// Exact planarity verdict.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 {
        return true;
    }
    let m = g.size();
    if m > 3 * n - 6 {
        return false;
    }
    let mut state = LrState::new(g);
    let mut roots = Vec::new();
    for v in 0..n {
        if state.height[v] == NONE {
            roots.push(v);
            state.orient(v);
        }
    }
    state.sort_adjacency();
    for root in roots {
        if !state.test(root) {
            return false;
        }
        debug_assert!(state.stack.is_empty());
    }
    true
}

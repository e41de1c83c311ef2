//! Immutable simple undirected graphs over dense vertex indices `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex (a single `u64` word per
//! row for `n <= 64`, multiple words beyond that). All editing operations
//! return a fresh graph; values are cheap to clone and safe to share across
//! threads.

use thiserror::Error;

/// Dense vertex index, valid in `0..g.order()` of the owning graph.
pub type VertexId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph of order {1}")]
    VertexOutOfRange(VertexId, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0}-{1} not present")]
    MissingEdge(VertexId, VertexId),
}

/// Simple undirected graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Rejects out-of-range endpoints, self-loops and duplicate pairs, so the
    /// result is always simple.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.set_edge(u, (u + 1) % n);
        }
        g
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.set_edge(u - 1, u);
        }
        g
    }

    /// Star with center `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.set_edge(0, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as a bitset slice (`words` words).
    #[inline]
    pub fn row(&self, v: VertexId) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Maximum degree; 0 for the edgeless (or empty) graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        BitIter::new(self.row(v))
    }

    /// Union of closed neighbourhoods `N[v]` over `v` in `set`, sorted.
    pub fn closed_neighborhood_of_set(&self, set: &[VertexId]) -> Vec<VertexId> {
        let mut acc = vec![0u64; self.words.max(1)];
        for &v in set {
            assert!(v < self.n, "vertex {v} out of range");
            acc[v / 64] |= 1 << (v % 64);
            for (a, r) in acc.iter_mut().zip(self.row(v)) {
                *a |= r;
            }
        }
        BitIter::new(&acc).collect()
    }

    /// True iff `u` and `v` have a common neighbour.
    #[inline]
    pub fn have_common_neighbor(&self, u: VertexId, v: VertexId) -> bool {
        self.row(u).iter().zip(self.row(v)).any(|(a, b)| a & b != 0)
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Returns a new graph with the edge `u-v` added.
    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    /// Returns a new graph with the edge `u-v` removed.
    pub fn delete_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    /// Returns a new graph with vertex `v` removed; vertices above `v` shift
    /// down by one so indices stay dense.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            if a == v || b == v {
                continue;
            }
            let a = if a > v { a - 1 } else { a };
            let b = if b > v { b - 1 } else { b };
            g.set_edge(a, b);
        }
        Ok(g)
    }

    /// Returns a new graph with one extra vertex adjacent to `neighbors`;
    /// the fresh vertex gets index `n`.
    pub fn add_vertex(&self, neighbors: &[VertexId]) -> Result<(Graph, VertexId), GraphError> {
        for &u in neighbors {
            self.check_vertex(u)?;
        }
        let fresh = self.n;
        let mut g = self.grown();
        for &u in neighbors {
            g.set_edge(u, fresh);
        }
        Ok((g, fresh))
    }

    /// Replaces the edge `u-v` by a path `u-x-v` through a fresh vertex `x`
    /// with index `n`. Returns the new graph and `x`.
    pub fn subdivide_edge(&self, u: VertexId, v: VertexId) -> Result<(Graph, VertexId), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let fresh = self.n;
        let mut g = self.grown();
        g.clear_edge(u, v);
        g.set_edge(u, fresh);
        g.set_edge(v, fresh);
        Ok((g, fresh))
    }

    /// Subgraph induced on `keep` (in the given order); vertex `keep[i]`
    /// becomes vertex `i`.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn permuted(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// True iff the graph is connected; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![0u64; self.words];
        let mut stack = vec![0usize];
        seen[0] |= 1;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if seen[v / 64] >> (v % 64) & 1 == 0 {
                    seen[v / 64] |= 1 << (v % 64);
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        components
    }

    #[inline]
    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(v, self.n))
        }
    }

    /// Copy with one extra (isolated) vertex.
    fn grown(&self) -> Graph {
        let n = self.n + 1;
        let words = words_for(n);
        let mut g = Graph {
            n,
            words,
            bits: vec![0; n * words],
        };
        for v in 0..self.n {
            g.bits[v * words..v * words + self.words].copy_from_slice(self.row(v));
        }
        g
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: VertexId, v: VertexId) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over set bits of a word slice.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            word_idx: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_k3() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn from_edges_empty_edge_set() {
        let g = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(4, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange(2, 2))
        );
    }

    #[test]
    fn neighbors_of_star_center() {
        let g = Graph::star(4);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(g.neighbors(1).collect::<Vec<_>>(), vec![0]);
        assert_eq!(Graph::empty(3).neighbors(1).count(), 0);
    }

    #[test]
    fn closed_neighborhoods() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.closed_neighborhood_of_set(&[0]), vec![0, 1, 2]);
        let e = Graph::empty(4);
        assert_eq!(e.closed_neighborhood_of_set(&[0, 1, 2, 3]), vec![0, 1, 2, 3]);
        let p3 = Graph::path(3);
        assert_eq!(p3.closed_neighborhood_of_set(&[0]), vec![0, 1]);
    }

    #[test]
    fn max_degree_cases() {
        assert_eq!(Graph::complete(4).max_degree(), 3);
        assert_eq!(Graph::empty(5).max_degree(), 0);
        assert_eq!(Graph::star(5).max_degree(), 5);
    }

    #[test]
    fn subdivide_k3_gives_c4() {
        let k3 = Graph::complete(3);
        let (g, x) = k3.subdivide_edge(0, 1).unwrap();
        assert_eq!(x, 3);
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 4);
        // 0-x-1-2-0 is a 4-cycle
        assert!(g.has_edge(0, 3) && g.has_edge(1, 3) && !g.has_edge(0, 1));
        assert_eq!(crate::metrics::girth(&g), crate::metrics::Girth::Finite(4));
    }

    #[test]
    fn subdivide_single_edge_gives_path() {
        let p2 = Graph::path(2);
        let (g, _) = p2.subdivide_edge(0, 1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn subdivide_absent_edge_fails() {
        let g = Graph::path(3);
        assert_eq!(g.subdivide_edge(0, 2), Err(GraphError::MissingEdge(0, 2)));
    }

    #[test]
    fn delete_vertex_reindexes() {
        let k3 = Graph::complete(3);
        let g = k3.delete_vertex(0).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn add_edge_cases() {
        let p3 = Graph::path(3);
        let g = p3.add_edge(0, 2).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.add_edge(0, 2).unwrap_err(), GraphError::DuplicateEdge(0, 2));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5), (0, 5)]).unwrap();
        let back = Graph::from_edges(g.order(), &g.edges()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn connectivity_queries() {
        assert!(Graph::path(5).is_connected());
        assert!(!Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert_eq!(Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap().component_count(), 2);
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn multiword_rows_beyond_64_vertices() {
        let n = 100;
        let mut edges = Vec::new();
        for v in 1..n {
            edges.push((v - 1, v));
        }
        edges.push((0, 99));
        let g = Graph::from_edges(n, &edges).unwrap();
        assert_eq!(g.size(), 100);
        assert_eq!(g.degree(0), 2);
        assert!(g.has_edge(0, 99));
        assert_eq!(g.neighbors(99).collect::<Vec<_>>(), vec![0, 98]);
    }
}

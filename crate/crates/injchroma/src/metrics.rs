//! Exact graph invariants used as stream filters and verdict inputs: girth,
//! diameter, vertex connectivity, triangle cover of edges, and the conflict
//! graph whose proper colourings are exactly the injective colourings of the
//! base graph.

use crate::graph::{Graph, GraphError, VertexId};

/// Length of a shortest cycle; `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

/// Maximum eccentricity; `Infinite` for disconnected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

/// A base graph together with its conflict graph: `u-v` is a conflict edge
/// iff `u != v` and they have a common neighbour in the base.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    pub base: Graph,
    pub conflicts: Graph,
}

/// Builds the conflict graph of `g` on the same vertex set.
pub fn conflict_graph(g: &Graph) -> ConflictGraph {
    ConflictGraph {
        base: g.clone(),
        conflicts: conflicts_of(g),
    }
}

pub(crate) fn conflicts_of(g: &Graph) -> Graph {
    let n = g.order();
    let mut c = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if g.have_common_neighbor(u, v) {
                c.set_edge(u, v);
            }
        }
    }
    c
}

/// Exact girth via one BFS per root: every non-tree edge `x-y` seen from root
/// `r` witnesses a closed walk of length `dist(x)+dist(y)+1`, and the minimum
/// of those candidates over all roots is the girth.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        queue.clear();
        dist[root] = 0;
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if 2 * dist[u] >= best {
                break;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push(v);
                } else if v != parent[u] {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

fn bfs_distances(g: &Graph, root: VertexId, dist: &mut [usize]) {
    dist.fill(usize::MAX);
    dist[root] = 0;
    let mut queue = vec![root];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
        }
    }
}

/// Maximum over vertex pairs of the shortest-path distance.
pub fn diameter(g: &Graph) -> Diameter {
    let n = g.order();
    let mut best = 0usize;
    let mut dist = vec![usize::MAX; n];
    for root in 0..n {
        bfs_distances(g, root, &mut dist);
        for &d in dist.iter() {
            if d == usize::MAX {
                return Diameter::Infinite;
            }
            best = best.max(d);
        }
    }
    Diameter::Finite(best)
}

/// True iff every edge `u-v` lies on a triangle, i.e. `u` and `v` have a
/// common neighbour.
pub fn every_edge_on_triangle(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| g.have_common_neighbor(u, v))
}

/// True iff no vertex cut of size `< k` exists (and the graph has more than
/// `k` vertices). Decided by unit-vertex-capacity max flow over all
/// non-adjacent source/sink pairs.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.order();
    if n <= k {
        return false;
    }
    if !g.is_connected() {
        return false;
    }
    for s in 0..n {
        for t in (s + 1)..n {
            if g.has_edge(s, t) {
                continue;
            }
            if !local_vertex_connectivity_at_least(g, s, t, k) {
                return false;
            }
        }
    }
    // Complete graph falls through: no cut exists at all.
    true
}

/// Menger check: at least `k` internally vertex-disjoint `s`-`t` paths.
fn local_vertex_connectivity_at_least(g: &Graph, s: VertexId, t: VertexId, k: usize) -> bool {
    // Split each vertex v into v_in = 2v and v_out = 2v+1 with unit capacity
    // on the internal arc; each edge contributes unit arcs both ways.
    let n = g.order();
    let nodes = 2 * n;
    let mut head: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut cap: Vec<i32> = Vec::new();
    let mut to: Vec<usize> = Vec::new();
    let add_arc = |head: &mut Vec<Vec<usize>>, cap: &mut Vec<i32>, to: &mut Vec<usize>, a: usize, b: usize, c: i32| {
        head[a].push(to.len());
        to.push(b);
        cap.push(c);
        head[b].push(to.len());
        to.push(a);
        cap.push(0);
    };
    for v in 0..n {
        let c = if v == s || v == t { i32::MAX / 2 } else { 1 };
        add_arc(&mut head, &mut cap, &mut to, 2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        add_arc(&mut head, &mut cap, &mut to, 2 * u + 1, 2 * v, 1);
        add_arc(&mut head, &mut cap, &mut to, 2 * v + 1, 2 * u, 1);
    }

    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0usize;
    let mut visited = vec![false; nodes];
    while flow < k {
        visited.fill(false);
        if !augment(source, sink, &head, &to, &mut cap, &mut visited) {
            return false;
        }
        flow += 1;
    }
    true
}

fn augment(
    u: usize,
    sink: usize,
    head: &[Vec<usize>],
    to: &[usize],
    cap: &mut [i32],
    visited: &mut [bool],
) -> bool {
    if u == sink {
        return true;
    }
    visited[u] = true;
    for &e in &head[u] {
        let v = to[e];
        if cap[e] > 0 && !visited[v] && augment(v, sink, head, to, cap, visited) {
            cap[e] -= 1;
            cap[e ^ 1] += 1;
            return true;
        }
    }
    false
}

/// All unordered pairs `{x, y}` whose single length-2 path between them runs
/// through the edge `e = u-v` (i.e. their only common neighbour is `u` with
/// `v` in the pair, or `v` with `u` in the pair).
pub fn unique_length2_path_pairs_through(
    g: &Graph,
    u: VertexId,
    v: VertexId,
) -> Result<Vec<(VertexId, VertexId)>, GraphError> {
    if !g.has_edge(u, v) {
        return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
    }
    let mut pairs = Vec::new();
    let mut push = |x: VertexId, y: VertexId| {
        let pair = (x.min(y), x.max(y));
        if !pairs.contains(&pair) {
            pairs.push(pair);
        }
    };
    // Pairs {v, y} whose only common neighbour is u: the one path is v-u-y.
    for y in g.neighbors(u) {
        if y != v && sole_common_neighbor(g, v, y) == Some(u) {
            push(v, y);
        }
    }
    // Pairs {u, x} whose only common neighbour is v.
    for x in g.neighbors(v) {
        if x != u && sole_common_neighbor(g, u, x) == Some(v) {
            push(u, x);
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

fn sole_common_neighbor(g: &Graph, a: VertexId, b: VertexId) -> Option<VertexId> {
    let mut found = None;
    for (idx, (wa, wb)) in g.row(a).iter().zip(g.row(b)).enumerate() {
        let both = wa & wb;
        if both == 0 {
            continue;
        }
        if found.is_some() || both.count_ones() > 1 {
            return None;
        }
        found = Some(idx * 64 + both.trailing_zeros() as usize);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conflict_graph_of_p3() {
        let c = conflict_graph(&Graph::path(3));
        assert_eq!(c.conflicts.edges(), vec![(0, 2)]);
    }

    #[test]
    fn conflict_graph_of_k3() {
        let c = conflict_graph(&Graph::complete(3));
        assert_eq!(c.conflicts.size(), 3);
    }

    #[test]
    fn conflict_graph_of_star() {
        // Leaves pairwise share the center; the center conflicts with nobody.
        let c = conflict_graph(&Graph::star(4));
        assert_eq!(c.conflicts.degree(0), 0);
        for u in 1..=4 {
            assert_eq!(c.conflicts.degree(u), 3);
        }
    }

    #[test]
    fn girth_cases() {
        assert_eq!(girth(&Graph::complete(3)), Girth::Finite(3));
        assert_eq!(girth(&Graph::cycle(7)), Girth::Finite(7));
        assert_eq!(girth(&Graph::path(5)), Girth::Infinite);
        assert_eq!(girth(&Graph::star(6)), Girth::Infinite);
        // Two triangles sharing no vertex.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(girth(&g), Girth::Finite(3));
        assert_eq!(girth(&crate::families::prism(5)), Girth::Finite(4));
    }

    #[test]
    fn diameter_cases() {
        assert_eq!(diameter(&Graph::complete(4)), Diameter::Finite(1));
        assert_eq!(diameter(&Graph::path(4)), Diameter::Finite(3));
        assert_eq!(
            diameter(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()),
            Diameter::Infinite
        );
    }

    #[test]
    fn every_edge_on_triangle_cases() {
        assert!(every_edge_on_triangle(&Graph::complete(4)));
        assert!(!every_edge_on_triangle(&Graph::cycle(4)));
        assert!(every_edge_on_triangle(&Graph::empty(3)));
    }

    #[test]
    fn connectivity_cases() {
        assert!(vertex_connectivity_at_least(&Graph::complete(4), 3));
        assert!(!vertex_connectivity_at_least(&Graph::complete(4), 4));
        assert!(!vertex_connectivity_at_least(&Graph::path(3), 2));
        assert!(vertex_connectivity_at_least(&Graph::cycle(5), 2));
        assert!(!vertex_connectivity_at_least(&Graph::cycle(5), 3));
        assert!(vertex_connectivity_at_least(&crate::families::prism(6), 3));
        assert!(!vertex_connectivity_at_least(
            &Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
            1
        ));
    }

    #[test]
    fn connectivity_matches_brute_force_on_small_graphs() {
        // Every subset of < k vertices must fail to disconnect.
        let samples = [
            Graph::cycle(6),
            Graph::complete(5),
            Graph::path(6),
            Graph::star(5),
            crate::families::prism(4),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)])
                .unwrap(),
        ];
        for g in &samples {
            for k in 1..=4usize {
                assert_eq!(
                    vertex_connectivity_at_least(g, k),
                    crate::bruteforce::connectivity_at_least(g, k),
                    "graph {g:?} k={k}"
                );
            }
        }
    }

    #[test]
    fn unique_pairs_in_c4_are_empty() {
        // Both diagonal pairs of C4 have two length-2 paths, so neither has a
        // unique one through any fixed edge.
        let c4 = Graph::cycle(4);
        assert_eq!(unique_length2_path_pairs_through(&c4, 0, 1).unwrap(), vec![]);
    }

    #[test]
    fn unique_pairs_through_triangle_edge() {
        // In K3 with a pendant at vertex 2: pair {1, 2}'s only common
        // neighbour is 0, and pair {0, 2}'s only common neighbour is 1.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let pairs = unique_length2_path_pairs_through(&g, 0, 1).unwrap();
        assert_eq!(pairs, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn unique_pairs_missing_edge() {
        let g = Graph::path(3);
        assert!(unique_length2_path_pairs_through(&g, 0, 2).is_err());
    }
}

//! Brute-force reference computations used as independent oracles by the
//! test suites. Everything here favours obviousness over speed and shares no
//! search machinery with the production solvers.

use crate::graph::{Graph, VertexId};
use crate::metrics::conflicts_of;

/// Smallest `k` such that `g` admits a proper `k`-colouring, by plain
/// exhaustive assignment in vertex-index order.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        if try_color(g, k, 0, &mut colors) {
            return k;
        }
    }
    unreachable!("n colours always suffice")
}

fn try_color(g: &Graph, k: usize, v: VertexId, colors: &mut [usize]) -> bool {
    if v == g.order() {
        return true;
    }
    for c in 0..k {
        if g.neighbors(v).all(|u| colors[u] != c) {
            colors[v] = c;
            if try_color(g, k, v + 1, colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// Injective chromatic number as the chromatic number of the conflict graph,
/// with the colouring search done by [`chromatic_number`].
pub fn injective_chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    chromatic_number(&conflicts_of(g)).max(1)
}

/// `k`-connectivity by deleting every vertex subset of size `< k`.
pub fn connectivity_at_least(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k == 0 {
        return true;
    }
    if n <= k {
        return false;
    }
    assert!(n <= 24, "brute-force connectivity is for small graphs");
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= k {
            continue;
        }
        let keep: Vec<VertexId> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        if !g.induced_subgraph(&keep).is_connected() {
            return false;
        }
    }
    true
}

/// Kuratowski oracle: planar iff no K5 and no K3,3 subdivision. Exhaustive
/// over branch-vertex choices and interior-vertex assignments, exact for
/// `n <= 8` (where subdivision paths have at most 3 interior vertices).
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    assert!(n <= 8, "subdivision search oracle is for n <= 8");
    !has_k5_subdivision(g) && !has_k33_subdivision(g)
}

fn has_k5_subdivision(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 {
        return false;
    }
    let eligible: Vec<VertexId> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
    if eligible.len() < 5 {
        return false;
    }
    for branch in combinations(&eligible, 5) {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
            .collect();
        if subdivision_exists(g, &branch, &pairs) {
            return true;
        }
    }
    false
}

fn has_k33_subdivision(g: &Graph) -> bool {
    let n = g.order();
    if n < 6 {
        return false;
    }
    let eligible: Vec<VertexId> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    if eligible.len() < 6 {
        return false;
    }
    for branch in combinations(&eligible, 6) {
        // Split the six branch vertices into the two sides; fix vertex 0 on
        // the first side to kill the mirrored duplicates.
        for mask in 0u32..(1 << 5) {
            if mask.count_ones() != 2 {
                continue;
            }
            let mut side_a = vec![0usize];
            let mut side_b = Vec::new();
            for bit in 0..5 {
                if mask >> bit & 1 == 1 {
                    side_a.push(bit + 1);
                } else {
                    side_b.push(bit + 1);
                }
            }
            let pairs: Vec<(usize, usize)> = side_a
                .iter()
                .flat_map(|&i| side_b.iter().map(move |&j| (i, j)))
                .collect();
            if subdivision_exists(g, &branch, &pairs) {
                return true;
            }
        }
    }
    false
}

/// Do internally disjoint paths exist joining every required branch pair,
/// using only non-branch vertices as interiors?
fn subdivision_exists(g: &Graph, branch: &[VertexId], pairs: &[(usize, usize)]) -> bool {
    let missing: Vec<(VertexId, VertexId)> = pairs
        .iter()
        .map(|&(i, j)| (branch[i], branch[j]))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let spares: Vec<VertexId> = (0..g.order()).filter(|v| !branch.contains(v)).collect();
    if missing.is_empty() {
        return true;
    }
    if missing.len() > spares.len() {
        return false;
    }
    // Assign each spare either to one missing pair or to nothing, then check
    // that every missing pair is joined by a path through its assigned set.
    let mut assignment = vec![usize::MAX; spares.len()];
    assign_and_check(g, &missing, &spares, &mut assignment, 0)
}

fn assign_and_check(
    g: &Graph,
    missing: &[(VertexId, VertexId)],
    spares: &[VertexId],
    assignment: &mut [usize],
    idx: usize,
) -> bool {
    if idx == spares.len() {
        return missing.iter().enumerate().all(|(p, &(u, v))| {
            let interior: Vec<VertexId> = spares
                .iter()
                .zip(assignment.iter())
                .filter(|&(_, &a)| a == p)
                .map(|(&s, _)| s)
                .collect();
            path_through(g, u, v, &interior)
        });
    }
    for choice in (0..missing.len()).chain([usize::MAX]) {
        assignment[idx] = choice;
        if assign_and_check(g, missing, spares, assignment, idx + 1) {
            return true;
        }
    }
    false
}

/// Is there an ordering of `interior` forming a `u`-...-`v` path?
fn path_through(g: &Graph, u: VertexId, v: VertexId, interior: &[VertexId]) -> bool {
    if interior.is_empty() {
        return g.has_edge(u, v);
    }
    let mut order: Vec<VertexId> = interior.to_vec();
    permutations(&mut order, 0, &mut |perm| {
        let mut prev = u;
        for &s in perm.iter() {
            if !g.has_edge(prev, s) {
                return false;
            }
            prev = s;
        }
        g.has_edge(prev, v)
    })
}

fn permutations(items: &mut [VertexId], k: usize, check: &mut impl FnMut(&[VertexId]) -> bool) -> bool {
    if k == items.len() {
        return check(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permutations(items, k + 1, check) {
            items.swap(k, i);
            return true;
        }
        items.swap(k, i);
    }
    false
}

fn combinations(items: &[VertexId], k: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(items: &[VertexId], k: usize, start: usize, current: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            rec(items, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, k, 0, &mut current, &mut out);
    out
}

/// Counts connected isomorphism classes on `n` vertices by enumerating all
/// labelled graphs and deduplicating with certificates. Only sane for
/// `n <= 6`.
pub fn connected_class_count(n: usize) -> usize {
    assert!(n <= 6);
    let pair_count = n * (n - 1) / 2;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    for mask in 0u32..(1 << pair_count) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            seen.insert(crate::canon::canonical_certificate(&g));
        }
    }
    seen.len()
}

//! Exhaustive generation of pairwise non-isomorphic connected graphs at
//! small order by canonical augmentation: a new vertex is attached to every
//! nonempty subset of the current graph, and the child survives iff the new
//! vertex is a canonical deletion victim. Cross-parent duplicates are
//! impossible under that rule; same-parent duplicates are removed with a
//! local certificate set, so memory stays bounded by one parent's children.
//!
//! Filters: minimum degree applies to finished graphs only (parents may
//! temporarily have degree-1 vertices), edge caps prune hereditarily, and
//! planarity may prune whole subtrees since subgraphs of planar graphs are
//! planar.

use crate::canon::{canonical_certificate, canonical_certificate_marked, CanonicalForm};
use crate::graph::{Graph, VertexId};
use crate::metrics::vertex_connectivity_at_least;
use crate::planarity::is_planar;
use std::collections::HashSet;
use thiserror::Error;

/// Documented desk-scale ceiling; raise only with `allow_large`.
pub const DESK_SCALE_LIMIT: usize = 11;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("order {0} exceeds the supported ceiling {DESK_SCALE_LIMIT} (set allow_large to override)")]
    OrderTooLarge(usize),
    #[error("order must be at least 1")]
    EmptyOrder,
}

/// What to generate: connected graphs of the given order, optionally
/// constrained by minimum degree, edge count, connectivity and planarity.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub order: usize,
    pub min_degree: usize,
    pub max_edges: Option<usize>,
    pub connectivity_min: usize,
    pub planar_only: bool,
    pub allow_large: bool,
}

impl GenSpec {
    /// All connected graphs of the given order.
    pub fn connected(order: usize) -> GenSpec {
        GenSpec {
            order,
            min_degree: 0,
            max_edges: None,
            connectivity_min: 0,
            planar_only: false,
            allow_large: false,
        }
    }

    /// Connected planar candidates with minimum degree 2 and at most
    /// `3n - 6` edges.
    pub fn planar_candidates(order: usize) -> GenSpec {
        GenSpec {
            order,
            min_degree: 2,
            max_edges: Some(3 * order.saturating_sub(2)),
            connectivity_min: 0,
            planar_only: true,
            allow_large: false,
        }
    }

    fn validate(&self) -> Result<(), GenError> {
        if self.order == 0 {
            return Err(GenError::EmptyOrder);
        }
        if self.order > DESK_SCALE_LIMIT && !self.allow_large {
            return Err(GenError::OrderTooLarge(self.order));
        }
        Ok(())
    }
}

/// Runs `visit` on one representative per isomorphism class matching `spec`.
pub fn generate<F: FnMut(&Graph)>(spec: &GenSpec, visit: F) -> Result<(), GenError> {
    generate_split(spec, (0, 1), visit)
}

/// Work-split variant: worker `index` of `count` handles its residue class
/// of the final-level subtrees. The union over all workers equals a
/// single-threaded run, with no graph produced twice.
pub fn generate_split<F: FnMut(&Graph)>(
    spec: &GenSpec,
    (index, count): (usize, usize),
    mut visit: F,
) -> Result<(), GenError> {
    spec.validate()?;
    assert!(count >= 1 && index < count);
    let root = Graph::empty(1);
    let mut state = GenState {
        spec,
        split_level: spec.order.saturating_sub(1).max(1),
        split: (index, count),
        split_counter: 0,
        visit: &mut visit,
    };
    if spec.order == 1 {
        if state.passes_final(&root) {
            (state.visit)(&root);
        }
        return Ok(());
    }
    state.recurse(&root);
    Ok(())
}

/// Convenience: collect the generated graphs (small orders only).
pub fn generate_collect(spec: &GenSpec) -> Result<Vec<Graph>, GenError> {
    let mut out = Vec::new();
    generate(spec, |g| out.push(g.clone()))?;
    Ok(out)
}

/// Connected planar graphs of minimum degree 2 with at most `3n - 6` edges.
pub fn generate_planar_candidates<F: FnMut(&Graph)>(order: usize, visit: F) -> Result<(), GenError> {
    generate(&GenSpec::planar_candidates(order), visit)
}

struct GenState<'a, F: FnMut(&Graph)> {
    spec: &'a GenSpec,
    split_level: usize,
    split: (usize, usize),
    split_counter: u64,
    visit: &'a mut F,
}

impl<F: FnMut(&Graph)> GenState<'_, F> {
    fn passes_final(&self, g: &Graph) -> bool {
        if g.min_degree() < self.spec.min_degree {
            return false;
        }
        if let Some(cap) = self.spec.max_edges {
            if g.size() > cap {
                return false;
            }
        }
        if self.spec.connectivity_min > 1 && !vertex_connectivity_at_least(g, self.spec.connectivity_min)
        {
            return false;
        }
        if self.spec.planar_only && !is_planar(g) {
            return false;
        }
        true
    }

    fn recurse(&mut self, parent: &Graph) {
        let k = parent.order();
        // Split the final expansion level across workers.
        if k == self.split_level && self.split.1 > 1 {
            let mine = self.split_counter % self.split.1 as u64 == self.split.0 as u64;
            self.split_counter += 1;
            if !mine {
                return;
            }
        }
        let remaining_after_child = self.spec.order - k - 1;
        let mut seen_children: HashSet<CanonicalForm> = HashSet::new();
        for mask in 1u64..(1u64 << k) {
            if let Some(cap) = self.spec.max_edges {
                let child_edges = parent.size() + mask.count_ones() as usize;
                if child_edges + remaining_after_child > cap {
                    continue;
                }
            }
            let neighbors: Vec<VertexId> = (0..k).filter(|&v| mask >> v & 1 == 1).collect();
            let (child, newv) = parent.add_vertex(&neighbors).expect("indices in range");
            if self.spec.planar_only && !is_planar(&child) {
                continue;
            }
            if !new_vertex_is_canonical_victim(&child, newv) {
                continue;
            }
            if !seen_children.insert(canonical_certificate(&child)) {
                continue;
            }
            if child.order() == self.spec.order {
                if self.passes_final(&child) {
                    (self.visit)(&child);
                }
            } else {
                self.recurse(&child);
            }
        }
    }
}

/// Deletion victims are restricted to non-cut vertices so parents stay
/// connected; among them the victim orbit minimises (degree, sorted
/// neighbour degrees, marked certificate). The child is kept iff the new
/// vertex attains that minimum.
fn new_vertex_is_canonical_victim(child: &Graph, newv: VertexId) -> bool {
    let cuts = cut_vertices(child);
    let inv = |v: VertexId| -> (usize, Vec<usize>) {
        let mut nd: Vec<usize> = child.neighbors(v).map(|u| child.degree(u)).collect();
        nd.sort_unstable();
        (child.degree(v), nd)
    };
    let inv_new = inv(newv);
    let mut tied: Vec<VertexId> = Vec::new();
    for v in 0..child.order() {
        if v == newv || cuts[v] {
            continue;
        }
        match inv(v).cmp(&inv_new) {
            std::cmp::Ordering::Less => return false,
            std::cmp::Ordering::Equal => tied.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    if tied.is_empty() {
        return true;
    }
    let cert_new = canonical_certificate_marked(child, newv);
    tied.iter()
        .all(|&v| canonical_certificate_marked(child, v) >= cert_new)
}

/// Articulation vertices by Tarjan's low-link DFS.
fn cut_vertices(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let mut is_cut = vec![false; n];
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;

    fn dfs(
        g: &Graph,
        v: VertexId,
        parent: Option<VertexId>,
        timer: &mut usize,
        disc: &mut [usize],
        low: &mut [usize],
        is_cut: &mut [bool],
    ) {
        disc[v] = *timer;
        low[v] = *timer;
        *timer += 1;
        let mut children = 0;
        for u in g.neighbors(v) {
            if disc[u] == usize::MAX {
                children += 1;
                dfs(g, u, Some(v), timer, disc, low, is_cut);
                low[v] = low[v].min(low[u]);
                if parent.is_some() && low[u] >= disc[v] {
                    is_cut[v] = true;
                }
            } else if Some(u) != parent {
                low[v] = low[v].min(disc[u]);
            }
        }
        if parent.is_none() && children > 1 {
            is_cut[v] = true;
        }
    }

    for root in 0..n {
        if disc[root] == usize::MAX {
            dfs(g, root, None, &mut timer, &mut disc, &mut low, &mut is_cut);
        }
    }
    is_cut
}

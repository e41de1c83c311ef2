//! Independent exact chromatic-number solver used to cross-validate the
//! injective solver: the injective chromatic number of a graph equals the
//! chromatic number of its conflict graph, so agreement between the two
//! engines checks both.
//!
//! Deliberately shares no search code with the injective solver: vertices are
//! coloured in a fixed degree-descending order and k-colourability is decided
//! by plain backtracking for increasing k.

use crate::graph::{Graph, VertexId};
use crate::metrics::conflicts_of;
use crate::solver::Coloring;

#[derive(Debug, Clone)]
pub struct ChromaResult {
    pub chi: u32,
    pub witness: Coloring,
}

/// Exact chromatic number with a proper-colouring witness.
pub fn chromatic_number(g: &Graph) -> ChromaResult {
    let n = g.order();
    if n == 0 {
        return ChromaResult {
            chi: 0,
            witness: Coloring { colors: vec![], k: 0 },
        };
    }
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for k in 1..=n as u32 {
        let mut colors = vec![u32::MAX; n];
        if color_next(g, &order, 0, k, 0, &mut colors) {
            let witness = Coloring { colors, k };
            debug_assert!(is_proper(g, &witness));
            return ChromaResult { chi: k, witness };
        }
    }
    unreachable!("n colours always suffice");
}

fn color_next(
    g: &Graph,
    order: &[VertexId],
    idx: usize,
    k: u32,
    max_used: u32,
    colors: &mut [u32],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    // Used colours plus the first fresh one; higher fresh colours are
    // symmetric to it.
    let ceiling = (max_used + 1).min(k);
    for c in 0..ceiling {
        if g.neighbors(v).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_next(g, order, idx + 1, k, max_used.max(c + 1), colors) {
            return true;
        }
        colors[v] = u32::MAX;
    }
    false
}

fn is_proper(g: &Graph, c: &Coloring) -> bool {
    c.check_total(g).is_ok() && g.edges().iter().all(|&(u, v)| c.colors[u] != c.colors[v])
}

/// Injective chromatic number via the conflict graph and the independent
/// chromatic solver.
pub fn injective_via_oracle(g: &Graph) -> u32 {
    if g.order() == 0 {
        return 0;
    }
    chromatic_number(&conflicts_of(g)).chi.max(1)
}

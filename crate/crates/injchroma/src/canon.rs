//! Isomorphism certificates via colour refinement plus backtracking over the
//! residual choices. Two graphs have equal certificates iff they are
//! isomorphic; a marked variant answers "are these two vertices in the same
//! automorphism orbit" questions for the generator's canonical-deletion test.

use crate::graph::{Graph, VertexId};

/// Canonical labelling output: order plus the upper-triangle bit packing of
/// the canonically relabelled adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub bytes: Vec<u8>,
}

/// Certificate of the plain graph.
pub fn canonical_certificate(g: &Graph) -> CanonicalForm {
    canonical_with_colors(g, &vec![0; g.order()])
}

/// Certificate of the graph with one distinguished vertex. Equal results for
/// `(g, u)` and `(g, v)` mean an automorphism maps `u` to `v`.
pub fn canonical_certificate_marked(g: &Graph, mark: VertexId) -> CanonicalForm {
    let mut colors = vec![0u32; g.order()];
    colors[mark] = 1;
    canonical_with_colors(g, &colors)
}

fn canonical_with_colors(g: &Graph, initial: &[u32]) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm { n: 0, bytes: Vec::new() };
    }
    let mut search = CanonSearch {
        g,
        best: None,
        scratch: vec![0u32; n],
    };
    let mut colors = initial.to_vec();
    search.refine(&mut colors);
    search.descend(colors);
    CanonicalForm {
        n,
        bytes: search.best.expect("at least one leaf"),
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Option<Vec<u8>>,
    scratch: Vec<u32>,
}

impl CanonSearch<'_> {
    /// Iterated neighbourhood refinement: recolour by (colour, sorted
    /// neighbour-colour multiset) until stable. Colour values are ranks, so
    /// the result is isomorphism-invariant.
    fn refine(&mut self, colors: &mut [u32]) {
        let n = self.g.order();
        loop {
            let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
                .map(|v| {
                    let mut neigh: Vec<u32> = self.g.neighbors(v).map(|u| colors[u]).collect();
                    neigh.sort_unstable();
                    (colors[v], neigh, v)
                })
                .collect();
            sigs.sort();
            let mut changed = false;
            let mut rank = 0u32;
            for i in 0..n {
                if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                    rank += 1;
                }
                self.scratch[sigs[i].2] = rank;
            }
            for v in 0..n {
                if colors[v] != self.scratch[v] {
                    changed = true;
                }
                colors[v] = self.scratch[v];
            }
            if !changed {
                return;
            }
        }
    }

    fn descend(&mut self, colors: Vec<u32>) {
        let n = self.g.order();
        // Locate the first non-singleton colour class.
        let mut count = vec![0usize; n];
        for &c in &colors {
            count[c as usize] += 1;
        }
        let target = (0..n).map(|c| c as u32).find(|&c| count[c as usize] > 1);
        let Some(cell_color) = target else {
            // Discrete colouring: colours are a permutation, emit the leaf.
            let mut position = vec![0usize; n];
            for v in 0..n {
                position[v] = colors[v] as usize;
            }
            let encoded = encode(self.g, &position);
            match &self.best {
                Some(best) if *best <= encoded => {}
                _ => self.best = Some(encoded),
            }
            return;
        };
        let cell: Vec<VertexId> = (0..n).filter(|&v| colors[v] == cell_color).collect();
        // Twins inside the cell are interchangeable by an automorphism;
        // individualising one representative per twin class suffices.
        let mut reps: Vec<VertexId> = Vec::new();
        'cand: for &v in &cell {
            for &r in &reps {
                if self.twins(r, v) {
                    continue 'cand;
                }
            }
            reps.push(v);
        }
        for v in reps {
            let mut child: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
            child[v] = 2 * cell_color;
            self.refine(&mut child);
            self.descend(child);
        }
    }

    fn twins(&self, u: VertexId, v: VertexId) -> bool {
        let words = self.g.row(u).len();
        for w in 0..words {
            let mut a = self.g.row(u)[w];
            let mut b = self.g.row(v)[w];
            if u / 64 == w {
                a &= !(1 << (u % 64));
                b &= !(1 << (u % 64));
            }
            if v / 64 == w {
                a &= !(1 << (v % 64));
                b &= !(1 << (v % 64));
            }
            if a != b {
                return false;
            }
        }
        true
    }
}

/// Upper-triangle bits of the relabelled adjacency matrix, row-major over
/// new labels, packed MSB-first.
fn encode(g: &Graph, position: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut old_at = vec![0usize; n];
    for (old, &pos) in position.iter().enumerate() {
        old_at[pos] = old;
    }
    let bits = n * (n - 1) / 2;
    let mut out = vec![0u8; bits.div_ceil(8)];
    let mut idx = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(old_at[i], old_at[j]) {
                out[idx / 8] |= 0x80 >> (idx % 8);
            }
            idx += 1;
        }
    }
    out
}

//! Exact injective chromatic number by branch and bound over the conflict
//! graph.
//!
//! The search pre-colours the neighbours of one maximum-degree vertex (they
//! pairwise conflict, so distinct colours are forced), then repeatedly
//! colours an uncoloured vertex with the most distinct colours among its
//! conflict neighbours, trying every feasible used colour plus one fresh
//! colour, and prunes any branch that reaches the colour count of the best
//! complete colouring found so far. All tie-breaks are fixed, so identical
//! inputs give identical witnesses and node counts.

use crate::graph::{Graph, VertexId};
use crate::metrics::conflicts_of;
use std::time::{Duration, Instant};
use thiserror::Error;

const UNCOLORED: u32 = u32::MAX;

/// Total vertex-to-colour assignment with colours in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<u32>,
    pub k: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("colouring covers {got} vertices, graph has {want}")]
    WrongLength { got: usize, want: usize },
    #[error("vertex {vertex} has colour {color} outside 0..{k}")]
    ColorOutOfRange { vertex: VertexId, color: u32, k: u32 },
}

impl Coloring {
    pub fn check_total(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.order() {
            return Err(ColoringError::WrongLength {
                got: self.colors.len(),
                want: g.order(),
            });
        }
        for (vertex, &color) in self.colors.iter().enumerate() {
            if color >= self.k {
                return Err(ColoringError::ColorOutOfRange {
                    vertex,
                    color,
                    k: self.k,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub prunes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub chi_i: u32,
    pub witness: Coloring,
    pub stats: SolveStats,
}

/// Bracketing information reported when a node budget runs out.
#[derive(Debug, Clone)]
pub struct Bounds {
    pub lower: u32,
    pub upper: u32,
    pub best: Coloring,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("node budget exhausted: chi_i in {}..={}", bounds.lower, bounds.upper)]
    BudgetExhausted { bounds: Bounds },
}

/// True iff no two vertices with a common neighbour share a colour.
pub fn verify_injective(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    c.check_total(g)?;
    for u in 0..g.order() {
        for v in (u + 1)..g.order() {
            if c.colors[u] == c.colors[v] && g.have_common_neighbor(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Greedy clique in the conflict graph, seeded at each vertex in turn; the
/// neighbourhood of a maximum-degree vertex is such a clique, so the result
/// is at least `max_degree(g)`. Never exceeds the injective chromatic number.
pub fn lower_bound(g: &Graph) -> u32 {
    if g.order() == 0 {
        return 0;
    }
    let conf = conflicts_of(g);
    lower_bound_on_conflicts(g, &conf)
}

fn lower_bound_on_conflicts(g: &Graph, conf: &Graph) -> u32 {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut best = g.max_degree().max(1);
    for seed in 0..n {
        if (conf.degree(seed) + 1) <= best {
            continue;
        }
        let mut clique_len = 1usize;
        let mut candidates: Vec<VertexId> = conf.neighbors(seed).collect();
        while !candidates.is_empty() {
            let &next = candidates
                .iter()
                .max_by_key(|&&v| (conf.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            clique_len += 1;
            candidates.retain(|&v| v != next && conf.has_edge(v, next));
        }
        best = best.max(clique_len);
    }
    best as u32
}

/// Degree-descending greedy colouring of the conflict graph; the resulting
/// colour count seeds the branch-and-bound incumbent.
pub fn greedy_upper_bound(g: &Graph) -> (u32, Coloring) {
    let conf = conflicts_of(g);
    greedy_on_conflicts(g.order(), &conf)
}

fn greedy_on_conflicts(n: usize, conf: &Graph) -> (u32, Coloring) {
    if n == 0 {
        return (0, Coloring { colors: vec![], k: 0 });
    }
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(conf.degree(v)), v));
    let mut colors = vec![UNCOLORED; n];
    let mut used = 0u32;
    for v in order {
        let mut taken = vec![false; used as usize + 1];
        for u in conf.neighbors(v) {
            if colors[u] != UNCOLORED {
                taken[colors[u] as usize] = true;
            }
        }
        let c = (0..=used).find(|&c| !taken[c as usize]).unwrap();
        colors[v] = c;
        used = used.max(c + 1);
    }
    let used = used.max(1);
    (used, Coloring { colors, k: used })
}

/// Exact injective chromatic number with a witness.
pub fn injective_chromatic_number(g: &Graph) -> SolveResult {
    injective_chromatic_number_budgeted(g, None).expect("unbudgeted solve cannot be cut off")
}

/// As [`injective_chromatic_number`], but giving up after `budget` search
/// nodes and reporting the bracket proven so far.
pub fn injective_chromatic_number_budgeted(
    g: &Graph,
    budget: Option<u64>,
) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let n = g.order();
    if n == 0 {
        return Ok(SolveResult {
            chi_i: 0,
            witness: Coloring { colors: vec![], k: 0 },
            stats: SolveStats {
                elapsed: start.elapsed(),
                ..Default::default()
            },
        });
    }
    let conf = conflicts_of(g);
    let lower = lower_bound_on_conflicts(g, &conf);
    let (greedy_k, greedy) = greedy_on_conflicts(n, &conf);
    let mut search = Search::new(g, &conf, budget, Mode::Optimize);
    search.incumbent_k = greedy_k;
    search.incumbent = greedy.colors;
    if lower < greedy_k {
        search.run();
        if search.budget_hit {
            return Err(SolveError::BudgetExhausted {
                bounds: Bounds {
                    lower,
                    upper: search.incumbent_k,
                    best: Coloring {
                        colors: search.incumbent,
                        k: search.incumbent_k,
                    },
                },
            });
        }
    }
    let witness = Coloring {
        colors: search.incumbent,
        k: search.incumbent_k,
    };
    debug_assert_eq!(verify_injective(g, &witness), Ok(true));
    Ok(SolveResult {
        chi_i: search.incumbent_k,
        witness,
        stats: SolveStats {
            nodes: search.nodes,
            prunes: search.prunes,
            elapsed: start.elapsed(),
        },
    })
}

/// Witness of an injective `k`-colouring if one exists.
pub fn injective_k_colorable(g: &Graph, k: u32) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring { colors: vec![], k });
    }
    if k == 0 || (g.max_degree() as u32) > k {
        return None;
    }
    let conf = conflicts_of(g);
    let (greedy_k, greedy) = greedy_on_conflicts(n, &conf);
    if greedy_k <= k {
        return Some(Coloring { colors: greedy.colors, k });
    }
    let mut search = Search::new(g, &conf, None, Mode::Decide);
    // Colours above k are never opened: fresh colours require used < k.
    search.incumbent_k = k + 1;
    search.run();
    search.solution.map(|colors| {
        let witness = Coloring { colors, k };
        debug_assert_eq!(verify_injective(g, &witness), Ok(true));
        witness
    })
}

#[derive(PartialEq)]
enum Mode {
    Optimize,
    Decide,
}

struct Search<'a> {
    conf: &'a Graph,
    n: usize,
    words: usize,
    colors: Vec<u32>,
    /// Per-vertex bitmask of colours present among coloured conflict
    /// neighbours, `words` words per vertex.
    sat: Vec<u64>,
    sat_count: Vec<u32>,
    conf_degree: Vec<u32>,
    uncolored: usize,
    used: u32,
    incumbent_k: u32,
    incumbent: Vec<u32>,
    mode: Mode,
    solution: Option<Vec<u32>>,
    nodes: u64,
    prunes: u64,
    budget: Option<u64>,
    budget_hit: bool,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, conf: &'a Graph, budget: Option<u64>, mode: Mode) -> Search<'a> {
        let n = g.order();
        let words = conf.words().max(1);
        let mut s = Search {
            conf,
            n,
            words,
            colors: vec![UNCOLORED; n],
            sat: vec![0; n * words],
            sat_count: vec![0; n],
            conf_degree: (0..n).map(|v| conf.degree(v) as u32).collect(),
            uncolored: n,
            used: 0,
            incumbent_k: u32::MAX,
            incumbent: Vec::new(),
            mode,
            solution: None,
            nodes: 0,
            prunes: 0,
            budget,
            budget_hit: false,
        };
        s.precolor(g);
        s
    }

    /// Symmetry breaking: the neighbours of the lowest-indexed maximum-degree
    /// vertex pairwise conflict, so colours 0..d-1 can be fixed on them in
    /// index order. Vertices without any conflicts take colour 0 outright.
    fn precolor(&mut self, g: &Graph) {
        let delta = g.max_degree();
        if delta > 0 {
            let hub = (0..self.n).find(|&v| g.degree(v) == delta).unwrap();
            for (i, v) in g.neighbors(hub).enumerate() {
                self.assign(v, i as u32);
            }
        }
        for v in 0..self.n {
            if self.colors[v] == UNCOLORED && self.conf_degree[v] == 0 {
                self.assign(v, 0);
            }
        }
    }

    fn assign(&mut self, v: VertexId, c: u32) {
        debug_assert_eq!(self.colors[v], UNCOLORED);
        self.colors[v] = c;
        self.uncolored -= 1;
        self.used = self.used.max(c + 1);
        let (word, bit) = (c as usize / 64, c as usize % 64);
        for u in self.conf.neighbors(v) {
            let slot = u * self.words + word;
            if self.sat[slot] >> bit & 1 == 0 {
                self.sat[slot] |= 1 << bit;
                self.sat_count[u] += 1;
            }
        }
    }

    fn record_complete(&mut self) {
        match self.mode {
            Mode::Decide => self.solution = Some(self.colors.clone()),
            Mode::Optimize => {
                self.incumbent_k = self.used.max(1);
                self.incumbent = self.colors.clone();
            }
        }
    }

    fn run(&mut self) {
        if self.uncolored == 0 {
            // Everything was forced by pre-colouring.
            if self.used < self.incumbent_k {
                self.record_complete();
            }
            return;
        }
        self.dfs();
    }

    /// Returns false when the node budget was hit (abort the whole search).
    fn dfs(&mut self) -> bool {
        if let Some(b) = self.budget {
            if self.nodes >= b {
                self.budget_hit = true;
                return false;
            }
        }
        self.nodes += 1;
        if self.used >= self.incumbent_k {
            self.prunes += 1;
            return true;
        }

        // Branch vertex: maximum injective saturation, then larger conflict
        // degree, then smaller index.
        let mut v = usize::MAX;
        let mut vkey = (0u32, 0u32);
        for u in 0..self.n {
            if self.colors[u] != UNCOLORED {
                continue;
            }
            let key = (self.sat_count[u], self.conf_degree[u]);
            if v == usize::MAX || key > vkey {
                v = u;
                vkey = key;
            }
        }
        debug_assert_ne!(v, usize::MAX);

        let prev_used = self.used;
        for c in 0..=prev_used {
            if c == prev_used {
                // One fresh colour, only while staying under the incumbent.
                if prev_used + 1 >= self.incumbent_k {
                    self.prunes += 1;
                    break;
                }
            }
            let (word, bit) = (c as usize / 64, c as usize % 64);
            if self.sat[v * self.words + word] >> bit & 1 == 1 {
                continue;
            }
            let touched = self.push(v, c);
            let mut aborted = false;
            if self.uncolored == 0 {
                self.record_complete();
            } else {
                aborted = !self.dfs();
            }
            self.pop(v, c, touched, prev_used);
            if aborted {
                return false;
            }
            if self.mode == Mode::Decide && self.solution.is_some() {
                return true;
            }
        }
        true
    }

    fn push(&mut self, v: VertexId, c: u32) -> Vec<VertexId> {
        self.colors[v] = c;
        self.uncolored -= 1;
        self.used = self.used.max(c + 1);
        let (word, bit) = (c as usize / 64, c as usize % 64);
        let mut touched = Vec::new();
        for u in self.conf.neighbors(v) {
            if self.colors[u] != UNCOLORED {
                continue;
            }
            let slot = u * self.words + word;
            if self.sat[slot] >> bit & 1 == 0 {
                self.sat[slot] |= 1 << bit;
                self.sat_count[u] += 1;
                touched.push(u);
            }
        }
        touched
    }

    fn pop(&mut self, v: VertexId, c: u32, touched: Vec<VertexId>, prev_used: u32) {
        let (word, bit) = (c as usize / 64, c as usize % 64);
        for u in touched {
            self.sat[u * self.words + word] &= !(1 << bit);
            self.sat_count[u] -= 1;
        }
        self.colors[v] = UNCOLORED;
        self.uncolored += 1;
        self.used = prev_used;
    }
}

//! Property suites: structural invariants under random edit sequences,
//! codec round trips, solver monotonicity and the pendant-vertex relation,
//! and agreement of the fast invariant algorithms with brute-force oracles.

use injchroma::bruteforce;
use injchroma::graph6::{parse_graph6, write_graph6};
use injchroma::metrics;
use injchroma::planarity::is_planar;
use injchroma::smallgen::{generate, GenSpec};
use injchroma::solver;
use injchroma::Graph;
use proptest::prelude::*;

fn arb_graph(max_n: usize, edge_pct: u8) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0..100u8, pairs).prop_map(move |coins| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if coins[idx] < edge_pct {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

#[derive(Debug, Clone)]
enum Edit {
    AddEdge(usize, usize),
    DeleteEdge(usize, usize),
    Subdivide(usize, usize),
    DeleteVertex(usize),
}

fn arb_edits(len: usize) -> impl Strategy<Value = Vec<(u8, usize, usize)>> {
    proptest::collection::vec((0..4u8, 0..16usize, 0..16usize), 0..len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Symmetry and irreflexivity survive arbitrary edit sequences, and
    /// subdivision/deletion change order and size as stated.
    #[test]
    fn edits_preserve_structural_invariants(g in arb_graph(9, 40), ops in arb_edits(12)) {
        let mut g = g;
        for (kind, a, b) in ops {
            let n = g.order();
            if n == 0 { break; }
            let (u, v) = (a % n, b % n);
            let edit = match kind {
                0 => Edit::AddEdge(u, v),
                1 => Edit::DeleteEdge(u, v),
                2 => Edit::Subdivide(u, v),
                _ => Edit::DeleteVertex(u),
            };
            let prev_order = g.order();
            let prev_size = g.size();
            match edit {
                Edit::AddEdge(u, v) => {
                    if let Ok(h) = g.add_edge(u, v) {
                        prop_assert_eq!(h.size(), prev_size + 1);
                        g = h;
                    }
                }
                Edit::DeleteEdge(u, v) => {
                    if let Ok(h) = g.delete_edge(u, v) {
                        prop_assert_eq!(h.size(), prev_size - 1);
                        g = h;
                    }
                }
                Edit::Subdivide(u, v) => {
                    if let Ok((h, fresh)) = g.subdivide_edge(u, v) {
                        prop_assert_eq!(h.order(), prev_order + 1);
                        prop_assert_eq!(h.size(), prev_size + 1);
                        prop_assert_eq!(h.degree(fresh), 2);
                        g = h;
                    }
                }
                Edit::DeleteVertex(u) => {
                    if let Ok(h) = g.delete_vertex(u) {
                        prop_assert_eq!(h.order(), prev_order - 1);
                        // Surviving adjacencies are preserved under the
                        // index-shift map.
                        let map = |x: usize| if x > u { x - 1 } else { x };
                        for x in 0..g.order() {
                            for y in (x + 1)..g.order() {
                                if x != u && y != u {
                                    prop_assert_eq!(h.has_edge(map(x), map(y)), g.has_edge(x, y));
                                }
                            }
                        }
                        g = h;
                    }
                }
            }
            // Symmetric, irreflexive adjacency after every edit.
            for x in 0..g.order() {
                prop_assert!(!g.has_edge(x, x));
                for y in 0..g.order() {
                    prop_assert_eq!(g.has_edge(x, y), g.has_edge(y, x));
                }
            }
        }
    }

    #[test]
    fn graph6_round_trip_is_identity(g in arb_graph(62, 30)) {
        let encoded = write_graph6(&g);
        prop_assert!(encoded.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&encoded).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip_is_identity(g in arb_graph(20, 40)) {
        let back = Graph::from_edges(g.order(), &g.edges()).unwrap();
        prop_assert_eq!(back, g);
    }

    /// Deleting an edge can only shrink the conflict graph.
    #[test]
    fn chi_i_monotone_under_edge_deletion(g in arb_graph(12, 35)) {
        let chi = solver::injective_chromatic_number(&g).chi_i;
        if let Some(&(u, v)) = g.edges().first() {
            let smaller = g.delete_edge(u, v).unwrap();
            prop_assert!(solver::injective_chromatic_number(&smaller).chi_i <= chi);
        }
    }

    /// Removing a pendant vertex drops the injective chromatic number by at
    /// most one.
    #[test]
    fn pendant_removal_relation(g in arb_graph(11, 30), extra in 0..11usize) {
        // Attach a pendant to force the shape under test.
        let anchor = extra % g.order();
        let (with_pendant, w) = g.add_vertex(&[anchor]).unwrap();
        let chi = solver::injective_chromatic_number(&with_pendant).chi_i;
        let without = with_pendant.delete_vertex(w).unwrap();
        let chi_without = solver::injective_chromatic_number(&without).chi_i;
        prop_assert!(chi_without >= chi.saturating_sub(1),
            "chi(G-w)={chi_without} < chi(G)-1={}", chi - 1);
    }

    /// The greedy bounds always bracket the exact value.
    #[test]
    fn bounds_bracket(g in arb_graph(10, 40)) {
        let lb = solver::lower_bound(&g);
        let (ub, witness) = solver::greedy_upper_bound(&g);
        let chi = solver::injective_chromatic_number(&g).chi_i;
        prop_assert!(lb <= chi && chi <= ub);
        prop_assert_eq!(solver::verify_injective(&g, &witness), Ok(true));
    }

    /// The left-right test agrees with the Kuratowski-subdivision oracle.
    #[test]
    fn planarity_matches_subdivision_oracle(g in arb_graph(8, 55)) {
        prop_assert_eq!(is_planar(&g), bruteforce::is_planar(&g));
    }

    /// Conflict edges are exactly the pairs with a common neighbour found by
    /// direct triple enumeration.
    #[test]
    fn conflict_graph_matches_triple_enumeration(g in arb_graph(7, 45)) {
        let conf = metrics::conflict_graph(&g).conflicts;
        let n = g.order();
        for u in 0..n {
            for v in (u + 1)..n {
                let direct = (0..n).any(|w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w));
                prop_assert_eq!(conf.has_edge(u, v), direct);
            }
        }
    }

    /// Girth is finite exactly when the graph has a cycle, i.e. when
    /// m >= n - components + 1.
    #[test]
    fn girth_finite_iff_cyclic(g in arb_graph(10, 30)) {
        let cyclic = g.size() >= g.order() - g.component_count() + 1;
        prop_assert_eq!(matches!(metrics::girth(&g), metrics::Girth::Finite(_)), cyclic);
    }

    #[test]
    fn connectivity_matches_brute_force(g in arb_graph(9, 45), k in 1..5usize) {
        prop_assert_eq!(
            metrics::vertex_connectivity_at_least(&g, k),
            bruteforce::connectivity_at_least(&g, k)
        );
    }
}

/// Exhaustive cross-checks on every connected graph of order <= 6.
#[test]
fn exhaustive_small_order_agreement() {
    for n in 1..=6 {
        generate(&GenSpec::connected(n), |g| {
            assert_eq!(is_planar(g), bruteforce::is_planar(g), "{g:?}");
            let chi = solver::injective_chromatic_number(g).chi_i;
            assert_eq!(chi as usize, bruteforce::injective_chromatic_number(g), "{g:?}");
            assert_eq!(injchroma::oracle::injective_via_oracle(g), chi, "{g:?}");
        })
        .unwrap();
    }
}

/// A graph with more than 3n - 6 edges is never planar (n >= 3): the quick
/// rejection can only ever agree with the full test.
#[test]
fn euler_bound_never_contradicted() {
    let mut checked = 0;
    generate(&GenSpec::connected(6), |g| {
        if g.order() >= 3 && g.size() > 3 * g.order() - 6 {
            assert!(!is_planar(g));
            checked += 1;
        }
    })
    .unwrap();
    assert!(checked > 0);
}

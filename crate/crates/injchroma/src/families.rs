//! Constructive generators for the graph families behind the sharpness
//! results, plus the fixture store of transcribed base graphs.
//!
//! Fixture graphs ship as graph6 both embedded here and as files under
//! `fixtures/`, with a manifest recording their expected invariants; tests
//! re-derive every invariant from scratch.

use crate::graph::{Graph, GraphError, VertexId};
use crate::graph6;
use serde::Deserialize;
use std::collections::BTreeMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture `{name}` is corrupt: {source}")]
    FixtureDecode {
        name: String,
        #[source]
        source: graph6::Graph6Error,
    },
    #[error("{what} = {value} out of domain: {requirement}")]
    OutOfDomain {
        what: &'static str,
        value: usize,
        requirement: &'static str,
    },
    #[error("required mark `{0}` missing")]
    MissingMark(String),
    #[error("marks {0}, {1}, {2} do not span a triangle")]
    NotATriangle(VertexId, VertexId, VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph together with named distinguished vertices.
#[derive(Debug, Clone)]
pub struct MarkedGraph {
    pub graph: Graph,
    pub marks: BTreeMap<String, VertexId>,
}

impl MarkedGraph {
    pub fn mark(&self, name: &str) -> Result<VertexId, FamilyError> {
        self.marks
            .get(name)
            .copied()
            .ok_or_else(|| FamilyError::MissingMark(name.to_string()))
    }
}

/// One manifest entry: the fixture's graph6 line doubles as its checksum.
#[derive(Debug, Clone, Deserialize)]
pub struct FixtureInfo {
    pub name: String,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub max_degree: usize,
    pub girth: usize,
    pub chi_i: u32,
    #[serde(default)]
    pub marks: BTreeMap<String, VertexId>,
    pub role: String,
    #[serde(default)]
    pub hog_id: Option<u64>,
}

const MANIFEST_JSON: &str = include_str!("../fixtures/manifest.json");

/// The embedded fixture manifest.
pub fn manifest() -> &'static [FixtureInfo] {
    static CACHE: OnceLock<Vec<FixtureInfo>> = OnceLock::new();
    CACHE.get_or_init(|| serde_json::from_str(MANIFEST_JSON).expect("embedded manifest parses"))
}

/// Loads a named fixture with its marks.
pub fn fixture(name: &str) -> Result<MarkedGraph, FamilyError> {
    let info = manifest()
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| FamilyError::UnknownFixture(name.to_string()))?;
    let graph = graph6::parse_graph6(&info.graph6).map_err(|source| FamilyError::FixtureDecode {
        name: name.to_string(),
        source,
    })?;
    Ok(MarkedGraph {
        graph,
        marks: info.marks.clone(),
    })
}

fn dedup_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut set = std::collections::BTreeSet::new();
    for (u, v) in edges {
        set.insert((u.min(v), u.max(v)));
    }
    let list: Vec<_> = set.into_iter().collect();
    Graph::from_edges(n, &list).expect("constructed edge lists are simple")
}

/// Member `i` of the maximum-degree-4 family: each step replaces the current
/// outer triangle `v0 v1 v2` by a fresh triangle joined crosswise to the old
/// vertices. Order grows by 3 per step; the injective chromatic number stays
/// 8.
pub fn family_g4(i: usize) -> MarkedGraph {
    let mut member = fixture("g4_0").expect("g4_0 fixture present");
    for _ in 0..i {
        member = g4_step(&member);
    }
    member
}

fn g4_step(m: &MarkedGraph) -> MarkedGraph {
    let g = &m.graph;
    let (v0, v1, v2) = (m.marks["v0"], m.marks["v1"], m.marks["v2"]);
    let base = g.order();
    let (n0, n1, n2) = (base, base + 1, base + 2);
    let mut edges = g.edges();
    edges.retain(|&(a, b)| {
        let old = [v0, v1, v2];
        !(old.contains(&a) && old.contains(&b))
    });
    edges.extend([
        (n0, n1),
        (n1, n2),
        (n2, n0),
        (n0, v1),
        (n0, v2),
        (n1, v0),
        (n1, v2),
        (n2, v0),
        (n2, v1),
    ]);
    let graph = dedup_edges(base + 3, edges);
    let marks = BTreeMap::from([
        ("v0".to_string(), n0),
        ("v1".to_string(), n1),
        ("v2".to_string(), n2),
    ]);
    MarkedGraph { graph, marks }
}

/// Member of the triangle-subdivision family after `steps` half-steps on a
/// base with marks `u`, `v`, `w` (edge `uv` on the facial triangle `uvw`).
///
/// An odd half-step subdivides the tracked edge `v0-v1` with a fresh vertex
/// and ties it to `v2`; the following even half-step subdivides again, ties
/// to `v2`, and rotates the tracked triangle. Each half-step adds exactly one
/// vertex and preserves maximum degree, planarity, 3-connectivity and the
/// injective chromatic number.
pub fn h_family(base: &MarkedGraph, steps: usize) -> Result<MarkedGraph, FamilyError> {
    let u = base.mark("u")?;
    let v = base.mark("v")?;
    let w = base.mark("w")?;
    let g0 = &base.graph;
    if !(g0.has_edge(u, v) && g0.has_edge(u, w) && g0.has_edge(v, w)) {
        return Err(FamilyError::NotATriangle(u, v, w));
    }
    let (mut a, mut b, mut c) = (u, v, w);
    let mut g = g0.clone();
    let mut pending = usize::MAX;
    for s in 1..=steps {
        if s % 2 == 1 {
            let (next, z) = g.subdivide_edge(a, b)?;
            g = next.add_edge(c, z)?;
            pending = z;
        } else {
            let z = pending;
            let (next, y) = g.subdivide_edge(z, b)?;
            g = next.add_edge(c, y)?;
            (a, b, c) = (c, y, z);
        }
    }
    // After an even number of half-steps the tracked triangle is a valid
    // starting point again, so those members carry chainable u/v/w marks.
    let marks = if steps % 2 == 0 {
        BTreeMap::from([
            ("u".to_string(), a),
            ("v".to_string(), b),
            ("w".to_string(), c),
        ])
    } else {
        BTreeMap::from([
            ("v0".to_string(), a),
            ("v1".to_string(), b),
            ("v2".to_string(), c),
            ("subdivision".to_string(), pending),
        ])
    };
    Ok(MarkedGraph { graph: g, marks })
}

/// Diameter-2 base of maximum degree `delta >= 8` and order
/// `floor(3*delta/2) + 1`: three paths `a_1..a_k`, `b_1..b_k`, `c_1..c_m`
/// whose first vertices act as hubs (fans attach to two hubs each), finished
/// with a corner triangle `a_k b_k c_m` that makes the graph 3-connected.
/// Every pair of vertices shares a common neighbour, so the injective
/// chromatic number equals the order.
pub fn ls_base(delta: usize) -> Result<MarkedGraph, FamilyError> {
    if delta < 8 {
        return Err(FamilyError::OutOfDomain {
            what: "delta",
            value: delta,
            requirement: "the diameter-2 construction needs delta >= 8",
        });
    }
    let k = delta / 2;
    let m = if delta % 2 == 0 { k + 1 } else { k + 2 };
    let a = |i: usize| i - 1; // a_i, 1-based
    let b = |i: usize| k + i - 1;
    let c = |i: usize| 2 * k + i - 1;
    let n = 2 * k + m;
    let mut edges = vec![(a(1), b(1)), (b(1), c(1))];
    for i in 2..=k {
        edges.push((a(i), a(1)));
        edges.push((a(i), b(1)));
        edges.push((b(i), b(1)));
        edges.push((b(i), c(1)));
    }
    for i in 2..=m {
        edges.push((c(i), c(1)));
        edges.push((c(i), a(1)));
    }
    for i in 2..k {
        edges.push((a(i), a(i + 1)));
        edges.push((b(i), b(i + 1)));
    }
    for i in 2..m {
        edges.push((c(i), c(i + 1)));
    }
    edges.extend([(a(k), b(k)), (a(k), c(m)), (b(k), c(m))]);
    let graph = dedup_edges(n, edges);
    let marks = BTreeMap::from([
        ("u".to_string(), c(m)),
        ("v".to_string(), b(k)),
        ("w".to_string(), a(k)),
    ]);
    Ok(MarkedGraph { graph, marks })
}

/// Cubic planar member of the degree-3 family on `2 + 4n` vertices for odd
/// `n >= 3`; every member has injective chromatic number 5.
pub fn cubic_family(n: usize) -> Result<MarkedGraph, FamilyError> {
    if n < 3 || n % 2 == 0 {
        return Err(FamilyError::OutOfDomain {
            what: "n",
            value: n,
            requirement: "the cubic family is defined for odd n >= 3",
        });
    }
    // v^0_0 -> 0, v^0_1 -> 1, v^i_j -> 2 + 4(i-1) + j; the missing v^0_2 and
    // v^0_3 both alias v^0_1.
    let vid = |i: usize, j: usize| -> usize {
        if i == 0 {
            if j == 0 {
                0
            } else {
                1
            }
        } else {
            2 + 4 * (i - 1) + j
        }
    };
    let mut edges = vec![(vid(0, 0), vid(0, 1))];
    for i in 1..=n {
        edges.push((vid(i, 1), vid(i, 0)));
        edges.push((vid(i, 1), vid(i, 2)));
        edges.push((vid(i, 1), vid(i, 3)));
        edges.push((vid(i, 2), vid(i, 3)));
    }
    for i in 0..=n {
        let next = (i + 1) % (n + 1);
        edges.push((vid(i, 0), vid(next, 2)));
        edges.push((vid(i, 3), vid(next, 0)));
    }
    let graph = dedup_edges(2 + 4 * n, edges);
    let marks = BTreeMap::from([("v00".to_string(), 0), ("v01".to_string(), 1)]);
    Ok(MarkedGraph { graph, marks })
}

/// Girth-4 graph of maximum degree `delta >= 3`: three corner vertices joined
/// by ceil(delta/2) subdivided strands on one side and floor(delta/2) on the
/// other two, then `extensions` rounds of joining two degree-2 vertices by a
/// twice-subdivided edge (the first round bridges strands of two distinct
/// corner pairs, later rounds bridge the two newest vertices). The injective
/// chromatic number is floor(3*delta/2).
pub fn shannon_subdivided(delta: usize, extensions: usize) -> Graph {
    assert!(delta >= 3, "shannon_subdivided needs delta >= 3");
    let (a, b, c) = (0usize, 1usize, 2usize);
    let mut edges = Vec::new();
    let mut fresh = 3usize;
    let strand = |x: usize, y: usize, count: usize, fresh: &mut usize, edges: &mut Vec<(usize, usize)>| {
        let mut first = usize::MAX;
        for _ in 0..count {
            let s = *fresh;
            *fresh += 1;
            edges.push((x, s));
            edges.push((s, y));
            if first == usize::MAX {
                first = s;
            }
        }
        first
    };
    let ab_first = strand(a, b, delta.div_ceil(2), &mut fresh, &mut edges);
    let bc_first = strand(b, c, delta / 2, &mut fresh, &mut edges);
    let _ca_first = strand(c, a, delta / 2, &mut fresh, &mut edges);
    let mut bridge = (ab_first, bc_first);
    for _ in 0..extensions {
        let (u, v) = bridge;
        let (p, q) = (fresh, fresh + 1);
        fresh += 2;
        edges.push((u, p));
        edges.push((p, q));
        edges.push((q, v));
        bridge = (p, q);
    }
    dedup_edges(fresh, edges)
}

/// Member of the girth-4 maximum-degree-4 family after `steps` applications
/// of the degree-3 relabelling procedure to its order-11 base. Each step
/// drops the edge `u-u3`, attaches three fresh vertices, and renames so the
/// procedure can be iterated; the injective chromatic number stays 6.
pub fn k_family(steps: usize) -> MarkedGraph {
    let mut member = fixture("k4_base").expect("k4_base fixture present");
    for _ in 0..steps {
        member = k_step(&member);
    }
    member
}

fn k_step(m: &MarkedGraph) -> MarkedGraph {
    let g = &m.graph;
    let (u, u1, u2, u3) = (m.marks["u"], m.marks["u1"], m.marks["u2"], m.marks["u3"]);
    let base = g.order();
    let (w1, w2, w3) = (base, base + 1, base + 2);
    let mut edges = g.edges();
    edges.retain(|&(x, y)| (x, y) != (u.min(u3), u.max(u3)));
    edges.extend([
        (w1, w3),
        (w2, w3),
        (w1, u1),
        (w1, u3),
        (w2, u2),
        (w2, u3),
        (w3, u),
    ]);
    let graph = dedup_edges(base + 3, edges);
    // Relabel so u, v1, v2, v3 become u3, u2, u1, u.
    let marks = BTreeMap::from([
        ("u".to_string(), w3),
        ("u1".to_string(), w2),
        ("u2".to_string(), w1),
        ("u3".to_string(), u),
    ]);
    MarkedGraph { graph, marks }
}

/// The k-prism: two k-cycles joined by a perfect matching.
pub fn prism(k: usize) -> Graph {
    assert!(k >= 3, "prisms need k >= 3");
    let mut edges = Vec::with_capacity(3 * k);
    for i in 0..k {
        let j = (i + 1) % k;
        edges.push((i, j));
        edges.push((k + i, k + j));
        edges.push((i, k + i));
    }
    dedup_edges(2 * k, edges)
}

/// Generalised dodecahedron on `4r` vertices: two r-cycles `u_i`, `v_i` with
/// pendant layers `u'_i`, `v'_i` tied by `u'_i v'_i` and `u'_i v'_{i+1}`.
/// `r = 5` is the dodecahedron.
pub fn gen_dodecahedron(r: usize) -> Result<Graph, FamilyError> {
    if r < 3 {
        return Err(FamilyError::OutOfDomain {
            what: "r",
            value: r,
            requirement: "generalised dodecahedra need r >= 3",
        });
    }
    let u = |i: usize| i % r;
    let v = |i: usize| r + i % r;
    let up = |i: usize| 2 * r + i % r;
    let vp = |i: usize| 3 * r + i % r;
    let mut edges = Vec::with_capacity(6 * r);
    for i in 0..r {
        edges.push((u(i), u(i + 1)));
        edges.push((v(i), v(i + 1)));
        edges.push((u(i), up(i)));
        edges.push((v(i), vp(i)));
        edges.push((vp(i), up(i)));
        edges.push((up(i), vp(i + 1)));
    }
    Ok(dedup_edges(4 * r, edges))
}

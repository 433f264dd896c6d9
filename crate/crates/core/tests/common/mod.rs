#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::PathBuf;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use sgcert::diagram::{shapes, Diagram};
use sgcert::multigraph::{CutPointReport, ElementId, Multigraph, VertexId};
use sgcert::sgd;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn corpus_text(name: &str) -> String {
    let path = corpus_dir().join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

pub fn corpus_diagram(name: &str) -> Diagram {
    sgd::parse(&corpus_text(name)).unwrap_or_else(|e| panic!("parse {name}: {e}"))
}

pub fn corpus_names() -> Vec<&'static str> {
    vec![
        "unknot.sgd",
        "hopf.sgd",
        "trefoil.sgd",
        "borromean.sgd",
        "c0.sgd",
        "c1.sgd",
        "c2.sgd",
        "c3.sgd",
        "c4.sgd",
        "fig12b.sgd",
        "fig12c.sgd",
        "fig14.sgd",
    ]
}

/// Copy of a diagram with each crossing's over flag flipped where `flip`
/// says so. Over data never affects the rotation system, so the result is
/// valid whenever the input is.
pub fn with_flipped_overs(d: &Diagram, mut flip: impl FnMut() -> bool) -> Diagram {
    use sgcert::diagram::OverPair;
    let mut out = Diagram::new();
    for (&v, rot) in d.vertices() {
        out.add_vertex(v, rot.clone());
    }
    for (&x, c) in d.crossings() {
        let over = if flip() {
            match c.over {
                OverPair::Slots02 => OverPair::Slots13,
                OverPair::Slots13 => OverPair::Slots02,
            }
        } else {
            c.over
        };
        out.add_crossing(x, c.ends, over);
    }
    out
}

/// Deterministic pool of valid spatial-graph diagrams: the standard
/// constructions plus random over-flag variants of them.
pub fn random_diagram(rng: &mut ChaCha8Rng) -> Diagram {
    let base = match rng.gen_range(0..8) {
        0 => shapes::hopf_link(),
        1 => shapes::trefoil(),
        2 => shapes::borromean_rings(),
        3 => shapes::theta_with_rings(),
        4 => shapes::theta(),
        5 => shapes::flat_handcuff(),
        n => shapes::ring_chain((n - 5) + rng.gen_range(0..3)),
    };
    with_flipped_overs(&base, || rng.gen_bool(0.5))
}

/// Random multigraph with at most `max_edges` edges.
pub fn random_multigraph(rng: &mut ChaCha8Rng, max_edges: usize) -> Multigraph {
    let nv = rng.gen_range(0..=6u32);
    let ne = if nv == 0 { 0 } else { rng.gen_range(0..=max_edges) };
    let nc = rng.gen_range(0..=2u32);
    let mut edges = Vec::new();
    for i in 0..ne {
        edges.push((
            100 + i as ElementId,
            rng.gen_range(1..=nv),
            rng.gen_range(1..=nv),
        ));
    }
    Multigraph::build(1..=nv, edges, 1..=nc).unwrap()
}

/// Brute-force cut-point oracle, independent of the library path: subdivide
/// every edge twice and test each node of the subdivided graph by deletion
/// and component counting.
pub fn oracle_cut_points(g: &Multigraph) -> CutPointReport {
    let verts: Vec<VertexId> = g.vertices().iter().copied().collect();
    let nv = verts.len();
    let edges: Vec<(ElementId, VertexId, VertexId)> = g
        .edges()
        .iter()
        .map(|(&id, &(u, v))| (id, u, v))
        .collect();
    let total = nv + 2 * edges.len();
    let vidx: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (k, &(_, u, v)) in edges.iter().enumerate() {
        let (m1, m2) = (nv + 2 * k, nv + 2 * k + 1);
        let (ui, vi) = (vidx[&u], vidx[&v]);
        adj[ui].push(m1);
        adj[m1].push(ui);
        adj[m1].push(m2);
        adj[m2].push(m1);
        adj[m2].push(vi);
        adj[vi].push(m2);
    }
    let count = |skip: usize| -> usize {
        let mut seen = vec![false; total];
        let mut n = 0;
        for s in 0..total {
            if s == skip || seen[s] {
                continue;
            }
            n += 1;
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &w in &adj[v] {
                    if w != skip && !seen[w] {
                        seen[w] = true;
                        q.push_back(w);
                    }
                }
            }
        }
        n
    };
    let base = count(usize::MAX);
    let mut report = CutPointReport {
        connected: g.is_connected(),
        ..CutPointReport::default()
    };
    for node in 0..total {
        if adj[node].is_empty() {
            continue;
        }
        if count(node) > base {
            if node < nv {
                let v = verts[node];
                if g.degree(v) >= 3 {
                    report.cut_vertices.insert(v);
                }
            } else {
                report.bridge_edges.insert(edges[(node - nv) / 2].0);
            }
        }
    }
    let mut loops = BTreeSet::new();
    for (&id, &(u, v)) in g.edges() {
        if u == v && g.degree(u) >= 3 {
            loops.insert((u, id));
        }
    }
    report.loops_at_branch_vertices = loops;
    report
}

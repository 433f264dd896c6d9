//! Abstract multigraphs with vertexless circle components, topological
//! cut-point analysis, and the abstract contraction used to cross-check
//! the diagram-level rewrite.
//!
//! A multigraph here is the underlying space of a spatial graph once the
//! embedding is forgotten: labelled vertices, labelled edges (loops and
//! parallel edges allowed), plus a set of closed strands that pass through
//! no vertex at all ("circles"). Edge ids and circle ids are drawn from a
//! single id space so a strand of a diagram maps to exactly one element id.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

/// Vertex identifier.
pub type VertexId = u32;
/// Identifier for an edge or a circle component (shared id space).
pub type ElementId = u32;

/// An abstract multigraph with first-class circle components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<ElementId, (VertexId, VertexId)>,
    circles: BTreeSet<ElementId>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0} references missing vertex {1}")]
    DanglingEndpoint(ElementId, VertexId),
    #[error("id {0} used for both an edge and a circle")]
    DuplicateElementId(ElementId),
    #[error("cycle is not a simple closed walk")]
    CycleNotSimple,
    #[error("puncture on a cycle element {0}")]
    PunctureOnCycle(ElementId),
    #[error("puncture references missing element {0}")]
    PunctureOnMissingElement(ElementId),
    #[error("duplicate puncture position {1} on element {0}")]
    DuplicatePuncture(ElementId, u32),
}

/// Classified topological cut points of a multigraph.
///
/// The three fields are empty together exactly when no point of the
/// underlying space disconnects its component: cut vertices are branch
/// vertices (degree >= 3) whose removal disconnects, bridge edges are the
/// edges whose interior points disconnect, and loops at branch vertices
/// witness the one-point wedges that always disconnect.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CutPointReport {
    pub connected: bool,
    pub cut_vertices: BTreeSet<VertexId>,
    pub bridge_edges: BTreeSet<ElementId>,
    pub loops_at_branch_vertices: BTreeSet<(VertexId, ElementId)>,
}

impl CutPointReport {
    pub fn is_empty(&self) -> bool {
        self.cut_vertices.is_empty()
            && self.bridge_edges.is_empty()
            && self.loops_at_branch_vertices.is_empty()
    }
}

/// One connected component: the vertices, edges and circles it contains.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Component {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<ElementId>,
    pub circles: BTreeSet<ElementId>,
}

impl Default for Multigraph {
    fn default() -> Self {
        Self::new()
    }
}

impl Multigraph {
    pub fn new() -> Self {
        Multigraph {
            vertices: BTreeSet::new(),
            edges: BTreeMap::new(),
            circles: BTreeSet::new(),
        }
    }

    /// Build and validate a multigraph from parts.
    pub fn build(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (ElementId, VertexId, VertexId)>,
        circles: impl IntoIterator<Item = ElementId>,
    ) -> Result<Self, GraphError> {
        let mut g = Multigraph::new();
        g.vertices = vertices.into_iter().collect();
        for (id, u, v) in edges {
            if g.edges.insert(id, (u, v)).is_some() {
                return Err(GraphError::DuplicateElementId(id));
            }
        }
        for id in circles {
            if g.edges.contains_key(&id) || !g.circles.insert(id) {
                return Err(GraphError::DuplicateElementId(id));
            }
        }
        g.validate()?;
        Ok(g)
    }

    /// Check referential integrity. Idempotent: a valid graph stays valid.
    pub fn validate(&self) -> Result<(), GraphError> {
        for (&id, &(u, v)) in &self.edges {
            if !self.vertices.contains(&u) {
                return Err(GraphError::DanglingEndpoint(id, u));
            }
            if !self.vertices.contains(&v) {
                return Err(GraphError::DanglingEndpoint(id, v));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeMap<ElementId, (VertexId, VertexId)> {
        &self.edges
    }

    pub fn circles(&self) -> &BTreeSet<ElementId> {
        &self.circles
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .values()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    /// Renumber edges and circles into the canonical id order: edges sorted
    /// by (min endpoint, max endpoint) take ids 1..=m, circles follow.
    /// Vertex ids are kept. Two canonical graphs are equal iff they have the
    /// same vertex set, edge multiset and circle count, so the deterministic
    /// labels make exact equality usable as an isomorphism-free cross-check.
    pub fn canonicalize(&self) -> Multigraph {
        let mut endpoints: Vec<(VertexId, VertexId)> = self
            .edges
            .values()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        endpoints.sort();
        let mut g = Multigraph::new();
        g.vertices = self.vertices.clone();
        for (i, (u, v)) in endpoints.into_iter().enumerate() {
            g.edges.insert(i as ElementId + 1, (u, v));
        }
        let m = g.edges.len() as ElementId;
        for k in 0..self.circles.len() as ElementId {
            g.circles.insert(m + 1 + k);
        }
        g
    }

    /// Partition the graph into connected components of its underlying
    /// space. Each circle is its own component; vertices and edges are
    /// joined by incidence.
    pub fn components(&self) -> Vec<Component> {
        let mut adj: BTreeMap<VertexId, Vec<(ElementId, VertexId)>> = BTreeMap::new();
        for (&id, &(u, v)) in &self.edges {
            adj.entry(u).or_default().push((id, v));
            adj.entry(v).or_default().push((id, u));
        }
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Component::default();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.vertices.insert(v);
                if let Some(nbrs) = adj.get(&v) {
                    for &(e, w) in nbrs {
                        comp.edges.insert(e);
                        if seen.insert(w) {
                            queue.push_back(w);
                        }
                    }
                }
            }
            out.push(comp);
        }
        for &c in &self.circles {
            out.push(Component {
                circles: BTreeSet::from([c]),
                ..Component::default()
            });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Find every topological cut point, via the subdivision construction:
    /// each edge is subdivided twice and the resulting simple graph is
    /// scanned for articulation vertices. An articulation at an original
    /// branch vertex is a cut vertex, an articulation at a subdivision
    /// point marks its edge as a bridge. Degree-2 through-points are never
    /// reported as cut vertices; circles contribute nothing.
    pub fn cut_points(&self) -> CutPointReport {
        let mut report = CutPointReport {
            connected: self.is_connected(),
            ..CutPointReport::default()
        };

        // Subdivided auxiliary graph over dense indices. Node meaning:
        // Original(v) or Mid(edge, 0|1).
        let verts: Vec<VertexId> = self.vertices.iter().copied().collect();
        let vidx: BTreeMap<VertexId, usize> = verts
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let nv = verts.len();
        let edges: Vec<(ElementId, VertexId, VertexId)> = self
            .edges
            .iter()
            .map(|(&id, &(u, v))| (id, u, v))
            .collect();
        let total = nv + 2 * edges.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
        for (k, &(_, u, v)) in edges.iter().enumerate() {
            let m1 = nv + 2 * k;
            let m2 = nv + 2 * k + 1;
            let ui = vidx[&u];
            let vi = vidx[&v];
            adj[ui].push(m1);
            adj[m1].push(ui);
            adj[m1].push(m2);
            adj[m2].push(m1);
            adj[m2].push(vi);
            adj[vi].push(m2);
        }

        for &node in &articulation_vertices(&adj) {
            if node < nv {
                let v = verts[node];
                if self.degree(v) >= 3 {
                    report.cut_vertices.insert(v);
                }
            } else {
                let (id, _, _) = edges[(node - nv) / 2];
                report.bridge_edges.insert(id);
            }
        }

        for (&id, &(u, v)) in &self.edges {
            if u == v && self.degree(u) >= 3 {
                report.loops_at_branch_vertices.insert((u, id));
            }
        }
        report
    }

    /// The base irreducibility criterion: the underlying space is connected
    /// and no point of it disconnects. Any embedding of such a graph in the
    /// 3-sphere is irreducible.
    pub fn is_base_irreducible(&self) -> bool {
        let report = self.cut_points();
        report.connected && report.is_empty()
    }

    /// True when a trivial (planar) embedding of this abstract graph admits
    /// a separating or cutting sphere: it does exactly when the graph is
    /// disconnected or has a topological cut point. Used to upgrade a
    /// certified-irreducible embedding to "nontrivially embedded".
    pub fn trivial_embedding_reducible(&self) -> bool {
        let report = self.cut_points();
        !report.connected || !report.is_empty()
    }

    /// Collapse a simple cycle (an edge cycle, or one circle) to a fresh
    /// vertex, splitting every punctured element at its punctures and
    /// attaching the pieces to the new vertex. This is the quotient of the
    /// underlying space by a disk with the cycle as boundary, and serves as
    /// the independent oracle for the diagram-level contraction.
    ///
    /// Punctures are given as (element id, position) pairs; positions along
    /// one element must be distinct and order the split points. The fresh
    /// vertex takes the smallest unused vertex id; the result is returned in
    /// canonical element labelling.
    pub fn contract_abstract(
        &self,
        cycle: &[ElementId],
        punctures: &[(ElementId, u32)],
    ) -> Result<Multigraph, GraphError> {
        let (cycle_vertices, cycle_elements) = self.check_cycle(cycle)?;

        let mut per_element: BTreeMap<ElementId, Vec<u32>> = BTreeMap::new();
        for &(e, pos) in punctures {
            if cycle_elements.contains(&e) {
                return Err(GraphError::PunctureOnCycle(e));
            }
            if !self.edges.contains_key(&e) && !self.circles.contains(&e) {
                return Err(GraphError::PunctureOnMissingElement(e));
            }
            let positions = per_element.entry(e).or_default();
            if positions.contains(&pos) {
                return Err(GraphError::DuplicatePuncture(e, pos));
            }
            positions.push(pos);
        }

        let fresh = (1..)
            .find(|id| !self.vertices.contains(id))
            .expect("some id is unused");

        let mut g = Multigraph::new();
        for &v in &self.vertices {
            if !cycle_vertices.contains(&v) {
                g.vertices.insert(v);
            }
        }
        g.vertices.insert(fresh);

        let map_end = |v: VertexId| if cycle_vertices.contains(&v) { fresh } else { v };
        let mut next_id: ElementId = 1;
        let mut push_edge = |g: &mut Multigraph, u: VertexId, v: VertexId| {
            while g.edges.contains_key(&next_id) {
                next_id += 1;
            }
            g.edges.insert(next_id, (u, v));
        };

        for (&id, &(u, v)) in &self.edges {
            if cycle_elements.contains(&id) {
                continue;
            }
            match per_element.get(&id) {
                None => push_edge(&mut g, map_end(u), map_end(v)),
                Some(ps) => {
                    // Split into |ps|+1 pieces, all inner endpoints at fresh.
                    push_edge(&mut g, map_end(u), fresh);
                    for _ in 1..ps.len() {
                        push_edge(&mut g, fresh, fresh);
                    }
                    push_edge(&mut g, fresh, map_end(v));
                }
            }
        }
        for &c in &self.circles {
            if cycle_elements.contains(&c) {
                continue;
            }
            match per_element.get(&c) {
                None => {
                    g.circles.insert(c);
                }
                Some(ps) => {
                    // A circle through the fresh vertex k times is k loops.
                    for _ in 0..ps.len() {
                        push_edge(&mut g, fresh, fresh);
                    }
                }
            }
        }
        Ok(g.canonicalize())
    }

    /// Check that `cycle` is a single circle or a simple closed edge walk;
    /// return its vertices and elements.
    fn check_cycle(
        &self,
        cycle: &[ElementId],
    ) -> Result<(BTreeSet<VertexId>, BTreeSet<ElementId>), GraphError> {
        if cycle.len() == 1 && self.circles.contains(&cycle[0]) {
            return Ok((BTreeSet::new(), BTreeSet::from([cycle[0]])));
        }
        if cycle.is_empty() {
            return Err(GraphError::CycleNotSimple);
        }
        let mut elements = BTreeSet::new();
        for &e in cycle {
            if !self.edges.contains_key(&e) || !elements.insert(e) {
                return Err(GraphError::CycleNotSimple);
            }
        }
        // Walk the edges in order, chaining endpoints.
        let mut vertices = BTreeSet::new();
        let (first_u, first_v) = self.edges[&cycle[0]];
        // Try both orientations of the first edge.
        'orient: for start in [first_u, first_v] {
            vertices.clear();
            let mut at = start;
            let mut ok = true;
            for &e in cycle {
                let (u, v) = self.edges[&e];
                let next = if u == at {
                    v
                } else if v == at {
                    u
                } else {
                    ok = false;
                    break;
                };
                if !vertices.insert(at) {
                    ok = false;
                    break;
                }
                at = next;
            }
            if ok && at == start {
                break 'orient;
            }
            if start == first_v {
                return Err(GraphError::CycleNotSimple);
            }
        }
        Ok((vertices, elements))
    }
}

/// Articulation vertices of a simple graph given as adjacency lists,
/// by iterative Tarjan low-link.
fn articulation_vertices(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut num = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_art = vec![false; n];
    let mut counter = 0usize;

    for root in 0..n {
        if num[root] != usize::MAX {
            continue;
        }
        // Stack of (node, parent, next-neighbour-index).
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        num[root] = counter;
        low[root] = counter;
        counter += 1;
        let mut root_children = 0usize;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if num[w] == usize::MAX {
                    num[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(num[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= num[p] {
                        is_art[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_art[root] = true;
        }
    }
    (0..n).filter(|&v| is_art[v]).collect()
}

//! Combinatorial-map diagrams of spatial graphs on the 2-sphere.
//!
//! A diagram is a set of nodes (graph vertices with an arbitrary
//! counterclockwise rotation of arc-ends, and 4-valent crossings with
//! over/under data) together with arcs; every arc-end sits in exactly one
//! node slot. Faces come from rotation-system traversal, strands from
//! passing straight through crossings, and forgetting the embedding
//! projects the diagram to an abstract multigraph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::multigraph::{ElementId, Multigraph};

pub type ArcId = u32;
pub type NodeId = u32;

/// One end of an arc: `a3.1` is end 1 of arc 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub arc: ArcId,
    pub end: u8,
}

impl Dart {
    pub fn new(arc: ArcId, end: u8) -> Self {
        debug_assert!(end < 2);
        Dart { arc, end }
    }

    /// The other end of the same arc.
    pub fn mate(self) -> Self {
        Dart {
            arc: self.arc,
            end: 1 - self.end,
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}.{}", self.arc, self.end)
    }
}

/// Vertex and crossing ids live in separate spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKey {
    Vertex(NodeId),
    Crossing(NodeId),
}

impl fmt::Display for NodeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeKey::Vertex(id) => write!(f, "v{id}"),
            NodeKey::Crossing(id) => write!(f, "x{id}"),
        }
    }
}

/// Which opposite slot pair carries the over-strand at a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverPair {
    Slots02,
    Slots13,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingNode {
    /// Arc-ends in counterclockwise cyclic order; slots 0/2 and 1/3 are the
    /// two strands passing through.
    pub ends: [Dart; 4],
    pub over: OverPair,
}

impl CrossingNode {
    /// True when the strand through `slot` passes over the other one.
    pub fn slot_is_over(&self, slot: usize) -> bool {
        match self.over {
            OverPair::Slots02 => slot.is_multiple_of(2),
            OverPair::Slots13 => slot % 2 == 1,
        }
    }
}

/// A spatial-graph diagram as a combinatorial map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Diagram {
    vertices: BTreeMap<NodeId, Vec<Dart>>,
    crossings: BTreeMap<NodeId, CrossingNode>,
}

/// Where a dart sits: node plus slot index in its rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seat {
    pub node: NodeKey,
    pub slot: usize,
}

/// A single structural violation, with enough location data to report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateArcEnd { dart: Dart, first: NodeKey, second: NodeKey },
    MissingArcEnd { dart: Dart },
    EmptyDiagram,
    IsolatedVertexAmongOthers { vertex: NodeId },
    Disconnected { parts: usize },
    EulerMismatch { euler: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateArcEnd { dart, first, second } => {
                write!(f, "arc-end {dart} placed at both {first} and {second}")
            }
            Violation::MissingArcEnd { dart } => {
                write!(f, "arc-end {dart} is not placed at any node")
            }
            Violation::EmptyDiagram => write!(f, "diagram has no nodes"),
            Violation::IsolatedVertexAmongOthers { vertex } => {
                write!(f, "vertex v{vertex} has no arcs but other nodes exist")
            }
            Violation::Disconnected { parts } => {
                write!(f, "incidence map has {parts} components")
            }
            Violation::EulerMismatch { euler } => {
                write!(f, "rotation system is not spherical: V - E + F = {euler}")
            }
        }
    }
}

/// Outcome of structural validation; valid iff no violations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Maximal path of arcs passing straight through crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    /// Arcs in traversal order.
    pub arcs: Vec<ArcId>,
    pub kind: StrandKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrandKind {
    /// Circle through crossings only.
    Closed,
    /// Ends at graph vertices (`from` holds the first arc's vertex end).
    Open { from: NodeId, to: NodeId },
}

impl Strand {
    pub fn min_arc(&self) -> ArcId {
        *self.arcs.iter().min().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        matches!(self.kind, StrandKind::Closed)
    }
}

/// Face of the rotation system: the orbit of its traversal permutation.
/// `walk` lists arrival darts in orbit order starting from the smallest,
/// which doubles as the canonical face key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<Dart>,
}

impl Face {
    pub fn key(&self) -> Dart {
        self.walk[0]
    }
}

/// Projection of a diagram to its abstract multigraph, remembering which
/// element each strand became.
#[derive(Debug, Clone)]
pub struct AbstractGraph {
    pub graph: Multigraph,
    /// Element id per strand index (same order as `Diagram::strands`).
    pub strand_elements: Vec<ElementId>,
}

impl Diagram {
    pub fn new() -> Self {
        Diagram::default()
    }

    pub fn add_vertex(&mut self, id: NodeId, rotation: Vec<Dart>) {
        self.vertices.insert(id, rotation);
    }

    pub fn add_crossing(&mut self, id: NodeId, ends: [Dart; 4], over: OverPair) {
        self.crossings.insert(id, CrossingNode { ends, over });
    }

    pub fn vertices(&self) -> &BTreeMap<NodeId, Vec<Dart>> {
        &self.vertices
    }

    pub fn crossings(&self) -> &BTreeMap<NodeId, CrossingNode> {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn node_count(&self) -> usize {
        self.vertices.len() + self.crossings.len()
    }

    pub fn rotation(&self, node: NodeKey) -> &[Dart] {
        match node {
            NodeKey::Vertex(id) => &self.vertices[&id],
            NodeKey::Crossing(id) => &self.crossings[&id].ends,
        }
    }

    /// All arc ids mentioned by any slot.
    pub fn arc_ids(&self) -> BTreeSet<ArcId> {
        let mut out = BTreeSet::new();
        self.for_each_dart(|d, _| {
            out.insert(d.arc);
        });
        out
    }

    pub fn arc_count(&self) -> usize {
        self.arc_ids().len()
    }

    fn for_each_dart(&self, mut f: impl FnMut(Dart, Seat)) {
        for (&id, rot) in &self.vertices {
            for (slot, &d) in rot.iter().enumerate() {
                f(d, Seat { node: NodeKey::Vertex(id), slot });
            }
        }
        for (&id, c) in &self.crossings {
            for (slot, &d) in c.ends.iter().enumerate() {
                f(d, Seat { node: NodeKey::Crossing(id), slot });
            }
        }
    }

    /// Seat of every dart. Duplicate placements keep the first seat; the
    /// validator reports them.
    pub fn seats(&self) -> BTreeMap<Dart, Seat> {
        let mut seats = BTreeMap::new();
        self.for_each_dart(|d, s| {
            seats.entry(d).or_insert(s);
        });
        seats
    }

    /// Check all structural invariants, reporting each violation.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.node_count() == 0 {
            report.violations.push(Violation::EmptyDiagram);
            return report;
        }

        let mut seats: BTreeMap<Dart, Seat> = BTreeMap::new();
        let mut duplicate = false;
        self.for_each_dart(|d, s| {
            if let Some(first) = seats.get(&d) {
                report.violations.push(Violation::DuplicateArcEnd {
                    dart: d,
                    first: first.node,
                    second: s.node,
                });
                duplicate = true;
            } else {
                seats.insert(d, s);
            }
        });
        for &d in seats.keys() {
            if !seats.contains_key(&d.mate()) {
                report.violations.push(Violation::MissingArcEnd { dart: d.mate() });
            }
        }
        if duplicate || !report.violations.is_empty() {
            return report;
        }

        // Isolated vertices are only fine alone.
        let isolated: Vec<NodeId> = self
            .vertices
            .iter()
            .filter(|(_, rot)| rot.is_empty())
            .map(|(&id, _)| id)
            .collect();
        if !isolated.is_empty() && self.node_count() > 1 {
            for vertex in isolated {
                report
                    .violations
                    .push(Violation::IsolatedVertexAmongOthers { vertex });
            }
            return report;
        }

        // Connectivity over node-arc incidence.
        let parts = self.incidence_components(&seats);
        if parts != 1 {
            report.violations.push(Violation::Disconnected { parts });
            return report;
        }

        // Euler count V - E + F with the lone-vertex sphere face.
        let v = self.node_count() as i64;
        let e = self.arc_count() as i64;
        let f = if seats.is_empty() { 1 } else { self.faces().len() as i64 };
        if v - e + f != 2 {
            report
                .violations
                .push(Violation::EulerMismatch { euler: v - e + f });
        }
        report
    }

    /// Connected components of the node-arc incidence structure.
    pub fn incidence_component_count(&self) -> usize {
        self.incidence_components(&self.seats())
    }

    fn incidence_components(&self, seats: &BTreeMap<Dart, Seat>) -> usize {
        let mut nodes: BTreeSet<NodeKey> = self.vertices.keys().map(|&i| NodeKey::Vertex(i)).collect();
        nodes.extend(self.crossings.keys().map(|&i| NodeKey::Crossing(i)));
        let mut seen: BTreeSet<NodeKey> = BTreeSet::new();
        let mut parts = 0;
        for &start in &nodes {
            if seen.contains(&start) {
                continue;
            }
            parts += 1;
            seen.insert(start);
            let mut queue = VecDeque::from([start]);
            while let Some(n) = queue.pop_front() {
                for &d in self.rotation(n) {
                    if let Some(s) = seats.get(&d.mate()) {
                        if seen.insert(s.node) {
                            queue.push_back(s.node);
                        }
                    }
                }
            }
        }
        parts
    }

    /// Face-traversal step: arrive at `h`, exit via the next slot
    /// counterclockwise, arrive at that arc's far end. Orbits of this map
    /// are the faces; the traced face lies on the right of each directed
    /// arc it follows.
    fn face_next(&self, seats: &BTreeMap<Dart, Seat>, h: Dart) -> Dart {
        let seat = seats[&h];
        let rot = self.rotation(seat.node);
        let out = rot[(seat.slot + 1) % rot.len()];
        out.mate()
    }

    /// All faces, sorted by canonical key (smallest arrival dart).
    pub fn faces(&self) -> Vec<Face> {
        let seats = self.seats();
        let mut remaining: BTreeSet<Dart> = seats.keys().copied().collect();
        let mut faces = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut walk = Vec::new();
            let mut h = start;
            loop {
                walk.push(h);
                remaining.remove(&h);
                h = self.face_next(&seats, h);
                if h == start {
                    break;
                }
            }
            faces.push(Face { walk });
        }
        faces
    }

    /// Index into `faces()` of the face containing arrival dart `h`.
    pub fn face_of(faces: &[Face], h: Dart) -> usize {
        faces
            .iter()
            .position(|f| f.walk.contains(&h))
            .expect("dart on some face")
    }

    /// Maximal strands, ordered by smallest contained arc id. Open strands
    /// start at the smaller vertex-seated dart; closed strands start at the
    /// smallest arc traversed away from its end 0.
    pub fn strands(&self) -> Vec<Strand> {
        let seats = self.seats();
        let mut assigned: BTreeSet<ArcId> = BTreeSet::new();
        let mut strands = Vec::new();
        let arcs = self.arc_ids();

        // Continuation: entering a node via dart d, the strand continues out
        // of a crossing through the opposite slot, and stops at a vertex.
        let continue_through = |d: Dart| -> Option<Dart> {
            let seat = seats[&d];
            match seat.node {
                NodeKey::Vertex(_) => None,
                NodeKey::Crossing(id) => {
                    Some(self.crossings[&id].ends[(seat.slot + 2) % 4])
                }
            }
        };

        for &arc in &arcs {
            if assigned.contains(&arc) {
                continue;
            }
            // Walk forward from arc's end 1; the strand closes when the
            // walk re-enters the starting arc at its end 0.
            let mut order = vec![arc];
            let mut closed = false;
            let mut head = Dart::new(arc, 1);
            while let Some(next_out) = continue_through(head) {
                if next_out == Dart::new(arc, 0) {
                    closed = true;
                    break;
                }
                order.push(next_out.arc);
                head = next_out.mate();
            }
            if closed {
                // walked from arc.1 around back to arc.0
                for &a in &order {
                    assigned.insert(a);
                }
                strands.push(Strand {
                    arcs: order,
                    kind: StrandKind::Closed,
                });
                continue;
            }
            let to_end = head;
            // Walk backward from arc's end 0.
            let mut back = Vec::new();
            let mut tail = Dart::new(arc, 0);
            while let Some(prev_out) = continue_through(tail) {
                back.push(prev_out.arc);
                tail = prev_out.mate();
            }
            back.reverse();
            back.extend(order);
            let from_v = match seats[&tail].node {
                NodeKey::Vertex(id) => id,
                NodeKey::Crossing(_) => unreachable!("open strand ends at vertex"),
            };
            let to_v = match seats[&to_end].node {
                NodeKey::Vertex(id) => id,
                NodeKey::Crossing(_) => unreachable!("open strand ends at vertex"),
            };
            // Canonical orientation: start at the smaller terminal dart.
            let (arcs_ordered, from, to) = if to_end < tail {
                (back.iter().rev().copied().collect(), to_v, from_v)
            } else {
                (back.clone(), from_v, to_v)
            };
            for &a in &arcs_ordered {
                assigned.insert(a);
            }
            strands.push(Strand {
                arcs: arcs_ordered,
                kind: StrandKind::Open { from, to },
            });
        }

        // Closed strands above start at their min arc by construction of the
        // outer loop; sort all strands by min arc for stable ids.
        strands.sort_by_key(|s| s.min_arc());
        strands
    }

    /// Strand index containing `arc`.
    pub fn strand_of(strands: &[Strand], arc: ArcId) -> usize {
        strands
            .iter()
            .position(|s| s.arcs.contains(&arc))
            .expect("arc on some strand")
    }

    /// Forget the embedding: vertices stay, open strands become edges,
    /// closed strands become circles. Elements carry canonical labels.
    pub fn abstract_graph(&self) -> AbstractGraph {
        let strands = self.strands();
        // Edges sorted by endpoint pair get ids 1..=m, circles follow.
        let mut edge_order: Vec<(u32, u32, usize)> = Vec::new();
        let mut circle_order: Vec<usize> = Vec::new();
        for (i, s) in strands.iter().enumerate() {
            match s.kind {
                StrandKind::Open { from, to } => {
                    edge_order.push((from.min(to), from.max(to), i))
                }
                StrandKind::Closed => circle_order.push(i),
            }
        }
        edge_order.sort();
        let mut strand_elements = vec![0; strands.len()];
        let mut edges = Vec::new();
        for (k, &(u, v, i)) in edge_order.iter().enumerate() {
            let id = k as ElementId + 1;
            strand_elements[i] = id;
            edges.push((id, u, v));
        }
        let m = edges.len() as ElementId;
        let mut circles = Vec::new();
        for (k, &i) in circle_order.iter().enumerate() {
            let id = m + 1 + k as ElementId;
            strand_elements[i] = id;
            circles.push(id);
        }
        let graph = Multigraph::build(self.vertices.keys().copied(), edges, circles)
            .expect("projection of a seated diagram is a valid multigraph");
        AbstractGraph {
            graph,
            strand_elements,
        }
    }
}

/// Standard test and corpus constructions.
pub mod shapes {
    use super::*;

    /// A circle anchored at one marker vertex.
    pub fn marked_circle() -> Diagram {
        let mut d = Diagram::new();
        d.add_vertex(1, vec![Dart::new(1, 0), Dart::new(1, 1)]);
        d
    }

    /// Two-crossing clasp diagram of two circles with linking number one.
    pub fn hopf_link() -> Diagram {
        let mut d = Diagram::new();
        d.add_crossing(
            1,
            [
                Dart::new(1, 1),
                Dart::new(2, 0),
                Dart::new(3, 0),
                Dart::new(4, 1),
            ],
            OverPair::Slots02,
        );
        d.add_crossing(
            2,
            [
                Dart::new(4, 0),
                Dart::new(3, 1),
                Dart::new(2, 1),
                Dart::new(1, 0),
            ],
            OverPair::Slots02,
        );
        d
    }

    /// Crossing-free theta: two vertices joined by three parallel edges.
    pub fn theta() -> Diagram {
        let mut d = Diagram::new();
        d.add_vertex(1, vec![Dart::new(1, 0), Dart::new(2, 0), Dart::new(3, 0)]);
        d.add_vertex(2, vec![Dart::new(3, 1), Dart::new(2, 1), Dart::new(1, 1)]);
        d
    }

    /// Standard three-crossing alternating knot diagram.
    pub fn trefoil() -> Diagram {
        let mut d = Diagram::new();
        d.add_crossing(
            1,
            [
                Dart::new(1, 0),
                Dart::new(2, 0),
                Dart::new(3, 0),
                Dart::new(4, 0),
            ],
            OverPair::Slots13,
        );
        d.add_crossing(
            2,
            [
                Dart::new(5, 0),
                Dart::new(6, 0),
                Dart::new(2, 1),
                Dart::new(1, 1),
            ],
            OverPair::Slots13,
        );
        d.add_crossing(
            3,
            [
                Dart::new(4, 1),
                Dart::new(3, 1),
                Dart::new(6, 1),
                Dart::new(5, 1),
            ],
            OverPair::Slots13,
        );
        d
    }

    /// Two loops at two vertices joined by a bridge, no crossings.
    pub fn flat_handcuff() -> Diagram {
        let mut d = Diagram::new();
        d.add_vertex(1, vec![Dart::new(1, 0), Dart::new(2, 0), Dart::new(1, 1)]);
        d.add_vertex(2, vec![Dart::new(3, 0), Dart::new(2, 1), Dart::new(3, 1)]);
        d
    }

    /// The three-ring chain with pairwise linking number zero, in an
    /// eight-crossing diagram where ring A's outer spanning disk is pierced
    /// twice by B, and B's and C's clasps survive the first contraction.
    ///
    /// Ring A is a wide oval crossed four times by the tall ring B; ring C
    /// is a flat oval lying entirely inside A's region, clasping B's two
    /// vertical edges. B passes over A on its right edge and under on its
    /// left; C passes over B along its top edge and under along the bottom.
    pub fn borromean_rings() -> Diagram {
        let mut d = Diagram::new();
        let x = |a: [(ArcId, u8); 4]| {
            [
                Dart::new(a[0].0, a[0].1),
                Dart::new(a[1].0, a[1].1),
                Dart::new(a[2].0, a[2].1),
                Dart::new(a[3].0, a[3].1),
            ]
        };
        // Arcs: 1 B-top, 2 A-top, 3 B-right-upper, 4 A-right, 5 A-left,
        // 6 B-left-upper, 7 B-left-lower, 8 B-bottom, 9 A-bottom,
        // 10 B-right-lower, 11 C-right-cap, 12 C-top, 13 B-right-mid,
        // 14 C-left-cap, 15 B-left-mid, 16 C-bottom.
        d.add_crossing(1, x([(1, 0), (2, 0), (3, 1), (4, 1)]), OverPair::Slots02);
        d.add_crossing(2, x([(2, 1), (1, 1), (5, 0), (6, 0)]), OverPair::Slots02);
        d.add_crossing(3, x([(7, 1), (5, 1), (8, 0), (9, 0)]), OverPair::Slots13);
        d.add_crossing(4, x([(10, 0), (9, 1), (8, 1), (4, 0)]), OverPair::Slots02);
        d.add_crossing(5, x([(11, 1), (3, 0), (12, 0), (13, 1)]), OverPair::Slots02);
        d.add_crossing(6, x([(12, 1), (6, 1), (14, 0), (15, 0)]), OverPair::Slots02);
        d.add_crossing(7, x([(16, 0), (15, 1), (14, 1), (7, 0)]), OverPair::Slots13);
        d.add_crossing(8, x([(11, 0), (13, 0), (16, 1), (10, 1)]), OverPair::Slots13);
        d
    }

    /// The minimal six-crossing alternating diagram of the three-ring
    /// chain: three circles in the overlapping triple-lens arrangement,
    /// arcs numbered 1-4, 5-8, 9-12 counterclockwise around each ring.
    /// Each pair of rings crosses twice with the same ring on top both
    /// times, so every two-ring sublink is split. Useful for structural
    /// tests; none of its spanning disks is visibly good (each side of a
    /// ring holds chords of both other rings crossing each other inside
    /// the region), which is why the corpus ships the redundant
    /// eight-crossing diagram instead.
    pub fn borromean_rings_minimal() -> Diagram {
        let mut d = Diagram::new();
        let x = |a: [(ArcId, u8); 4]| {
            [
                Dart::new(a[0].0, a[0].1),
                Dart::new(a[1].0, a[1].1),
                Dart::new(a[2].0, a[2].1),
                Dart::new(a[3].0, a[3].1),
            ]
        };
        d.add_crossing(1, x([(7, 1), (4, 1), (8, 0), (1, 0)]), OverPair::Slots13);
        d.add_crossing(2, x([(3, 0), (6, 0), (2, 1), (5, 1)]), OverPair::Slots02);
        d.add_crossing(3, x([(4, 0), (9, 0), (3, 1), (12, 1)]), OverPair::Slots13);
        d.add_crossing(4, x([(10, 1), (1, 1), (11, 0), (2, 0)]), OverPair::Slots02);
        d.add_crossing(5, x([(5, 0), (11, 1), (8, 1), (12, 0)]), OverPair::Slots02);
        d.add_crossing(6, x([(9, 1), (7, 0), (10, 0), (6, 1)]), OverPair::Slots13);
        d
    }

    /// Chain of `n + 1` rings, consecutive rings clasped, with the two end
    /// rings carrying the vertices of a connecting edge routed below the
    /// chain. Contracting the left ring's spanning disk repeatedly shortens
    /// the chain by one ring per step and ends at the crossing-free theta.
    ///
    /// Requires `n >= 1`; the zero-ring member of the family is `theta()`.
    pub fn ring_chain(n: usize) -> Diagram {
        assert!(n >= 1);
        let rings = n + 1;
        let mut d = Diagram::new();
        let mut next_arc: ArcId = 1;
        let mut alloc = |k: usize| -> Vec<ArcId> {
            let base = next_arc;
            next_arc += k as ArcId;
            (base..base + k as ArcId).collect()
        };
        // Ring arcs: ring 1 (loop at v1): top, right cap, bottom.
        // Middle ring j: left cap, top, right cap, bottom.
        // Ring k (loop at v2): bottom, left cap, top.
        // One connecting edge v1-v2.
        let ring1 = alloc(3);
        let mids: Vec<Vec<ArcId>> = (0..rings.saturating_sub(2)).map(|_| alloc(4)).collect();
        let ringk = alloc(3);
        let g = alloc(1)[0];

        // Per-ring named arcs: (left cap, top, right cap, bottom); the end
        // rings have no cap on their vertex side.
        let left_cap = |i: usize| -> ArcId {
            if i == rings {
                ringk[1]
            } else {
                mids[i - 2][0]
            }
        };
        let top = |i: usize| -> ArcId {
            match i {
                1 => ring1[0],
                i if i == rings => ringk[2],
                i => mids[i - 2][1],
            }
        };
        let right_cap = |i: usize| -> ArcId {
            if i == 1 {
                ring1[1]
            } else {
                mids[i - 2][2]
            }
        };
        let bottom = |i: usize| -> ArcId {
            match i {
                1 => ring1[2],
                i if i == rings => ringk[0],
                i => mids[i - 2][3],
            }
        };

        d.add_vertex(
            1,
            vec![Dart::new(top(1), 0), Dart::new(g, 0), Dart::new(bottom(1), 1)],
        );
        d.add_vertex(
            2,
            vec![Dart::new(top(rings), 1), Dart::new(bottom(rings), 0), Dart::new(g, 1)],
        );
        for i in 1..rings {
            // Top clasp crossing between ring i and ring i+1: ring i heads
            // into its right cap, ring i+1 exits its left cap; the incoming
            // ring passes over on top and under on the bottom.
            d.add_crossing(
                (2 * i - 1) as NodeId,
                [
                    Dart::new(top(i + 1), 0),
                    Dart::new(top(i), 1),
                    Dart::new(left_cap(i + 1), 1),
                    Dart::new(right_cap(i), 0),
                ],
                OverPair::Slots02,
            );
            d.add_crossing(
                (2 * i) as NodeId,
                [
                    Dart::new(right_cap(i), 1),
                    Dart::new(left_cap(i + 1), 0),
                    Dart::new(bottom(i), 0),
                    Dart::new(bottom(i + 1), 1),
                ],
                OverPair::Slots02,
            );
        }
        d
    }

    /// A theta graph with two unknotted rings threaded onto two of its
    /// edges; the third edge passes over the first ring's disk. Two disk
    /// contractions free the rings and leave a subdivided theta.
    pub fn theta_with_rings() -> Diagram {
        let mut d = Diagram::new();
        // Arcs: e1 = 1,2,3; e2 = 4,5,6; e3 = 7,8,9;
        // ring 1 = 10 (bottom), 11 (right), 12 (top), 13 (left);
        // ring 2 = 14 (bottom), 15 (top).
        d.add_vertex(1, vec![Dart::new(1, 0), Dart::new(7, 0), Dart::new(4, 0)]);
        d.add_vertex(2, vec![Dart::new(9, 1), Dart::new(3, 1), Dart::new(6, 1)]);
        // Ring 1 around edge e1 (piercing), overflown by e3.
        d.add_crossing(
            1,
            [Dart::new(2, 0), Dart::new(13, 1), Dart::new(1, 1), Dart::new(10, 0)],
            OverPair::Slots13,
        );
        d.add_crossing(
            2,
            [Dart::new(3, 0), Dart::new(11, 0), Dart::new(2, 1), Dart::new(10, 1)],
            OverPair::Slots02,
        );
        d.add_crossing(
            3,
            [Dart::new(12, 1), Dart::new(7, 1), Dart::new(13, 0), Dart::new(8, 0)],
            OverPair::Slots13,
        );
        d.add_crossing(
            4,
            [Dart::new(9, 0), Dart::new(12, 0), Dart::new(8, 1), Dart::new(11, 1)],
            OverPair::Slots02,
        );
        // Ring 2 around edge e2 (piercing only).
        d.add_crossing(
            5,
            [Dart::new(5, 0), Dart::new(15, 1), Dart::new(4, 1), Dart::new(14, 0)],
            OverPair::Slots13,
        );
        d.add_crossing(
            6,
            [Dart::new(6, 0), Dart::new(15, 0), Dart::new(5, 1), Dart::new(14, 1)],
            OverPair::Slots02,
        );
        d
    }
}

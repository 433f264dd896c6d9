//! Declaring and verifying visibly good disks.
//!
//! A disk candidate is a cycle of strands plus a face picking one side of
//! the cycle's curve on the sphere. Verification accepts only the flat
//! configurations whose contraction is provably a quotient by an embedded
//! disk: simple boundary curve, a disk region with empty interior, and
//! pairwise disjoint single-arc chords, each classified as piercing the
//! disk once or passing entirely above or below it. Sound, not complete:
//! a rejected candidate proves nothing.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::diagram::{ArcId, Dart, Diagram, Face, NodeId, NodeKey, Strand, StrandKind};

/// A declared disk: boundary cycle as strand indices (0-based into
/// `Diagram::strands()`), plus the face seeding the region side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiskSpec {
    pub cycle: Vec<usize>,
    pub seed_face: usize,
}

impl DiskSpec {
    pub fn new(mut cycle: Vec<usize>, seed_face: usize) -> Self {
        cycle.sort_unstable();
        cycle.dedup();
        DiskSpec { cycle, seed_face }
    }

    /// Render in the `cycle=s1,s2 face=F3` form (1-based ids).
    pub fn to_text(&self) -> String {
        let ids: Vec<String> = self.cycle.iter().map(|i| format!("s{}", i + 1)).collect();
        format!("cycle={} face=F{}", ids.join(","), self.seed_face + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordClass {
    /// One boundary crossing under, one over: realizes a transverse
    /// puncture of the disk interior.
    Piercing,
    /// Over at both boundary crossings.
    Above,
    /// Under at both boundary crossings.
    Below,
}

/// A maximal sub-strand inside the region. With an empty region interior
/// every chord is a single arc between two boundary crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chord {
    pub arc: ArcId,
    pub class: ChordClass,
    /// Strand index owning the arc, and the arc's position along it.
    pub strand: usize,
    pub position: u32,
}

/// One step of the region boundary walk, in collapse order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryEvent {
    /// A chord crosses the boundary here.
    Crossing {
        crossing: NodeId,
        chord_dart: Dart,
        outside_dart: Dart,
    },
    /// The cycle passes a graph vertex; externals are its non-cycle
    /// arc-ends in the order they collapse onto the fresh vertex.
    Vertex { vertex: NodeId, externals: Vec<Dart> },
}

/// Result of verifying a DiskSpec against a diagram.
#[derive(Debug, Clone)]
pub struct VerifiedDisk {
    pub spec: DiskSpec,
    /// Face indices of the region.
    pub region: BTreeSet<usize>,
    pub cycle_arcs: BTreeSet<ArcId>,
    pub cycle_vertices: BTreeSet<NodeId>,
    /// Boundary crossings (where chords cross the cycle).
    pub boundary_crossings: BTreeSet<NodeId>,
    /// Region boundary traversed with the region on the left.
    pub boundary_walk: Vec<BoundaryEvent>,
    pub chords: Vec<Chord>,
    /// Cycle vertices that carry external arc-ends.
    pub attachments: BTreeSet<NodeId>,
    /// Fingerprint of the diagram this disk was verified against.
    pub diagram_digest: u64,
}

impl VerifiedDisk {
    pub fn punctures(&self) -> Vec<&Chord> {
        self.chords
            .iter()
            .filter(|c| c.class == ChordClass::Piercing)
            .collect()
    }

    pub fn chord_count(&self, class: ChordClass) -> usize {
        self.chords.iter().filter(|c| c.class == class).count()
    }

    /// Puncture list in abstract form: (strand index, position along it).
    pub fn puncture_positions(&self) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = self
            .punctures()
            .iter()
            .map(|c| (c.strand, c.position))
            .collect();
        out.sort_unstable();
        out
    }

    /// The contraction hypothesis: the disk interior meets the graph, or
    /// the boundary attaches to the rest of the graph in zero or at least
    /// two vertices. The excluded case is exactly a singleton attachment
    /// with empty interior (a pendant cycle), where collapsing proves
    /// nothing.
    pub fn theorem_precondition(&self) -> bool {
        !self.punctures().is_empty() || self.attachments.len() != 1
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiskError {
    #[error("diagram is invalid: {0}")]
    DiagramInvalid(String),
    #[error("cycle references strand s{0} which does not exist")]
    BadStrandRef(usize),
    #[error("seed face F{0} does not exist")]
    BadFaceRef(usize),
    #[error("seed face F{0} is not incident to a cycle arc")]
    SeedFaceNotOnCycle(usize),
    #[error("strands do not concatenate into one simple closed walk")]
    CycleNotSimple,
    #[error("cycle strands cross themselves or each other at x{0}")]
    CycleSelfCrossing(NodeId),
    #[error("graph vertex v{0} lies strictly inside the region")]
    VertexInsideRegion(NodeId),
    #[error("crossing x{0} lies strictly inside the region (chords intersect)")]
    CrossingInsideRegion(NodeId),
    #[error("arc a{arc} enters the region through vertex v{vertex}")]
    ArcEntersRegionAtVertex { vertex: NodeId, arc: ArcId },
    #[error("region is not a disk (sub-map Euler count {0})")]
    RegionNotDisk(i64),
    #[error("chord a{0} cannot be routed around the collapse point without new crossings")]
    ChordNotRoutable(ArcId),
}

/// Fingerprint used to detect stale VerifiedDisks at contraction time.
pub fn diagram_digest(d: &Diagram) -> u64 {
    let mut h = DefaultHasher::new();
    for (id, rot) in d.vertices() {
        (0u8, id, rot).hash(&mut h);
    }
    for (id, c) in d.crossings() {
        (1u8, id).hash(&mut h);
        c.ends.hash(&mut h);
        matches!(c.over, crate::diagram::OverPair::Slots02).hash(&mut h);
    }
    h.finish()
}

/// Verify that `spec` names a visibly good disk of `d`.
pub fn verify_good_disk(d: &Diagram, spec: &DiskSpec) -> Result<VerifiedDisk, DiskError> {
    let report = d.validate();
    if !report.is_valid() {
        return Err(DiskError::DiagramInvalid(report.to_string()));
    }
    let strands = d.strands();
    let faces = d.faces();
    let seats = d.seats();
    verify_with_context(d, spec, &strands, &faces, &seats)
}

fn verify_with_context(
    d: &Diagram,
    spec: &DiskSpec,
    strands: &[Strand],
    faces: &[Face],
    seats: &BTreeMap<Dart, crate::diagram::Seat>,
) -> Result<VerifiedDisk, DiskError> {
    for &s in &spec.cycle {
        if s >= strands.len() {
            return Err(DiskError::BadStrandRef(s));
        }
    }
    if spec.seed_face >= faces.len() {
        return Err(DiskError::BadFaceRef(spec.seed_face));
    }
    let cycle_set: BTreeSet<usize> = spec.cycle.iter().copied().collect();
    if cycle_set.len() != spec.cycle.len() || cycle_set.is_empty() {
        return Err(DiskError::CycleNotSimple);
    }

    // The cycle must be one closed strand, or open strands chaining into a
    // simple closed walk: every touched vertex has exactly two cycle ends.
    let mut cycle_arcs: BTreeSet<ArcId> = BTreeSet::new();
    let mut cycle_vertices: BTreeSet<NodeId> = BTreeSet::new();
    if cycle_set.len() == 1 && strands[spec.cycle[0]].is_closed() {
        cycle_arcs.extend(&strands[spec.cycle[0]].arcs);
    } else {
        let mut vertex_uses: BTreeMap<NodeId, usize> = BTreeMap::new();
        for &s in &cycle_set {
            match strands[s].kind {
                StrandKind::Closed => return Err(DiskError::CycleNotSimple),
                StrandKind::Open { from, to } => {
                    *vertex_uses.entry(from).or_insert(0) += 1;
                    *vertex_uses.entry(to).or_insert(0) += 1;
                }
            }
            cycle_arcs.extend(&strands[s].arcs);
        }
        if vertex_uses.values().any(|&n| n != 2) {
            return Err(DiskError::CycleNotSimple);
        }
        cycle_vertices.extend(vertex_uses.keys());
        // Connectivity of the strand chain (a disjoint pair of 2-gons also
        // has all degrees 2).
        let mut reached: BTreeSet<usize> = BTreeSet::new();
        let mut queue = VecDeque::from([*cycle_set.iter().next().unwrap()]);
        reached.insert(*cycle_set.iter().next().unwrap());
        while let Some(s) = queue.pop_front() {
            let StrandKind::Open { from, to } = strands[s].kind else {
                unreachable!()
            };
            for &t in &cycle_set {
                if reached.contains(&t) {
                    continue;
                }
                let StrandKind::Open { from: f2, to: t2 } = strands[t].kind else {
                    unreachable!()
                };
                if f2 == from || f2 == to || t2 == from || t2 == to {
                    reached.insert(t);
                    queue.push_back(t);
                }
            }
        }
        if reached.len() != cycle_set.len() {
            return Err(DiskError::CycleNotSimple);
        }
    }

    // Cycle arcs must be mutually crossing-free: at any crossing touching
    // them, exactly one of the two passing strands is on the cycle.
    for (&xid, c) in d.crossings() {
        let on02 = cycle_arcs.contains(&c.ends[0].arc) || cycle_arcs.contains(&c.ends[2].arc);
        let on13 = cycle_arcs.contains(&c.ends[1].arc) || cycle_arcs.contains(&c.ends[3].arc);
        if on02 && on13 {
            return Err(DiskError::CycleSelfCrossing(xid));
        }
    }

    // Region: faces reachable from the seed without crossing cycle arcs.
    if !faces[spec.seed_face]
        .walk
        .iter()
        .any(|dart| cycle_arcs.contains(&dart.arc))
    {
        return Err(DiskError::SeedFaceNotOnCycle(spec.seed_face));
    }
    let region = flood_fill(faces, &cycle_arcs, spec.seed_face);

    // Interior must contain no node at all. A node with any corner face in
    // the region and no cycle dart lies strictly inside.
    let face_of_dart: BTreeMap<Dart, usize> = faces
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.walk.iter().map(move |&dart| (dart, i)))
        .collect();
    for (&vid, rot) in d.vertices() {
        if cycle_vertices.contains(&vid) {
            continue;
        }
        if rot.iter().any(|dart| region.contains(&face_of_dart[dart])) {
            return Err(DiskError::VertexInsideRegion(vid));
        }
    }
    let mut boundary_crossings: BTreeSet<NodeId> = BTreeSet::new();
    for (&xid, c) in d.crossings() {
        let touches = c.ends.iter().any(|dart| region.contains(&face_of_dart[dart]));
        if !touches {
            continue;
        }
        if c.ends.iter().any(|dart| cycle_arcs.contains(&dart.arc)) {
            boundary_crossings.insert(xid);
        } else {
            return Err(DiskError::CrossingInsideRegion(xid));
        }
    }

    // Disk check: sub-map Euler count must be 1.
    let mut sub_nodes: BTreeSet<NodeKey> = BTreeSet::new();
    let mut sub_arcs: BTreeSet<ArcId> = BTreeSet::new();
    for &f in &region {
        for dart in &faces[f].walk {
            sub_arcs.insert(dart.arc);
            sub_nodes.insert(seats[dart].node);
        }
    }
    // Boundary cycle arcs flank the region on one side only; include their
    // nodes too (already there via the walk) and count the region's faces.
    let euler = sub_nodes.len() as i64 - sub_arcs.len() as i64 + region.len() as i64;
    if euler != 1 {
        return Err(DiskError::RegionNotDisk(euler));
    }

    // Chords: non-cycle arcs incident to region faces. With an empty
    // interior both endpoints sit at boundary crossings.
    let mut chord_arcs: BTreeSet<ArcId> = sub_arcs
        .iter()
        .copied()
        .filter(|a| !cycle_arcs.contains(a))
        .collect();
    let mut chords = Vec::new();
    for &arc in &chord_arcs {
        let mut overs = Vec::new();
        for end in [0u8, 1] {
            let seat = seats[&Dart::new(arc, end)];
            match seat.node {
                NodeKey::Vertex(vid) => {
                    return Err(DiskError::ArcEntersRegionAtVertex { vertex: vid, arc })
                }
                NodeKey::Crossing(xid) => {
                    overs.push(d.crossings()[&xid].slot_is_over(seat.slot));
                }
            }
        }
        let class = match (overs[0], overs[1]) {
            (true, true) => ChordClass::Above,
            (false, false) => ChordClass::Below,
            _ => ChordClass::Piercing,
        };
        let strand = Diagram::strand_of(strands, arc);
        let position = strands[strand].arcs.iter().position(|&a| a == arc).unwrap() as u32;
        chords.push(Chord {
            arc,
            class,
            strand,
            position,
        });
    }
    chords.sort_by_key(|c| c.arc);
    chord_arcs = chords.iter().map(|c| c.arc).collect();

    // Boundary walk with the region on the left. The left face of a
    // directed arc is the face containing its tail as an arrival dart.
    let mut directed: BTreeMap<ArcId, Dart> = BTreeMap::new(); // arc -> tail dart
    for &arc in &cycle_arcs {
        let d0 = Dart::new(arc, 0);
        let tail = if region.contains(&face_of_dart[&d0]) {
            d0
        } else {
            d0.mate()
        };
        debug_assert!(region.contains(&face_of_dart[&tail]));
        directed.insert(arc, tail);
    }
    let start_tail = *directed.values().min().unwrap();
    let mut walk = Vec::new();
    let mut attachments = BTreeSet::new();
    let mut tail = start_tail;
    loop {
        let head = tail.mate();
        let seat = seats[&head];
        match seat.node {
            NodeKey::Crossing(xid) => {
                let c = &d.crossings()[&xid];
                let exit = c.ends[(seat.slot + 2) % 4];
                // The two transversal darts: one chord side, one outside.
                let t1 = c.ends[(seat.slot + 1) % 4];
                let t2 = c.ends[(seat.slot + 3) % 4];
                let (chord_dart, outside_dart) = if chord_arcs.contains(&t1.arc) {
                    (t1, t2)
                } else {
                    (t2, t1)
                };
                debug_assert!(chord_arcs.contains(&chord_dart.arc));
                debug_assert!(!chord_arcs.contains(&outside_dart.arc));
                walk.push(BoundaryEvent::Crossing {
                    crossing: xid,
                    chord_dart,
                    outside_dart,
                });
                tail = exit;
            }
            NodeKey::Vertex(vid) => {
                let rot = d.rotation(NodeKey::Vertex(vid));
                let deg = rot.len();
                let d_in = head;
                let pos_in = rot.iter().position(|&x| x == d_in).unwrap();
                // Collect externals counterclockwise from d_in up to the
                // outgoing cycle dart; the sector from there back to d_in is
                // the region side and must be empty.
                let mut externals = Vec::new();
                let mut d_out = None;
                for k in 1..deg {
                    let dart = rot[(pos_in + k) % deg];
                    if cycle_arcs.contains(&dart.arc) {
                        d_out = Some(dart);
                        if k != deg - 1 {
                            return Err(DiskError::ArcEntersRegionAtVertex {
                                vertex: vid,
                                arc: rot[(pos_in + k + 1) % deg].arc,
                            });
                        }
                        break;
                    }
                    externals.push(dart);
                }
                let d_out = d_out.ok_or(DiskError::CycleNotSimple)?;
                if !externals.is_empty() {
                    attachments.insert(vid);
                }
                walk.push(BoundaryEvent::Vertex {
                    vertex: vid,
                    externals,
                });
                tail = d_out;
            }
        }
        if tail == start_tail {
            break;
        }
        if walk.len() > 2 * (cycle_arcs.len() + 1) {
            return Err(DiskError::CycleNotSimple);
        }
    }
    if walk
        .iter()
        .filter(|e| matches!(e, BoundaryEvent::Crossing { .. }))
        .count()
        != chords.len() * 2
    {
        return Err(DiskError::CycleNotSimple);
    }

    // Routability of above/below chords: each needs one boundary interval
    // free of other chord endpoints and of attachment vertices, so it can
    // slide out of the collapse region across that interval.
    for chord in &chords {
        if chord.class == ChordClass::Piercing {
            continue;
        }
        let hits: Vec<usize> = walk
            .iter()
            .enumerate()
            .filter_map(|(i, e)| match e {
                BoundaryEvent::Crossing { chord_dart, .. } if chord_dart.arc == chord.arc => {
                    Some(i)
                }
                _ => None,
            })
            .collect();
        debug_assert_eq!(hits.len(), 2);
        let blocked = |from: usize, to: usize| -> bool {
            let n = walk.len();
            let mut i = (from + 1) % n;
            while i != to {
                match &walk[i] {
                    BoundaryEvent::Crossing { .. } => return true,
                    BoundaryEvent::Vertex { externals, .. } if !externals.is_empty() => {
                        return true
                    }
                    _ => {}
                }
                i = (i + 1) % n;
            }
            false
        };
        if blocked(hits[0], hits[1]) && blocked(hits[1], hits[0]) {
            return Err(DiskError::ChordNotRoutable(chord.arc));
        }
    }

    Ok(VerifiedDisk {
        spec: spec.clone(),
        region,
        cycle_arcs,
        cycle_vertices,
        boundary_crossings,
        boundary_walk: walk,
        chords,
        attachments,
        diagram_digest: diagram_digest(d),
    })
}

fn flood_fill(faces: &[Face], cycle_arcs: &BTreeSet<ArcId>, seed: usize) -> BTreeSet<usize> {
    let face_of_dart: BTreeMap<Dart, usize> = faces
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.walk.iter().map(move |&dart| (dart, i)))
        .collect();
    let mut region = BTreeSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some(f) = queue.pop_front() {
        for dart in &faces[f].walk {
            if cycle_arcs.contains(&dart.arc) {
                continue;
            }
            let other = face_of_dart[&dart.mate()];
            if region.insert(other) {
                queue.push_back(other);
            }
        }
    }
    region
}

/// Enumerate every DiskSpec with at most `max_cycle_len` strands that
/// verifies and satisfies the contraction hypothesis. One spec per
/// (cycle, side): the seed is the smallest cycle-incident face index on
/// that side. Order: cycle length, then cycle encoding, then face id.
pub fn find_visible_disks(d: &Diagram, max_cycle_len: usize) -> Vec<DiskSpec> {
    let report = d.validate();
    if !report.is_valid() {
        return Vec::new();
    }
    let strands = d.strands();
    let faces = d.faces();
    let seats = d.seats();
    let face_of_dart: BTreeMap<Dart, usize> = faces
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.walk.iter().map(move |&dart| (dart, i)))
        .collect();

    let mut cycles: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (i, s) in strands.iter().enumerate() {
        match s.kind {
            StrandKind::Closed => {
                cycles.insert(vec![i]);
            }
            StrandKind::Open { from, to } if from == to => {
                cycles.insert(vec![i]);
            }
            _ => {}
        }
    }
    if max_cycle_len >= 2 {
        // Paths over the junction graph, anchored at their smallest strand.
        for anchor in 0..strands.len() {
            let StrandKind::Open { from, to } = strands[anchor].kind else {
                continue;
            };
            if from == to {
                continue;
            }
            // DFS extending from `to` back to `from` through larger strands.
            let mut stack: Vec<(NodeId, Vec<usize>, BTreeSet<NodeId>)> =
                vec![(to, vec![anchor], BTreeSet::from([from, to]))];
            while let Some((at, path, visited)) = stack.pop() {
                for (j, t) in strands.iter().enumerate().skip(anchor + 1) {
                    let StrandKind::Open { from: f2, to: t2 } = t.kind else {
                        continue;
                    };
                    if f2 == t2 || path.contains(&j) {
                        continue;
                    }
                    let next = if f2 == at {
                        t2
                    } else if t2 == at {
                        f2
                    } else {
                        continue;
                    };
                    if next == from {
                        let mut cycle = path.clone();
                        cycle.push(j);
                        cycle.sort_unstable();
                        cycles.insert(cycle);
                        continue;
                    }
                    if visited.contains(&next) || path.len() + 1 >= max_cycle_len {
                        continue;
                    }
                    let mut path2 = path.clone();
                    path2.push(j);
                    let mut visited2 = visited.clone();
                    visited2.insert(next);
                    stack.push((next, path2, visited2));
                }
            }
        }
    }

    let mut ordered: Vec<Vec<usize>> = cycles
        .into_iter()
        .filter(|c| c.len() <= max_cycle_len)
        .collect();
    ordered.sort_by_key(|c| (c.len(), c.clone()));

    let mut out = Vec::new();
    for cycle in ordered {
        let mut cycle_arcs: BTreeSet<ArcId> = BTreeSet::new();
        for &s in &cycle {
            cycle_arcs.extend(&strands[s].arcs);
        }
        let probe = *cycle_arcs.iter().next().unwrap();
        let side_a = face_of_dart[&Dart::new(probe, 0)];
        let side_b = face_of_dart[&Dart::new(probe, 1)];
        let mut sides = Vec::new();
        for seed in [side_a, side_b] {
            let region = flood_fill(&faces, &cycle_arcs, seed);
            let canonical = *region
                .iter()
                .find(|&&f| {
                    faces[f]
                        .walk
                        .iter()
                        .any(|dart| cycle_arcs.contains(&dart.arc))
                })
                .expect("region touches the cycle");
            if !sides.contains(&canonical) {
                sides.push(canonical);
            }
        }
        sides.sort_unstable();
        for seed in sides {
            let spec = DiskSpec {
                cycle: cycle.clone(),
                seed_face: seed,
            };
            if let Ok(v) = verify_with_context(d, &spec, &strands, &faces, &seats) {
                if v.theorem_precondition() {
                    out.push(spec);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::shapes::*;

    fn strand_index_of_arc(d: &Diagram, arc: ArcId) -> usize {
        Diagram::strand_of(&d.strands(), arc)
    }

    #[test]
    fn hopf_disk_one_piercing() {
        let d = hopf_link();
        let specs = find_visible_disks(&d, 1);
        // Both circles bound candidate disks on both sides, all pierced once.
        assert_eq!(specs.len(), 4);
        for spec in &specs {
            let v = verify_good_disk(&d, spec).unwrap();
            assert_eq!(v.punctures().len(), 1);
            assert_eq!(v.chord_count(ChordClass::Above), 0);
            assert_eq!(v.chord_count(ChordClass::Below), 0);
            assert!(v.attachments.is_empty());
            assert!(v.theorem_precondition());
        }
    }

    #[test]
    fn marked_circle_empty_disk() {
        let d = marked_circle();
        for face in 0..2 {
            let v = verify_good_disk(&d, &DiskSpec::new(vec![0], face)).unwrap();
            assert!(v.chords.is_empty());
            assert!(v.attachments.is_empty());
            // Empty set of attachments is not a singleton.
            assert!(v.theorem_precondition());
        }
    }

    #[test]
    fn theta_two_edge_cycles() {
        let d = theta();
        let specs = find_visible_disks(&d, 3);
        // Three 2-gon disks, each on its lens side only; the opposite side
        // would have the third edge entering through a vertex.
        assert_eq!(specs.len(), 3);
        for spec in &specs {
            assert_eq!(spec.cycle.len(), 2);
            let v = verify_good_disk(&d, spec).unwrap();
            assert!(v.chords.is_empty());
            assert_eq!(v.attachments.len(), 2);
            assert!(v.theorem_precondition());
        }
    }

    #[test]
    fn pendant_loop_fails_precondition() {
        let d = flat_handcuff();
        // Loop at vertex 1 is arc 1; its empty side has the bridge end as
        // the only attachment.
        let loop_strand = strand_index_of_arc(&d, 1);
        let faces = d.faces();
        let mut checked = 0;
        for face in 0..faces.len() {
            let spec = DiskSpec::new(vec![loop_strand], face);
            if let Ok(v) = verify_good_disk(&d, &spec) {
                assert_eq!(v.attachments.len(), 1);
                assert!(!v.theorem_precondition());
                checked += 1;
            }
        }
        assert!(checked > 0);
        // And the enumeration refuses to offer it.
        assert!(find_visible_disks(&d, 1).is_empty());
    }

    #[test]
    fn side_determinism_and_complement() {
        let d = hopf_link();
        let strands = d.strands();
        let faces = d.faces();
        // For the first circle, the two sides partition the faces.
        let arcs: BTreeSet<ArcId> = strands[0].arcs.iter().copied().collect();
        let f0 = (0..faces.len())
            .find(|&f| faces[f].walk.iter().any(|dart| arcs.contains(&dart.arc)))
            .unwrap();
        let region = flood_fill(&faces, &arcs, f0);
        let other = (0..faces.len()).find(|f| !region.contains(f)).unwrap();
        let complement = flood_fill(&faces, &arcs, other);
        assert_eq!(region.len() + complement.len(), faces.len());
        assert!(region.is_disjoint(&complement));
    }

    #[test]
    fn trefoil_cycle_self_crossing_rejected() {
        let d = trefoil();
        // The single strand crosses itself; every side fails.
        for face in 0..d.faces().len() {
            let err = verify_good_disk(&d, &DiskSpec::new(vec![0], face)).unwrap_err();
            assert_eq!(err, DiskError::CycleSelfCrossing(1));
        }
        assert!(find_visible_disks(&d, 1).is_empty());
    }

    #[test]
    fn corpus_borromean_disks() {
        // The eight-crossing diagram: ring A's outer disk takes two
        // piercings from B, and ring C's inner sliver two from B's edges.
        let d = borromean_rings();
        let specs = find_visible_disks(&d, 1);
        assert_eq!(specs.len(), 2);
        for spec in &specs {
            let v = verify_good_disk(&d, spec).unwrap();
            assert_eq!(v.punctures().len(), 2);
            assert_eq!(v.chord_count(ChordClass::Above), 0);
            assert_eq!(v.chord_count(ChordClass::Below), 0);
        }
    }

    #[test]
    fn minimal_borromean_has_no_visible_disk() {
        // In the six-crossing alternating diagram every spanning disk of a
        // ring holds chords of both other rings crossing each other inside
        // the region, so nothing verifies.
        let d = borromean_rings_minimal();
        assert!(find_visible_disks(&d, 1).is_empty());
        let strands = d.strands();
        let faces = d.faces();
        for s in 0..strands.len() {
            for f in 0..faces.len() {
                let result = verify_good_disk(&d, &DiskSpec::new(vec![s], f));
                assert!(result.is_err());
            }
        }
    }

    #[test]
    fn theta_with_rings_first_disk_has_above_chord() {
        let d = theta_with_rings();
        let specs = find_visible_disks(&d, 1);
        assert_eq!(specs.len(), 2);
        let v = verify_good_disk(&d, &specs[0]).unwrap();
        assert_eq!(v.punctures().len(), 1);
        assert_eq!(v.chord_count(ChordClass::Above), 1);
        let v = verify_good_disk(&d, &specs[1]).unwrap();
        assert_eq!(v.punctures().len(), 1);
        assert_eq!(v.chord_count(ChordClass::Above), 0);
    }

    #[test]
    fn bad_refs_rejected() {
        let d = marked_circle();
        assert!(matches!(
            verify_good_disk(&d, &DiskSpec::new(vec![7], 0)),
            Err(DiskError::BadStrandRef(7))
        ));
        assert!(matches!(
            verify_good_disk(&d, &DiskSpec::new(vec![0], 9)),
            Err(DiskError::BadFaceRef(9))
        ));
    }

    #[test]
    fn theta_big_side_rejected_via_vertex_entry() {
        let d = theta();
        let strands = d.strands();
        // Cycle of strands 0 and 1; sides: the lens between them and the
        // side containing edge 3. The latter must be rejected because the
        // third edge enters the region through both vertices.
        let arcs: BTreeSet<ArcId> = strands[0]
            .arcs
            .iter()
            .chain(&strands[1].arcs)
            .copied()
            .collect();
        let faces = d.faces();
        let mut outcomes = Vec::new();
        for (f, face) in faces.iter().enumerate() {
            if !face.walk.iter().any(|dart| arcs.contains(&dart.arc)) {
                continue;
            }
            outcomes.push(verify_good_disk(&d, &DiskSpec::new(vec![0, 1], f)).is_ok());
        }
        assert!(outcomes.contains(&true));
        assert!(outcomes.contains(&false));
    }
}

//! Collapse a verified good disk to a point.
//!
//! The rewrite deletes the boundary cycle (its arcs, vertices and every
//! crossing on it), introduces one fresh vertex where the disk stood, splits
//! each piercing chord at its puncture into two arcs meeting the fresh
//! vertex, and lets above/below chords slide out of the collapsed region,
//! fusing with their outside continuations. The fresh vertex's rotation is
//! the cyclic order of collapse points along the old boundary, which is the
//! unique order compatible with collapsing the disk radially.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::diagram::{ArcId, Dart, Diagram};
use crate::disk::{diagram_digest, BoundaryEvent, ChordClass, VerifiedDisk};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContractError {
    #[error("contraction hypothesis fails: empty disk interior with a singleton attachment")]
    PreconditionFailed,
    #[error("verified disk is stale: diagram has changed since verification")]
    StaleDisk,
    #[error("contraction would split the diagram into {0} components")]
    SplitsDiagram(usize),
    #[error("internal error: contraction produced an invalid diagram: {0}")]
    InternalInvalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Piece {
    /// A surviving whole arc.
    Whole(ArcId),
    /// One half of a split piercing chord, adjacent to the chord's end `1`.
    Half(ArcId, u8),
}

/// Endpoint of a piece: side 0/1 of a whole arc, or for a half, side 0 is
/// the outer (old chord end) and side 1 the puncture end at the fresh
/// vertex.
type EndKey = (Piece, u8);

#[derive(Debug, Default)]
struct PieceGraph {
    /// Fusions produced by deleting boundary crossings.
    joins: BTreeMap<EndKey, EndKey>,
}

impl PieceGraph {
    fn join(&mut self, a: EndKey, b: EndKey) {
        self.joins.insert(a, b);
        self.joins.insert(b, a);
    }
}

/// Apply the disk contraction. `v` must have been verified against `d` and
/// satisfy the contraction hypothesis; both are re-checked.
pub fn contract(d: &Diagram, v: &VerifiedDisk) -> Result<Diagram, ContractError> {
    if v.diagram_digest != diagram_digest(d) {
        return Err(ContractError::StaleDisk);
    }
    if !v.theorem_precondition() {
        return Err(ContractError::PreconditionFailed);
    }

    let piercing: BTreeMap<ArcId, ()> = v
        .chords
        .iter()
        .filter(|c| c.class == ChordClass::Piercing)
        .map(|c| (c.arc, ()))
        .collect();

    // The piece holding a given old dart, for darts not on cycle arcs.
    let piece_end = |dart: Dart| -> EndKey {
        if piercing.contains_key(&dart.arc) {
            (Piece::Half(dart.arc, dart.end), 0)
        } else {
            (Piece::Whole(dart.arc), dart.end)
        }
    };

    // Fuse across every deleted boundary crossing.
    let mut pg = PieceGraph::default();
    for event in &v.boundary_walk {
        if let BoundaryEvent::Crossing {
            chord_dart,
            outside_dart,
            ..
        } = event
        {
            pg.join(piece_end(*chord_dart), piece_end(*outside_dart));
        }
    }

    // Chains of pieces become the new arcs. Free endpoints are piece ends
    // that were not fused away.
    let mut pieces: Vec<Piece> = Vec::new();
    for arc in d.arc_ids() {
        if v.cycle_arcs.contains(&arc) {
            continue;
        }
        if piercing.contains_key(&arc) {
            pieces.push(Piece::Half(arc, 0));
            pieces.push(Piece::Half(arc, 1));
        } else {
            pieces.push(Piece::Whole(arc));
        }
    }

    #[derive(Debug)]
    struct Chain {
        /// Endpoint keys in order (first, last); equal for closed chains.
        ends: (EndKey, EndKey),
        new_id: ArcId,
        closed: bool,
    }

    let other_side = |(p, s): EndKey| -> EndKey { (p, 1 - s) };
    let mut end_to_chain: BTreeMap<EndKey, (usize, u8)> = BTreeMap::new();
    let mut chains: Vec<Chain> = Vec::new();
    let mut in_chain: BTreeMap<Piece, usize> = BTreeMap::new();

    for &start_piece in &pieces {
        if in_chain.contains_key(&start_piece) {
            continue;
        }
        // Walk to one extremity (or detect a closed chain).
        let mut cursor: EndKey = (start_piece, 0);
        let mut closed = false;
        while let Some(&next) = pg.joins.get(&cursor) {
            let next_far = other_side(next);
            if next_far.0 == start_piece {
                closed = true;
                break;
            }
            cursor = next_far;
        }
        // Collect the chain from this extremity.
        let first_end = if closed { (start_piece, 0) } else { cursor };
        let mut members = Vec::new();
        let mut walk = first_end;
        let last_end;
        loop {
            members.push(walk.0);
            let far = other_side(walk);
            match pg.joins.get(&far) {
                Some(&next) if !closed || next.0 != first_end.0 => walk = next,
                _ => {
                    last_end = far;
                    break;
                }
            }
        }
        let new_id = members
            .iter()
            .filter_map(|p| match p {
                Piece::Whole(a) => Some(*a),
                Piece::Half(..) => None,
            })
            .min()
            .expect("every chain contains a whole arc");
        let idx = chains.len();
        for &m in &members {
            in_chain.insert(m, idx);
        }
        end_to_chain.insert(first_end, (idx, 0));
        end_to_chain.insert(last_end, (idx, 1));
        chains.push(Chain {
            ends: (first_end, last_end),
            new_id,
            closed,
        });
    }

    // Orient each open chain so that the donor arc keeps its end numbers.
    for chain in &mut chains {
        if chain.closed {
            continue;
        }
        let donor = Piece::Whole(chain.new_id);
        let flip = match (chain.ends.0, chain.ends.1) {
            ((p, s), _) if p == donor => s == 1,
            (_, (p, s)) if p == donor => s == 0,
            _ => {
                // Donor is interior; orient by walking from the first end.
                let mut cursor = chain.ends.0;
                let mut flip = false;
                loop {
                    if cursor.0 == donor {
                        flip = cursor.1 == 1;
                        break;
                    }
                    let far = other_side(cursor);
                    match pg.joins.get(&far) {
                        Some(&next) => cursor = next,
                        None => break,
                    }
                }
                flip
            }
        };
        if flip {
            chain.ends = (chain.ends.1, chain.ends.0);
        }
    }
    // Rebuild endpoint lookup after orientation.
    end_to_chain.clear();
    for (idx, chain) in chains.iter().enumerate() {
        if chain.closed {
            continue;
        }
        end_to_chain.insert(chain.ends.0, (idx, 0));
        end_to_chain.insert(chain.ends.1, (idx, 1));
    }

    let new_dart_for = |end: EndKey| -> Dart {
        let &(idx, side) = end_to_chain
            .get(&end)
            .unwrap_or_else(|| panic!("endpoint {end:?} not free"));
        Dart::new(chains[idx].new_id, side)
    };

    // Assemble the new diagram.
    let mut out = Diagram::new();

    // Surviving vertices keep their rotations with darts renamed.
    for (&vid, rot) in d.vertices() {
        if v.cycle_vertices.contains(&vid) {
            continue;
        }
        let new_rot: Vec<Dart> = rot.iter().map(|&dart| new_dart_for(piece_end(dart))).collect();
        out.add_vertex(vid, new_rot);
    }
    // Surviving crossings likewise.
    for (&xid, c) in d.crossings() {
        if v.boundary_crossings.contains(&xid) {
            continue;
        }
        let ends = [
            new_dart_for(piece_end(c.ends[0])),
            new_dart_for(piece_end(c.ends[1])),
            new_dart_for(piece_end(c.ends[2])),
            new_dart_for(piece_end(c.ends[3])),
        ];
        out.add_crossing(xid, ends, c.over);
    }

    // Fresh vertex: smallest vertex id unused by the input diagram,
    // rotation in boundary-walk order. A piercing chord's spoke at a
    // crossing is the puncture end of the half fused there; attachments
    // contribute their external ends in recorded order.
    let fresh = (1..)
        .find(|id| !d.vertices().contains_key(id))
        .unwrap();
    let mut rotation = Vec::new();
    for event in &v.boundary_walk {
        match event {
            BoundaryEvent::Crossing { chord_dart, .. } => {
                if piercing.contains_key(&chord_dart.arc) {
                    let inner = (Piece::Half(chord_dart.arc, chord_dart.end), 1);
                    rotation.push(new_dart_for(inner));
                }
            }
            BoundaryEvent::Vertex { externals, .. } => {
                for &ext in externals {
                    rotation.push(new_dart_for(piece_end(ext)));
                }
            }
        }
    }
    out.add_vertex(fresh, rotation);

    // Closed chains lost every node; anchor each at a fresh marker vertex.
    let mut closed_chains: Vec<usize> = (0..chains.len()).filter(|&i| chains[i].closed).collect();
    closed_chains.sort_by_key(|&i| chains[i].new_id);
    for idx in closed_chains {
        let marker = (1..)
            .find(|id| !d.vertices().contains_key(id) && !out.vertices().contains_key(id))
            .unwrap();
        let a = chains[idx].new_id;
        out.add_vertex(marker, vec![Dart::new(a, 0), Dart::new(a, 1)]);
    }

    let report = out.validate();
    if !report.is_valid() {
        // An isolated fresh vertex or a freed circle means the quotient
        // fell apart; that is a split result, not a construction bug.
        let split = report.violations.iter().any(|v| {
            matches!(
                v,
                crate::diagram::Violation::Disconnected { .. }
                    | crate::diagram::Violation::IsolatedVertexAmongOthers { .. }
            )
        });
        if split {
            return Err(ContractError::SplitsDiagram(out.incidence_component_count()));
        }
        return Err(ContractError::InternalInvalid(report.to_string()));
    }
    Ok(out)
}

/// The elements of `d.abstract_graph()` touched by a verified disk, for the
/// abstract cross-check: the cycle as element ids, and the punctures as
/// (element id, position) pairs.
pub fn abstract_instance(
    d: &Diagram,
    v: &VerifiedDisk,
) -> (Vec<crate::multigraph::ElementId>, Vec<(crate::multigraph::ElementId, u32)>) {
    let strands = d.strands();
    let a = d.abstract_graph();
    let cycle: Vec<_> = v
        .spec
        .cycle
        .iter()
        .map(|&s| a.strand_elements[s])
        .collect();
    let mut punctures: Vec<_> = v
        .chords
        .iter()
        .filter(|c| c.class == ChordClass::Piercing)
        .map(|c| (a.strand_elements[c.strand], c.position))
        .collect();
    punctures.sort_unstable();
    let _ = strands;
    (cycle, punctures)
}

/// Convenience for tests and the certifier: verify, contract, and
/// cross-check the result against the abstract contraction oracle.
pub fn contract_checked(d: &Diagram, v: &VerifiedDisk) -> Result<Diagram, ContractError> {
    let out = contract(d, v)?;
    let (cycle, punctures) = abstract_instance(d, v);
    let expected = d
        .abstract_graph()
        .graph
        .contract_abstract(&cycle, &punctures)
        .map_err(|e| ContractError::InternalInvalid(format!("abstract oracle: {e}")))?;
    let got = out.abstract_graph().graph.canonicalize();
    if got != expected {
        return Err(ContractError::InternalInvalid(format!(
            "abstract mismatch: got {got:?}, expected {expected:?}"
        )));
    }
    Ok(out)
}

//! Certificates of irreducibility and their verification.
//!
//! A certificate is an initial diagram plus an ordered list of disk
//! declarations. Verification replays the chain: each disk is re-verified
//! against the current diagram and contracted; the final diagram's abstract
//! graph must meet the base criterion (connected, no topological cut
//! points). Every check passing certifies the initial embedding
//! irreducible; any failure yields an honest Unknown, never a negative.
//! Negatives come only from the sound quick detectors.

use std::fmt;
use std::fmt::Write as _;

use crate::contraction::contract;
use crate::diagram::Diagram;
use crate::disk::{find_visible_disks, verify_good_disk, ChordClass, DiskSpec};
use crate::multigraph::{CutPointReport, Multigraph};
use crate::sgd::canonicalize_arcs;

/// The proof object: an initial diagram and its contraction steps.
///
/// Step indices (strands, faces) always refer to the canonical arc
/// numbering of the diagram they apply to, so certificates stay valid
/// across serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub initial: Diagram,
    pub steps: Vec<DiskSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativeReason {
    /// The incidence map is disconnected; on the sphere a separating circle
    /// can be drawn in a common face, giving a separating sphere.
    SplitMap,
    /// A degree-1 vertex among other nodes; a small sphere around it is
    /// pierced once by its edge, giving a cutting sphere.
    PendantVertex,
}

impl fmt::Display for NegativeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegativeReason::SplitMap => write!(f, "split at diagram level"),
            NegativeReason::PendantVertex => write!(f, "pendant vertex"),
        }
    }
}

/// Outcome of certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// All steps verified and the final graph meets the base criterion.
    /// Carries the replayable trace.
    CertifiedIrreducible { trace: String },
    /// A sound negative detector fired.
    CertifiedNotIrreducible { reason: NegativeReason },
    /// Nothing proved either way.
    Unknown { diagnostics: String },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::CertifiedIrreducible { .. })
    }
}

/// Sound reducibility detectors on the raw diagram. Works on diagrams that
/// fail full validation on connectivity.
pub fn quick_negative(d: &Diagram) -> Option<NegativeReason> {
    if d.node_count() == 0 {
        return None;
    }
    let seats = d.seats();
    let mut complete = true;
    for &dart in seats.keys() {
        if !seats.contains_key(&dart.mate()) {
            complete = false;
            break;
        }
    }
    if complete && d.incidence_component_count() > 1 {
        return Some(NegativeReason::SplitMap);
    }
    if d.node_count() > 1 {
        for rot in d.vertices().values() {
            if rot.len() == 1 {
                return Some(NegativeReason::PendantVertex);
            }
        }
    }
    None
}

fn describe_base(report: &CutPointReport) -> String {
    if report.connected && report.is_empty() {
        return "connected, no cut points".to_string();
    }
    let mut parts = Vec::new();
    if !report.connected {
        parts.push("disconnected".to_string());
    }
    if !report.cut_vertices.is_empty() {
        let ids: Vec<String> = report.cut_vertices.iter().map(|v| format!("v{v}")).collect();
        parts.push(format!("cut vertices {}", ids.join(",")));
    }
    if !report.bridge_edges.is_empty() {
        let ids: Vec<String> = report.bridge_edges.iter().map(|e| format!("e{e}")).collect();
        parts.push(format!("bridges {}", ids.join(",")));
    }
    if !report.loops_at_branch_vertices.is_empty() {
        let ids: Vec<String> = report
            .loops_at_branch_vertices
            .iter()
            .map(|(v, e)| format!("(v{v},e{e})"))
            .collect();
        parts.push(format!("loops at branch vertices {}", ids.join(",")));
    }
    parts.join("; ")
}

fn describe_graph(g: &Multigraph) -> String {
    format!(
        "vertices={} edges={} circles={}",
        g.vertices().len(),
        g.edge_count(),
        g.circle_count()
    )
}

/// Replay a certificate. Returns CertifiedIrreducible with a trace when
/// every step verifies and the final abstract graph passes the base
/// criterion; otherwise Unknown naming the failing step.
pub fn verify_certificate(c: &Certificate) -> Verdict {
    let mut d = canonicalize_arcs(&c.initial);
    let report = d.validate();
    if !report.is_valid() {
        return Verdict::Unknown {
            diagnostics: format!("initial diagram invalid: {report}"),
        };
    }
    let mut trace = String::new();
    let _ = writeln!(
        trace,
        "initial: vertices={} crossings={} arcs={} ({})",
        d.vertices().len(),
        d.crossing_count(),
        d.arc_count(),
        describe_graph(&d.abstract_graph().graph)
    );
    for (i, spec) in c.steps.iter().enumerate() {
        let step = i + 1;
        let disk = match verify_good_disk(&d, spec) {
            Ok(v) => v,
            Err(e) => {
                return Verdict::Unknown {
                    diagnostics: format!("step {step} ({}): disk rejected: {e}", spec.to_text()),
                }
            }
        };
        if !disk.theorem_precondition() {
            return Verdict::Unknown {
                diagnostics: format!(
                    "step {step} ({}): contraction hypothesis fails (empty interior, singleton attachment)",
                    spec.to_text()
                ),
            };
        }
        let next = match contract(&d, &disk) {
            Ok(n) => n,
            Err(e) => {
                return Verdict::Unknown {
                    diagnostics: format!("step {step} ({}): contraction failed: {e}", spec.to_text()),
                }
            }
        };
        let _ = writeln!(
            trace,
            "step {step}: {}: punctures={} above={} below={} attachments={}; crossings {} -> {}",
            spec.to_text(),
            disk.punctures().len(),
            disk.chord_count(ChordClass::Above),
            disk.chord_count(ChordClass::Below),
            disk.attachments.len(),
            d.crossing_count(),
            next.crossing_count()
        );
        d = next;
    }
    let a = d.abstract_graph();
    let report = a.graph.cut_points();
    if report.connected && report.is_empty() {
        let _ = writeln!(
            trace,
            "final: {}; base criterion: {}",
            describe_graph(&a.graph),
            describe_base(&report)
        );
        Verdict::CertifiedIrreducible { trace }
    } else {
        Verdict::Unknown {
            diagnostics: format!(
                "final graph fails base criterion: {}",
                describe_base(&report)
            ),
        }
    }
}

/// Abstract cut point witnessing that a trivial embedding would admit a
/// cutting sphere, while the certified embedding admits none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NontrivialityWitness {
    CutVertex(u32),
    BridgeEdge(u32),
    LoopAtBranch(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NontrivialityReport {
    pub witness: Option<NontrivialityWitness>,
    pub lines: Vec<String>,
}

impl NontrivialityReport {
    pub fn nontrivial(&self) -> bool {
        self.witness.is_some()
    }
}

impl fmt::Display for NontrivialityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, line) in self.lines.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Interpret a positive verdict. Irreducible always implies non-splittable.
/// When the abstract graph has a topological cut point, a trivial embedding
/// would admit a cutting sphere there, so the certified embedding is
/// nontrivial. For a disconnected abstract graph (a link) the cut-point
/// corollary does not apply; non-splittability is the reported conclusion.
pub fn nontriviality_report(c: &Certificate, verdict: &Verdict) -> NontrivialityReport {
    assert!(
        verdict.is_certified(),
        "nontriviality_report needs a CertifiedIrreducible verdict"
    );
    let g = canonicalize_arcs(&c.initial).abstract_graph().graph;
    let report = g.cut_points();
    let mut lines = vec!["irreducible, hence non-splittable".to_string()];
    let witness = if let Some(&v) = report.cut_vertices.iter().next() {
        Some(NontrivialityWitness::CutVertex(v))
    } else if let Some(&e) = report.bridge_edges.iter().next() {
        Some(NontrivialityWitness::BridgeEdge(e))
    } else if let Some(&(v, e)) = report.loops_at_branch_vertices.iter().next() {
        Some(NontrivialityWitness::LoopAtBranch(v, e))
    } else {
        None
    };
    match &witness {
        Some(NontrivialityWitness::CutVertex(v)) => lines.push(format!(
            "embedding is nontrivial: abstract cut vertex v{v} gives a trivial embedding a cutting sphere"
        )),
        Some(NontrivialityWitness::BridgeEdge(e)) => lines.push(format!(
            "embedding is nontrivial: abstract bridge e{e} gives a trivial embedding a cutting sphere"
        )),
        Some(NontrivialityWitness::LoopAtBranch(v, e)) => lines.push(format!(
            "embedding is nontrivial: loop e{e} at branch vertex v{v} gives a trivial embedding a cutting sphere"
        )),
        None if !report.connected => lines.push(
            "nontriviality not implied by the cut-point corollary (abstract graph is disconnected; non-splittability itself rules out the split embedding)"
                .to_string(),
        ),
        None => lines.push("nontriviality not implied by this method".to_string()),
    }
    NontrivialityReport { witness, lines }
}

/// Bounded depth-first search for a certificate: enumerate visible disks in
/// deterministic order, contract, recurse. Returns the first certificate
/// found, which always re-verifies.
pub fn auto_certify(d: &Diagram, max_steps: usize, max_cycle_len: usize) -> Option<Certificate> {
    let d0 = canonicalize_arcs(d);
    if !d0.validate().is_valid() || quick_negative(&d0).is_some() {
        return None;
    }
    let steps = search(&d0, max_steps, max_cycle_len)?;
    Some(Certificate {
        initial: d0,
        steps,
    })
}

fn search(d: &Diagram, depth: usize, max_cycle_len: usize) -> Option<Vec<DiskSpec>> {
    if d.abstract_graph().graph.is_base_irreducible() {
        return Some(Vec::new());
    }
    if depth == 0 {
        return None;
    }
    for spec in find_visible_disks(d, max_cycle_len) {
        let Ok(disk) = verify_good_disk(d, &spec) else {
            continue;
        };
        let Ok(next) = contract(d, &disk) else {
            continue;
        };
        if let Some(mut rest) = search(&next, depth - 1, max_cycle_len) {
            let mut steps = vec![spec];
            steps.append(&mut rest);
            return Some(steps);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::shapes::*;

    #[test]
    fn trefoil_empty_certificate() {
        let cert = Certificate {
            initial: trefoil(),
            steps: vec![],
        };
        let v = verify_certificate(&cert);
        assert!(v.is_certified(), "{v:?}");
    }

    #[test]
    fn hopf_one_step_certificate() {
        let cert = auto_certify(&hopf_link(), 2, 1).expect("hopf certificate");
        assert_eq!(cert.steps.len(), 1);
        let v = verify_certificate(&cert);
        assert!(v.is_certified(), "{v:?}");
        if let Verdict::CertifiedIrreducible { trace } = &v {
            assert!(trace.contains("step 1"), "{trace}");
            // Replay determinism.
            let v2 = verify_certificate(&cert);
            assert_eq!(Verdict::CertifiedIrreducible { trace: trace.clone() }, v2);
        }
    }

    #[test]
    fn unknot_zero_step_auto() {
        let cert = auto_certify(&marked_circle(), 1, 1).unwrap();
        assert!(cert.steps.is_empty());
        assert!(verify_certificate(&cert).is_certified());
    }

    #[test]
    fn bogus_step_gives_unknown() {
        let cert = Certificate {
            initial: trefoil(),
            steps: vec![DiskSpec::new(vec![9], 0)],
        };
        match verify_certificate(&cert) {
            Verdict::Unknown { diagnostics } => {
                assert!(diagnostics.contains("step 1"), "{diagnostics}")
            }
            other => panic!("expected Unknown, got {other:?}"),
        }
    }

    #[test]
    fn quick_negative_cases() {
        // Two separate circles: split map.
        let mut d = marked_circle();
        d.add_vertex(2, vec![crate::diagram::Dart::new(2, 0), crate::diagram::Dart::new(2, 1)]);
        assert_eq!(quick_negative(&d), Some(NegativeReason::SplitMap));

        // Path diagram u-v: pendant vertices.
        let mut d = Diagram::new();
        d.add_vertex(1, vec![crate::diagram::Dart::new(1, 0)]);
        d.add_vertex(2, vec![crate::diagram::Dart::new(1, 1)]);
        assert_eq!(quick_negative(&d), Some(NegativeReason::PendantVertex));

        assert_eq!(quick_negative(&hopf_link()), None);
        assert_eq!(quick_negative(&marked_circle()), None);
        assert_eq!(quick_negative(&borromean_rings()), None);
    }

    #[test]
    fn handcuff_not_certifiable() {
        let d = flat_handcuff();
        assert_eq!(auto_certify(&d, 3, 2), None);
    }

    #[test]
    fn nontriviality_trefoil_not_implied() {
        let cert = Certificate {
            initial: trefoil(),
            steps: vec![],
        };
        let v = verify_certificate(&cert);
        let report = nontriviality_report(&cert, &v);
        assert!(!report.nontrivial());
        assert!(report.lines[0].contains("non-splittable"));
    }

    #[test]
    fn auto_certificates_reverify() {
        for d in [marked_circle(), hopf_link(), theta(), trefoil()] {
            if let Some(cert) = auto_certify(&d, 2, 2) {
                assert!(verify_certificate(&cert).is_certified());
            }
        }
    }

    #[test]
    fn monotone_budget() {
        let small = auto_certify(&hopf_link(), 1, 1).unwrap();
        let large = auto_certify(&hopf_link(), 4, 3).unwrap();
        assert_eq!(small, large);
    }

    #[test]
    fn borromean_two_step_chain() {
        let cert = auto_certify(&borromean_rings(), 2, 1).expect("borromean certificate");
        assert_eq!(cert.steps.len(), 2);
        let v = verify_certificate(&cert);
        assert!(v.is_certified(), "{v:?}");
        // The three rings are abstractly split, so the cut-point corollary
        // does not apply; non-splittability is the conclusion.
        let report = nontriviality_report(&cert, &v);
        assert!(report.witness.is_none());
        assert!(report.lines[0].contains("non-splittable"));
        assert!(report.lines[1].contains("not implied"));
    }

    #[test]
    fn ring_chains_certify_in_n_steps() {
        for n in 1..=4 {
            let cert = auto_certify(&ring_chain(n), n, 1)
                .unwrap_or_else(|| panic!("chain {n} certificate"));
            assert_eq!(cert.steps.len(), n, "chain {n}");
            let v = verify_certificate(&cert);
            assert!(v.is_certified(), "chain {n}: {v:?}");
            let report = nontriviality_report(&cert, &v);
            assert!(report.nontrivial(), "chain {n}");
        }
    }

    #[test]
    fn middle_ring_shortcut() {
        // Contracting the middle ring of a three-ring chain frees both end
        // loops at once, so a one-step certificate exists even though the
        // end-first chain takes two.
        let cert = auto_certify(&ring_chain(2), 1, 1).expect("shortcut certificate");
        assert_eq!(cert.steps.len(), 1);
        assert!(verify_certificate(&cert).is_certified());
    }

    #[test]
    fn theta_with_rings_certifies() {
        let cert = auto_certify(&theta_with_rings(), 4, 4).expect("certificate");
        assert!(verify_certificate(&cert).is_certified());
        assert!(cert.steps.len() <= 4);
    }
}

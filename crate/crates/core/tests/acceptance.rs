//! Acceptance suite: one test per release criterion, each ending in a
//! printed pass line (run with `--nocapture` to see them). Everything here
//! runs against the bundled corpus and the real binary.

mod common;

use std::process::{Command, Output};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use common::*;
use sgcert::certify::{
    auto_certify, nontriviality_report, quick_negative, verify_certificate, Certificate,
    NontrivialityWitness, Verdict,
};
use sgcert::contraction::{abstract_instance, contract, contract_checked, ContractError};
use sgcert::diagram::{shapes, Diagram};
use sgcert::disk::{find_visible_disks, verify_good_disk, DiskSpec};
use sgcert::sgd;

fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgcert"))
        .args(args)
        .current_dir(corpus_dir())
        .output()
        .expect("run sgcert")
}

fn load_certificate(name: &str) -> Certificate {
    let parsed = sgd::parse_certificate(&corpus_text(name), Some(&corpus_dir()))
        .unwrap_or_else(|e| panic!("{name}: {e}"));
    Certificate {
        initial: parsed.initial,
        steps: parsed.steps,
    }
}

/// Replay a certificate step by step with the abstract cross-check enabled,
/// returning the intermediate diagrams.
fn replay_checked(cert: &Certificate) -> Vec<Diagram> {
    let mut d = sgd::canonicalize_arcs(&cert.initial);
    let mut stages = vec![d.clone()];
    for spec in &cert.steps {
        let disk = verify_good_disk(&d, spec).expect("step disk verifies");
        assert!(disk.theorem_precondition());
        d = contract_checked(&d, &disk).expect("contraction with oracle cross-check");
        stages.push(d.clone());
    }
    stages
}

#[test]
fn acceptance_borromean_chain() {
    let out = run_cli(&["certify", "borromean.cert"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("CertifiedIrreducible"), "{text}");

    let cert = load_certificate("borromean.cert");
    assert_eq!(cert.steps.len(), 2, "exactly two contraction steps");
    let stages = replay_checked(&cert);

    // The replayed stage diagrams are byte-identical to the committed
    // transcriptions, and their abstract graphs match exactly under
    // canonical labelling.
    assert_eq!(sgd::serialize(&stages[1]), corpus_text("fig12b.sgd"));
    assert_eq!(sgd::serialize(&stages[2]), corpus_text("fig12c.sgd"));
    let b = corpus_diagram("fig12b.sgd").abstract_graph().graph.canonicalize();
    let c = corpus_diagram("fig12c.sgd").abstract_graph().graph.canonicalize();
    assert_eq!(stages[1].abstract_graph().graph.canonicalize(), b);
    assert_eq!(stages[2].abstract_graph().graph.canonicalize(), c);
    // Stage one: two loops at the collapse vertex plus the untouched ring.
    assert_eq!(b.vertices().len(), 1);
    assert_eq!(b.edge_count(), 2);
    assert_eq!(b.circle_count(), 1);
    // Stage two: two vertices joined by four parallel edges.
    assert_eq!(c.vertices().len(), 2);
    assert_eq!(c.edge_count(), 4);
    assert_eq!(c.circle_count(), 0);

    // Final base-criterion report is empty.
    let final_report = stages[2].abstract_graph().graph.cut_points();
    assert!(final_report.connected && final_report.is_empty());

    println!("PASS borromean chain: 2-step certificate, stages match, base report empty");
}

#[test]
fn acceptance_ring_chain_family() {
    for n in 0..=4usize {
        let cert = load_certificate(&format!("c{n}.cert"));
        assert_eq!(cert.steps.len(), n, "c{n} uses {n} steps");
        let verdict = verify_certificate(&cert);
        assert!(verdict.is_certified(), "c{n}: {verdict:?}");
        replay_checked(&cert);
        if n > 0 {
            let report = nontriviality_report(&cert, &verdict);
            assert!(report.nontrivial(), "c{n} nontrivial");
            assert!(
                matches!(report.witness, Some(NontrivialityWitness::CutVertex(_))),
                "c{n} witness is an abstract cut vertex: {:?}",
                report.witness
            );
        }
    }
    println!("PASS ring chain family: n-step certificates for n=0..4, cut-vertex witnesses for n>0");
}

#[test]
fn acceptance_fig14_auto_certify() {
    let out = run_cli(&["auto-certify", "fig14.sgd", "--max-steps", "4", "--max-len", "4"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("found certificate"), "{text}");

    let cert = auto_certify(&corpus_diagram("fig14.sgd"), 4, 4).expect("certificate");
    assert!(verify_certificate(&cert).is_certified());
    replay_checked(&cert);
    println!("PASS fig14: auto-certify finds a verifying certificate within budget (4, 4)");
}

#[test]
fn acceptance_small_examples() {
    let hopf = load_certificate("hopf.cert");
    assert_eq!(hopf.steps.len(), 1);
    assert!(verify_certificate(&hopf).is_certified());
    replay_checked(&hopf);

    let unknot = load_certificate("unknot.cert");
    assert_eq!(unknot.steps.len(), 0);
    assert!(verify_certificate(&unknot).is_certified());

    let trefoil = load_certificate("trefoil.cert");
    assert_eq!(trefoil.steps.len(), 0);
    assert!(verify_certificate(&trefoil).is_certified());

    println!("PASS small examples: hopf 1 step, unknot 0 steps, trefoil 0 steps, all cross-checked");
}

#[test]
fn acceptance_precondition_negative() {
    // A loop hanging off a vertex that carries other edges: its empty disk
    // has no punctures and a singleton attachment.
    let d = shapes::flat_handcuff();
    let strands = d.strands();
    let loop_strand = Diagram::strand_of(&strands, 1);
    let mut rejected = 0;
    for face in 0..d.faces().len() {
        if let Ok(disk) = verify_good_disk(&d, &DiskSpec::new(vec![loop_strand], face)) {
            assert!(!disk.theorem_precondition());
            assert_eq!(contract(&d, &disk), Err(ContractError::PreconditionFailed));
            rejected += 1;
        }
    }
    assert!(rejected > 0, "the pendant-loop disk was never even verifiable");
    println!("PASS precondition negative: pendant-loop disk rejected by hypothesis and by contract");
}

#[test]
fn acceptance_oracle_suites() {
    // Exact agreement with the brute-force subdivision oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    for i in 0..1000 {
        let g = random_multigraph(&mut rng, 12);
        assert_eq!(g.cut_points(), oracle_cut_points(&g), "graph {i}");
    }

    // Abstract-consistency of contraction on randomized pairs, with
    // validity and crossing-count monotonicity.
    let mut pairs = 0usize;
    for _ in 0..150 {
        let mut d = random_diagram(&mut rng);
        for _ in 0..3 {
            let specs = find_visible_disks(&d, 3);
            let mut next = None;
            for spec in &specs {
                let disk = verify_good_disk(&d, spec).unwrap();
                let out = match contract(&d, &disk) {
                    Ok(out) => out,
                    Err(ContractError::SplitsDiagram(_)) => continue,
                    Err(e) => panic!("{e}"),
                };
                pairs += 1;
                assert!(out.validate().is_valid());
                assert!(out.crossing_count() <= d.crossing_count());
                let (cycle, punctures) = abstract_instance(&d, &disk);
                let expected = d
                    .abstract_graph()
                    .graph
                    .contract_abstract(&cycle, &punctures)
                    .unwrap();
                assert_eq!(out.abstract_graph().graph.canonicalize(), expected);
                next.get_or_insert(out);
            }
            match next {
                Some(n) => d = n,
                None => break,
            }
        }
    }
    assert!(pairs >= 200, "only {pairs} randomized pairs");

    // Everything auto-certify returns re-verifies.
    let mut found = 0usize;
    for _ in 0..60 {
        let d = random_diagram(&mut rng);
        if let Some(cert) = auto_certify(&d, 2, 2) {
            assert!(verify_certificate(&cert).is_certified());
            assert_eq!(quick_negative(&cert.initial), None);
            found += 1;
        }
    }
    assert!(found >= 10);

    println!(
        "PASS oracle suites: 1000 cut-point agreements, {pairs} contraction cross-checks, {found} auto certificates re-verified"
    );
}

#[test]
fn acceptance_format_and_exit_codes() {
    // Byte-exact round trip over the full corpus.
    for name in corpus_names() {
        let text = corpus_text(name);
        let d = sgd::parse(&text).unwrap();
        assert_eq!(sgd::serialize(&d), text, "{name}");
    }

    // Exit-code contract: 0 verdict-positive, 2 parse, 3 invalid,
    // 4 unknown, 5 negative.
    assert_eq!(run_cli(&["certify", "hopf.cert"]).status.code(), Some(0));

    let tmp = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let bad = tmp.join("acceptance-bad.sgd");
    std::fs::write(&bad, "sgd 1\nV v1 a1.0 a1.0\n").unwrap();
    assert_eq!(
        run_cli(&["validate", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );

    let split = tmp.join("acceptance-split.sgd");
    std::fs::write(&split, "sgd 1\nV v1 a1.0 a1.1\nV v2 a2.0 a2.1\n").unwrap();
    assert_eq!(
        run_cli(&["validate", split.to_str().unwrap()]).status.code(),
        Some(3)
    );

    assert_eq!(
        run_cli(&["auto-certify", "c1.sgd", "--max-steps", "0"]).status.code(),
        Some(4)
    );

    let pendant = tmp.join("acceptance-pendant.cert");
    std::fs::write(
        &pendant,
        "cert 1\ninitial inline\nsgd 1\nV v1 a1.0\nV v2 a1.1 a2.0 a2.1\nend\n",
    )
    .unwrap();
    assert_eq!(
        run_cli(&["certify", pendant.to_str().unwrap()]).status.code(),
        Some(5)
    );

    println!("PASS format and exit codes: corpus byte-exact, codes 0/2/3/4/5 observed");
}

#[test]
fn acceptance_verdict_consistency() {
    // CertifiedIrreducible and a firing quick negative are mutually
    // exclusive, and verification never produces a negative verdict.
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e57);
    for _ in 0..60 {
        let d = random_diagram(&mut rng);
        let cert = Certificate {
            initial: d.clone(),
            steps: vec![],
        };
        let verdict = verify_certificate(&cert);
        assert!(!matches!(verdict, Verdict::CertifiedNotIrreducible { .. }));
        if verdict.is_certified() {
            assert_eq!(quick_negative(&d), None);
        }
    }
    println!("PASS verdict consistency: no false negatives, detectors exclusive with certificates");
}

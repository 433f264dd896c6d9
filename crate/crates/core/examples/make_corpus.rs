//! Regenerate the bundled corpus under `corpus/` at the workspace root.
//!
//! The diagram files are the canonical serializations of the library's
//! standard constructions; the certificate files come from the bounded
//! search, so everything written here re-verifies by construction.

use std::path::PathBuf;

use sgcert::certify::auto_certify;
use sgcert::contraction::contract;
use sgcert::diagram::{shapes, Diagram};
use sgcert::disk::verify_good_disk;
use sgcert::sgd;

fn main() {
    let dir = match std::env::args().nth(1) {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus"),
    };
    std::fs::create_dir_all(&dir).expect("create corpus dir");

    let write = |name: &str, text: &str| {
        let path = dir.join(name);
        std::fs::write(&path, text).expect("write corpus file");
        println!("wrote {}", path.display());
    };
    let write_diagram = |name: &str, d: &Diagram| {
        write(name, &sgd::serialize(d));
    };
    let write_cert = |name: &str, initial: &str, steps: &[sgcert::disk::DiskSpec]| {
        let mut text = format!("cert 1\ninitial {initial}\n");
        for s in steps {
            text.push_str(&format!("step {}\n", s.to_text()));
        }
        write(name, &text);
    };

    write_diagram("unknot.sgd", &shapes::marked_circle());
    write_diagram("hopf.sgd", &shapes::hopf_link());
    write_diagram("trefoil.sgd", &shapes::trefoil());
    write_diagram("borromean.sgd", &shapes::borromean_rings());
    write_diagram("c0.sgd", &shapes::theta());
    for n in 1..=4 {
        write_diagram(&format!("c{n}.sgd"), &shapes::ring_chain(n));
    }
    write_diagram("fig14.sgd", &shapes::theta_with_rings());

    write_cert("unknot.cert", "unknot.sgd", &[]);
    write_cert("trefoil.cert", "trefoil.sgd", &[]);
    write_cert("c0.cert", "c0.sgd", &[]);

    let hopf = auto_certify(&shapes::hopf_link(), 2, 1).expect("hopf certificate");
    write_cert("hopf.cert", "hopf.sgd", &hopf.steps);

    let borromean = auto_certify(&shapes::borromean_rings(), 2, 1).expect("borromean certificate");
    assert_eq!(borromean.steps.len(), 2);
    write_cert("borromean.cert", "borromean.sgd", &borromean.steps);

    // Intermediate stages of the borromean chain.
    let d0 = sgd::canonicalize_arcs(&shapes::borromean_rings());
    let v1 = verify_good_disk(&d0, &borromean.steps[0]).expect("step 1 disk");
    let d1 = contract(&d0, &v1).expect("step 1");
    write_diagram("fig12b.sgd", &d1);
    let v2 = verify_good_disk(&d1, &borromean.steps[1]).expect("step 2 disk");
    let d2 = contract(&d1, &v2).expect("step 2");
    write_diagram("fig12c.sgd", &d2);

    for n in 1..=4 {
        let cert = auto_certify(&shapes::ring_chain(n), n, 1)
            .unwrap_or_else(|| panic!("chain {n} certificate"));
        assert_eq!(cert.steps.len(), n);
        write_cert(&format!("c{n}.cert"), &format!("c{n}.sgd"), &cert.steps);
    }

    let fig14 = auto_certify(&shapes::theta_with_rings(), 4, 4).expect("fig14 certificate");
    write_cert("fig14.cert", "fig14.sgd", &fig14.steps);
}

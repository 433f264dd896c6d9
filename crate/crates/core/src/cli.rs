//! Command-line interface.
//!
//! Exit codes, stable per failure class: 0 success (for certify-style
//! commands: a positive verdict), 2 parse error, 3 invalid diagram,
//! 4 unknown verdict / nothing found, 5 certified negative.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::certify::{
    auto_certify, nontriviality_report, quick_negative, verify_certificate, Certificate, Verdict,
};
use crate::contraction::contract;
use crate::diagram::Diagram;
use crate::disk::{find_visible_disks, verify_good_disk};
use crate::multigraph::CutPointReport;
use crate::render::render_svg;
use crate::sgd;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;
pub const EXIT_NEGATIVE: i32 = 5;

#[derive(Parser)]
#[command(
    name = "sgcert",
    about = "Certify irreducibility of spatial graphs from .sgd diagrams",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check the structural invariants of a diagram file.
    Validate { file: PathBuf },
    /// Summarize the abstract graph, cut points, base criterion and quick
    /// negative detectors.
    Analyze { file: PathBuf },
    /// List every verified good disk up to a cycle length.
    FindDisks {
        file: PathBuf,
        #[arg(long = "max-len", default_value_t = 2)]
        max_len: usize,
    },
    /// Contract one declared disk and print the resulting diagram.
    Contract {
        file: PathBuf,
        /// Disk declaration, e.g. "cycle=s1 face=F3".
        #[arg(long)]
        disk: String,
    },
    /// Verify a certificate file.
    Certify { file: PathBuf },
    /// Search for a certificate within a step and cycle-length budget.
    AutoCertify {
        file: PathBuf,
        #[arg(long = "max-steps", default_value_t = 3)]
        max_steps: usize,
        #[arg(long = "max-len", default_value_t = 2)]
        max_len: usize,
        /// Write the found certificate (inline initial diagram) here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Render a diagram to SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

fn load_diagram(path: &Path) -> Result<Diagram, i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(EXIT_PARSE);
        }
    };
    match sgd::parse(&text) {
        Ok(d) => Ok(d),
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            Err(EXIT_PARSE)
        }
    }
}

fn require_valid(d: &Diagram, path: &Path) -> Result<(), i32> {
    let report = d.validate();
    if report.is_valid() {
        Ok(())
    } else {
        eprintln!("error: {} is not a valid diagram:\n{report}", path.display());
        Err(EXIT_INVALID)
    }
}

fn print_cut_report(report: &CutPointReport) {
    println!("connected: {}", report.connected);
    let fmt_set = |it: Vec<String>| if it.is_empty() { "none".to_string() } else { it.join(" ") };
    println!(
        "cut vertices: {}",
        fmt_set(report.cut_vertices.iter().map(|v| format!("v{v}")).collect())
    );
    println!(
        "bridge edges: {}",
        fmt_set(report.bridge_edges.iter().map(|e| format!("e{e}")).collect())
    );
    println!(
        "loops at branch vertices: {}",
        fmt_set(
            report
                .loops_at_branch_vertices
                .iter()
                .map(|(v, e)| format!("(v{v},e{e})"))
                .collect()
        )
    );
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Validate { file } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let report = d.validate();
            println!("{report}");
            if report.is_valid() {
                EXIT_OK
            } else {
                EXIT_INVALID
            }
        }
        Command::Analyze { file } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let negative = quick_negative(&d);
            match negative {
                Some(r) => println!("quick negative: {r}"),
                None => println!("quick negative: none"),
            }
            let report = d.validate();
            if !report.is_valid() {
                println!("diagram invalid: {report}");
                return EXIT_INVALID;
            }
            let a = d.abstract_graph();
            println!(
                "abstract graph: vertices={} edges={} circles={}",
                a.graph.vertices().len(),
                a.graph.edge_count(),
                a.graph.circle_count()
            );
            print_cut_report(&a.graph.cut_points());
            println!("base criterion: {}", a.graph.is_base_irreducible());
            EXIT_OK
        }
        Command::FindDisks { file, max_len } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(code) => return code,
            };
            if let Err(code) = require_valid(&d, &file) {
                return code;
            }
            let d = sgd::canonicalize_arcs(&d);
            for spec in find_visible_disks(&d, max_len) {
                println!("disk {}", spec.to_text());
            }
            EXIT_OK
        }
        Command::Contract { file, disk } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(code) => return code,
            };
            if let Err(code) = require_valid(&d, &file) {
                return code;
            }
            let d = sgd::canonicalize_arcs(&d);
            let spec = match sgd::parse_disk_spec(&disk) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: --disk: {e}");
                    return EXIT_PARSE;
                }
            };
            let verified = match verify_good_disk(&d, &spec) {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("disk rejected: {e}");
                    return EXIT_UNKNOWN;
                }
            };
            match contract(&d, &verified) {
                Ok(out) => {
                    print!("{}", sgd::serialize(&out));
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("contraction failed: {e}");
                    EXIT_UNKNOWN
                }
            }
        }
        Command::Certify { file } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", file.display());
                    return EXIT_PARSE;
                }
            };
            let parsed = match sgd::parse_certificate(&text, file.parent()) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {}: {e}", file.display());
                    return EXIT_PARSE;
                }
            };
            let cert = Certificate {
                initial: parsed.initial,
                steps: parsed.steps,
            };
            if let Some(reason) = quick_negative(&cert.initial) {
                println!("verdict: CertifiedNotIrreducible ({reason})");
                return EXIT_NEGATIVE;
            }
            let verdict = verify_certificate(&cert);
            match &verdict {
                Verdict::CertifiedIrreducible { trace } => {
                    println!("verdict: CertifiedIrreducible");
                    print!("{trace}");
                    let report = nontriviality_report(&cert, &verdict);
                    println!("{report}");
                    EXIT_OK
                }
                Verdict::CertifiedNotIrreducible { reason } => {
                    println!("verdict: CertifiedNotIrreducible ({reason})");
                    EXIT_NEGATIVE
                }
                Verdict::Unknown { diagnostics } => {
                    println!("verdict: Unknown");
                    println!("{diagnostics}");
                    EXIT_UNKNOWN
                }
            }
        }
        Command::AutoCertify {
            file,
            max_steps,
            max_len,
            emit,
        } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(code) => return code,
            };
            if let Some(reason) = quick_negative(&d) {
                println!("verdict: CertifiedNotIrreducible ({reason})");
                return EXIT_NEGATIVE;
            }
            if let Err(code) = require_valid(&d, &file) {
                return code;
            }
            match auto_certify(&d, max_steps, max_len) {
                Some(cert) => {
                    println!("found certificate with {} step(s)", cert.steps.len());
                    for s in &cert.steps {
                        println!("step {}", s.to_text());
                    }
                    if let Some(path) = emit {
                        let text = sgd::write_certificate(
                            &sgd::CertificateFile {
                                initial: cert.initial.clone(),
                                steps: cert.steps.clone(),
                            },
                            None,
                        );
                        if let Err(e) = std::fs::write(&path, text) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return EXIT_PARSE;
                        }
                    }
                    match verify_certificate(&cert) {
                        Verdict::CertifiedIrreducible { .. } => EXIT_OK,
                        other => {
                            eprintln!("internal error: found certificate fails replay: {other:?}");
                            EXIT_UNKNOWN
                        }
                    }
                }
                None => {
                    println!("no certificate found within budget");
                    EXIT_UNKNOWN
                }
            }
        }
        Command::Render { file, out } => {
            let d = match load_diagram(&file) {
                Ok(d) => d,
                Err(code) => return code,
            };
            if let Err(code) = require_valid(&d, &file) {
                return code;
            }
            let svg = render_svg(&d);
            if let Err(e) = std::fs::write(&out, svg) {
                eprintln!("error: cannot write {}: {e}", out.display());
                return EXIT_PARSE;
            }
            EXIT_OK
        }
    }
}

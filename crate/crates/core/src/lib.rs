//! Certify irreducibility of spatial graphs from diagram data.
//!
//! A spatial graph is a graph embedded in the 3-sphere; it is irreducible
//! when no embedded 2-sphere separates it and none cuts it at a single
//! point. This crate models spatial-graph diagrams as combinatorial maps,
//! verifies "visibly good" spanning disks, contracts them, and chains
//! contractions into machine-checkable certificates: if the fully
//! contracted graph is connected with no topological cut points, the
//! original embedding is irreducible.
//!
//! Everything is immutable after construction and all operations are pure,
//! so values can be shared freely across threads.
//!
//! ```
//! use sgcert::{auto_certify, verify_certificate, diagram::shapes};
//!
//! let cert = auto_certify(&shapes::borromean_rings(), 2, 1).unwrap();
//! assert_eq!(cert.steps.len(), 2);
//! assert!(verify_certificate(&cert).is_certified());
//! ```

pub mod certify;
pub mod cli;
pub mod contraction;
pub mod diagram;
pub mod disk;
pub mod multigraph;
pub mod render;
pub mod sgd;

pub use certify::{auto_certify, nontriviality_report, quick_negative, verify_certificate, Certificate, Verdict};
pub use contraction::{contract, ContractError};
pub use diagram::{Diagram, Face, Strand, ValidationReport};
pub use disk::{find_visible_disks, verify_good_disk, DiskSpec, VerifiedDisk};
pub use multigraph::{CutPointReport, Multigraph};

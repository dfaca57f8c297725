//! Hybrid graphs and the Cohen–Macaulay property of their edge ideals.
//!
//! The crate covers
//!
//! * simple graphs with the predicates used throughout: cliques,
//!   chordality, independent sets, vertex covers, unmixedness
//!   ([`graph`]);
//! * facet-based simplicial complexes with Stanley–Reisner generators and
//!   free vertices ([`complex`]) and shelling certificates ([`shelling`]);
//! * construction and recognition of hybrid graphs, their facet blocks
//!   and canonical shelling order ([`hybrid`]);
//! * the Cohen–Macaulay test for chordal graphs ([`chordal`]);
//! * JSON / text formats and Macaulay2 / Singular emitters ([`io`],
//!   [`ideal`]);
//! * seeded random generators and brute-force reference checks used by the
//!   test suites and the `selftest` command ([`random`], [`oracle`],
//!   [`selftest`]).

pub mod chordal;
pub mod complex;
pub mod error;
pub mod graph;
pub mod hybrid;
pub mod ideal;
pub mod io;
pub mod oracle;
pub mod random;
pub mod selftest;
pub mod shelling;

pub use chordal::{chordal_cm_check, ChordalReport};
pub use complex::{MonomialGenerators, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use hybrid::{recognize_hybrid, FacetBlock, HybridDecomposition, HybridSpec, VariableOrder};
pub use shelling::{
    cm_via_shellability, find_shelling, is_shelling_order, CmVerdict, ShellingCertificate,
    ShellingCheck, ShellingSearch, Witness, DEFAULT_BUDGET,
};

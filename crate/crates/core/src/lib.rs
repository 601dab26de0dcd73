//! Perfect digraphs at desk scale.
//!
//! A digraph is perfect when every induced subdigraph has dichromatic number
//! equal to its clique number. This crate computes both exactly, checks
//! perfection definitionally and structurally (perfect symmetric part, no
//! induced directed cycle of length three or more), compares digraphs by
//! their P4C signatures, builds cotrees of symmetric parts and studies the
//! digraphs that avoid the five small patterns.
//!
//! Sweeps in [`verify`] run on rayon when the `parallel` feature is on.

pub mod cotree;
pub mod digraph;
pub mod error;
pub mod format;
pub mod gen;
pub mod patterns;
pub mod perfection;
pub mod solvers;
pub mod structure;
pub mod verify;

pub use cotree::{build_cotree, cotree_to_graph, Cotree, Join};
pub use digraph::{
    all_digraphs, all_symmetric, ComponentPartition, Digraph, VertexSet, MAX_VERTICES,
};
pub use error::{Error, Result};
pub use format::{parse_digraph, render_digraph, render_dot};
pub use gen::{named_instance, p4c_pair, random_digraph, random_f_free, GenSpec, Named, PairMode};
pub use patterns::{
    are_p4c_isomorphic, classify_triple, find_induced_directed_cycle, induces_p4_in_symmetric,
    is_f_free, p4c_signature, InducedCycleWitness, PatternSignature, TriplePattern,
};
pub use perfection::{
    is_perfect_bruteforce, is_perfect_structural, is_perfect_undirected, Method, PerfectionReport,
    Witness,
};
pub use solvers::{
    clique_number, dichromatic_number, is_proper_coloring, CliqueWitness, ColoringResult,
};
pub use structure::{
    check_f_free_structure, min_path_cover, ComponentStructure, PathCoverResult, Quotient,
};

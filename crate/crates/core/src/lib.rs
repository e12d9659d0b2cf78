//! Token graphs, Hamiltonian factorizations and certified decompositions of
//! 2-token graphs into planar or projective-planar subgraphs of girth at
//! least four.
//!
//! Every claimed thickness value is backed by a [`DecompositionCertificate`]
//! whose edge partition, per-part rotation systems, girths and lower bound
//! can be re-checked from raw data by [`verify_certificate`].

pub mod cli;
pub mod embedding;
pub mod error;
pub mod factorization;
pub mod graph;
pub mod report;
pub mod thickness;
pub mod token;

pub use embedding::{
    max_edges_girth4, planarity_test, projective_embedding_f2_cycle, trace_faces, verify_witness,
    EmbeddingWitness, Planarity, RotationSystem, Surface,
};
pub use error::{Error, Result};
pub use factorization::{
    bipartite_cycles, bipartite_paths, verify_factorization, walecki_cycles, walecki_paths,
    Factorization, FactorizationKind,
};
pub use graph::{
    girth, named_family, parse_graph6, validate_partition, write_graph6, EdgePartition, Family,
    Girth, Graph, PartitionReport, VertexSequence,
};
pub use report::Report;
pub use token::{induced_partition, token_graph, verify_line_graph_correspondence, TokenGraph};
pub use thickness::{
    brute_force_theta4, decompose_token, lower_bound_girth4, theorem_bound_arithmetic,
    theta4_line_complete, thetas_line_complete, verify_certificate, DecompositionCertificate,
    SearchOutcome,
};

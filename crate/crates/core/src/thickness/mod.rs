//! Girth-4 thickness: lower bounds, the factorization-driven decomposition
//! pipelines, an exhaustive oracle, and certificate verification.

mod bounds;
mod certificate;
mod oracle;
mod pipeline;

pub use bounds::{lower_bound_girth4, theorem_bound_arithmetic};
pub use certificate::{verify_certificate, CertificateRecord, DecompositionCertificate};
pub use oracle::{
    brute_force_decomposition, brute_force_theta4, brute_force_theta4_with_limit, SearchOutcome,
    DEFAULT_EDGE_LIMIT,
};
pub use pipeline::{decompose_token, theta4_line_complete, thetas_line_complete};

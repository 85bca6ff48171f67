//! Extremal constructions, dense spectra, and exhaustive verification for the
//! least adjacency eigenvalue of graph complements with prescribed vertex
//! connectivity.
//!
//! The crate is organized around five pieces:
//!
//! - [`graph`]: bitset-backed simple graphs with complement, induced
//!   subgraphs, and exact vertex connectivity (Menger via max-flow).
//! - [`matching`]: bipartite maximum matching, Hall violators, and
//!   augmenting-path maximality certificates.
//! - [`spectra`]: a cyclic Jacobi eigensolver plus Rayleigh quotients,
//!   eigen-residuals, sign partitions, and edge-addition comparisons.
//! - [`extremal`]: the two-clique families `B1`, `B2`, `B3`, their quotient
//!   polynomials, least-root extraction, and the predicted class minimum.
//! - [`oracle`]: exhaustive desk-scale search over connected graphs with
//!   given connectivity, minimizer extraction, and structural claim checks.
//!
//! Everything is deterministic: identical inputs produce identical outputs,
//! including under partitioned parallel search.

pub mod extremal;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod spectra;

pub use extremal::{ExtremalParams, Family, QuotientPoly};
pub use graph::{Graph, VertexCut};
pub use matching::Matching;
pub use oracle::{SearchOptions, SearchResult, Verdict};
pub use spectra::{SignPartition, SpectralResult};

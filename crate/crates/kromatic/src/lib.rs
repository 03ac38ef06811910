#![forbid(unsafe_code)]

//! Exact-arithmetic expansions of the Kromatic symmetric function.
//!
//! The Kromatic symmetric function of a vertex-weighted graph is the sum,
//! over all proper set colorings (each vertex receives a nonempty set of
//! colors, adjacent vertices receive disjoint sets), of the monomials
//! `∏_v ∏_{i ∈ α(v)} x_i^{ω(v)}`. This crate computes its expansion in the
//! K-power-sum basis `p̄_λ` to an explicit truncation degree, entirely in
//! exact integer/rational arithmetic:
//!
//! * [`graph`] — weighted graphs, induced subgraphs, independent sets, and
//!   independence polynomials;
//! * [`partition`] — integer partitions, refinement, and the canonical
//!   ordering used for triangular basis transitions;
//! * [`series`] — truncated power series over exact rationals (products,
//!   logarithm, generalized binomial powers);
//! * [`expansion`] — the exponent vectors `a_W(k)` of each induced
//!   subgraph's independence polynomial, computed by two independent
//!   recurrences, and the p̄-expansion assembled from them by
//!   inclusion-exclusion over vertex subsets;
//! * [`oracle`] — independent brute-force verification paths: the
//!   stable-set-cover expansion in the `m̄̃` basis with a triangular basis
//!   inversion, and direct proper-set-coloring enumeration;
//! * [`cli`] — the `kromatic` command-line front end.
//!
//! The expansions are genuinely infinite series, so every expansion
//! operation takes an explicit truncation degree `D` and computes the exact
//! coefficients of all `p̄_λ` with `|λ| ≤ D`.

pub mod cli;
pub mod expansion;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod series;

pub use expansion::{ExponentVector, SubgraphExponentTable, SymExpansion};
pub use graph::{IntPolynomial, VertexSet, WeightedGraph};
pub use oracle::{MonomialTable, StableSetCover, VerificationReport};
pub use partition::Partition;
pub use series::TruncatedSeries;

//! Squares of 2-degenerate graphs.
//!
//! Exact clique number and maximum average degree, the tight constructions
//! `G_D`, and the token-passing extraction of a nice triple with the
//! multigraph diagnostics built on top of it.

pub mod clique;
pub mod constructions;
pub mod degeneracy;
pub mod density;
pub mod diagnostics;
pub mod error;
pub mod extraction;
mod flow;
pub mod graph;
pub mod hstar;
pub mod pairs;
pub mod pipeline;
pub mod square;

pub use clique::{max_clique, max_clique_oracle, max_clique_with_budget, CliqueResult};
pub use constructions::{build_tight, random_2degenerate, tight_clique_size, TightInstance};
pub use degeneracy::{degeneracy, degeneracy_order, degeneracy_ordering, verify_order};
pub use density::{mad, mad_oracle, Density};
pub use diagnostics::{DiagnosticRow, Rational, Relation};
pub use error::{Error, Result};
pub use extraction::{extract, extract_with, verify_nice, ExtractionResult, TokenRule, TIGHT_BOUND_MIN_DEGREE};
pub use graph::{Graph, GraphBuilder, Label, Multigraph, VertexOrder, VertexSet};
pub use hstar::{build_hstar, claim_diagnostics, partition, HStar, Partition};
pub use pairs::{build_jstar, enumerate_integer_solutions, pair_statistics, JStar, PairStatistics};
pub use pipeline::{analyse, analyse_with, Analysis};
pub use square::square;

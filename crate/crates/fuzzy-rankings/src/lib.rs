//! Fuzzy rankings: rankings with graded position membership.
//!
//! A crisp ranking places each of n objects on exactly one position. A fuzzy
//! ranking relaxes that: each object gets a distribution over positions, so
//! entry (i, j) of its n by n matrix is the degree to which object i sits at
//! position j+1. Rows always sum to 1 ([`Mode::RowStochastic`]); when columns
//! do too the matrix is doubly stochastic ([`Mode::Strict`]) and behaves like
//! a convex blend of ordinary rankings.
//!
//! What the crate does with them:
//!
//! * validate matrices and report every violated constraint
//!   ([`FuzzyRanking::new`], [`CrispRanking::from_matrix`],
//!   [`PenaltyMatrix::new`]),
//! * compare rankings: Kendall's tau for crisp pairs ([`kendall_tau`]),
//!   penalty-weighted dissimilarity and similarity for fuzzy pairs
//!   ([`difference`], [`dissimilarity`], [`similarity`]),
//! * order objects by cumulative dominance ([`cumulative`], [`dominates`],
//!   [`dominance_report`]),
//! * measure indecisiveness through row entropies ([`indecisiveness`],
//!   [`index_of_indecisiveness`], [`decisiveness_weights`]),
//! * aggregate a panel's rankings by weighted mean ([`mean`],
//!   [`mean_weighted_by_decisiveness`]),
//! * decompose a doubly stochastic ranking into a convex mix of crisp ones
//!   ([`decompose`]).
//!
//! Each capability has a runnable walkthrough under `examples/`:
//!
//! ```text
//! cargo run --example validate_ranking
//! cargo run --example compare_rankings
//! cargo run --example order_objects
//! cargo run --example measure_indecisiveness
//! cargo run --example aggregate_group
//! cargo run --example decompose_ranking
//! ```
//!
//! The same operations are exposed as a command-line tool reading CSV or
//! JSON matrix files; see [`cli::run_cli`] or `fuzzy-rankings --help`.

pub mod aggregate;
pub mod birkhoff;
pub mod cli;
pub mod crisp;
pub mod discrepancies;
pub mod error;
pub mod fuzzy;
pub mod indecisiveness;
pub mod io;
pub mod labels;
pub mod matrix;
pub mod ordering;
pub mod penalty;
pub mod report;
pub mod similarity;
pub mod tolerance;
pub mod validation;

pub use aggregate::{mean, mean_weighted_by_decisiveness, WeightVector};
pub use birkhoff::decompose;
pub use crisp::CrispRanking;
pub use error::{Error, Result};
pub use fuzzy::{product, FuzzyRanking, Mode};
pub use indecisiveness::{
    decisiveness_weights, entropy, indecisiveness, index_of_indecisiveness, max_indecisiveness,
    IndecisivenessReport,
};
pub use labels::ObjectLabels;
pub use matrix::SquareMatrix;
pub use ordering::{cumulative, dominance_report, dominates, CumulativeMatrix, DominanceOutcome, DominanceReport};
pub use penalty::PenaltyMatrix;
pub use similarity::{
    difference, dissimilarity, kendall_tau, max_dissimilarity, similarity, similarity_crisp,
    DifferenceMatrix, SimilarityReport,
};
pub use tolerance::{ToleranceConfig, DEFAULT_EPS};
pub use validation::{ValidationError, Violation};

//! Exact likelihood-ratio analysis for mixed DNA profile evidence.
//!
//! The crate computes likelihood ratios (LRs) and posterior probabilities
//! with arbitrary-precision rationals, and makes visible the gap between a
//! large LR and a large posterior probability of inclusion:
//!
//! - [`bayes`]: probability and odds forms of Bayes' theorem.
//! - [`world`]: finite outcome spaces for exhaustive and non-exhaustive
//!   hypothesis pairs.
//! - [`genotype`]: genotypes, mixtures, contributor enumeration and voids.
//! - [`ball`]: closed forms for numbered-ball analogues of profile matching.
//! - [`oracle`]: brute-force and Monte Carlo cross-checks.
//! - [`statement`]: expert-report wording with its caveats.
//! - [`scenario`] and [`report`]: scenario files and rendered reports.

pub mod analysis;
pub mod ball;
pub mod bayes;
pub mod display;
pub mod error;
pub mod exact;
pub mod genotype;
pub mod oracle;
pub mod report;
pub mod scenario;
pub mod statement;
pub mod world;

pub use analysis::AnalysisResult;
pub use error::{Error, Result};
pub use exact::{parse_rational, Odds, Prob, ProbativeDirection, Ratio};

//! Fuzzy-number-valued functions on a sampled domain: the uniform metric,
//! convex combinations with `[0, 1]`-valued multipliers, a constructive
//! near-best approximant from a class `W`, and the best real-valued
//! approximant under the core convention.
//!
//! Fuzzy numbers are stored in level-set form on a shared [`LevelGrid`];
//! functions are sampled on a shared [`DomainGrid`] in `[0, 1]`.

pub mod best;
pub mod cli;
pub mod conv;
pub mod error;
pub mod fixtures;
pub mod fuzzy;
pub mod io;
pub mod real;
pub mod space;

pub use best::{
    construct_approximant, gamma_profile, global_distance_oracle, oracle_report,
    pointwise_distance, ApproxReport, Attainment, OracleReport,
};
pub use conv::{bump, telescoping_psis, BumpSpec, FunctionClass, IndexRun, Membership};
pub use error::{Endpoint, Error, ErrorClass, Result};
pub use fuzzy::{FuzzyNumber, Interval, LevelGrid};
pub use real::{
    best_real_distance, dist_to_real, midpoint_selector, radius, Convention, RealApproxReport,
};
pub use space::{convex_combine, DomainGrid, FuzzyFunction, ScalarFunction};

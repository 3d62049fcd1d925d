//! Exact enumeration of `(s,t)`-core partitions.
//!
//! - [`partition`]: partitions, hook lengths, perimeter and t-core tests
//! - [`betaset`]: first-column hook lengths and their t-core characterization
//! - [`search`]: order-ideal search over semigroup gaps, perimeter-indexed
//!   enumeration, nested twin-free tuples
//! - [`bijection`]: compositions into 1s and 2s and the perimeter-preserving
//!   distinct/odd correspondence
//! - [`sequences`]: Fibonacci, Catalan, binomial closed forms and the
//!   generalized Fibonacci polynomials
//! - [`verify`]: claim registry checking enumerations against closed forms
//! - [`table`]: grids of distinct-part core counts
//! - [`json`]: stable JSON documents for enumerations and reports

pub mod betaset;
pub mod bijection;
pub mod error;
pub mod json;
pub mod partition;
pub mod search;
pub mod sequences;
pub mod table;
pub mod verify;

pub use betaset::{from_beta, is_twin_free, to_beta, BetaSet};
pub use bijection::{
    compositions_of, distinct_to_odd, inverse_lambda_d, inverse_lambda_o, lambda_d, lambda_o,
    odd_to_distinct, CompositionC,
};
pub use error::{Error, Result};
pub use partition::Partition;
pub use search::{
    count_core, count_twin_free_tuples, enumerate_core, enumerate_core_bounded,
    enumerate_distinct_by_perimeter, enumerate_odd_by_perimeter, CoreSearch, EnumerationResult, Filter,
    GapPoset,
};
pub use sequences::{
    anderson_count, catalan, check_core_twinfree_identity, fibonacci, fms_selfconjugate_count, m_poly,
    n_poly, CountPolynomial,
};

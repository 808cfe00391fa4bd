//! Independent ground truth: Smith normal form and binomial systems, Vieta and
//! Newton identities, simplicial homology, and floating bivariate root finding.

pub mod binomial;
pub mod homology;
pub mod numeric;
pub mod snf;
pub mod univariate;

use serde::{Deserialize, Serialize};

pub use binomial::{binomial_aggregate, binomial_system};
pub use homology::{degree_by_homology, fundamental_cycle};
pub use numeric::{numeric_bivariate_aggregate, relative_error, NumericAggregate};
pub use snf::{smith_normal_form, SnfResult};
pub use univariate::{lattice_length, univariate_aggregate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Product,
    Sum,
}

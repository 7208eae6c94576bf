//! Mass-action reaction networks: structure, tree constants, toric binomials and steady
//! states.

pub mod analysis;
pub mod binomials;
pub mod network;
pub mod rates;
pub mod steady;
pub mod trees;

pub use analysis::{analyze, cayley_matrix, deficiency, NetworkAnalysis};
pub use binomials::{toric_binomials, ToricBinomial};
pub use network::{parse_network, Network, Rate, Reaction};
pub use rates::{build_rate_matrix, Bindings, RateMode};
pub use steady::{
    birch_point, birch_point_in_class, birch_point_in_class_with, birch_point_with, conservation_laws, simulate, simulate_with, SteadyState, Tolerances,
    Trajectory,
};
pub use trees::{tree_constants, TreeConstants};

use crate::exactcore::MatrixError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CrnError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("reaction from a complex to itself: {0}")]
    Loop(String),
    #[error("rate `{0}` must be positive")]
    NonPositiveRate(String),
    #[error("rate symbol `{0}` is given two different values")]
    ConflictingRate(String),
    #[error("invalid network: {0}")]
    Invalid(String),
    #[error("rate symbol `{0}` has no value")]
    UnboundRate(String),
    #[error("a numeric computation was asked for symbolic rates")]
    SymbolicRates,
    #[error("some linkage class is not strongly connected")]
    NotWeaklyReversible,
    #[error("rates are not complex balanced: log-linear residual {residual:e}")]
    NotComplexBalanced { residual: f64 },
    #[error("symbolic tree constants are limited to classes of 8 complexes, got {0}")]
    ClassTooLarge(usize),
    #[error("invalid initial data: {0}")]
    InvalidInitial(String),
    #[error("concentration of {species} went negative at t = {time}; try a smaller dt")]
    NegativeConcentration { species: String, time: f64 },
    #[error("conservation law drifted by {drift:e} at t = {time}")]
    ConservationViolated { drift: f64, time: f64 },
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

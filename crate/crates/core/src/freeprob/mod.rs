//! Classical and free cumulants, multiplicative sequences and the noncommutative
//! cumulant series.

pub mod ncseries;
pub mod oracle;
pub mod transforms;

pub use ncseries::{nc_cumulant_series, NcCumulants};
pub use oracle::{nc_partitions, set_partitions};
pub use transforms::{
    classical_cumulants, classical_cumulants_to_moments, free_cumulants_to_moments, hirzebruch_k, l_genus_log,
    moments_to_free_cumulants, todd_log, CumulantSeq, MomentSeq,
};

use crate::exactcore::SeriesError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FreeProbError {
    #[error("moment sequences start with m0 = 1")]
    MomentZero,
    #[error("at least one moment beyond m0 is required")]
    EmptySequence,
    #[error("log coefficients must start with 1")]
    LeadingLogCoefficient,
    #[error("partition enumeration is limited to n <= 10, got {0}")]
    OracleTooLarge(usize),
    #[error("order {0} exceeds the supported maximum 8")]
    OrderTooLarge(usize),
    #[error("non-finite floating-point input")]
    NonFinite,
    #[error("series has no linear leading term")]
    NotDiffeomorphism,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

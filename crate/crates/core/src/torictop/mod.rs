//! Simplicial spheres, quasitoric manifolds and their characteristic numbers.

pub mod bridge;
pub mod complex;
pub mod delzant;
pub mod numbers;
pub mod quasitoric;

pub use bridge::{crn_to_toric, ToricBridge};
pub use complex::{SimplicialComplex, SphereCheck, SphereReport};
pub use delzant::{delzant_to_quasitoric, DelzantData, DelzantPolytope};
pub use numbers::{
    chern_number, chern_numbers, hamiltonian_numbers, mxi_numbers, Bundle, HamiltonianConvention, HamiltonianNumbers, MxiClass,
};
pub use quasitoric::{v, validate_quasitoric, QuasitoricData, QuasitoricJson, ValidityReport};

use crate::crn::CrnError;
use crate::exactcore::MatrixError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TopError {
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error("invalid quasitoric data: {0}")]
    Invalid(String),
    #[error("expected degree {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("unknown variable `{0}`, expected v1..vm")]
    UnknownVariable(String),
    #[error("symplectic class must be linear in v1..vm, got {0}")]
    ClassDegree(String),
    #[error("inconsistent reduction: {0}")]
    InconsistentReduction(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("malformed polytope: {0}")]
    PolytopeShape(String),
    #[error("at most {max} facets are supported, got {found}")]
    TooManyFacets { found: usize, max: usize },
    #[error("polytope is unbounded or empty: {0}")]
    Unbounded(String),
    #[error("vertex {vertex} lies on {facets} facets")]
    NonSimple { vertex: String, facets: usize },
    #[error("vertex {vertex} is not unimodular: {detail}")]
    NotDelzant { vertex: String, detail: String },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("deficiency is {0}, expected 0")]
    DeficiencyNonzero(usize),
    #[error("network is not weakly reversible")]
    NotWeaklyReversible,
    #[error("Cayley simplex is not smooth: elementary divisors {divisors:?}")]
    NonSmooth { divisors: Vec<i64> },
    #[error(transparent)]
    Crn(#[from] CrnError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

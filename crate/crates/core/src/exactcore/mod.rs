//! Exact arithmetic, linear algebra and power series shared by every other module.

pub mod lattice;
pub mod lincomb;
pub mod matrix;
pub mod multiseries;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;

pub use lincomb::{LinComb, Monoid, Tensor};
pub use matrix::{determinant, IntMatrix, Matrix, MatrixError, PolyMatrix, RatMatrix};
pub use multiseries::MultiSeries;
pub use poly::{Monomial, SparsePoly, Var};
pub use rational::{format_rational, parse_rational, q, qr, Q};
pub use ring::{QAlgebra, Ring};
pub use series::{SeriesError, TruncSeries};

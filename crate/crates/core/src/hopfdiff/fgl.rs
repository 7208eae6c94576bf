//! The formal group law `F(x,y) = Z(Z^{⟨−1⟩}(x) + Z^{⟨−1⟩}(y))` over NSymm⊗Q with
//! central `x`, `y`.

use serde::Serialize;

use super::ln::diffeo_from;
use crate::exactcore::poly::SparsePoly;
use crate::exactcore::{MultiSeries, Ring, SeriesError, TruncSeries};
use crate::ncsf::abelianize_poly;
use crate::ncsf::nsym::{diffeo_series, Ncf};

/// Largest supported truncation order.
pub const MAX_FGL_ORDER: usize = 8;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum FglError {
    #[error("order {0} exceeds the supported maximum {MAX_FGL_ORDER}")]
    OrderTooLarge(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `F(x,y)` truncated at total degree `order`.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalGroupLaw<R> {
    pub law: MultiSeries<R>,
}

/// Axiom checks; `first_associativity_failure` is the lowest total degree where
/// `F(F(x,y),z)` and `F(x,F(y,z))` differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FglReport {
    pub order: usize,
    pub unit: bool,
    pub commutative: bool,
    pub associative: bool,
    pub first_associativity_failure: Option<usize>,
}

/// `f(f⁻¹(x) + f⁻¹(y))` for any diffeomorphism `f` over a ring whose elements commute
/// with `x` and `y`.
pub fn conjugated_additive_law<R: Ring>(f: &TruncSeries<R>) -> Result<FormalGroupLaw<R>, SeriesError> {
    let inv = f.comp_inverse()?;
    let sum = MultiSeries::from_univariate(&inv, 0, 2).add(&MultiSeries::from_univariate(&inv, 1, 2));
    Ok(FormalGroupLaw { law: MultiSeries::compose_univariate(f, &sum)? })
}

/// The law over NSymm⊗Q.
pub fn fgl_over_n(order: usize) -> Result<FormalGroupLaw<Ncf>, FglError> {
    if order > MAX_FGL_ORDER {
        return Err(FglError::OrderTooLarge(order));
    }
    Ok(conjugated_additive_law(&diffeo_series(order))?)
}

/// The commutative law `b(b^{⟨−1⟩}(x) + b^{⟨−1⟩}(y))` over `Q[b_*]`.
pub fn commutative_law(order: usize) -> Result<FormalGroupLaw<SparsePoly>, SeriesError> {
    conjugated_additive_law(&diffeo_from(order, |i| SparsePoly::indexed_var("b", i)))
}

impl<R: Ring> FormalGroupLaw<R> {
    pub fn order(&self) -> usize {
        self.law.order()
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: u32, j: u32) -> R {
        self.law.coeff(&[i, j])
    }

    /// `F(x,0) = x` and `F(0,y) = y`.
    pub fn has_unit(&self) -> bool {
        let n = self.order();
        let x = TruncSeries::variable(n);
        self.law.along(0) == x && self.law.along(1) == x
    }

    pub fn is_commutative(&self) -> bool {
        self.law.permute(&[1, 0]) == self.law
    }

    /// `F(F(x,y),z)` and `F(x,F(y,z))` in three variables.
    pub fn associativity_sides(&self) -> Result<(MultiSeries<R>, MultiSeries<R>), SeriesError> {
        let n = self.order();
        let v = |i| MultiSeries::variable(i, 3, n);
        let xy = self.law.substitute(&[v(0), v(1)])?;
        let yz = self.law.substitute(&[v(1), v(2)])?;
        Ok((self.law.substitute(&[xy, v(2)])?, self.law.substitute(&[v(0), yz])?))
    }

    pub fn report(&self) -> Result<FglReport, SeriesError> {
        let (lhs, rhs) = self.associativity_sides()?;
        let first = lhs.first_difference(&rhs);
        Ok(FglReport {
            order: self.order(),
            unit: self.has_unit(),
            commutative: self.is_commutative(),
            associative: first.is_none(),
            first_associativity_failure: first,
        })
    }
}

impl FormalGroupLaw<Ncf> {
    /// Coefficients mapped under `Z_i ↦ b_i`.
    pub fn abelianize(&self) -> FormalGroupLaw<SparsePoly> {
        FormalGroupLaw { law: self.law.map(|c| abelianize_poly(c, "b")) }
    }

    /// Whether the abelianized law equals the commutative law computed directly.
    pub fn matches_commutative_law(&self) -> Result<bool, SeriesError> {
        Ok(self.abelianize() == commutative_law(self.order())?)
    }
}

//! The one-parameter family `b^H(T) = exp(β·Ψ(T))` over NSymm⊗Q[β].

use super::fgl::MAX_FGL_ORDER;
use crate::exactcore::rational::{factorial, Q};
use crate::exactcore::{Ring, SeriesError, TruncSeries};
use crate::ncsf::nsym::{cartier, InverseSide, Ncf};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum BetaError {
    #[error("order {0} exceeds the supported maximum {MAX_FGL_ORDER}")]
    OrderTooLarge(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A grouplike series whose coefficients are polynomials in `β`.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaSeries {
    /// `by_power[j]` is the coefficient of `β^j`, a series in `T`.
    pub by_power: Vec<TruncSeries<Ncf>>,
}

/// `exp(βΨ(T))` with `Ψ(T) = T·Z′(T)·Z(T)⁻¹` in the grouplike normalization.
pub fn beta_deform(order: usize, side: InverseSide) -> Result<BetaSeries, BetaError> {
    if order > MAX_FGL_ORDER {
        return Err(BetaError::OrderTooLarge(order));
    }
    let psi = cartier(order, side)?.psi_series();
    let mut power = TruncSeries::one(order);
    let mut by_power = vec![power.clone()];
    for j in 1..=order {
        power = power.mul(&psi);
        by_power.push(power.scale(&factorial(j as u32).recip()));
    }
    Ok(BetaSeries { by_power })
}

impl BetaSeries {
    pub fn order(&self) -> usize {
        self.by_power[0].order()
    }

    /// Coefficient of `β^j T^k`.
    pub fn coeff(&self, k: usize, j: usize) -> Ncf {
        self.by_power.get(j).map_or_else(Ncf::zero, |s| s.coeff(k))
    }

    /// The coefficient of `T^k` as a list indexed by powers of `β`.
    pub fn t_coeff(&self, k: usize) -> Vec<Ncf> {
        let mut out: Vec<Ncf> = self.by_power.iter().map(|s| s.coeff(k)).collect();
        while out.len() > 1 && out.last().is_some_and(Ring::is_zero) {
            out.pop();
        }
        out
    }

    /// The series at a rational value of `β`.
    pub fn at(&self, beta: &Q) -> TruncSeries<Ncf> {
        let mut out = TruncSeries::zero(self.order());
        let mut scale = Q::one();
        for s in &self.by_power {
            out = out.add(&s.scale(&scale));
            scale *= beta;
        }
        out
    }

    /// `Σ_j c_j β^j` rendered with `β` exponents.
    pub fn render_coeff(&self, k: usize) -> String {
        let parts: Vec<String> = self
            .t_coeff(k)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => format!("{c}"),
                1 => format!("β·({c})"),
                _ => format!("β^{j}·({c})"),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{q, qr};
    use crate::exactcore::QAlgebra;
    use crate::ncsf::nsym::{z, z_word};

    #[test]
    fn low_order_coefficients() {
        let b = beta_deform(4, InverseSide::Right).unwrap();
        assert_eq!(b.t_coeff(1), vec![Ncf::zero(), z(1)]);
        let z11 = z_word(&[1, 1]);
        let linear = &z(2).scale(&q(2)) - &z11;
        assert_eq!(b.t_coeff(2), vec![Ncf::zero(), linear, z11.scale(&qr(1, 2))]);
    }

    #[test]
    fn zero_and_one() {
        let b = beta_deform(5, InverseSide::Right).unwrap();
        assert_eq!(b.at(&q(0)), TruncSeries::one(5));
        let psi = cartier(5, InverseSide::Right).unwrap().psi_series();
        assert_eq!(b.at(&q(1)), psi.exp().unwrap());
    }

    #[test]
    fn beta_one_first_coefficient_is_z1() {
        let b = beta_deform(3, InverseSide::Right).unwrap().at(&q(1));
        assert_eq!(b.coeff(1), z(1));
    }

    #[test]
    fn order_cap() {
        assert_eq!(beta_deform(9, InverseSide::Right), Err(BetaError::OrderTooLarge(9)));
    }
}

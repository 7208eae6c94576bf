//! Moment–cumulant transforms and multiplicative sequences.

use serde::{Deserialize, Serialize};

use super::FreeProbError;
use crate::exactcore::rational::{factorial, from_f64, serde_q, Q};
use crate::exactcore::{Ring, TruncSeries};

/// Moments `m_0 = 1, m_1, …, m_N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentSeq {
    #[serde(with = "serde_q::vec")]
    moments: Vec<Q>,
}

impl MomentSeq {
    /// Requires `m_0 = 1`.
    pub fn new(moments: Vec<Q>) -> Result<Self, FreeProbError> {
        match moments.first() {
            Some(m0) if m0.is_one() => Ok(MomentSeq { moments }),
            _ => Err(FreeProbError::MomentZero),
        }
    }

    /// `1, m_1, …, m_N` from the higher moments.
    pub fn from_higher(higher: Vec<Q>) -> Self {
        let mut moments = vec![Q::one()];
        moments.extend(higher);
        MomentSeq { moments }
    }

    /// Exact binary-to-rational conversion of each value.
    pub fn from_f64(moments: &[f64]) -> Result<Self, FreeProbError> {
        let exact: Option<Vec<Q>> = moments.iter().map(|&x| from_f64(x)).collect();
        Self::new(exact.ok_or(FreeProbError::NonFinite)?)
    }

    pub fn order(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moments(&self) -> &[Q] {
        &self.moments
    }

    /// `m_n`.
    pub fn get(&self, n: usize) -> Q {
        self.moments.get(n).cloned().unwrap_or_else(Q::zero)
    }
}

/// Cumulants `κ_1, …, κ_N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CumulantSeq {
    #[serde(with = "serde_q::vec")]
    cumulants: Vec<Q>,
}

impl CumulantSeq {
    pub fn new(cumulants: Vec<Q>) -> Self {
        CumulantSeq { cumulants }
    }

    pub fn from_f64(cumulants: &[f64]) -> Result<Self, FreeProbError> {
        let exact: Option<Vec<Q>> = cumulants.iter().map(|&x| from_f64(x)).collect();
        Ok(Self::new(exact.ok_or(FreeProbError::NonFinite)?))
    }

    pub fn order(&self) -> usize {
        self.cumulants.len()
    }

    pub fn cumulants(&self) -> &[Q] {
        &self.cumulants
    }

    /// `κ_n`, 1-based.
    pub fn get(&self, n: usize) -> Q {
        self.cumulants.get(n - 1).cloned().unwrap_or_else(Q::zero)
    }
}

/// `z / f^{⟨−1⟩}(z)` for `f = z + …`, returned to order `n`.
fn z_over_inverse(f: &TruncSeries<Q>, n: usize) -> Result<TruncSeries<Q>, FreeProbError> {
    let inv = f.comp_inverse()?;
    let reduced = inv.shift_down(1).ok_or(FreeProbError::NotDiffeomorphism)?;
    Ok(reduced.inverse()?.truncate(n))
}

/// `K(z) = z/γ^{⟨−1⟩}(z)` with `γ(z) = Σ m_n z^{n+1}`; `κ_n = [zⁿ]K`.
pub fn moments_to_free_cumulants(m: &MomentSeq) -> Result<CumulantSeq, FreeProbError> {
    let n = m.order();
    if n == 0 {
        return Err(FreeProbError::EmptySequence);
    }
    let gamma = TruncSeries::from_fn(n + 1, |k| if k == 0 { Q::zero() } else { m.get(k - 1) });
    let k = z_over_inverse(&gamma, n)?;
    Ok(CumulantSeq::new((1..=n).map(|i| k.coeff(i)).collect()))
}

/// Inverse of [`moments_to_free_cumulants`]: `γ = (w·K(w)⁻¹)^{⟨−1⟩}`.
pub fn free_cumulants_to_moments(k: &CumulantSeq) -> Result<MomentSeq, FreeProbError> {
    let n = k.order();
    let big_k = TruncSeries::from_fn(n, |i| if i == 0 { Q::one() } else { k.get(i) });
    let gamma_inv = TruncSeries::new(big_k.inverse()?.coeffs().to_vec(), n + 1).shift_up(1);
    let gamma = gamma_inv.comp_inverse()?;
    MomentSeq::new((0..=n).map(|i| gamma.coeff(i + 1)).collect())
}

/// `κ_n = n!·[tⁿ] log Σ m_n tⁿ/n!`.
pub fn classical_cumulants(m: &MomentSeq) -> Result<CumulantSeq, FreeProbError> {
    let n = m.order();
    let egf = TruncSeries::from_fn(n, |k| m.get(k) * factorial(k as u32).recip());
    let log = egf.log()?;
    Ok(CumulantSeq::new((1..=n).map(|k| log.coeff(k) * factorial(k as u32)).collect()))
}

/// Inverse of [`classical_cumulants`] via the exponential.
pub fn classical_cumulants_to_moments(k: &CumulantSeq) -> Result<MomentSeq, FreeProbError> {
    let n = k.order();
    let egf = TruncSeries::from_fn(n, |i| if i == 0 { Q::zero() } else { k.get(i) * factorial(i as u32).recip() });
    let exp = egf.exp()?;
    MomentSeq::new((0..=n).map(|i| exp.coeff(i) * factorial(i as u32)).collect())
}

/// `K(z) = z / log^{⟨−1⟩}(z)` for `log(z) = Σ ℓ_n zⁿ`, `ℓ_1 = 1`; coefficients `K_0..K_order`.
pub fn hirzebruch_k(log_coeffs: &[Q], order: usize) -> Result<Vec<Q>, FreeProbError> {
    if !log_coeffs.first().is_some_and(Ring::is_one) {
        return Err(FreeProbError::LeadingLogCoefficient);
    }
    let log = TruncSeries::from_fn(order + 1, |k| if k == 0 { Q::zero() } else { log_coeffs.get(k - 1).cloned().unwrap_or_else(Q::zero) });
    let k = z_over_inverse(&log, order)?;
    Ok((0..=order).map(|i| k.coeff(i)).collect())
}

/// `ℓ_n = 1/n`, the logarithm `−ln(1−z)`.
pub fn todd_log(order: usize) -> Vec<Q> {
    (1..=order as i64).map(|n| Q::new(1.into(), n.into())).collect()
}

/// `ℓ_n = 1/n` for odd `n`, zero otherwise: `artanh z`.
pub fn l_genus_log(order: usize) -> Vec<Q> {
    (1..=order as i64).map(|n| if n % 2 == 1 { Q::new(1.into(), n.into()) } else { Q::zero() }).collect()
}

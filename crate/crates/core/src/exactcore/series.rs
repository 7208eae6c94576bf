//! Truncated power series in one central variable over an arbitrary coefficient ring.
//!
//! Coefficients may fail to commute with each other, but the series variable `T` commutes
//! with everything. Products keep the left operand's coefficients on the left.

use std::fmt;

use thiserror::Error;

use super::rational::{factorial, Q};
use super::ring::{QAlgebra, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("inner series must have zero constant term")]
    NonzeroConstant,
    #[error("series must start T + …")]
    NotDiffeomorphism,
    #[error("constant term must be an invertible scalar")]
    NotInvertible,
    #[error("logarithm needs constant term 1")]
    LogConstant,
}

/// `c_0 + c_1 T + … + c_N T^N + O(T^{N+1})`.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients are kept.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `T`.
    pub fn variable(order: usize) -> Self {
        Self::new(vec![R::zero(), R::one()], order)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> TruncSeries<S> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn joint_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.joint_order(other);
        Self::from_fn(n, |k| self.coeffs[k].add(&other.coeffs[k]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.joint_order(other);
        Self::from_fn(n, |k| self.coeffs[k].sub(&other.coeffs[k]))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.joint_order(other);
        let mut out = vec![R::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !other.coeffs[j].is_zero() {
                    out[i + j] = out[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
                }
            }
        }
        TruncSeries { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `r·f`, multiplying every coefficient on the left.
    pub fn left_mul(&self, r: &R) -> Self {
        self.map(|c| r.mul(c))
    }

    /// `f·r`, multiplying every coefficient on the right.
    pub fn right_mul(&self, r: &R) -> Self {
        self.map(|c| c.mul(r))
    }

    /// `T^k·f`.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        Self::from_fn(n, |i| if i >= k { self.coeffs[i - k].clone() } else { R::zero() })
    }

    /// `f / T^k`; the low coefficients must vanish. The order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs[..k.min(self.coeffs.len())].iter().any(|c| !c.is_zero()) || k > self.order() {
            return None;
        }
        Some(TruncSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    /// `f ∘ g = Σ f_n g^n` with each `f_n` on the left of `g^n`.
    pub fn compose(&self, g: &Self) -> Result<Self, SeriesError> {
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = self.joint_order(g);
        let g = g.truncate(n);
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        for k in 0..=n {
            if !self.coeffs[k].is_zero() {
                out = out.add(&power.left_mul(&self.coeffs[k]));
            }
            if k < n {
                power = power.mul(&g);
            }
        }
        Ok(out)
    }

    fn require_diffeo(&self) -> Result<(), SeriesError> {
        if !self.coeffs[0].is_zero() || self.order() >= 1 && !self.coeffs[1].is_one() {
            return Err(SeriesError::NotDiffeomorphism);
        }
        Ok(())
    }

    /// The series `g` with `f(g(T)) = T`, found degree by degree.
    pub fn comp_inverse(&self) -> Result<Self, SeriesError> {
        self.require_diffeo()?;
        let n = self.order();
        let mut g = Self::variable(n);
        for k in 2..=n {
            let residual = self.truncate(k).compose(&g.truncate(k))?.coeff(k);
            g.coeffs[k] = g.coeffs[k].sub(&residual);
        }
        Ok(g)
    }

    /// The series `g` with `g(f(T)) = T`.
    pub fn comp_inverse_left(&self) -> Result<Self, SeriesError> {
        self.require_diffeo()?;
        let n = self.order();
        let mut g = Self::variable(n);
        for k in 2..=n {
            let residual = g.truncate(k).compose(&self.truncate(k))?.coeff(k);
            g.coeffs[k] = g.coeffs[k].sub(&residual);
        }
        Ok(g)
    }

    pub fn derivative(&self) -> Self
    where
        R: QAlgebra,
    {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        Self::from_fn(n - 1, |k| self.coeffs[k + 1].scale(&Q::from_integer((k as i64 + 1).into())))
    }
}

impl<R: QAlgebra> TruncSeries<R> {
    pub fn scale(&self, x: &Q) -> Self {
        self.map(|c| c.scale(x))
    }

    fn unit_constant(&self) -> Result<Q, SeriesError> {
        self.coeffs[0].as_rational().filter(|c| !c.is_zero()).ok_or(SeriesError::NotInvertible)
    }

    /// The `b` with `f·b = 1`; the constant term must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c = self.unit_constant()?.recip();
        let n = self.order();
        let mut b: Vec<R> = vec![R::from_q(&c)];
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&b[k - j]));
            }
            b.push(acc.scale(&-c.clone()));
        }
        Ok(TruncSeries { coeffs: b })
    }

    /// The `b` with `b·f = 1`.
    pub fn inverse_left(&self) -> Result<Self, SeriesError> {
        let c = self.unit_constant()?.recip();
        let n = self.order();
        let mut b: Vec<R> = vec![R::from_q(&c)];
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc.add(&b[k - j].mul(&self.coeffs[j]));
            }
            b.push(acc.scale(&-c.clone()));
        }
        Ok(TruncSeries { coeffs: b })
    }

    /// `Σ fⁿ/n!`, for `f` without constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = self.order();
        let mut out = Self::one(n);
        let mut power = Self::one(n);
        for k in 1..=n {
            power = power.mul(self);
            out = out.add(&power.scale(&factorial(k as u32).recip()));
        }
        Ok(out)
    }

    /// `Σ (−1)^{n+1} uⁿ/n` for `f = 1 + u`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogConstant);
        }
        let n = self.order();
        let mut u = self.clone();
        u.coeffs[0] = R::zero();
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        for k in 1..=n {
            power = power.mul(&u);
            let w = Q::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, (k as i64).into());
            out = out.add(&power.scale(&w));
        }
        Ok(out)
    }

    /// Series with rational coefficients lifted into `R`.
    pub fn from_rationals(cs: &[Q], order: usize) -> Self {
        Self::from_fn(order, |k| cs.get(k).map_or_else(R::zero, R::from_q))
    }
}

impl<R: Ring + fmt::Debug> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + O(T^{})", self.coeffs, self.order() + 1)
    }
}

impl<R: Ring + fmt::Display> TruncSeries<R> {
    /// `c₀ + (c₁)·T + (c₂)·T^2 + …`, skipping zero coefficients.
    pub fn render(&self, var: &str) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let pow = match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                };
                match (k, c.is_one()) {
                    (0, _) => format!("{c}"),
                    (_, true) => pow,
                    _ => format!("({c})·{pow}"),
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl TruncSeries<Q> {
    pub fn from_ints(cs: &[i64], order: usize) -> Self {
        Self::from_fn(order, |k| Q::from_integer(cs.get(k).copied().unwrap_or(0).into()))
    }

    pub fn is_zero_series(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::lincomb::LinComb;
    use crate::exactcore::poly::SparsePoly;
    use crate::exactcore::rational::{q, qr};
    use proptest::prelude::*;

    fn rat(cs: &[i64], n: usize) -> TruncSeries<Q> {
        TruncSeries::from_ints(cs, n)
    }

    #[test]
    fn compose_examples() {
        let g = rat(&[0, 1, 1], 4);
        assert_eq!(TruncSeries::variable(4).compose(&g).unwrap(), g);
        assert_eq!(g.compose(&g).unwrap(), rat(&[0, 1, 2, 2, 1], 4));
        assert_eq!(g.compose(&rat(&[1, 1], 4)), Err(SeriesError::NonzeroConstant));
    }

    #[test]
    fn order_is_minimum() {
        let a = rat(&[1, 1], 3);
        let b = rat(&[1, 2], 5);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(b.compose(&rat(&[0, 1], 2)).unwrap().order(), 2);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(rat(&[0, 1], 5).comp_inverse().unwrap(), rat(&[0, 1], 5));
        assert_eq!(rat(&[0, 1, 1], 4).comp_inverse().unwrap(), rat(&[0, 1, -1, 2, -5], 4));
        assert_eq!(rat(&[0, 2], 3).comp_inverse(), Err(SeriesError::NotDiffeomorphism));
        let t = |i| SparsePoly::indexed_var("t", i);
        let f = TruncSeries::new(vec![SparsePoly::zero(), SparsePoly::one(), t(1), t(2)], 3);
        let g = f.comp_inverse().unwrap();
        assert_eq!(g.coeff(2), t(1).neg());
        assert_eq!(g.coeff(3), &t(1).pow(2).scale(&q(2)) - &t(2));
    }

    #[test]
    fn exp_log_examples() {
        assert_eq!(TruncSeries::<Q>::zero(4).exp().unwrap(), TruncSeries::one(4));
        let log = rat(&[1, 1], 3).log().unwrap();
        assert_eq!(log.coeffs(), &[q(0), q(1), qr(-1, 2), qr(1, 3)]);
        let beta_z1 = SparsePoly::var("beta").mul(&SparsePoly::indexed_var("Z", 1));
        let e = TruncSeries::new(vec![SparsePoly::zero(), beta_z1.clone()], 2).exp().unwrap();
        assert_eq!(e.coeff(2), beta_z1.pow(2).scale(&qr(1, 2)));
        assert_eq!(rat(&[2, 1], 3).log(), Err(SeriesError::LogConstant));
    }

    #[test]
    fn free_algebra_composition_keeps_coefficient_order() {
        use crate::ncsf::composition::Composition;
        let z = |i: usize| LinComb::monomial(Composition::from_parts(vec![i]));
        let f = TruncSeries::new(vec![LinComb::zero(), LinComb::one(), z(1)], 3);
        let g = TruncSeries::new(vec![LinComb::zero(), LinComb::one(), z(2)], 3);
        let h = f.compose(&g).unwrap();
        assert_eq!(h.coeff(2), &z(1) + &z(2));
        let z12 = LinComb::monomial(Composition::from_parts(vec![1, 2]));
        assert_eq!(h.coeff(3), z12.scale(&q(2)));
    }

    fn series(n: usize, constant: bool) -> impl Strategy<Value = TruncSeries<Q>> {
        prop::collection::vec(-5i64..=5, n + 1).prop_map(move |mut v| {
            if !constant {
                v[0] = 0;
            }
            TruncSeries::from_ints(&v, n)
        })
    }

    proptest! {
        #[test]
        fn composition_is_associative(f in series(7, true), g in series(7, false), h in series(7, false)) {
            let lhs = f.compose(&g).unwrap().compose(&h).unwrap();
            let rhs = f.compose(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_round_trips(mut f in series(8, false)) {
            f.coeffs[1] = q(1);
            let g = f.comp_inverse().unwrap();
            prop_assert_eq!(f.compose(&g).unwrap(), TruncSeries::variable(8));
            prop_assert_eq!(g.compose(&f).unwrap(), TruncSeries::variable(8));
            let lg = f.comp_inverse_left().unwrap();
            prop_assert_eq!(lg, g);
        }

        #[test]
        fn exp_log_round_trip(u in series(8, false)) {
            let e = u.exp().unwrap();
            prop_assert_eq!(e.log().unwrap(), u.clone());
            let one_plus = u.add(&TruncSeries::one(8));
            prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus.clone());
            prop_assert_eq!(one_plus.mul(&one_plus.inverse().unwrap()), TruncSeries::one(8));
        }
    }
}

use std::fmt::Debug;

use num::bigint::BigInt;
use num::{One, Zero};

use super::rational::Q;

/// An associative unital ring, not necessarily commutative.
///
/// Methods take references so that big-number coefficients are never moved by accident.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A ring containing the rationals in its centre.
pub trait QAlgebra: Ring {
    fn from_q(x: &Q) -> Self;
    fn scale(&self, x: &Q) -> Self;
    /// `Some(c)` when the element is the scalar `c`.
    fn as_rational(&self) -> Option<Q>;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
}

impl QAlgebra for Q {
    fn from_q(x: &Q) -> Self {
        x.clone()
    }
    fn scale(&self, x: &Q) -> Self {
        self * x
    }
    fn as_rational(&self) -> Option<Q> {
        Some(self.clone())
    }
}

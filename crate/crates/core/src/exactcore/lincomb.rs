//! Finite rational linear combinations of monoid elements.
//!
//! `LinComb<M>` is the monoid algebra Q[M]: with words under concatenation it is the free
//! associative algebra, with commutative monomials it is a polynomial ring, and with pairs
//! of monomials it is a tensor product. All three share the same arithmetic.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::ops;

use num::Signed;

use super::rational::{format_rational, Q};
use super::ring::{QAlgebra, Ring};

pub trait Monoid: Clone + Ord + fmt::Debug {
    fn identity() -> Self;
    fn combine(&self, other: &Self) -> Self;
    /// Grading weight; additive under `combine`.
    fn weight(&self) -> u32;
    fn render(&self) -> String;

    fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl<A: Monoid, B: Monoid> Monoid for (A, B) {
    fn identity() -> Self {
        (A::identity(), B::identity())
    }
    fn combine(&self, other: &Self) -> Self {
        (self.0.combine(&other.0), self.1.combine(&other.1))
    }
    fn weight(&self) -> u32 {
        self.0.weight() + self.1.weight()
    }
    fn render(&self) -> String {
        format!("{}⊗{}", self.0.render(), self.1.render())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<M: Ord> {
    terms: BTreeMap<M, Q>,
}

/// Tensor square of a monoid algebra.
pub type Tensor<M> = LinComb<(M, M)>;

impl<M: Monoid> LinComb<M> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn monomial(m: M) -> Self {
        Self::term(m, Q::one())
    }

    pub fn term(m: M, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn constant(c: Q) -> Self {
        Self::term(M::identity(), c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (M, Q)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: M, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<M, Q> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient of the identity monomial.
    pub fn constant_term(&self) -> Q {
        self.coeff(&M::identity())
    }

    /// `Some(w)` when every term has weight `w` (the zero element is homogeneous of any weight).
    pub fn homogeneous_weight(&self) -> Option<Option<u32>> {
        let mut weights = self.terms.keys().map(Monoid::weight);
        match weights.next() {
            None => Some(None),
            Some(w) => weights.all(|v| v == w).then_some(Some(w)),
        }
    }

    pub fn is_homogeneous_of(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Monoid::weight).max()
    }

    pub fn part_of_weight(&self, w: u32) -> Self {
        LinComb {
            terms: self.terms.iter().filter(|(m, _)| m.weight() == w).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Linear extension of a map on monomials.
    pub fn map_linear<N: Monoid>(&self, mut f: impl FnMut(&M) -> LinComb<N>) -> LinComb<N> {
        let mut out = LinComb::<N>::zero();
        for (m, c) in &self.terms {
            let image = f(m);
            for (n, d) in image.terms {
                out.add_term(n, c * d);
            }
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Q) -> Q) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Renders with terms ordered by ascending weight, then descending monomial order.
    pub fn render(&self) -> String {
        let mut keys: Vec<&M> = self.terms.keys().collect();
        keys.sort_by_key(|m| (m.weight(), Reverse(*m)));
        render_terms(keys.into_iter().map(|m| (m.render(), m.is_identity(), &self.terms[m])))
    }
}

impl<A: Monoid, B: Monoid> LinComb<(A, B)> {
    pub fn tensor(a: &LinComb<A>, b: &LinComb<B>) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term((ma.clone(), mb.clone()), ca * cb);
            }
        }
        out
    }

    pub fn map_left<C: Monoid>(&self, mut f: impl FnMut(&A) -> LinComb<C>) -> LinComb<(C, B)> {
        self.map_linear(|(a, b)| LinComb::tensor(&f(a), &LinComb::monomial(b.clone())))
    }

    pub fn map_right<C: Monoid>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<(A, C)> {
        self.map_linear(|(a, b)| LinComb::tensor(&LinComb::monomial(a.clone()), &f(b)))
    }
}

impl<M: Monoid> LinComb<(M, M)> {
    /// The multiplication map `a⊗b ↦ ab`.
    pub fn multiply_slots(&self) -> LinComb<M> {
        self.map_linear(|(a, b)| LinComb::monomial(a.combine(b)))
    }
}

/// Joins rendered monomials with their coefficients: `−Z[2] + 2·Z[1,1]`.
pub fn render_terms<'a>(items: impl IntoIterator<Item = (String, bool, &'a Q)>) -> String {
    let mut out = String::new();
    for (i, (mono, is_unit, c)) in items.into_iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if negative {
                out.push('−');
            }
        } else {
            out.push_str(if negative { " − " } else { " + " });
        }
        if is_unit {
            out.push_str(&format_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&mag));
            out.push('·');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<M: Monoid> Ring for LinComb<M> {
    fn zero() -> Self {
        LinComb::zero()
    }
    fn one() -> Self {
        LinComb::constant(Q::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.combine(b), ca * cb);
            }
        }
        out
    }
}

impl<M: Monoid> QAlgebra for LinComb<M> {
    fn from_q(x: &Q) -> Self {
        LinComb::constant(x.clone())
    }
    fn scale(&self, x: &Q) -> Self {
        if x.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * x)).collect() }
    }
    fn as_rational(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.iter().next().filter(|(m, _)| m.is_identity()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }
}

impl<M: Monoid> fmt::Display for LinComb<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<M: Monoid> fmt::Debug for LinComb<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<M: Monoid> ops::Add for &LinComb<M> {
    type Output = LinComb<M>;
    fn add(self, rhs: Self) -> LinComb<M> {
        Ring::add(self, rhs)
    }
}

impl<M: Monoid> ops::Sub for &LinComb<M> {
    type Output = LinComb<M>;
    fn sub(self, rhs: Self) -> LinComb<M> {
        Ring::sub(self, rhs)
    }
}

impl<M: Monoid> ops::Mul for &LinComb<M> {
    type Output = LinComb<M>;
    fn mul(self, rhs: Self) -> LinComb<M> {
        Ring::mul(self, rhs)
    }
}

impl<M: Monoid> ops::Neg for &LinComb<M> {
    type Output = LinComb<M>;
    fn neg(self) -> LinComb<M> {
        Ring::neg(self)
    }
}

//! Commutative multivariate polynomials over Q with named variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::lincomb::{LinComb, Monoid};
use super::rational::Q;
use super::ring::Ring;

/// A variable name. Ordered naturally, so `t2 < t10`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Var(String);

impl Var {
    pub fn new(name: impl Into<String>) -> Self {
        Var(name.into())
    }

    /// `prefix` followed by a decimal index, e.g. `Var::indexed("t", 3)` is `t3`.
    pub fn indexed(prefix: &str, i: usize) -> Self {
        Var(format!("{prefix}{i}"))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn split(&self) -> (&str, Option<u64>) {
        let s = self.0.as_str();
        let cut = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (head, tail) = s.split_at(cut);
        (head, tail.parse().ok())
    }

    /// Index suffix for names of the form `prefix<digits>`.
    pub fn index_with_prefix(&self, prefix: &str) -> Option<usize> {
        let (head, idx) = self.split();
        (head == prefix).then_some(idx).flatten().map(|i| i as usize)
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        let (ha, ia) = self.split();
        let (hb, ib) = other.split();
        ha.cmp(hb).then(ia.cmp(&ib)).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A commutative monomial: sorted variable/exponent pairs with positive exponents.
///
/// Ordered lexicographically on exponent vectors, so `a^2 > a·b > b^2 > a > 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Weighted degree where a variable `prefix<i>` counts `i` and any other variable counts 1.
    pub fn indexed_degree(&self, prefix: &str) -> u32 {
        self.0.iter().map(|(v, e)| e * v.index_with_prefix(prefix).unwrap_or(1) as u32).sum()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0.iter().find(|(w, _)| w == v).map_or(0, |(_, e)| *e)
    }
}

impl Monoid for Monomial {
    fn identity() -> Self {
        Monomial(Vec::new())
    }

    fn combine(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    fn weight(&self) -> u32 {
        self.degree()
    }

    fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("·")
    }
}

pub type SparsePoly = LinComb<Monomial>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable `{0}` has no value")]
    Unbound(String),
}

impl LinComb<Monomial> {
    pub fn var(name: &str) -> Self {
        LinComb::monomial(Monomial::var(Var::new(name)))
    }

    pub fn indexed_var(prefix: &str, i: usize) -> Self {
        LinComb::monomial(Monomial::var(Var::indexed(prefix, i)))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms().keys().map(Monomial::degree).max()
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms().keys().flat_map(|m| m.0.iter().map(|(v, _)| v.clone())).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Ring homomorphism fixing Q: each variable maps to the polynomial returned by `image`,
    /// or to itself when `image` returns `None`.
    pub fn substitute(&self, mut image: impl FnMut(&Var) -> Option<SparsePoly>) -> SparsePoly {
        let mut cache: BTreeMap<Var, SparsePoly> = BTreeMap::new();
        self.map_linear(|m| {
            let mut acc = SparsePoly::one();
            for (v, e) in &m.0 {
                let base = cache
                    .entry(v.clone())
                    .or_insert_with(|| image(v).unwrap_or_else(|| SparsePoly::monomial(Monomial::var(v.clone()))))
                    .clone();
                acc = acc.mul(&base.pow(*e));
            }
            acc
        })
    }

    /// Exact evaluation at rational values.
    pub fn evaluate(&self, value: impl Fn(&Var) -> Option<Q>) -> Result<Q, PolyError> {
        let mut total = Q::zero();
        for (m, c) in self.iter() {
            let mut t = c.clone();
            for (v, e) in &m.0 {
                let x = value(v).ok_or_else(|| PolyError::Unbound(v.to_string()))?;
                t *= num::pow::pow(x, *e as usize);
            }
            total += t;
        }
        Ok(total)
    }
}

impl Monomial {
    pub fn one() -> Self {
        <Monomial as Monoid>::identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::q;
    use crate::exactcore::ring::QAlgebra;

    #[test]
    fn natural_variable_order() {
        let mut vs = [Var::new("t10"), Var::new("t2"), Var::new("a"), Var::new("t1")];
        vs.sort();
        assert_eq!(vs.iter().map(|v| v.name()).collect::<Vec<_>>(), ["a", "t1", "t2", "t10"]);
        assert_eq!(Var::new("CP12").index_with_prefix("CP"), Some(12));
        assert_eq!(Var::new("b3").index_with_prefix("CP"), None);
    }

    #[test]
    fn product_and_render() {
        let a = SparsePoly::var("a");
        let b = SparsePoly::var("b");
        let p = (&a + &b).pow(2);
        assert_eq!(p.render(), "a^2 + 2·a·b + b^2");
        assert_eq!(p.coeff(&Monomial::from_powers([(Var::new("a"), 1), (Var::new("b"), 1)])), q(2));
    }

    #[test]
    fn substitution_and_evaluation() {
        let x = SparsePoly::var("x");
        let p = &x.pow(2) - &SparsePoly::constant(q(1));
        let s = p.substitute(|_| Some(&SparsePoly::var("y") + &SparsePoly::constant(q(1))));
        assert_eq!(s.render(), "2·y + y^2");
        assert_eq!(p.evaluate(|_| Some(q(3))).unwrap(), q(8));
        assert!(p.evaluate(|_| None).is_err());
        assert_eq!(SparsePoly::constant(q(4)).as_rational(), Some(q(4)));
    }
}

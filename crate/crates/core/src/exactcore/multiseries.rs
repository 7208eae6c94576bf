//! Truncated power series in several central variables, cut off by total degree.

use std::collections::BTreeMap;

use super::rational::Q;
use super::ring::{QAlgebra, Ring};
use super::series::{SeriesError, TruncSeries};

#[derive(Debug, Clone, PartialEq)]
pub struct MultiSeries<R> {
    arity: usize,
    order: usize,
    terms: BTreeMap<Vec<u32>, R>,
}

impl<R: Ring> MultiSeries<R> {
    pub fn zero(arity: usize, order: usize) -> Self {
        MultiSeries { arity, order, terms: BTreeMap::new() }
    }

    pub fn constant(c: R, arity: usize, order: usize) -> Self {
        let mut s = Self::zero(arity, order);
        s.add_term(vec![0; arity], c);
        s
    }

    pub fn one(arity: usize, order: usize) -> Self {
        Self::constant(R::one(), arity, order)
    }

    /// The `i`-th variable.
    pub fn variable(i: usize, arity: usize, order: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        let mut s = Self::zero(arity, order);
        s.add_term(e, R::one());
        s
    }

    /// Embeds a univariate series as a function of variable `i`.
    pub fn from_univariate(f: &TruncSeries<R>, i: usize, arity: usize) -> Self {
        let mut s = Self::zero(arity, f.order());
        for (k, c) in f.coeffs().iter().enumerate() {
            let mut e = vec![0; arity];
            e[i] = k as u32;
            s.add_term(e, c.clone());
        }
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, R> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> R {
        self.terms.get(exps).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: R) {
        if c.is_zero() || exps.iter().sum::<u32>() as usize > self.order {
            return;
        }
        let next = match self.terms.get(&exps) {
            Some(old) => old.add(&c),
            None => c,
        };
        if next.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, next);
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = Self::zero(self.arity, order.min(self.order));
        for (e, c) in &self.terms {
            s.add_term(e.clone(), c.clone());
        }
        s
    }

    fn joint(&self, other: &Self) -> (usize, usize) {
        assert_eq!(self.arity, other.arity, "series arities differ");
        (self.arity, self.order.min(other.order))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (k, n) = self.joint(other);
        let mut s = self.truncate(n);
        s.arity = k;
        for (e, c) in &other.terms {
            s.add_term(e.clone(), c.clone());
        }
        s
    }

    pub fn neg(&self) -> Self {
        MultiSeries { arity: self.arity, order: self.order, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (k, n) = self.joint(other);
        let mut s = Self::zero(k, n);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.terms {
                if (da + eb.iter().sum::<u32>()) as usize > n {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                s.add_term(e, ca.mul(cb));
            }
        }
        s
    }

    pub fn pow(&self, p: u32) -> Self {
        let mut acc = Self::one(self.arity, self.order);
        for _ in 0..p {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn left_mul(&self, r: &R) -> Self {
        let mut s = Self::zero(self.arity, self.order);
        for (e, c) in &self.terms {
            s.add_term(e.clone(), r.mul(c));
        }
        s
    }

    pub fn has_zero_constant(&self) -> bool {
        !self.terms.contains_key(&vec![0; self.arity])
    }

    /// `f(g) = Σ f_n gⁿ` for a univariate `f`, coefficients on the left.
    pub fn compose_univariate(f: &TruncSeries<R>, g: &Self) -> Result<Self, SeriesError> {
        if !g.has_zero_constant() {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = f.order().min(g.order);
        let g = g.truncate(n);
        let mut out = Self::zero(g.arity, n);
        let mut power = Self::one(g.arity, n);
        for k in 0..=n {
            let c = f.coeff(k);
            if !c.is_zero() {
                out = out.add(&power.left_mul(&c));
            }
            if k < n {
                power = power.mul(&g);
            }
        }
        Ok(out)
    }

    /// `Σ c_e·args₁^{e₁}·…·args_k^{e_k}`, each coefficient on the left and the arguments in
    /// variable order.
    pub fn substitute(&self, args: &[Self]) -> Result<Self, SeriesError> {
        assert_eq!(args.len(), self.arity, "one argument per variable");
        if args.iter().any(|a| !a.has_zero_constant()) {
            return Err(SeriesError::NonzeroConstant);
        }
        let arity = args.first().map_or(0, |a| a.arity);
        let n = args.iter().map(|a| a.order).min().unwrap_or(self.order).min(self.order);
        let mut powers: Vec<Vec<Self>> = args
            .iter()
            .map(|a| {
                let a = a.truncate(n);
                let mut ps = vec![Self::one(arity, n)];
                for _ in 0..n {
                    let next = ps.last().map(|p| p.mul(&a)).unwrap_or_else(|| Self::one(arity, n));
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut out = Self::zero(arity, n);
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone(), arity, n);
            for (i, &p) in e.iter().enumerate() {
                term = term.mul(&powers[i][p as usize]);
            }
            out = out.add(&term);
        }
        powers.clear();
        Ok(out)
    }

    /// Sets variable `i` to zero.
    pub fn restrict_zero(&self, i: usize) -> Self {
        let mut s = Self::zero(self.arity, self.order);
        for (e, c) in self.terms.iter().filter(|(e, _)| e[i] == 0) {
            s.add_term(e.clone(), c.clone());
        }
        s
    }

    /// Reorders variables: the new variable `j` is the old variable `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut s = Self::zero(self.arity, self.order);
        for (e, c) in &self.terms {
            s.add_term(perm.iter().map(|&p| e[p]).collect(), c.clone());
        }
        s
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> MultiSeries<S> {
        let mut s = MultiSeries::zero(self.arity, self.order);
        for (e, c) in &self.terms {
            s.add_term(e.clone(), f(c));
        }
        s
    }

    /// Univariate series in variable `i` with every other variable set to zero.
    pub fn along(&self, i: usize) -> TruncSeries<R> {
        TruncSeries::from_fn(self.order, |k| {
            let mut e = vec![0; self.arity];
            e[i] = k as u32;
            self.coeff(&e)
        })
    }

    /// Terms of total degree at most `d` agree with `other`.
    pub fn agrees_to(&self, other: &Self, d: usize) -> bool {
        self.sub(other).terms.keys().all(|e| e.iter().sum::<u32>() as usize > d)
    }

    /// Lowest total degree where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.sub(other).terms.keys().map(|e| e.iter().sum::<u32>() as usize).min()
    }
}

impl<R: QAlgebra> MultiSeries<R> {
    pub fn scale(&self, x: &Q) -> Self {
        self.map(|c| c.scale(x))
    }
}

//! Quasisymmetric functions in the monomial basis `M_α`.

use std::collections::BTreeMap;
use std::fmt;

use super::composition::Composition;
use super::nsym::{Ncf, TensorNcf};
use crate::exactcore::lincomb::render_terms;
use crate::exactcore::poly::{Monomial, SparsePoly, Var};
use crate::exactcore::rational::Q;
use crate::exactcore::Ring;

/// A finite rational combination of monomial quasisymmetric functions.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QSym {
    terms: BTreeMap<Composition, Q>,
}

impl QSym {
    pub fn zero() -> Self {
        QSym::default()
    }

    pub fn one() -> Self {
        Self::monomial(Composition::empty())
    }

    pub fn monomial(alpha: Composition) -> Self {
        Self::term(alpha, Q::one())
    }

    pub fn term(alpha: Composition, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(alpha, c);
        out
    }

    pub fn add_term(&mut self, alpha: Composition, c: Q) {
        if c.is_zero() {
            return;
        }
        let next = self.terms.get(&alpha).cloned().unwrap_or_else(Q::zero) + c;
        if next.is_zero() {
            self.terms.remove(&alpha);
        } else {
            self.terms.insert(alpha, next);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Composition, Q> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> Q {
        self.terms.get(alpha).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    /// Bilinear quasi-shuffle product.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                for (w, n) in quasi_shuffle(a.parts(), b.parts()) {
                    out.add_term(Composition::from_parts(w.into_iter().map(|p| p as usize).collect()), ca * cb * Q::from_integer(n.into()));
                }
            }
        }
        out
    }

    /// The polynomial in `x1..xk` obtained by restricting to `k` variables.
    pub fn realize(&self, k: usize) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (a, c) in &self.terms {
            out = out.add(&qsym_realize(a, k).map_coeffs(|d| d * c));
        }
        out
    }

    pub fn render(&self) -> String {
        let mut keys: Vec<&Composition> = self.terms.keys().collect();
        keys.sort_by_key(|a| (a.weight(), std::cmp::Reverse(*a)));
        render_terms(keys.into_iter().map(|a| (format!("M{}", a.bracket()), a.is_empty(), &self.terms[a])))
    }
}

impl fmt::Display for QSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for QSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Quasi-shuffles of two words with multiplicities.
fn quasi_shuffle(a: &[u32], b: &[u32]) -> BTreeMap<Vec<u32>, u64> {
    let mut memo: BTreeMap<(usize, usize), BTreeMap<Vec<u32>, u64>> = BTreeMap::new();
    fn rec(a: &[u32], b: &[u32], i: usize, j: usize, memo: &mut BTreeMap<(usize, usize), BTreeMap<Vec<u32>, u64>>) -> BTreeMap<Vec<u32>, u64> {
        if let Some(hit) = memo.get(&(i, j)) {
            return hit.clone();
        }
        let mut out = BTreeMap::new();
        if i == a.len() || j == b.len() {
            let mut w = a[i..].to_vec();
            w.extend_from_slice(&b[j..]);
            out.insert(w, 1);
        } else {
            let mut push = |head: u32, tails: BTreeMap<Vec<u32>, u64>| {
                for (t, n) in tails {
                    let mut w = Vec::with_capacity(t.len() + 1);
                    w.push(head);
                    w.extend(t);
                    *out.entry(w).or_insert(0) += n;
                }
            };
            push(a[i], rec(a, b, i + 1, j, memo));
            push(b[j], rec(a, b, i, j + 1, memo));
            push(a[i] + b[j], rec(a, b, i + 1, j + 1, memo));
        }
        memo.insert((i, j), out.clone());
        out
    }
    rec(a, b, 0, 0, &mut memo)
}

/// `Σ_{i₁<…<i_ℓ≤k} x_{i₁}^{α₁}⋯x_{i_ℓ}^{α_ℓ}`.
pub fn qsym_realize(alpha: &Composition, k: usize) -> SparsePoly {
    let l = alpha.len();
    let mut out = SparsePoly::zero();
    if l > k {
        return out;
    }
    let mut idx: Vec<usize> = (1..=l).collect();
    loop {
        let mono = Monomial::from_powers(idx.iter().zip(alpha.parts()).map(|(&i, &e)| (Var::indexed("x", i), e)));
        out.add_term(mono, Q::one());
        // next increasing tuple in 1..=k
        let mut p = l;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            if idx[p] < k - (l - 1 - p) {
                idx[p] += 1;
                for q in p + 1..l {
                    idx[q] = idx[q - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `⟨Z_α, M_β⟩ = δ_{αβ}` extended bilinearly.
pub fn pairing(x: &Ncf, q: &QSym) -> Q {
    let mut acc = Q::zero();
    for (a, c) in x.iter() {
        acc += c * q.coeff(a);
    }
    acc
}

/// `⟨x⊗y, q⊗q′⟩ = ⟨x,q⟩⟨y,q′⟩` extended bilinearly.
pub fn pairing_tensor(t: &TensorNcf, q: &QSym, q2: &QSym) -> Q {
    let mut acc = Q::zero();
    for ((a, b), c) in t.iter() {
        acc += c * q.coeff(a) * q2.coeff(b);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::q;
    use crate::ncsf::composition::compositions;
    use crate::ncsf::nsym::{coproduct, z, z_word};

    fn m(parts: &[usize]) -> QSym {
        QSym::monomial(Composition::from_parts(parts.to_vec()))
    }

    #[test]
    fn quasi_shuffle_examples() {
        assert_eq!(m(&[1]).product(&m(&[1])), m(&[1, 1]).add(&m(&[1, 1])).add(&m(&[2])));
        assert_eq!(QSym::one().product(&m(&[2, 1])), m(&[2, 1]));
        assert_eq!(m(&[1]).product(&m(&[2])), m(&[1, 2]).add(&m(&[2, 1])).add(&m(&[3])));
        assert_eq!(m(&[1]).product(&m(&[1])).render(), "M[2] + 2·M[1,1]");
    }

    #[test]
    fn realization_examples() {
        let x = |i| SparsePoly::indexed_var("x", i);
        assert_eq!(qsym_realize(&Composition::single(1), 2), &x(1) + &x(2));
        assert_eq!(qsym_realize(&Composition::from_parts(vec![1, 2]), 2), x(1).mul(&x(2).pow(2)));
        assert!(qsym_realize(&Composition::from_parts(vec![1, 1, 1]), 2).is_zero());
        assert_eq!(qsym_realize(&Composition::empty(), 3), SparsePoly::one());
    }

    #[test]
    fn product_matches_realization() {
        for wa in 0..=3 {
            for wb in 0..=(5 - wa) {
                for a in compositions(wa) {
                    for b in compositions(wb) {
                        let k = (wa + wb) as usize;
                        let lhs = QSym::monomial(a.clone()).product(&QSym::monomial(b.clone())).realize(k);
                        let rhs = qsym_realize(&a, k).mul(&qsym_realize(&b, k));
                        assert_eq!(lhs, rhs, "{a:?} * {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn duality_examples() {
        assert_eq!(pairing(&z_word(&[1, 2]), &m(&[1, 2])), q(1));
        assert_eq!(pairing(&z_word(&[1, 2]), &m(&[2, 1])), q(0));
        let lhs = pairing_tensor(&coproduct(&z(2)), &m(&[1]), &m(&[1]));
        let rhs = pairing(&z(2), &m(&[1]).product(&m(&[1])));
        assert_eq!(lhs, q(1));
        assert_eq!(rhs, q(1));
    }
}

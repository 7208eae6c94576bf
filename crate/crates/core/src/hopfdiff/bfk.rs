//! The noncommutative Hopf algebra of formal diffeomorphisms on NSymm⊗Q.

use std::cell::RefCell;
use std::collections::BTreeMap;

use crate::exactcore::{LinComb, Ring, TruncSeries};
use crate::ncsf::nsym::{diffeo_series, z, Ncf, TensorNcf};
use crate::ncsf::Composition;

/// Triple tensor, bracketed on the left.
pub type TensorNcf3 = LinComb<((Composition, Composition), Composition)>;

/// Generator coproducts with a memoized antipode.
#[derive(Debug)]
pub struct Bfk {
    gens: Vec<TensorNcf>,
    antipodes: RefCell<BTreeMap<Composition, Ncf>>,
}

impl Bfk {
    /// Tables for every generator up to `max_weight`.
    pub fn new(max_weight: usize) -> Self {
        Bfk { gens: generator_coproducts(max_weight), antipodes: RefCell::new(BTreeMap::new()) }
    }

    pub fn max_weight(&self) -> usize {
        self.gens.len()
    }

    fn check_weight(&self, x: &Ncf) {
        let w = x.max_weight().unwrap_or(0) as usize;
        assert!(w <= self.max_weight(), "weight {w} exceeds coproduct table");
    }

    /// `Δ_N Z_k`.
    pub fn generator_coproduct(&self, k: usize) -> &TensorNcf {
        &self.gens[k - 1]
    }

    pub fn word_coproduct(&self, w: &Composition) -> TensorNcf {
        let mut acc = TensorNcf::one();
        for &p in w.parts() {
            acc = acc.mul(&self.gens[p as usize - 1]);
        }
        acc
    }

    /// Multiplicative extension of the generator table.
    ///
    /// # Panics
    /// If `x` has weight above the table size.
    pub fn coproduct(&self, x: &Ncf) -> TensorNcf {
        self.check_weight(x);
        x.map_linear(|w| self.word_coproduct(w))
    }

    /// `χ(w) = −w − Σ χ(w′)w″` over the reduced coproduct.
    pub fn word_antipode(&self, w: &Composition) -> Ncf {
        if w.is_empty() {
            return Ncf::one();
        }
        if let Some(hit) = self.antipodes.borrow().get(w) {
            return hit.clone();
        }
        let mut out = Ncf::monomial(w.clone()).neg();
        for ((a, b), c) in self.word_coproduct(w).iter() {
            if a.is_empty() || b.is_empty() {
                continue;
            }
            let term = self.word_antipode(a).mul(&Ncf::monomial(b.clone()));
            out = out.sub(&term.map_coeffs(|d| d * c));
        }
        self.antipodes.borrow_mut().insert(w.clone(), out.clone());
        out
    }

    pub fn antipode(&self, x: &Ncf) -> Ncf {
        self.check_weight(x);
        x.map_linear(|w| self.word_antipode(w))
    }

    /// `(Δ⊗id)Δx` and `(id⊗Δ)Δx`.
    pub fn coassociativity_sides(&self, x: &Ncf) -> (TensorNcf3, TensorNcf3) {
        let d = self.coproduct(x);
        let mut lhs = TensorNcf3::zero();
        let mut rhs = TensorNcf3::zero();
        for ((a, b), c) in d.iter() {
            for (ab, e) in self.word_coproduct(a).iter() {
                lhs.add_term((ab.clone(), b.clone()), c * e);
            }
            for ((b1, b2), e) in self.word_coproduct(b).iter() {
                rhs.add_term(((a.clone(), b1.clone()), b2.clone()), c * e);
            }
        }
        (lhs, rhs)
    }

    /// `m∘(χ⊗id)∘Δx` and `m∘(id⊗χ)∘Δx`.
    pub fn antipode_sides(&self, x: &Ncf) -> (Ncf, Ncf) {
        let d = self.coproduct(x);
        let mut left = Ncf::zero();
        let mut right = Ncf::zero();
        for ((a, b), c) in d.iter() {
            let a_word = Ncf::monomial(a.clone());
            let b_word = Ncf::monomial(b.clone());
            left = left.add(&self.word_antipode(a).mul(&b_word).map_coeffs(|e| e * c));
            right = right.add(&a_word.mul(&self.word_antipode(b)).map_coeffs(|e| e * c));
        }
        (left, right)
    }
}

/// `Δ_N Z_k = [T^{k+1}] Σ_{n≥1} Z_{n−1}⊗Z(T)^n` for `k = 1..=max`.
pub fn generator_coproducts(max: usize) -> Vec<TensorNcf> {
    let order = max + 2;
    let zt = diffeo_series(order);
    let mut power = TruncSeries::one(order);
    let mut out = vec![TensorNcf::zero(); max];
    for n in 1..=max + 1 {
        power = power.mul(&zt);
        let left = z(n - 1);
        for (k, slot) in out.iter_mut().enumerate() {
            let c = power.coeff(k + 2);
            if !c.is_zero() {
                *slot = slot.add(&TensorNcf::tensor(&left, &c));
            }
        }
    }
    out
}

/// `Δ_N x` using a table sized to `x`.
pub fn bfk_coproduct(x: &Ncf) -> TensorNcf {
    Bfk::new(x.max_weight().unwrap_or(0) as usize).coproduct(x)
}

/// `χ_N x` using a table sized to `x`.
pub fn bfk_antipode(x: &Ncf) -> Ncf {
    Bfk::new(x.max_weight().unwrap_or(0) as usize).antipode(x)
}

/// `χ_N(Z_k)` from the generator identity `Σ_n χ(Z_{n−1})·[T^{k+1}]Z(T)^n = 0`.
pub fn generator_antipodes_closed(max: usize) -> Vec<Ncf> {
    let order = max + 2;
    let zt = diffeo_series(order);
    let mut powers = vec![TruncSeries::one(order)];
    for n in 1..=max + 1 {
        powers.push(powers[n - 1].mul(&zt));
    }
    let mut chi: Vec<Ncf> = vec![Ncf::one()];
    for k in 1..=max {
        let mut acc = Ncf::zero();
        for n in 1..=k {
            acc = acc.sub(&chi[n - 1].mul(&powers[n].coeff(k + 1)));
        }
        chi.push(acc);
    }
    chi.split_off(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::q;
    use crate::exactcore::QAlgebra;
    use crate::ncsf::nsym::{words, z_word};

    fn tensor(a: &Ncf, b: &Ncf) -> TensorNcf {
        TensorNcf::tensor(a, b)
    }

    #[test]
    fn generator_coproduct_examples() {
        let one = Ncf::one();
        let d = generator_coproducts(3);
        assert_eq!(d[0], &tensor(&z(1), &one) + &tensor(&one, &z(1)));
        let d2 = &(&tensor(&z(2), &one) + &tensor(&z(1), &z(1)).scale(&q(2))) + &tensor(&one, &z(2));
        assert_eq!(d[1], d2);
        assert_eq!(d[1].render(), "Z[2]⊗1 + 2·Z[1]⊗Z[1] + 1⊗Z[2]");
        let right = &z(2).scale(&q(2)) + &z_word(&[1, 1]);
        let d3 = [tensor(&z(3), &one), tensor(&z(1), &right), tensor(&z(2), &z(1)).scale(&q(3)), tensor(&one, &z(3))];
        assert_eq!(d[2], d3.iter().fold(TensorNcf::zero(), |a, b| &a + b));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(bfk_antipode(&z(1)), z(1).neg());
        assert_eq!(bfk_antipode(&z(2)), &z_word(&[1, 1]).scale(&q(2)) - &z(2));
    }

    #[test]
    fn antipode_matches_generator_identity() {
        let bfk = Bfk::new(6);
        for (k, chi) in generator_antipodes_closed(6).iter().enumerate() {
            assert_eq!(&bfk.antipode(&z(k + 1)), chi, "Z{}", k + 1);
        }
    }

    #[test]
    fn antipode_is_antimultiplicative() {
        let bfk = Bfk::new(5);
        for w in words(5) {
            let (word, _) = w.iter().next().unwrap();
            let mut expected = Ncf::one();
            for &p in word.parts() {
                expected = bfk.antipode(&z(p as usize)).mul(&expected);
            }
            assert_eq!(bfk.antipode(&w), expected, "{word:?}");
        }
    }

    #[test]
    fn hopf_axioms_to_weight_six() {
        let bfk = Bfk::new(6);
        for n in 1..=6 {
            for w in words(n) {
                let (lhs, rhs) = bfk.coassociativity_sides(&w);
                assert_eq!(lhs, rhs);
                let (l, r) = bfk.antipode_sides(&w);
                assert!(l.is_zero() && r.is_zero(), "{w}");
            }
        }
    }

    #[test]
    fn coproduct_preserves_weight() {
        let d = generator_coproducts(6);
        for (k, dk) in d.iter().enumerate() {
            assert!(dk.iter().all(|((a, b), _)| a.weight() + b.weight() == k as u32 + 1));
        }
    }
}

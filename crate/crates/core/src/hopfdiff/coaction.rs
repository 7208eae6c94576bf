//! Coactions of the Landweber–Novikov algebra on `Q[CP_*]` and `Q[b_*]`.

use serde::{Deserialize, Serialize};

use super::ln::{diffeo_from, ln_coproduct, max_index, t, PolyTensor, PolyTensor3};
use crate::exactcore::poly::{Monomial, SparsePoly, Var};
use crate::exactcore::rational::Q;
use crate::exactcore::{QAlgebra, Ring, SeriesError, TruncSeries};

/// Shape of the generating series `b(T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BNormalization {
    /// `b(T) = T + Σ b_i T^{i+1}`.
    #[default]
    Diffeo,
    /// `b(T) = 1 + Σ b_i T^i`.
    Grouplike,
}

/// Which comodule algebra the coaction acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoactionTarget {
    /// `log(T) = Σ CP_{n−1}/n·Tⁿ` with `CP_0 = 1`.
    LogGenerators,
    BSeries(BNormalization),
}

impl CoactionTarget {
    pub fn prefix(self) -> &'static str {
        match self {
            CoactionTarget::LogGenerators => "CP",
            CoactionTarget::BSeries(_) => "b",
        }
    }
}

/// Images `ψ(g_k)` of the generators `g_1..g_n` in `Q[g_*]⊗Q[t_*]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coaction {
    pub target: CoactionTarget,
    pub generators: Vec<PolyTensor>,
}

/// Generator images up to index `order`.
pub fn mu_coaction(target: CoactionTarget, order: usize) -> Result<Coaction, SeriesError> {
    let n = order + 2;
    let one = SparsePoly::one();
    let g = |i: usize| SparsePoly::indexed_var(target.prefix(), i);
    let left = |c: SparsePoly| PolyTensor::tensor(&c, &one);
    let inner = diffeo_from(n, |i| PolyTensor::tensor(&one, &t(i)));
    let generators = match target {
        CoactionTarget::LogGenerators => {
            let outer = TruncSeries::from_fn(n, |k| match k {
                0 => PolyTensor::zero(),
                1 => PolyTensor::one(),
                _ => left(g(k - 1).scale(&Q::new(1.into(), (k as i64).into()))),
            });
            let composed = outer.compose(&inner)?;
            (1..=order).map(|k| composed.coeff(k + 1).scale(&Q::from_integer((k as i64 + 1).into()))).collect()
        }
        CoactionTarget::BSeries(BNormalization::Diffeo) => {
            let composed = diffeo_from(n, |i| left(g(i))).compose(&inner)?;
            (1..=order).map(|k| composed.coeff(k + 1)).collect()
        }
        CoactionTarget::BSeries(BNormalization::Grouplike) => {
            let outer = TruncSeries::from_fn(n, |k| if k == 0 { PolyTensor::one() } else { left(g(k)) });
            let composed = outer.compose(&inner)?;
            (1..=order).map(|k| composed.coeff(k)).collect()
        }
    };
    Ok(Coaction { target, generators })
}

impl Coaction {
    pub fn order(&self) -> usize {
        self.generators.len()
    }

    /// `ψ(g_k)`.
    pub fn generator(&self, k: usize) -> &PolyTensor {
        &self.generators[k - 1]
    }

    fn index(&self, v: &Var) -> usize {
        v.index_with_prefix(self.target.prefix()).expect("coaction applies to its own generators")
    }

    /// Multiplicative extension to polynomials in the generators.
    ///
    /// # Panics
    /// If `p` uses a generator beyond the computed order.
    pub fn apply(&self, p: &SparsePoly) -> PolyTensor {
        assert!(max_index(p, self.target.prefix()) <= self.order(), "generator beyond computed order");
        p.map_linear(|m| self.apply_monomial(m))
    }

    fn apply_monomial(&self, m: &Monomial) -> PolyTensor {
        let mut acc = PolyTensor::one();
        for (v, e) in m.powers() {
            acc = acc.mul(&self.generators[self.index(v) - 1].pow(*e));
        }
        acc
    }

    /// `(id⊗ε)ψ(p)`.
    pub fn counit(&self, p: &SparsePoly) -> SparsePoly {
        SparsePoly::from_terms(self.apply(p).iter().filter(|((_, b), _)| b.degree() == 0).map(|((a, _), c)| (a.clone(), c.clone())))
    }

    /// `(ψ⊗id)ψ(p)` and `(id⊗Δ)ψ(p)`.
    pub fn coassociativity_sides(&self, p: &SparsePoly) -> Result<(PolyTensor3, PolyTensor3), SeriesError> {
        let d = self.apply(p);
        let mut lhs = PolyTensor3::zero();
        let mut rhs = PolyTensor3::zero();
        for ((a, b), c) in d.iter() {
            for (ab, x) in self.apply_monomial(a).iter() {
                lhs.add_term((ab.clone(), b.clone()), c * x);
            }
            for ((b1, b2), x) in ln_coproduct(&SparsePoly::monomial(b.clone()))?.iter() {
                rhs.add_term(((a.clone(), b1.clone()), b2.clone()), c * x);
            }
        }
        Ok((lhs, rhs))
    }

    /// Counit and coassociativity on every generator; the first failing index, if any.
    pub fn verify(&self) -> Result<Option<usize>, SeriesError> {
        for k in 1..=self.order() {
            let g = SparsePoly::indexed_var(self.target.prefix(), k);
            let (lhs, rhs) = self.coassociativity_sides(&g)?;
            if self.counit(&g) != g || lhs != rhs {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::q;

    fn cp(i: usize) -> SparsePoly {
        SparsePoly::indexed_var("CP", i)
    }

    #[test]
    fn log_generator_example() {
        let psi = mu_coaction(CoactionTarget::LogGenerators, 3).unwrap();
        let one = SparsePoly::one();
        let expected = &PolyTensor::tensor(&cp(1), &one) + &PolyTensor::tensor(&one, &t(1)).scale(&q(2));
        assert_eq!(psi.generator(1), &expected);
        assert_eq!(psi.counit(&cp(2)), cp(2));
    }

    #[test]
    fn b_series_examples() {
        let one = SparsePoly::one();
        let b1 = SparsePoly::indexed_var("b", 1);
        let diffeo = mu_coaction(CoactionTarget::BSeries(BNormalization::Diffeo), 2).unwrap();
        assert_eq!(diffeo.generator(1), &(&PolyTensor::tensor(&b1, &one) + &PolyTensor::tensor(&one, &t(1))));
        let grouplike = mu_coaction(CoactionTarget::BSeries(BNormalization::Grouplike), 2).unwrap();
        assert_eq!(grouplike.generator(1), &PolyTensor::tensor(&b1, &one));
    }

    #[test]
    fn coaction_axioms_to_order_six() {
        for target in [
            CoactionTarget::LogGenerators,
            CoactionTarget::BSeries(BNormalization::Diffeo),
            CoactionTarget::BSeries(BNormalization::Grouplike),
        ] {
            let psi = mu_coaction(target, 6).unwrap();
            assert_eq!(psi.verify().unwrap(), None, "{target:?}");
        }
    }

    #[test]
    fn products_are_coacted_multiplicatively() {
        let psi = mu_coaction(CoactionTarget::LogGenerators, 3).unwrap();
        let p = cp(1).mul(&cp(2));
        let (lhs, rhs) = psi.coassociativity_sides(&p).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(psi.counit(&p), p);
    }
}

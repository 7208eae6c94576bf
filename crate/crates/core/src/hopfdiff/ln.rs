//! The Landweber–Novikov Hopf algebra `Q[t₁, t₂, …]` of formal diffeomorphisms
//! `t(T) = T + Σ t_i T^{i+1}`.

use crate::exactcore::poly::{Monomial, SparsePoly, Var};
use crate::exactcore::rational::{factorial, Q};
use crate::exactcore::{LinComb, QAlgebra, Ring, SeriesError, TruncSeries};

/// Tensor square of a commutative polynomial algebra.
pub type PolyTensor = LinComb<(Monomial, Monomial)>;

/// Triple tensor, bracketed on the left.
pub type PolyTensor3 = LinComb<((Monomial, Monomial), Monomial)>;

pub fn t(i: usize) -> SparsePoly {
    SparsePoly::indexed_var("t", i)
}

/// `T + Σ_{i=1}^{order−1} c_i T^{i+1}` with coefficients `c_i` chosen by `coeff`.
pub fn diffeo_from<R: Ring>(order: usize, mut coeff: impl FnMut(usize) -> R) -> TruncSeries<R> {
    TruncSeries::from_fn(order, |k| match k {
        0 => R::zero(),
        1 => R::one(),
        _ => coeff(k - 1),
    })
}

/// `t(T)` over `Q[t_*]`.
pub fn t_series(order: usize) -> TruncSeries<SparsePoly> {
    diffeo_from(order, t)
}

/// Grading with `|t_i| = 2i`.
pub fn ln_degree(m: &Monomial) -> u32 {
    2 * m.indexed_degree("t")
}

/// `Δt_k` for `k = 1..=max`, read off `(t⊗1)((1⊗t)(T))`.
pub fn ln_generator_coproducts(max: usize) -> Result<Vec<PolyTensor>, SeriesError> {
    let order = max + 1;
    let left = diffeo_from(order, |i| PolyTensor::tensor(&t(i), &SparsePoly::one()));
    let right = diffeo_from(order, |i| PolyTensor::tensor(&SparsePoly::one(), &t(i)));
    let composed = left.compose(&right)?;
    Ok((1..=max).map(|k| composed.coeff(k + 1)).collect())
}

/// Multiplicative extension of `Δt_k` to all polynomials.
pub fn ln_coproduct(p: &SparsePoly) -> Result<PolyTensor, SeriesError> {
    let max = max_index(p, "t");
    let gens = ln_generator_coproducts(max)?;
    Ok(p.map_linear(|m| {
        let mut acc = PolyTensor::one();
        for (v, e) in m.powers() {
            let i = v.index_with_prefix("t").expect("LN elements are polynomials in t_i");
            acc = acc.mul(&gens[i - 1].pow(*e));
        }
        acc
    }))
}

/// `χ(t_k)` for `k = 1..=max`, the coefficients of the compositional inverse of `t(T)`.
pub fn ln_generator_antipodes(max: usize) -> Result<Vec<SparsePoly>, SeriesError> {
    let inv = t_series(max + 1).comp_inverse()?;
    Ok((1..=max).map(|k| inv.coeff(k + 1)).collect())
}

/// The antipode, a ring map.
pub fn ln_antipode(p: &SparsePoly) -> Result<SparsePoly, SeriesError> {
    let gens = ln_generator_antipodes(max_index(p, "t"))?;
    Ok(p.substitute(|v| v.index_with_prefix("t").map(|i| gens[i - 1].clone())))
}

/// Counit: every `t_i ↦ 0`.
pub fn ln_counit(p: &SparsePoly) -> Q {
    p.constant_term()
}

pub(crate) fn max_index(p: &SparsePoly, prefix: &str) -> usize {
    p.variables().iter().filter_map(|v| v.index_with_prefix(prefix)).max().unwrap_or(0)
}

/// `(ε⊗id)` and `(id⊗ε)` of a tensor.
pub fn counit_left(x: &PolyTensor) -> SparsePoly {
    SparsePoly::from_terms(x.iter().filter(|((a, _), _)| a.degree() == 0).map(|((_, b), c)| (b.clone(), c.clone())))
}

pub fn counit_right(x: &PolyTensor) -> SparsePoly {
    SparsePoly::from_terms(x.iter().filter(|((_, b), _)| b.degree() == 0).map(|((a, _), c)| (a.clone(), c.clone())))
}

/// `(Δ⊗id)Δp` and `(id⊗Δ)Δp`, both bracketed on the left.
pub fn ln_coassociativity_sides(p: &SparsePoly) -> Result<(PolyTensor3, PolyTensor3), SeriesError> {
    let d = ln_coproduct(p)?;
    let mut lhs = PolyTensor3::zero();
    let mut rhs = PolyTensor3::zero();
    for ((a, b), c) in d.iter() {
        let da = ln_coproduct(&SparsePoly::monomial(a.clone()))?;
        for (ab, x) in da.iter() {
            lhs.add_term((ab.clone(), b.clone()), c * x);
        }
        let db = ln_coproduct(&SparsePoly::monomial(b.clone()))?;
        for ((b1, b2), x) in db.iter() {
            rhs.add_term(((a.clone(), b1.clone()), b2.clone()), c * x);
        }
    }
    Ok((lhs, rhs))
}

/// `m∘(χ⊗id)∘Δ` and `m∘(id⊗χ)∘Δ`.
pub fn ln_antipode_sides(p: &SparsePoly) -> Result<(SparsePoly, SparsePoly), SeriesError> {
    let d = ln_coproduct(p)?;
    let mut left = SparsePoly::zero();
    let mut right = SparsePoly::zero();
    for ((a, b), c) in d.iter() {
        let a = SparsePoly::monomial(a.clone());
        let b = SparsePoly::monomial(b.clone());
        left = left.add(&ln_antipode(&a)?.mul(&b).scale(c));
        right = right.add(&a.mul(&ln_antipode(&b)?).scale(c));
    }
    Ok((left, right))
}

/// The renaming `t_(k) = k!·t_{k−1}` used for the Faà di Bruno normalization, with
/// `t_0 = 1`. Only a change of generators; no structure map depends on it.
pub fn faa_di_bruno_generator(k: usize) -> SparsePoly {
    let base = if k <= 1 { SparsePoly::one() } else { t(k - 1) };
    base.scale(&factorial(k as u32))
}

/// `t_i` as a variable.
pub fn t_var(i: usize) -> Var {
    Var::indexed("t", i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::q;

    fn tensor(a: &SparsePoly, b: &SparsePoly) -> PolyTensor {
        PolyTensor::tensor(a, b)
    }

    #[test]
    fn coproduct_examples() {
        let one = SparsePoly::one();
        let d = ln_generator_coproducts(3).unwrap();
        assert_eq!(d[0], &tensor(&t(1), &one) + &tensor(&one, &t(1)));
        let d2 = &(&tensor(&t(2), &one) + &tensor(&t(1), &t(1)).scale(&q(2))) + &tensor(&one, &t(2));
        assert_eq!(d[1], d2);
        assert_eq!(counit_left(&d[2]), t(3));
        assert_eq!(counit_right(&d[2]), t(3));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(ln_antipode(&t(1)).unwrap(), t(1).neg());
        assert_eq!(ln_antipode(&t(2)).unwrap(), &t(1).pow(2).scale(&q(2)) - &t(2));
        let (l, r) = ln_antipode_sides(&t(2)).unwrap();
        assert!(l.is_zero() && r.is_zero());
    }

    #[test]
    fn hopf_axioms_on_generators() {
        for k in 1..=6 {
            let (lhs, rhs) = ln_coassociativity_sides(&t(k)).unwrap();
            assert_eq!(lhs, rhs, "coassociativity at t{k}");
            let (l, r) = ln_antipode_sides(&t(k)).unwrap();
            assert!(l.is_zero() && r.is_zero(), "antipode at t{k}");
        }
    }

    #[test]
    fn coproduct_preserves_grading() {
        let d = ln_generator_coproducts(5).unwrap();
        for (k, dk) in d.iter().enumerate() {
            for ((a, b), _) in dk.iter() {
                assert_eq!(ln_degree(a) + ln_degree(b), 2 * (k as u32 + 1));
            }
        }
    }

    #[test]
    fn faa_di_bruno_names() {
        assert_eq!(faa_di_bruno_generator(1), SparsePoly::one());
        assert_eq!(faa_di_bruno_generator(3), t(2).scale(&q(6)));
    }
}

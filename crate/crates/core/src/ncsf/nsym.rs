//! Noncommutative symmetric functions: the free associative algebra on `Z₁, Z₂, …`.


use super::composition::{compositions, Composition};
use crate::exactcore::rational::Q;
use crate::exactcore::{LinComb, Ring, SeriesError, Tensor, TruncSeries};

/// An element of NSymm⊗Q in the word basis `Z_α`.
pub type Ncf = LinComb<Composition>;

/// An element of NSymm⊗NSymm.
pub type TensorNcf = Tensor<Composition>;

/// The generator `Z_i`, with `Z_0 = 1`.
pub fn z(i: usize) -> Ncf {
    Ncf::monomial(Composition::from_parts(vec![i]))
}

/// The word `Z_{α₁}⋯Z_{α_k}`.
pub fn z_word(parts: &[usize]) -> Ncf {
    Ncf::monomial(Composition::from_parts(parts.to_vec()))
}

/// Multiplicative coproduct with `ΔZ_i = Σ_{j+k=i} Z_j⊗Z_k`.
pub fn coproduct(x: &Ncf) -> TensorNcf {
    x.map_linear(word_coproduct)
}

fn word_coproduct(w: &Composition) -> TensorNcf {
    let mut acc = TensorNcf::one();
    for &part in w.parts() {
        let mut gen = TensorNcf::zero();
        for j in 0..=part as usize {
            gen.add_term(
                (Composition::from_parts(vec![j]), Composition::from_parts(vec![part as usize - j])),
                Q::from_integer(1.into()),
            );
        }
        acc = acc.mul(&gen);
    }
    acc
}

/// Counit: the coefficient of the empty word.
pub fn counit(x: &Ncf) -> Q {
    x.constant_term()
}

/// `Δx = x⊗1 + 1⊗x`.
pub fn is_primitive(x: &Ncf) -> bool {
    let one = Ncf::one();
    let expected = &TensorNcf::tensor(x, &one) + &TensorNcf::tensor(&one, x);
    coproduct(x) == expected
}

/// `1 + Σ Z_i Tⁱ`.
pub fn grouplike_series(order: usize) -> TruncSeries<Ncf> {
    TruncSeries::from_fn(order, z)
}

/// `T + Σ Z_i T^{i+1}`.
pub fn diffeo_series(order: usize) -> TruncSeries<Ncf> {
    TruncSeries::from_fn(order, |k| if k == 0 { Ncf::zero() } else { z(k - 1) })
}

/// Side on which `Z(T)⁻¹` multiplies `T·Z′(T)` in the power sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InverseSide {
    /// `T·Z′(T)·Z(T)⁻¹`.
    #[default]
    Right,
    /// `Z(T)⁻¹·T·Z′(T)`.
    Left,
}

/// Noncommutative complete functions `Σ_k` and power sums `Ψ_k`, indices `1..=n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cartier {
    pub sigma: Vec<Ncf>,
    pub psi: Vec<Ncf>,
}

impl Cartier {
    pub fn sigma(&self, k: usize) -> &Ncf {
        &self.sigma[k - 1]
    }

    pub fn psi(&self, k: usize) -> &Ncf {
        &self.psi[k - 1]
    }

    /// `Ψ(T) = Σ Ψ_k T^k`.
    pub fn psi_series(&self) -> TruncSeries<Ncf> {
        let n = self.psi.len();
        TruncSeries::from_fn(n, |k| if k == 0 { Ncf::zero() } else { self.psi[k - 1].clone() })
    }
}

/// `Σ(T)·Z(−T) = 1` and `Ψ(T) = T·Z′(T)·Z(T)⁻¹`, grouplike normalization.
pub fn cartier(n_max: usize, side: InverseSide) -> Result<Cartier, SeriesError> {
    let zt = grouplike_series(n_max);
    let z_neg = TruncSeries::from_fn(n_max, |k| if k % 2 == 1 { zt.coeff(k).neg() } else { zt.coeff(k) });
    let sigma_series = z_neg.inverse_left()?;
    let inv = zt.inverse()?;
    let t_zprime = TruncSeries::new(zt.derivative().coeffs().to_vec(), n_max).shift_up(1);
    let psi_series = match side {
        InverseSide::Right => t_zprime.mul(&inv),
        InverseSide::Left => inv.mul(&t_zprime),
    };
    Ok(Cartier {
        sigma: (1..=n_max).map(|k| sigma_series.coeff(k)).collect(),
        psi: (1..=n_max).map(|k| psi_series.coeff(k)).collect(),
    })
}

/// All words of weight `n`.
pub fn words(n: u32) -> Vec<Ncf> {
    compositions(n).into_iter().map(Ncf::monomial).collect()
}

/// Evaluates `⟨x⊗y, φ⟩` for a bilinear functional on word pairs.
pub fn pair_tensor(t: &TensorNcf, mut phi: impl FnMut(&Composition, &Composition) -> Q) -> Q {
    let mut acc = Q::zero();
    for ((a, b), c) in t.iter() {
        acc += c * phi(a, b);
    }
    acc
}

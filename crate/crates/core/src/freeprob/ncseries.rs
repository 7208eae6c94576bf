//! The noncommutative cumulant series `χ_N(Z(−x))` over NSymm⊗Q.

use super::FreeProbError;
use crate::exactcore::poly::SparsePoly;
use crate::exactcore::{Ring, TruncSeries};
use crate::hopfdiff::Bfk;
use crate::ncsf::abelianize_poly;
use crate::ncsf::nsym::{z, Ncf};

pub use crate::hopfdiff::MAX_FGL_ORDER as MAX_NC_ORDER;

/// The raw series and its normalized cumulant reading.
#[derive(Debug, Clone, PartialEq)]
pub struct NcCumulants {
    /// `−x + Σ χ_N(Z_i)(−x)^{i+1}`.
    pub raw: TruncSeries<Ncf>,
    /// `k_1..k_order` with `k_n = (−1)ⁿ[xⁿ] x·(−raw)⁻¹`.
    pub cumulants: Vec<Ncf>,
}

/// `χ_N` applied coefficientwise to the diffeo-normalized `Z(−x)`.
pub fn nc_cumulant_series(order: usize) -> Result<NcCumulants, FreeProbError> {
    if order > MAX_NC_ORDER {
        return Err(FreeProbError::OrderTooLarge(order));
    }
    let bfk = Bfk::new(order);
    let sign = |k: usize| if k.is_multiple_of(2) { Ncf::one() } else { Ncf::one().neg() };
    let raw = TruncSeries::from_fn(order + 1, |k| match k {
        0 => Ncf::zero(),
        1 => sign(1),
        _ => bfk.antipode(&z(k - 1)).mul(&sign(k)),
    });
    let reduced = raw.neg().shift_down(1).ok_or(FreeProbError::NotDiffeomorphism)?;
    let normalized = reduced.inverse()?;
    let cumulants = (1..=order).map(|n| if n % 2 == 0 { normalized.coeff(n) } else { normalized.coeff(n).neg() }).collect();
    Ok(NcCumulants { raw, cumulants })
}

impl NcCumulants {
    /// Cumulants under `Z_i ↦ m_i`.
    pub fn abelianized(&self) -> Vec<SparsePoly> {
        self.cumulants.iter().map(|k| abelianize_poly(k, "m")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{q, qr, Q};
    use crate::exactcore::QAlgebra;
    use crate::freeprob::{moments_to_free_cumulants, MomentSeq};
    use crate::ncsf::nsym::z_word;
    use proptest::prelude::*;

    #[test]
    fn raw_series_to_order_three() {
        let nc = nc_cumulant_series(3).unwrap();
        let z11 = z_word(&[1, 1]);
        assert_eq!(nc.raw.coeff(1), Ncf::one().neg());
        assert_eq!(nc.raw.coeff(2), z(1).neg());
        assert_eq!(nc.raw.coeff(3), &z(2) - &z11.scale(&q(2)));
    }

    #[test]
    fn low_cumulants() {
        let nc = nc_cumulant_series(3).unwrap();
        assert_eq!(nc.cumulants[0], z(1));
        assert_eq!(nc.cumulants[1], &z(2) - &z_word(&[1, 1]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn abelianizes_to_free_cumulants(vals in prop::collection::vec((-5i64..=5, 1i64..=3), 6)) {
            let ms: Vec<Q> = vals.into_iter().map(|(a, b)| qr(a, b)).collect();
            let ab = nc_cumulant_series(6).unwrap().abelianized();
            let free = moments_to_free_cumulants(&MomentSeq::from_higher(ms.clone())).unwrap();
            for (n, k) in ab.iter().enumerate() {
                let value = k.evaluate(|v| v.index_with_prefix("m").map(|i| ms[i - 1].clone())).unwrap();
                prop_assert_eq!(&value, &free.get(n + 1));
            }
        }
    }
}

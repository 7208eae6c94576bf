//! Hopf algebras of formal diffeomorphisms: Landweber–Novikov, its noncommutative lift,
//! the coaction on logarithm coefficients and the formal group law over NSymm⊗Q.

pub mod beta;
pub mod bfk;
pub mod coaction;
pub mod fgl;
pub mod ln;

use serde::Serialize;

pub use beta::{beta_deform, BetaError, BetaSeries};
pub use bfk::{bfk_antipode, bfk_coproduct, Bfk};
pub use coaction::{mu_coaction, BNormalization, Coaction, CoactionTarget};
pub use fgl::{commutative_law, fgl_over_n, FglError, FglReport, FormalGroupLaw, MAX_FGL_ORDER};
pub use ln::{ln_antipode, ln_coproduct, t, PolyTensor};

use crate::exactcore::{Ring, SeriesError};
use crate::ncsf::abelian::abelianize_tensor;
use crate::ncsf::nsym::words;
use crate::ncsf::{abelianize_poly, Composition};

/// Where abelianization stopped commuting with a structure map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "map", content = "word", rename_all = "lowercase")]
pub enum AbelianMismatch {
    Coproduct(Composition),
    Antipode(Composition),
}

/// Checks `ab∘Δ_N = Δ_S∘ab` and `ab∘χ_N = χ∘ab` on every word of weight `≤ cap`.
pub fn ab_bfk_to_ln(cap: usize) -> Result<Option<AbelianMismatch>, SeriesError> {
    let bfk = Bfk::new(cap);
    for n in 1..=cap as u32 {
        for w in words(n) {
            let word = w.iter().next().map(|(c, _)| c.clone()).unwrap_or_default();
            let ab = abelianize_poly(&w, "t");
            if abelianize_tensor(&bfk.coproduct(&w), "t") != ln_coproduct(&ab)? {
                return Ok(Some(AbelianMismatch::Coproduct(word)));
            }
            if abelianize_poly(&bfk.antipode(&w), "t") != ln_antipode(&ab)? {
                return Ok(Some(AbelianMismatch::Antipode(word)));
            }
        }
    }
    Ok(None)
}

/// Which Hopf algebra to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HopfKind {
    Ln,
    Bfk,
}

/// Outcome of checking the Hopf axioms on generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub kind: HopfKind,
    pub weight: usize,
    pub coassociative: bool,
    pub counital: bool,
    pub antipode: bool,
    /// Generator index of the first failure.
    pub first_failure: Option<usize>,
}

/// Coassociativity, counit and both antipode identities on generators of weight `≤ cap`.
pub fn verify_hopf(kind: HopfKind, cap: usize) -> Result<AxiomReport, SeriesError> {
    let mut report = AxiomReport { kind, weight: cap, coassociative: true, counital: true, antipode: true, first_failure: None };
    let bfk = (kind == HopfKind::Bfk).then(|| Bfk::new(cap));
    for k in 1..=cap {
        let (coassoc, counit, anti) = match &bfk {
            None => {
                let g = t(k);
                let (l3, r3) = ln::ln_coassociativity_sides(&g)?;
                let d = ln_coproduct(&g)?;
                let (l, r) = ln::ln_antipode_sides(&g)?;
                (l3 == r3, ln::counit_left(&d) == g && ln::counit_right(&d) == g, l.is_zero() && r.is_zero())
            }
            Some(bfk) => {
                let g = crate::ncsf::z(k);
                let (l3, r3) = bfk.coassociativity_sides(&g);
                let d = bfk.coproduct(&g);
                let left = crate::ncsf::Ncf::from_terms(d.iter().filter(|((a, _), _)| a.is_empty()).map(|((_, b), c)| (b.clone(), c.clone())));
                let right = crate::ncsf::Ncf::from_terms(d.iter().filter(|((_, b), _)| b.is_empty()).map(|((a, _), c)| (a.clone(), c.clone())));
                let (l, r) = bfk.antipode_sides(&g);
                (l3 == r3, left == g && right == g, l.is_zero() && r.is_zero())
            }
        };
        report.coassociative &= coassoc;
        report.counital &= counit;
        report.antipode &= anti;
        if report.first_failure.is_none() && !(coassoc && counit && anti) {
            report.first_failure = Some(k);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelianization_is_a_hopf_map() {
        assert_eq!(ab_bfk_to_ln(5).unwrap(), None);
    }

    #[test]
    fn axioms_hold_to_weight_six() {
        for kind in [HopfKind::Ln, HopfKind::Bfk] {
            let r = verify_hopf(kind, 6).unwrap();
            assert_eq!(r.first_failure, None, "{kind:?}");
        }
    }
}

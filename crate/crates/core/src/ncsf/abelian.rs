//! Abelianization maps out of NSymm.

use num::One;

use super::composition::{Composition, Partition};
use super::nsym::{Ncf, TensorNcf};
use super::sym::{SymBasis, SymF};
use crate::exactcore::poly::{Monomial, SparsePoly, Var};
use crate::exactcore::rational::Q;
use crate::exactcore::LinComb;

/// Target naming for the commuting images of the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Naming {
    /// `Z_i ↦ e_i`.
    Sym,
    /// `Z_i ↦ t_i`.
    Diffeo,
}

/// Abelianized image: a symmetric function in the e basis or a polynomial in `t_*`.
#[derive(Debug, Clone, PartialEq)]
pub enum Abelian {
    Sym(SymF),
    Poly(SparsePoly),
}

pub fn abelianize(x: &Ncf, naming: Naming) -> Abelian {
    match naming {
        Naming::Sym => Abelian::Sym(abelianize_sym(x)),
        Naming::Diffeo => Abelian::Poly(abelianize_poly(x, "t")),
    }
}

/// `Z_α ↦ e_{sort(α)}`.
pub fn abelianize_sym(x: &Ncf) -> SymF {
    SymF::from_terms(SymBasis::E, x.iter().map(|(w, c)| (w.sorted(), c.clone())))
}

/// The commutative monomial `∏ prefix_{α_j}`.
pub fn word_monomial(w: &Composition, prefix: &str) -> Monomial {
    Monomial::from_powers(w.parts().iter().map(|&i| (Var::indexed(prefix, i as usize), 1)))
}

/// `Z_i ↦ prefix_i`, e.g. `t_i`, `b_i` or `m_i`.
pub fn abelianize_poly(x: &Ncf, prefix: &str) -> SparsePoly {
    SparsePoly::from_terms(x.iter().map(|(w, c)| (word_monomial(w, prefix), c.clone())))
}

/// Abelianization applied to both tensor factors.
pub fn abelianize_tensor(t: &TensorNcf, prefix: &str) -> LinComb<(Monomial, Monomial)> {
    LinComb::from_terms(t.iter().map(|((a, b), c)| ((word_monomial(a, prefix), word_monomial(b, prefix)), c.clone())))
}

/// The partition `sort(α)` read as the e-basis index.
pub fn e_index(w: &Composition) -> Partition {
    w.sorted()
}

/// `prefix_i ↦ Z_i`, choosing the increasing word for each monomial. A section of
/// abelianization, not a ring map.
pub fn lift_poly(p: &SparsePoly, prefix: &str) -> Ncf {
    Ncf::from_terms(p.iter().map(|(m, c)| {
        let mut parts = Vec::new();
        for (v, e) in m.powers() {
            let i = v.index_with_prefix(prefix).unwrap_or(0);
            parts.extend(std::iter::repeat_n(i, *e as usize));
        }
        parts.sort_unstable();
        (Composition::from_parts(parts), c.clone())
    }))
}

/// `1` in the target naming, as a convenience for counit checks.
pub fn unit_poly() -> SparsePoly {
    SparsePoly::constant(Q::one())
}

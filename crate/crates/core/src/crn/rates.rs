//! The rate matrix `A_κ` with `A[k][l] = rate(l→k)` and columns summing to zero.

use std::collections::BTreeMap;

use super::network::{Network, Rate};
use super::CrnError;
use crate::exactcore::poly::SparsePoly;
use crate::exactcore::rational::{format_rational, is_positive, Q};
use crate::exactcore::{Matrix, PolyMatrix, QAlgebra, RatMatrix, Ring};

/// Values for rate symbols.
pub type Bindings = BTreeMap<String, Q>;

/// How symbolic rates are treated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum RateMode {
    /// Symbols stay as polynomial variables; inline values are ignored.
    #[default]
    Symbolic,
    /// Every symbol takes its explicit binding, else its inline value.
    Numeric(Bindings),
}

impl RateMode {
    /// Numeric when bindings are given or every symbol has an inline value.
    pub fn infer(net: &Network, explicit: Option<Bindings>) -> Self {
        match explicit {
            Some(b) => RateMode::Numeric(b),
            None => {
                let inline = net.inline_values();
                if net.symbols().iter().all(|s| inline.contains_key(s)) {
                    RateMode::Numeric(Bindings::new())
                } else {
                    RateMode::Symbolic
                }
            }
        }
    }
}

/// Edge weight of each reaction under `mode`.
pub fn reaction_rates(net: &Network, mode: &RateMode) -> Result<Vec<SparsePoly>, CrnError> {
    if let RateMode::Numeric(b) = mode {
        if let Some((name, v)) = b.iter().find(|(_, v)| !is_positive(v)) {
            return Err(CrnError::NonPositiveRate(format!("{name}={}", format_rational(v))));
        }
    }
    net.reactions
        .iter()
        .map(|r| match (&r.rate, mode) {
            (Rate::Value { value }, _) => Ok(SparsePoly::constant(value.clone())),
            (Rate::Symbol { name, .. }, RateMode::Symbolic) => Ok(SparsePoly::var(name)),
            (Rate::Symbol { name, value }, RateMode::Numeric(b)) => b
                .get(name)
                .or(value.as_ref())
                .map(|v| SparsePoly::constant(v.clone()))
                .ok_or_else(|| CrnError::UnboundRate(name.clone())),
        })
        .collect()
}

/// Summed edge weights `w[k][l]` of `l → k`, zero on the diagonal.
pub fn edge_weights(net: &Network, mode: &RateMode) -> Result<Vec<Vec<SparsePoly>>, CrnError> {
    let n = net.num_complexes();
    let rates = reaction_rates(net, mode)?;
    let mut w = vec![vec![SparsePoly::zero(); n]; n];
    for (r, rate) in net.reactions.iter().zip(rates) {
        w[r.target][r.source] = w[r.target][r.source].add(&rate);
    }
    Ok(w)
}

/// `A[k][l] = rate(l→k)` for `k ≠ l`, `A[l][l] = −Σ_k rate(l→k)`.
pub fn build_rate_matrix(net: &Network, mode: &RateMode) -> Result<PolyMatrix, CrnError> {
    let n = net.num_complexes();
    let w = edge_weights(net, mode)?;
    Ok(Matrix::from_fn(n, n, |k, l| {
        if k == l {
            (0..n).fold(SparsePoly::zero(), |acc, j| acc.sub(&w[j][l]))
        } else {
            w[k][l].clone()
        }
    }))
}

/// Entries as rationals, if every entry is a constant.
pub fn numeric_matrix(a: &PolyMatrix) -> Option<RatMatrix> {
    let rows: Option<Vec<Vec<Q>>> = a.to_rows().iter().map(|r| r.iter().map(|p| p.as_rational()).collect()).collect();
    rows.map(|r| Matrix::from_rows(r).expect("rectangular"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crn::parse_network;
    use crate::exactcore::rational::q;

    #[test]
    fn two_cycle() {
        let net = parse_network("A -> B : alpha\nB -> A : beta").unwrap();
        let a = build_rate_matrix(&net, &RateMode::Symbolic).unwrap();
        let (al, be) = (SparsePoly::var("alpha"), SparsePoly::var("beta"));
        let expected = Matrix::from_rows(vec![vec![al.neg(), be.clone()], vec![al, be.neg()]]).unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn triangle_numeric() {
        let net = parse_network("A -> B : 1\nB -> C : 1\nC -> A : 1").unwrap();
        let a = numeric_matrix(&build_rate_matrix(&net, &RateMode::Numeric(Bindings::new())).unwrap()).unwrap();
        for l in 0..3 {
            assert_eq!(a.column(l).into_iter().fold(q(0), |s, x| s + x), q(0));
            assert_eq!(a.get(l, l), &q(-1));
        }
    }

    #[test]
    fn parallel_edges_sum() {
        let net = parse_network("A -> B : 1\nA -> B : 2\nB -> A : 1").unwrap();
        let a = numeric_matrix(&build_rate_matrix(&net, &RateMode::Numeric(Bindings::new())).unwrap()).unwrap();
        assert_eq!(a.get(1, 0), &q(3));
    }

    #[test]
    fn binding_errors() {
        let net = parse_network("A -> B : k1\nB -> A : k2=2").unwrap();
        assert_eq!(RateMode::infer(&net, None), RateMode::Symbolic);
        let err = build_rate_matrix(&net, &RateMode::Numeric(Bindings::new()));
        assert!(matches!(err, Err(CrnError::UnboundRate(s)) if s == "k1"));
        let bad = Bindings::from([("k1".to_string(), q(-1))]);
        assert!(matches!(build_rate_matrix(&net, &RateMode::Numeric(bad)), Err(CrnError::NonPositiveRate(_))));
        let good = Bindings::from([("k1".to_string(), q(5))]);
        let a = numeric_matrix(&build_rate_matrix(&net, &RateMode::Numeric(good)).unwrap()).unwrap();
        assert_eq!(a.get(0, 1), &q(2));
    }
}

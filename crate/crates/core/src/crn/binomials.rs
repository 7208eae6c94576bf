//! Binomials `∏K^{u₊} − ∏K^{u₋}` from the integer kernel of the Cayley matrix.

use num::bigint::BigInt;
use num::{Signed, ToPrimitive};
use serde::Serialize;

use super::analysis::cayley_matrix;
use super::network::Network;
use crate::exactcore::lattice::lattice_kernel;
use crate::exactcore::poly::{Monomial, SparsePoly, Var};
use crate::exactcore::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricBinomial {
    pub positive: Vec<u32>,
    pub negative: Vec<u32>,
    pub rendered: String,
}

impl ToricBinomial {
    /// The binomial in variables `K1..Kn`.
    pub fn polynomial(&self) -> SparsePoly {
        let mono = |e: &[u32]| Monomial::from_powers(e.iter().enumerate().filter(|(_, &p)| p > 0).map(|(i, &p)| (Var::indexed("K", i + 1), p)));
        let mut out = SparsePoly::monomial(mono(&self.positive));
        out.add_term(mono(&self.negative), -Q::from_integer(1.into()));
        out
    }
}

/// One binomial per Hermite-normalized kernel vector.
pub fn toric_binomials(net: &Network) -> Vec<ToricBinomial> {
    lattice_kernel(&cayley_matrix(net)).iter().map(|u| binomial_from_vector(u)).collect()
}

fn binomial_from_vector(u: &[BigInt]) -> ToricBinomial {
    let part = |keep: fn(&BigInt) -> bool| -> Vec<u32> {
        u.iter().map(|x| if keep(x) { x.abs().to_u32().expect("small exponent") } else { 0 }).collect()
    };
    let positive = part(|x| x.is_positive());
    let negative = part(|x| x.is_negative());
    let render = |e: &[u32]| -> String {
        let factors: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(i, &p)| if p == 1 { format!("K{}", i + 1) } else { format!("K{}^{p}", i + 1) })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("·")
        }
    };
    let rendered = format!("{} − {}", render(&positive), render(&negative));
    ToricBinomial { positive, negative, rendered }
}

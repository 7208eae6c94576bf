//! Chern, quasisymmetric and Hamiltonian characteristic numbers of quasitoric data.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use super::quasitoric::{v, QuasitoricData, V_PREFIX};
use super::TopError;
use crate::exactcore::poly::{SparsePoly, Var};
use crate::exactcore::rational::{format_rational, serde_q, Q};
use crate::exactcore::{QAlgebra, Ring, TruncSeries};
use crate::ncsf::{compositions, partitions, qsym_realize, Composition, Ncf, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bundle {
    Tangent,
    Normal,
}

/// Elementary symmetric polynomials `e_0..e_n` in `v1..vm`.
pub fn elementary_in_v(m: usize, n: usize) -> Vec<SparsePoly> {
    let mut acc = TruncSeries::one(n);
    for i in 1..=m {
        acc = acc.mul(&TruncSeries::new(vec![SparsePoly::one(), v(i)], n));
    }
    acc.coeffs().to_vec()
}

/// Complete homogeneous symmetric polynomials `h_0..h_n` in `v1..vm`.
pub fn complete_in_v(m: usize, n: usize) -> Vec<SparsePoly> {
    let mut acc = TruncSeries::one(n);
    for i in 1..=m {
        let vi = v(i);
        acc = acc.mul(&TruncSeries::from_fn(n, |k| vi.pow(k as u32)));
    }
    acc.coeffs().to_vec()
}

/// `c_0..c_n` of the bundle: `e_k(v)` for the tangent bundle, `(−1)^k h_k(v)` for its stable
/// inverse.
pub fn chern_classes(d: &QuasitoricData, bundle: Bundle) -> Vec<SparsePoly> {
    let (m, n) = (d.num_vertices(), d.dimension());
    match bundle {
        Bundle::Tangent => elementary_in_v(m, n),
        Bundle::Normal => complete_in_v(m, n).into_iter().enumerate().map(|(k, h)| if k % 2 == 0 { h } else { h.neg() }).collect(),
    }
}

fn check_weight(weight: u32, n: usize) -> Result<(), TopError> {
    if weight as usize != n {
        return Err(TopError::DegreeMismatch { expected: n, found: weight as usize });
    }
    Ok(())
}

/// `c^I[M]` for a partition `I` of `n`.
pub fn chern_number(d: &QuasitoricData, partition: &Partition, bundle: Bundle) -> Result<Q, TopError> {
    check_weight(partition.weight(), d.dimension())?;
    let classes = chern_classes(d, bundle);
    let word = partition.parts().iter().fold(SparsePoly::one(), |acc, &k| acc.mul(&classes[k as usize]));
    d.top_evaluate(&word)
}

/// `c^I[M]` for every partition of `n`.
pub fn chern_numbers(d: &QuasitoricData, bundle: Bundle) -> Result<BTreeMap<Partition, Q>, TopError> {
    partitions(d.dimension() as u32).into_iter().map(|p| chern_number(d, &p, bundle).map(|x| (p, x))).collect()
}

/// `⟨α⟩(v) = Σ_{i₁<…<i_ℓ} v_{i₁}^{α₁}⋯v_{i_ℓ}^{α_ℓ}`.
pub fn quasi_monomial_in_v(alpha: &Composition, m: usize) -> SparsePoly {
    qsym_realize(alpha, m).substitute(|x| x.index_with_prefix("x").map(|i| SparsePoly::monomial(crate::exactcore::Monomial::var(Var::indexed(V_PREFIX, i)))))
}

/// Rational values on compositions; the weight-`n` part is the class in noncommutative
/// symmetric functions, lower weights carry a `b(i)` marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MxiClass {
    pub degree: usize,
    pub values: BTreeMap<Composition, Q>,
}

impl MxiClass {
    /// `Σ value·Z_α` over the compositions of the top weight.
    pub fn to_ncf(&self) -> Ncf {
        Ncf::from_terms(self.values.iter().filter(|(a, _)| a.weight() as usize == self.degree).map(|(a, c)| (a.clone(), c.clone())))
    }

    pub fn value(&self, alpha: &Composition) -> Q {
        self.values.get(alpha).cloned().unwrap_or_else(Q::zero)
    }

    /// The top-weight class, e.g. `3·Z[2] + 3·Z[1,1]`.
    pub fn render(&self) -> String {
        self.to_ncf().render()
    }

    /// Every entry, weight by weight, as `value·Z[α]·b(i)`.
    pub fn render_with_markers(&self) -> String {
        let mut by_weight: Vec<(&Composition, &Q)> = self.values.iter().filter(|(_, c)| !c.is_zero()).collect();
        by_weight.sort_by_key(|(a, _)| (a.weight(), std::cmp::Reverse((*a).clone())));
        let terms: Vec<String> = by_weight.iter().map(|(a, c)| format!("{}·Z{}·b({})", format_rational(c), a.bracket(), a.weight())).collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl Serialize for MxiClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            composition: &'a Composition,
            weight: u32,
            #[serde(with = "serde_q")]
            value: &'a Q,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            degree: usize,
            rendered: String,
            entries: Vec<Entry<'a>>,
        }
        Out {
            degree: self.degree,
            rendered: self.render(),
            entries: self.values.iter().map(|(a, c)| Entry { composition: a, weight: a.weight(), value: c }).collect(),
        }
        .serialize(s)
    }
}

/// `⟨α⟩(v)[M]` for every composition `α` of `n`.
pub fn mxi_numbers(d: &QuasitoricData) -> Result<MxiClass, TopError> {
    let n = d.dimension();
    let mut values = BTreeMap::new();
    for alpha in compositions(n as u32) {
        let value = d.top_evaluate(&quasi_monomial_in_v(&alpha, d.num_vertices()))?;
        values.insert(alpha, value);
    }
    Ok(MxiClass { degree: n, values })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HamiltonianConvention {
    /// Partitions `I`, values `(−1)^{ℓ(I)}(h_I(v)·u^{n−|I|})[V]`.
    Ginzburg,
    /// Compositions `α`, values `(⟨α⟩(v)·u^{n−|α|})[V]`.
    Mxi,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonianEntry {
    pub index: Vec<u32>,
    pub weight: u32,
    #[serde(with = "serde_q")]
    pub value: Q,
}

/// Characteristic numbers of a symplectic class `u`, one per index of weight `≤ n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonianNumbers {
    pub convention: HamiltonianConvention,
    pub degree: usize,
    pub entries: Vec<HamiltonianEntry>,
}

impl HamiltonianNumbers {
    pub fn value(&self, index: &[u32]) -> Option<&Q> {
        self.entries.iter().find(|e| e.index == index).map(|e| &e.value)
    }

    /// The Mxi variant as a class with `b(i)` markers.
    pub fn to_mxi_class(&self) -> Option<MxiClass> {
        (self.convention == HamiltonianConvention::Mxi).then(|| MxiClass {
            degree: self.degree,
            values: self.entries.iter().map(|e| (Composition::from_parts(e.index.iter().map(|&p| p as usize).collect()), e.value.clone())).collect(),
        })
    }
}

/// Checks that `u` is a linear form in `v1..vm`.
fn check_class(d: &QuasitoricData, u: &SparsePoly) -> Result<(), TopError> {
    for (mono, _) in u.iter() {
        if mono.degree() != 1 {
            return Err(TopError::ClassDegree(u.to_string()));
        }
        let (var, _) = &mono.powers()[0];
        if !var.index_with_prefix(V_PREFIX).is_some_and(|i| (1..=d.num_vertices()).contains(&i)) {
            return Err(TopError::UnknownVariable(var.name().to_string()));
        }
    }
    Ok(())
}

/// The full table for the chosen convention, weights `0..=n`.
pub fn hamiltonian_numbers(d: &QuasitoricData, u: &SparsePoly, convention: HamiltonianConvention) -> Result<HamiltonianNumbers, TopError> {
    check_class(d, u)?;
    let (m, n) = (d.num_vertices(), d.dimension());
    let complete = complete_in_v(m, n);
    let mut entries = Vec::new();
    for i in 0..=n {
        let power = u.pow((n - i) as u32);
        let indexed: Vec<(Vec<u32>, SparsePoly)> = match convention {
            HamiltonianConvention::Ginzburg => partitions(i as u32)
                .into_iter()
                .map(|p| {
                    let h = p.parts().iter().fold(SparsePoly::one(), |acc, &k| acc.mul(&complete[k as usize]));
                    let signed = if p.len() % 2 == 0 { h } else { h.neg() };
                    (p.parts().to_vec(), signed)
                })
                .collect(),
            HamiltonianConvention::Mxi => compositions(i as u32).into_iter().map(|a| (a.parts().to_vec(), quasi_monomial_in_v(&a, m))).collect(),
        };
        for (index, class) in indexed {
            let value = d.top_evaluate(&class.mul(&power))?;
            entries.push(HamiltonianEntry { index, weight: i as u32, value });
        }
    }
    Ok(HamiltonianNumbers { convention, degree: n, entries })
}

/// `u = Σ c_i v_i` from coefficients.
pub fn linear_form(coeffs: &[Q]) -> SparsePoly {
    coeffs.iter().enumerate().fold(SparsePoly::zero(), |acc, (i, c)| acc.add(&v(i + 1).scale(c)))
}

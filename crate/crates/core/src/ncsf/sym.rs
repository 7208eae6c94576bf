//! Symmetric functions in the e, h, p, m and s bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::composition::{partitions, Partition};
use crate::exactcore::lincomb::render_terms;
use crate::exactcore::matrix::det_subset_expansion;
use crate::exactcore::poly::{Monomial, SparsePoly, Var};
use crate::exactcore::rational::{format_rational, Q};
use crate::exactcore::{Matrix, RatMatrix, Ring};

/// Largest degree accepted by basis conversions.
pub const MAX_SYM_DEGREE: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymBasis {
    E,
    H,
    P,
    M,
    S,
}

impl SymBasis {
    pub fn letter(self) -> &'static str {
        match self {
            SymBasis::E => "e",
            SymBasis::H => "h",
            SymBasis::P => "p",
            SymBasis::M => "m",
            SymBasis::S => "s",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "e" => SymBasis::E,
            "h" => SymBasis::H,
            "p" => SymBasis::P,
            "m" => SymBasis::M,
            "s" => SymBasis::S,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("degree {degree} exceeds the conversion cap {max}")]
    DegreeCap { degree: u32, max: u32 },
}

/// A symmetric function stored in one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymF {
    basis: SymBasis,
    terms: BTreeMap<Partition, Q>,
}

impl SymF {
    pub fn zero(basis: SymBasis) -> Self {
        SymF { basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: SymBasis, parts: &[u32]) -> Self {
        Self::term(basis, Partition::new(parts.to_vec()), Q::one())
    }

    pub fn term(basis: SymBasis, lambda: Partition, c: Q) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(lambda, c);
        out
    }

    pub fn from_terms(basis: SymBasis, terms: impl IntoIterator<Item = (Partition, Q)>) -> Self {
        let mut out = Self::zero(basis);
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        let next = self.terms.get(&lambda).cloned().unwrap_or_else(Q::zero) + c;
        if next.is_zero() {
            self.terms.remove(&lambda);
        } else {
            self.terms.insert(lambda, next);
        }
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Q> {
        &self.terms
    }

    pub fn coeff(&self, parts: &[u32]) -> Q {
        self.terms.get(&Partition::new(parts.to_vec())).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Partition::weight).max().unwrap_or(0)
    }

    pub fn render(&self) -> String {
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_by_key(|l| (l.weight(), std::cmp::Reverse(*l)));
        let letter = self.basis.letter();
        render_terms(keys.into_iter().map(|l| (format!("{letter}{}", l.bracket()), l.is_empty(), &self.terms[l])))
    }

    /// Change of basis.
    pub fn convert(&self, to: SymBasis) -> Result<SymF, SymError> {
        let d = self.max_degree();
        if d > MAX_SYM_DEGREE {
            return Err(SymError::DegreeCap { degree: d, max: MAX_SYM_DEGREE });
        }
        if to == self.basis {
            return Ok(self.clone());
        }
        Ok(from_e_poly(&to_e_poly(self), to))
    }

    /// Sum with another symmetric function, in `self`'s basis.
    pub fn add(&self, other: &SymF) -> Result<SymF, SymError> {
        let other = other.convert(self.basis)?;
        let mut out = self.clone();
        for (l, c) in other.terms {
            out.add_term(l, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> SymF {
        SymF::from_terms(self.basis, self.terms.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    pub fn mul(&self, other: &SymF) -> Result<SymF, SymError> {
        let a = to_e_poly(&self.convert(SymBasis::E)?);
        let b = to_e_poly(&other.convert(SymBasis::E)?);
        from_e_poly(&a.mul(&b), SymBasis::E).convert(self.basis)
    }

    /// Equality as symmetric functions, whatever the stored bases.
    pub fn equals(&self, other: &SymF) -> Result<bool, SymError> {
        Ok(self.convert(SymBasis::E)? == other.convert(SymBasis::E)?)
    }
}

impl fmt::Display for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize, Deserialize)]
struct SymTermJson {
    index: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymJson {
    basis: SymBasis,
    terms: Vec<SymTermJson>,
}

impl Serialize for SymF {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymJson {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| SymTermJson { index: l.parts().to_vec(), coeff: format_rational(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymF {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SymJson::deserialize(d)?;
        let mut out = SymF::zero(raw.basis);
        for t in raw.terms {
            let c = crate::exactcore::parse_rational(&t.coeff).map_err(serde::de::Error::custom)?;
            out.add_term(Partition::new(t.index), c);
        }
        Ok(out)
    }
}

fn gen(prefix: &str, k: u32) -> SparsePoly {
    if k == 0 {
        SparsePoly::one()
    } else {
        SparsePoly::indexed_var(prefix, k as usize)
    }
}

/// `h_k` as a polynomial in `e_*`, from `H(t)·E(−t) = 1`. Symmetric in the roles of e and h.
fn complete_in(prefix: &str, k: u32) -> SparsePoly {
    let mut hs: Vec<SparsePoly> = vec![SparsePoly::one()];
    for n in 1..=k {
        let mut acc = SparsePoly::zero();
        for i in 1..=n {
            let term = gen(prefix, i).mul(&hs[(n - i) as usize]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        hs.push(acc);
    }
    hs[k as usize].clone()
}

/// `p_k` in `e_*` by Newton's identities.
fn power_in_e(k: u32) -> SparsePoly {
    let mut ps: Vec<SparsePoly> = vec![SparsePoly::zero()];
    for n in 1..=k {
        let mut acc = SparsePoly::zero();
        for i in 1..n {
            let term = gen("e", i).mul(&ps[(n - i) as usize]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        let last = gen("e", n).map_coeffs(|c| c * Q::from_integer(n.into()));
        acc = if n % 2 == 1 { acc.add(&last) } else { acc.sub(&last) };
        ps.push(acc);
    }
    ps[k as usize].clone()
}

/// `e_k` in `p_*`: `k·e_k = Σ_{i=1}^{k} (−1)^{i−1} e_{k−i} p_i`.
fn elementary_in_p(k: u32) -> SparsePoly {
    let mut es: Vec<SparsePoly> = vec![SparsePoly::one()];
    for n in 1..=k {
        let mut acc = SparsePoly::zero();
        for i in 1..=n {
            let term = es[(n - i) as usize].mul(&gen("p", i));
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        es.push(acc.map_coeffs(|c| c / Q::from_integer(n.into())));
    }
    es[k as usize].clone()
}

fn product_of(parts: &[u32], f: impl Fn(u32) -> SparsePoly) -> SparsePoly {
    parts.iter().fold(SparsePoly::one(), |acc, &k| acc.mul(&f(k)))
}

/// Jacobi–Trudi: `s_λ = det(h_{λ_i − i + j})`, as a polynomial in `h_*`.
fn schur_in_h(lambda: &Partition) -> SparsePoly {
    let parts = lambda.parts();
    let n = parts.len();
    let m = Matrix::from_fn(n, n, |i, j| {
        let k = parts[i] as i64 - i as i64 + j as i64;
        if k < 0 {
            SparsePoly::zero()
        } else {
            gen("h", k as u32)
        }
    });
    det_subset_expansion(&m)
}

/// Element as a polynomial in the variables `e1, e2, …`.
fn to_e_poly(f: &SymF) -> SparsePoly {
    let mut out = SparsePoly::zero();
    for (lambda, c) in &f.terms {
        let p = match f.basis {
            SymBasis::E => product_of(lambda.parts(), |k| gen("e", k)),
            SymBasis::H => product_of(lambda.parts(), |k| complete_in("e", k)),
            SymBasis::P => product_of(lambda.parts(), power_in_e),
            SymBasis::S => h_poly_to_e(&schur_in_h(lambda)),
            SymBasis::M => {
                let t = transitions(lambda.weight());
                let col = t.index[lambda];
                let mut acc = SparsePoly::zero();
                for (row, mu) in t.parts.iter().enumerate() {
                    let w = t.m_to_e.get(row, col);
                    if !w.is_zero() {
                        acc.add_term(e_monomial(mu), w.clone());
                    }
                }
                acc
            }
        };
        out = out.add(&p.map_coeffs(|x| x * c));
    }
    out
}

fn h_poly_to_e(p: &SparsePoly) -> SparsePoly {
    p.substitute(|v| v.index_with_prefix("h").map(|k| complete_in("e", k as u32)))
}

fn e_monomial(lambda: &Partition) -> Monomial {
    Monomial::from_powers(lambda.parts().iter().map(|&k| (Var::indexed("e", k as usize), 1)))
}

/// Reads a polynomial in `prefix1, prefix2, …` as a multiplicative-basis element.
fn read_generators(p: &SparsePoly, prefix: &str, basis: SymBasis) -> SymF {
    SymF::from_terms(
        basis,
        p.iter().map(|(mono, c)| {
            let mut parts = Vec::new();
            for (v, e) in mono.powers() {
                let k = v.index_with_prefix(prefix).expect("generator variable") as u32;
                parts.extend(std::iter::repeat_n(k, *e as usize));
            }
            (Partition::new(parts), c.clone())
        }),
    )
}

fn from_e_poly(p: &SparsePoly, to: SymBasis) -> SymF {
    match to {
        SymBasis::E => read_generators(p, "e", SymBasis::E),
        SymBasis::H => {
            let in_h = p.substitute(|v| v.index_with_prefix("e").map(|k| complete_in("h", k as u32)));
            read_generators(&in_h, "h", SymBasis::H)
        }
        SymBasis::P => {
            let in_p = p.substitute(|v| v.index_with_prefix("e").map(|k| elementary_in_p(k as u32)));
            read_generators(&in_p, "p", SymBasis::P)
        }
        SymBasis::M => {
            let mut out = SymF::zero(SymBasis::M);
            for (mono, c) in p.iter() {
                let lambda = read_generators(&SparsePoly::monomial(mono.clone()), "e", SymBasis::E);
                let (lambda, _) = lambda.terms.into_iter().next().expect("single monomial");
                let t = transitions(lambda.weight());
                let row = t.index[&lambda];
                for (col, mu) in t.parts.iter().enumerate() {
                    let w = t.e_to_m.get(row, col);
                    if !w.is_zero() {
                        out.add_term(mu.clone(), w * c);
                    }
                }
            }
            out
        }
        SymBasis::S => {
            // ⟨f, s_μ⟩ is the s_μ-coefficient since the Schur functions are orthonormal
            let f = from_e_poly(p, SymBasis::H);
            let mut out = SymF::zero(SymBasis::S);
            let degrees: Vec<u32> = {
                let mut ds: Vec<u32> = f.terms.keys().map(Partition::weight).collect();
                ds.sort_unstable();
                ds.dedup();
                ds
            };
            for d in degrees {
                for mu in partitions(d) {
                    let s_in_m = from_e_poly(&h_poly_to_e(&schur_in_h(&mu)), SymBasis::M);
                    let c = pair_h_m(&f, &s_in_m);
                    out.add_term(mu, c);
                }
            }
            out
        }
    }
}

fn pair_h_m(h: &SymF, m: &SymF) -> Q {
    h.terms.iter().map(|(l, c)| c * m.terms.get(l).cloned().unwrap_or_else(Q::zero)).sum()
}

/// `⟨h_λ, m_μ⟩ = δ_{λμ}` extended bilinearly.
pub fn hall_pairing(f: &SymF, g: &SymF) -> Result<Q, SymError> {
    Ok(pair_h_m(&f.convert(SymBasis::H)?, &g.convert(SymBasis::M)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Involution {
    /// `e_k ↦ (−1)^k e_k`.
    Sign,
    /// `e_k ↦ (−1)^k h_k`, the antipode; sends `p_k ↦ −p_k`.
    Inverse,
}

/// Applies a ring involution and returns the result in the input's basis.
pub fn involution(f: &SymF, which: Involution) -> Result<SymF, SymError> {
    let e = f.convert(SymBasis::E)?;
    let mut out = SymF::zero(SymBasis::E);
    for (lambda, c) in &e.terms {
        let sign = if lambda.weight() % 2 == 0 { c.clone() } else { -c.clone() };
        match which {
            Involution::Sign => out.add_term(lambda.clone(), sign),
            Involution::Inverse => {
                let h = SymF::term(SymBasis::H, lambda.clone(), sign).convert(SymBasis::E)?;
                for (l, x) in h.terms {
                    out.add_term(l, x);
                }
            }
        }
    }
    out.convert(f.basis)
}

/// Expansions of `e_λ` in the monomial basis for one degree, and the inverse transition.
struct Transition {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// row λ, column μ: coefficient of `m_μ` in `e_λ`
    e_to_m: RatMatrix,
    /// row λ, column μ: coefficient of `e_λ` in `m_μ`
    m_to_e: RatMatrix,
}

fn transitions(d: u32) -> Arc<Transition> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("transition cache").get(&d) {
        return t.clone();
    }
    let t = Arc::new(build_transition(d));
    cache.lock().expect("transition cache").insert(d, t.clone());
    t
}

fn build_transition(d: u32) -> Transition {
    let parts = partitions(d);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = parts.len();
    let mut e_to_m = RatMatrix::zeros(n, n);
    for (row, lambda) in parts.iter().enumerate() {
        let coeffs = realize_elementary(lambda, d as usize);
        for (col, mu) in parts.iter().enumerate() {
            let mut key = mu.parts().to_vec();
            key.resize(d as usize, 0);
            if let Some(c) = coeffs.get(&key) {
                e_to_m.set(row, col, Q::from_integer((*c).into()));
            }
        }
    }
    let m_to_e = e_to_m.inverse().expect("e and m are both bases");
    Transition { parts, index, e_to_m, m_to_e }
}

/// `e_λ` in `d` variables, keeping only monomials that can still grow into a partition
/// monomial of weight `d`.
fn realize_elementary(lambda: &Partition, d: usize) -> HashMap<Vec<u32>, u64> {
    let mut current: HashMap<Vec<u32>, u64> = HashMap::from([(vec![0; d], 1)]);
    for &k in lambda.parts() {
        let mut next: HashMap<Vec<u32>, u64> = HashMap::new();
        for (exps, c) in &current {
            for subset in subsets(d, k as usize) {
                let mut e = exps.clone();
                for &i in &subset {
                    e[i] += 1;
                }
                if majorant_weight(&e) <= d as u32 {
                    *next.entry(e).or_insert(0) += c;
                }
            }
        }
        current = next;
    }
    current
}

/// Weight of the smallest weakly decreasing sequence dominating `e` entrywise.
fn majorant_weight(e: &[u32]) -> u32 {
    let mut run = 0;
    let mut total = 0;
    for &x in e.iter().rev() {
        run = run.max(x);
        total += run;
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::q;

    fn el(b: SymBasis, parts: &[u32]) -> SymF {
        SymF::basis_element(b, parts)
    }

    fn combo(b: SymBasis, terms: &[(&[u32], i64)]) -> SymF {
        SymF::from_terms(b, terms.iter().map(|(p, c)| (Partition::new(p.to_vec()), q(*c))))
    }

    #[test]
    fn conversion_examples() {
        use SymBasis::*;
        assert_eq!(el(H, &[2]).convert(E).unwrap(), combo(E, &[(&[1, 1], 1), (&[2], -1)]));
        assert_eq!(el(P, &[2]).convert(E).unwrap(), combo(E, &[(&[1, 1], 1), (&[2], -2)]));
        assert_eq!(el(S, &[1, 1]).convert(E).unwrap(), el(E, &[2]));
        assert_eq!(el(S, &[2]).convert(H).unwrap(), el(H, &[2]));
        assert_eq!(el(E, &[2]).convert(M).unwrap(), el(M, &[1, 1]));
        assert_eq!(el(H, &[2]).convert(M).unwrap(), combo(M, &[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn conversions_round_trip() {
        use SymBasis::*;
        for d in 1..=5 {
            for lambda in partitions(d) {
                for from in [E, H, P, M, S] {
                    let f = SymF::term(from, lambda.clone(), q(1));
                    for to in [E, H, P, M, S] {
                        let back = f.convert(to).unwrap().convert(from).unwrap();
                        assert_eq!(back, f, "{from:?} → {to:?} → {from:?} on {lambda:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree_cap() {
        assert!(matches!(el(SymBasis::E, &[11]).convert(SymBasis::M), Err(SymError::DegreeCap { .. })));
        assert!(el(SymBasis::E, &[4, 3, 2, 1]).convert(SymBasis::M).is_ok());
    }

    #[test]
    fn involution_examples() {
        use SymBasis::*;
        let inv = |f: &SymF| involution(f, Involution::Inverse).unwrap();
        let sign = |f: &SymF| involution(f, Involution::Sign).unwrap();
        assert_eq!(inv(&el(E, &[1])), el(E, &[1]).scale(&q(-1)));
        for k in [2, 3] {
            assert_eq!(inv(&inv(&el(E, &[k]))), el(E, &[k]));
        }
        assert_eq!(sign(&el(E, &[3])), el(E, &[3]).scale(&q(-1)));
        for k in 1..=5 {
            assert_eq!(inv(&el(P, &[k])), el(P, &[k]).scale(&q(-1)));
        }
    }

    #[test]
    fn involutions_form_klein_group() {
        use SymBasis::*;
        for d in 1..=6 {
            for lambda in partitions(d) {
                let f = SymF::term(E, lambda, q(1));
                let s = |g: &SymF| involution(g, Involution::Sign).unwrap();
                let i = |g: &SymF| involution(g, Involution::Inverse).unwrap();
                assert_eq!(s(&s(&f)), f);
                assert_eq!(i(&i(&f)), f);
                assert_eq!(s(&i(&f)), i(&s(&f)));
            }
        }
    }

    #[test]
    fn hall_pairing_examples() {
        use SymBasis::*;
        assert_eq!(hall_pairing(&el(H, &[2]), &el(M, &[2])).unwrap(), q(1));
        assert_eq!(hall_pairing(&el(H, &[1, 1]), &el(M, &[2])).unwrap(), q(0));
        for d in 1..=4 {
            for a in partitions(d) {
                for b in partitions(d) {
                    let v = hall_pairing(&SymF::term(S, a.clone(), q(1)), &SymF::term(S, b.clone(), q(1))).unwrap();
                    assert_eq!(v, if a == b { q(1) } else { q(0) });
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let f = el(SymBasis::E, &[2, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"basis":"e","terms":[{"index":[2,1],"coeff":"1"}]}"#);
        let back: SymF = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn majorant() {
        assert_eq!(majorant_weight(&[0, 2, 1]), 5);
        assert_eq!(majorant_weight(&[2, 1, 0]), 3);
    }
}

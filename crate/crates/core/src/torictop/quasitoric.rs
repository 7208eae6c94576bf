//! Omnioriented quasitoric data and evaluation on the fundamental class.

use std::cell::RefCell;
use std::collections::HashMap;

use num::bigint::BigInt;
use num::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::complex::{members, one_based, SimplicialComplex, SphereReport};
use super::TopError;
use crate::exactcore::poly::{Monomial, SparsePoly, Var};
use crate::exactcore::rational::Q;
use crate::exactcore::{determinant, IntMatrix, Matrix, Ring};

/// Variable prefix for the classes `v1..vm`.
pub const V_PREFIX: &str = "v";

/// The class `v_i`, 1-based.
pub fn v(i: usize) -> SparsePoly {
    SparsePoly::indexed_var(V_PREFIX, i)
}

/// Determinant of a facet minor of a characteristic matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetMinor {
    pub facet: Vec<usize>,
    pub det: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facet: Option<Vec<usize>>,
    pub detail: String,
}

/// Every check on a pair `(K, Λ)`, with all violations listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub valid: bool,
    pub sphere: SphereReport,
    pub minors: Vec<FacetMinor>,
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn summary(&self) -> String {
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| match &v.facet {
                Some(f) => format!("{} at facet {f:?}: {}", v.kind, v.detail),
                None => format!("{}: {}", v.kind, v.detail),
            })
            .collect();
        parts.join("; ")
    }
}

fn facet_det(lambda: &IntMatrix, facet: u64) -> BigInt {
    determinant(&lambda.select(&(0..lambda.rows()).collect::<Vec<_>>(), &members(facet))).expect("square minor")
}

/// Sphere battery plus unimodularity of every facet minor.
pub fn validate_quasitoric(k: &SimplicialComplex, lambda: &IntMatrix) -> ValidityReport {
    let sphere = k.sphere_report();
    let mut violations: Vec<Violation> = sphere
        .failures()
        .map(|c| Violation { kind: format!("sphere:{}", c.name), facet: None, detail: c.detail.clone().unwrap_or_default() })
        .collect();
    let n = k.facet_size();
    let mut minors = Vec::new();
    if lambda.cols() != k.num_vertices() || lambda.rows() != n {
        violations.push(Violation {
            kind: "shape".into(),
            facet: None,
            detail: format!("Λ is {}×{}, expected {}×{}", lambda.rows(), lambda.cols(), n, k.num_vertices()),
        });
    } else {
        for &f in k.facet_masks() {
            if f.count_ones() as usize != n {
                continue;
            }
            let det = facet_det(lambda, f);
            let small = det.to_i64().unwrap_or(i64::MAX);
            if det.abs() != BigInt::from(1) {
                violations.push(Violation { kind: "minor".into(), facet: Some(one_based(f)), detail: format!("det = {det}") });
            }
            minors.push(FacetMinor { facet: one_based(f), det: small });
        }
    }
    ValidityReport { valid: violations.is_empty(), sphere, minors, violations }
}

/// JSON form: 1-based facets, `Λ` as rows, optional base facet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasitoricJson {
    pub facets: Vec<Vec<usize>>,
    pub lambda: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_facet: Option<Vec<usize>>,
}

impl QuasitoricJson {
    pub fn complex(&self) -> Result<SimplicialComplex, TopError> {
        let m = self.lambda.first().map_or(0, Vec::len);
        SimplicialComplex::from_one_based(m, &self.facets)
    }

    pub fn matrix(&self) -> Result<IntMatrix, TopError> {
        Ok(IntMatrix::from_i64(&self.lambda)?)
    }
}

/// A sphere `K`, a characteristic matrix `Λ` and the chosen orientation.
#[derive(Debug, Clone)]
pub struct QuasitoricData {
    complex: SimplicialComplex,
    lambda: IntMatrix,
    base_facet: usize,
    orientation_flip: bool,
    eval: Evaluator,
}

impl QuasitoricData {
    /// Validates and builds the evaluation context. `base_facet` is 0-based and defaults to
    /// the lexicographically least facet.
    pub fn new(complex: SimplicialComplex, lambda: IntMatrix, base_facet: Option<&[usize]>) -> Result<Self, TopError> {
        let report = validate_quasitoric(&complex, &lambda);
        if !report.valid {
            return Err(TopError::Invalid(report.summary()));
        }
        let base = match base_facet {
            None => 0,
            Some(f) => {
                let mut sorted = f.to_vec();
                sorted.sort_unstable();
                complex
                    .facets()
                    .iter()
                    .position(|g| *g == sorted)
                    .ok_or_else(|| TopError::Invalid(format!("base facet {:?} is not a facet", sorted.iter().map(|x| x + 1).collect::<Vec<_>>())))?
            }
        };
        let eval = Evaluator::build(&complex, &lambda, base)?;
        Ok(QuasitoricData { complex, lambda, base_facet: base, orientation_flip: false, eval })
    }

    pub fn from_json(json: &QuasitoricJson) -> Result<Self, TopError> {
        let base: Option<Vec<usize>> = match &json.base_facet {
            Some(f) => Some(f.iter().map(|&x| x.checked_sub(1).ok_or_else(|| TopError::Invalid("vertices are numbered from 1".into()))).collect::<Result<_, _>>()?),
            None => None,
        };
        Self::new(json.complex()?, json.matrix()?, base.as_deref())
    }

    pub fn parse_json(text: &str) -> Result<Self, TopError> {
        let json: QuasitoricJson = serde_json::from_str(text).map_err(|e| TopError::Json(e.to_string()))?;
        Self::from_json(&json)
    }

    pub fn to_json(&self) -> QuasitoricJson {
        QuasitoricJson {
            facets: self.complex.facets_one_based(),
            lambda: self.lambda.to_rows().iter().map(|r| r.iter().map(|x| x.to_i64().expect("small entry")).collect()).collect(),
            base_facet: Some(self.complex.facets_one_based()[self.base_facet].clone()),
        }
    }

    /// `CP^d`: the boundary of the `d`-simplex with `Λ = [I | −1]`.
    pub fn projective_space(d: usize) -> Self {
        let lambda = Matrix::from_fn(d, d + 1, |i, j| BigInt::from(if j == d { -1 } else { i64::from(i == j) }));
        Self::new(SimplicialComplex::simplex_boundary(d), lambda, None).expect("projective space is quasitoric")
    }

    /// Join of complexes with block-diagonal characteristic matrix.
    pub fn product(&self, other: &Self) -> Self {
        let (n1, m1) = (self.dimension(), self.num_vertices());
        let lambda = Matrix::from_fn(n1 + other.dimension(), m1 + other.num_vertices(), |i, j| match (i < n1, j < m1) {
            (true, true) => self.lambda.get(i, j).clone(),
            (false, false) => other.lambda.get(i - n1, j - m1).clone(),
            _ => BigInt::from(0),
        });
        Self::new(self.complex.join(&other.complex), lambda, None).expect("products of quasitoric data are quasitoric")
    }

    /// Reverses the global orientation.
    pub fn with_orientation_flip(mut self, flip: bool) -> Self {
        self.orientation_flip = flip;
        self
    }

    pub fn orientation_flip(&self) -> bool {
        self.orientation_flip
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn lambda(&self) -> &IntMatrix {
        &self.lambda
    }

    /// Complex dimension `n`, the number of rows of `Λ`.
    pub fn dimension(&self) -> usize {
        self.lambda.rows()
    }

    pub fn num_vertices(&self) -> usize {
        self.lambda.cols()
    }

    /// The base facet, 1-based.
    pub fn base_facet(&self) -> Vec<usize> {
        self.complex.facets_one_based()[self.base_facet].clone()
    }

    /// Value of each facet monomial `v_σ`, in facet order.
    pub fn facet_values(&self) -> Vec<i64> {
        let s = if self.orientation_flip { -1 } else { 1 };
        self.eval.facet_values.iter().map(|&x| s * i64::from(x)).collect()
    }

    /// Orientation sign of each facet of `K`, base facet positive.
    pub fn facet_orientations(&self) -> Vec<i8> {
        self.eval.orientation.clone()
    }

    /// `det Λ_σ` for each facet.
    pub fn facet_determinants(&self) -> Vec<i64> {
        self.complex.facet_masks().iter().map(|&f| facet_det(&self.lambda, f).to_i64().expect("unimodular")).collect()
    }

    /// Pairs a homogeneous degree-`n` polynomial in `v1..vm` with the fundamental class.
    pub fn top_evaluate(&self, p: &SparsePoly) -> Result<Q, TopError> {
        let mut total = Q::zero();
        for (mono, c) in p.iter() {
            let exps = self.exponents(mono)?;
            total += c * self.eval.reduce(&self.complex, &exps);
        }
        Ok(if self.orientation_flip { -total } else { total })
    }

    fn exponents(&self, mono: &Monomial) -> Result<Vec<u32>, TopError> {
        let m = self.num_vertices();
        let mut exps = vec![0u32; m];
        for (var, e) in mono.powers() {
            match var.index_with_prefix(V_PREFIX) {
                Some(i) if (1..=m).contains(&i) => exps[i - 1] += e,
                _ => return Err(TopError::UnknownVariable(var.name().to_string())),
            }
        }
        let degree: u32 = exps.iter().sum();
        if degree as usize != self.dimension() {
            return Err(TopError::DegreeMismatch { expected: self.dimension(), found: degree as usize });
        }
        Ok(exps)
    }
}

/// Precomputed linear substitutions and memoized reductions to facet monomials.
#[derive(Debug, Clone)]
struct Evaluator {
    n: usize,
    orientation: Vec<i8>,
    facet_values: Vec<i8>,
    /// For each facet `σ` and each position `p` in it: `v_{σ_p} = Σ c·v_k` over `k ∉ σ`.
    substitutions: Vec<Vec<Vec<(usize, Q)>>>,
    memo: RefCell<HashMap<Vec<u32>, Q>>,
}

impl Evaluator {
    fn build(k: &SimplicialComplex, lambda: &IntMatrix, base: usize) -> Result<Self, TopError> {
        let n = lambda.rows();
        let m = lambda.cols();
        let orientation = k.orientation().ok_or_else(|| TopError::Invalid("complex is not orientable".into()))?;
        let flip = orientation[base];
        let orientation: Vec<i8> = orientation.into_iter().map(|o| o * flip).collect();
        let rows: Vec<usize> = (0..n).collect();
        let mut facet_values = Vec::new();
        let mut substitutions = Vec::new();
        for (idx, &f) in k.facet_masks().iter().enumerate() {
            let inside = members(f);
            let outside: Vec<usize> = (0..m).filter(|&j| f & (1u64 << j) == 0).collect();
            let sign = if facet_det(lambda, f).is_positive() { 1 } else { -1 };
            facet_values.push(sign * orientation[idx]);
            let inv = lambda.select(&rows, &inside).to_rational().inverse().ok_or_else(|| TopError::Invalid("singular facet minor".into()))?;
            let rest = lambda.select(&rows, &outside).to_rational();
            let coeffs = inv.mul_mat(&rest)?;
            substitutions.push(
                (0..n)
                    .map(|p| outside.iter().enumerate().filter(|(r, _)| !coeffs.get(p, *r).is_zero()).map(|(r, &j)| (j, -coeffs.get(p, r).clone())).collect())
                    .collect(),
            );
        }
        let eval = Evaluator { n, orientation, facet_values, substitutions, memo: RefCell::new(HashMap::new()) };
        eval.check_relations(k, lambda)?;
        Ok(eval)
    }

    /// Every generator `θ_j·μ` of the degree-`n` relations must evaluate to zero.
    fn check_relations(&self, k: &SimplicialComplex, lambda: &IntMatrix) -> Result<(), TopError> {
        let m = lambda.cols();
        for mu in face_monomials(k, self.n - 1) {
            for j in 0..self.n {
                let mut total = Q::zero();
                for i in 0..m {
                    let c = lambda.get(j, i);
                    if c.is_zero() {
                        continue;
                    }
                    let mut e = mu.clone();
                    e[i] += 1;
                    total += Q::from_integer(c.clone()) * self.reduce(k, &e);
                }
                if !total.is_zero() {
                    return Err(TopError::InconsistentReduction(format!("θ{}·{} evaluates to {total}", j + 1, render_exponents(&mu))));
                }
            }
        }
        Ok(())
    }

    fn reduce(&self, k: &SimplicialComplex, exps: &[u32]) -> Q {
        if let Some(v) = self.memo.borrow().get(exps) {
            return v.clone();
        }
        let support = exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (i, _)| acc | (1u64 << i));
        let value = if !k.is_face_mask(support) {
            Q::zero()
        } else if let Some(i) = exps.iter().position(|&e| e >= 2) {
            let facet = k.facet_masks().iter().position(|&f| f & support == support).expect("support is a face");
            let p = (k.facet_masks()[facet] & ((1u64 << i) - 1)).count_ones() as usize;
            let mut total = Q::zero();
            for (j, c) in &self.substitutions[facet][p] {
                let mut e = exps.to_vec();
                e[i] -= 1;
                e[*j] += 1;
                total += c * self.reduce(k, &e);
            }
            total
        } else {
            let facet = k.facet_masks().iter().position(|&f| f == support).expect("square-free top monomial on a face is a facet");
            Q::from_integer(BigInt::from(self.facet_values[facet]))
        };
        self.memo.borrow_mut().insert(exps.to_vec(), value.clone());
        value
    }
}

fn render_exponents(e: &[u32]) -> String {
    let mono = Monomial::from_powers(e.iter().enumerate().filter(|(_, &p)| p > 0).map(|(i, &p)| (Var::indexed(V_PREFIX, i + 1), p)));
    SparsePoly::monomial(mono).to_string()
}

/// Exponent vectors of degree `d` whose support is a face (the empty face when `d = 0`).
pub fn face_monomials(k: &SimplicialComplex, d: usize) -> Vec<Vec<u32>> {
    let m = k.num_vertices();
    if d == 0 {
        return vec![vec![0; m]];
    }
    fn spread(d: u32, slots: &[usize], at: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if at + 1 == slots.len() {
            cur[slots[at]] = d;
            out.push(cur.clone());
            cur[slots[at]] = 0;
            return;
        }
        let remaining = (slots.len() - at - 1) as u32;
        for e in 1..=d - remaining {
            cur[slots[at]] = e;
            spread(d - e, slots, at + 1, cur, out);
        }
        cur[slots[at]] = 0;
    }
    let mut out = Vec::new();
    for face in k.faces() {
        let slots = members(face);
        if slots.len() <= d {
            spread(d as u32, &slots, 0, &mut vec![0; m], &mut out);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::q;
    use crate::exactcore::{QAlgebra, RatMatrix};
    use proptest::prelude::*;

    fn cp2_lambda(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows).unwrap()
    }

    fn hirzebruch(k: i64) -> QuasitoricData {
        let sq = SimplicialComplex::from_one_based(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
        QuasitoricData::new(sq, cp2_lambda(&[vec![1, 0, -1, k], vec![0, 1, 0, -1]]), None).unwrap()
    }

    /// Independent evaluation: the one-dimensional nullspace of the full relation matrix on
    /// the degree-`n` face monomials, scaled at the base facet.
    fn nullspace_oracle(d: &QuasitoricData) -> HashMap<Vec<u32>, Q> {
        let k = d.complex();
        let n = d.dimension();
        let basis = face_monomials(k, n);
        let index: HashMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rows = Vec::new();
        for mu in face_monomials(k, n - 1) {
            for j in 0..n {
                let mut row = vec![Q::zero(); basis.len()];
                for i in 0..d.num_vertices() {
                    let mut e = mu.clone();
                    e[i] += 1;
                    if let Some(&c) = index.get(&e) {
                        row[c] += Q::from_integer(d.lambda().get(j, i).clone());
                    }
                }
                rows.push(row);
            }
        }
        let null = RatMatrix::from_rows(rows).unwrap().nullspace();
        assert_eq!(null.len(), 1, "top degree is one-dimensional");
        let base = &k.facets()[0];
        let mut e = vec![0; d.num_vertices()];
        for &v in base {
            e[v] = 1;
        }
        let scale = Q::from_integer(BigInt::from(d.facet_values()[0])) / &null[0][index[&e]];
        basis.iter().cloned().zip(null[0].iter().map(|x| x * &scale)).collect()
    }

    fn poly_of(e: &[u32]) -> SparsePoly {
        SparsePoly::monomial(Monomial::from_powers(e.iter().enumerate().filter(|(_, &p)| p > 0).map(|(i, &p)| (Var::indexed(V_PREFIX, i + 1), p))))
    }

    #[test]
    fn validation_examples() {
        let k = SimplicialComplex::simplex_boundary(2);
        let good = validate_quasitoric(&k, &cp2_lambda(&[vec![1, 0, -1], vec![0, 1, -1]]));
        assert!(good.valid);
        let dets: Vec<i64> = good.minors.iter().map(|m| m.det).collect();
        assert_eq!(dets, [1, -1, 1]);
        let bad = validate_quasitoric(&k, &cp2_lambda(&[vec![1, 0, -2], vec![0, 1, -1]]));
        assert!(!bad.valid);
        assert_eq!(bad.violations.len(), 1);
        assert_eq!(bad.violations[0].facet, Some(vec![2, 3]));
        assert_eq!(bad.violations[0].kind, "minor");

        let bowtie = SimplicialComplex::from_one_based(5, &[vec![1, 2], vec![2, 3], vec![1, 3], vec![1, 4], vec![4, 5], vec![1, 5]]).unwrap();
        let r = validate_quasitoric(&bowtie, &cp2_lambda(&[vec![1, 0, -1, 1, 0], vec![0, 1, -1, 0, 1]]));
        assert!(r.violations.iter().any(|v| v.kind == "sphere:pseudomanifold" && v.detail.contains("ridge")));
    }

    #[test]
    fn projective_plane_values() {
        let cp2 = QuasitoricData::projective_space(2);
        assert_eq!(cp2.top_evaluate(&v(1).mul(&v(2))).unwrap(), q(1));
        assert_eq!(cp2.top_evaluate(&v(3).pow(2)).unwrap(), q(1));
        assert_eq!(cp2.top_evaluate(&v(1).pow(2)).unwrap(), q(1));
        assert!(matches!(cp2.top_evaluate(&v(1)), Err(TopError::DegreeMismatch { expected: 2, found: 1 })));
        assert!(matches!(cp2.top_evaluate(&SparsePoly::var("w").mul(&v(1))), Err(TopError::UnknownVariable(_))));
        let flipped = cp2.clone().with_orientation_flip(true);
        assert_eq!(flipped.top_evaluate(&v(1).mul(&v(2))).unwrap(), q(-1));
    }

    #[test]
    fn non_faces_vanish() {
        let sq = hirzebruch(1);
        assert_eq!(sq.top_evaluate(&v(1).mul(&v(3))).unwrap(), q(0));
        assert_eq!(sq.top_evaluate(&v(2).mul(&v(4))).unwrap(), q(0));
    }

    #[test]
    fn hirzebruch_surface_self_intersections() {
        for k in -2..=2 {
            let h = hirzebruch(k);
            // the section class squares to ∓k, the fibre class to zero
            assert_eq!(h.top_evaluate(&v(1).pow(2)).unwrap().abs(), q(k.abs()));
            assert_eq!(h.top_evaluate(&v(4).pow(2)).unwrap(), q(0));
        }
    }

    #[test]
    fn facet_consistency() {
        let cases = [QuasitoricData::projective_space(1), QuasitoricData::projective_space(2), QuasitoricData::projective_space(3), hirzebruch(3)];
        for d in &cases {
            let dets = d.facet_determinants();
            let orient = d.facet_orientations();
            for (idx, f) in d.complex().facets().iter().enumerate() {
                let mono = f.iter().fold(SparsePoly::one(), |acc, &i| acc.mul(&v(i + 1)));
                let expected = dets[idx].signum() * i64::from(orient[idx]);
                assert_eq!(d.top_evaluate(&mono).unwrap(), q(expected));
            }
        }
    }

    #[test]
    fn reduction_matches_nullspace_oracle() {
        let cp1 = QuasitoricData::projective_space(1);
        let cases = [cp1.product(&cp1), QuasitoricData::projective_space(3), hirzebruch(2), hirzebruch(-1)];
        for d in &cases {
            for (e, val) in nullspace_oracle(d) {
                assert_eq!(d.top_evaluate(&poly_of(&e)).unwrap(), val, "{e:?}");
            }
        }
    }

    #[test]
    fn inconsistent_base_facet_is_rejected() {
        let k = SimplicialComplex::simplex_boundary(2);
        let lambda = cp2_lambda(&[vec![1, 0, -1], vec![0, 1, -1]]);
        assert!(QuasitoricData::new(k.clone(), lambda.clone(), Some(&[0, 2])).is_ok());
        assert!(QuasitoricData::new(k, lambda, Some(&[0, 1, 2])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"facets": [[1,2],[1,3],[2,3]], "lambda": [[1,0,-1],[0,1,-1]], "base_facet": [1,2]}"#;
        let d = QuasitoricData::parse_json(text).unwrap();
        assert_eq!(d.to_json(), serde_json::from_str::<QuasitoricJson>(text).unwrap());
        assert!(matches!(QuasitoricData::parse_json(r#"{"facets": [[1,2],[1,3],[2,3]], "lambda": [[1,0,-2],[0,1,-1]]}"#), Err(TopError::Invalid(_))));
    }

    fn random_degree_n(d: &QuasitoricData, picks: &[usize]) -> Vec<u32> {
        let mut e = vec![0; d.num_vertices()];
        for &p in picks.iter().take(d.dimension()) {
            e[p % d.num_vertices()] += 1;
        }
        e
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// `θ_j·μ` and Stanley–Reisner multiples evaluate to zero, so two presentations of a
        /// class differing by them agree.
        #[test]
        fn well_defined(which in 0usize..4, picks in prop::collection::vec(0usize..12, 4), extra in prop::collection::vec(0usize..12, 4), j in 0usize..3) {
            let cp1 = QuasitoricData::projective_space(1);
            let d = match which {
                0 => QuasitoricData::projective_space(2),
                1 => QuasitoricData::projective_space(3),
                2 => cp1.product(&cp1),
                _ => hirzebruch(3),
            };
            let n = d.dimension();
            let a = poly_of(&random_degree_n(&d, &picks));
            let mut lower = random_degree_n(&d, &extra);
            let drop = lower.iter().position(|&x| x > 0).unwrap();
            lower[drop] -= 1;
            let theta = (0..d.num_vertices()).fold(SparsePoly::zero(), |acc, i| acc.add(&v(i + 1).scale(&Q::from_integer(d.lambda().get(j % n, i).clone()))));
            let b = a.add(&theta.mul(&poly_of(&lower)));
            prop_assert_eq!(d.top_evaluate(&a).unwrap(), d.top_evaluate(&b).unwrap());
        }
    }
}

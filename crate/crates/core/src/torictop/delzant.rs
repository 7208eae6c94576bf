//! Delzant polytopes `{x : ⟨a_i, x⟩ ≥ λ_i}` as quasitoric data with a symplectic class.

use num::bigint::BigInt;
use num::Integer;
use serde::{Deserialize, Serialize};

use super::complex::SimplicialComplex;
use super::numbers::linear_form;
use super::quasitoric::{validate_quasitoric, QuasitoricData};
use super::TopError;
use crate::exactcore::poly::SparsePoly;
use crate::exactcore::rational::{format_rational, serde_q, Q};
use crate::exactcore::{determinant, IntMatrix, Matrix, RatMatrix, Ring};

/// Vertices are found by trying every `n`-subset of facets.
pub const MAX_POLYTOPE_FACETS: usize = 12;

/// JSON form: `{"normals": [[...]], "offsets": ["p/q", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelzantPolytope {
    pub normals: Vec<Vec<i64>>,
    #[serde(with = "serde_q::vec")]
    pub offsets: Vec<Q>,
}

/// Quasitoric data of the polytope, the normalized class `u = Σ(−λ_i)v_i` (the Kähler class
/// divided by `2π`) and the vertices with their facet sets.
#[derive(Debug, Clone)]
pub struct DelzantData {
    pub data: QuasitoricData,
    pub symplectic_class: SparsePoly,
    pub vertices: Vec<Vec<Q>>,
    pub vertex_facets: Vec<Vec<usize>>,
}

impl DelzantPolytope {
    pub fn parse_json(text: &str) -> Result<Self, TopError> {
        serde_json::from_str(text).map_err(|e| TopError::Json(e.to_string()))
    }

    pub fn dimension(&self) -> usize {
        self.normals.first().map_or(0, Vec::len)
    }

    fn check_shape(&self) -> Result<(), TopError> {
        let n = self.dimension();
        let m = self.normals.len();
        if n == 0 {
            return Err(TopError::PolytopeShape("no facet normals".into()));
        }
        if m > MAX_POLYTOPE_FACETS {
            return Err(TopError::TooManyFacets { found: m, max: MAX_POLYTOPE_FACETS });
        }
        if self.offsets.len() != m {
            return Err(TopError::PolytopeShape(format!("{m} normals but {} offsets", self.offsets.len())));
        }
        for a in &self.normals {
            if a.len() != n {
                return Err(TopError::PolytopeShape(format!("normal {a:?} is not in dimension {n}")));
            }
            if a.iter().fold(0i64, |g, &x| g.gcd(&x)) != 1 {
                return Err(TopError::PolytopeShape(format!("normal {a:?} is not primitive")));
            }
        }
        Ok(())
    }
}

fn render_point(x: &[Q]) -> String {
    let parts: Vec<String> = x.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn subsets(m: usize, n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << m).filter(|s| s.count_ones() as usize == n).map(|s| (0..m).filter(|&i| s & (1 << i) != 0).collect()).collect()
}

/// Vertices, dual complex, characteristic matrix `[a_1 … a_m]` and symplectic class. The
/// orientation is flipped when needed so that `uⁿ[V] > 0`.
pub fn delzant_to_quasitoric(p: &DelzantPolytope) -> Result<DelzantData, TopError> {
    p.check_shape()?;
    let n = p.dimension();
    let m = p.normals.len();
    let a = RatMatrix::from_rows(p.normals.iter().map(|r| r.iter().map(|&x| Q::from_integer(BigInt::from(x))).collect()).collect())?;
    let all_cols: Vec<usize> = (0..n).collect();
    let mut vertices: Vec<Vec<Q>> = Vec::new();
    let mut vertex_facets: Vec<Vec<usize>> = Vec::new();
    for s in subsets(m, n) {
        let sub = a.select(&s, &all_cols);
        if determinant(&sub)?.is_zero() {
            continue;
        }
        let rhs: Vec<Q> = s.iter().map(|&i| p.offsets[i].clone()).collect();
        let x = sub.solve(&rhs).ok_or_else(|| TopError::Degenerate("nonsingular system without solution".into()))?;
        let values = a.mul_vec(&x)?;
        if values.iter().zip(&p.offsets).any(|(v, l)| v < l) {
            continue;
        }
        let tight: Vec<usize> = (0..m).filter(|&i| values[i] == p.offsets[i]).collect();
        if tight.len() > n {
            return Err(TopError::NonSimple { vertex: render_point(&x), facets: tight.len() });
        }
        vertices.push(x);
        vertex_facets.push(tight);
    }
    if vertices.is_empty() {
        return Err(TopError::Unbounded("no vertices".into()));
    }
    let complex = SimplicialComplex::new(m, &vertex_facets)?;
    let sphere = complex.sphere_report();
    if let Some(c) = sphere.failures().find(|c| c.name == "vertices_used") {
        return Err(TopError::Degenerate(format!("redundant inequalities: {}", c.detail.clone().unwrap_or_default())));
    }
    if let Some(c) = sphere.failures().next() {
        return Err(TopError::Unbounded(format!("{}: {}", c.name, c.detail.clone().unwrap_or_default())));
    }
    let lambda: IntMatrix = Matrix::from_fn(n, m, |i, j| BigInt::from(p.normals[j][i]));
    let report = validate_quasitoric(&complex, &lambda);
    if let Some(bad) = report.violations.iter().find(|v| v.kind == "minor") {
        let facet: Vec<usize> = bad.facet.clone().unwrap_or_default().into_iter().map(|i| i - 1).collect();
        let at = vertex_facets.iter().position(|t| *t == facet).expect("minor violations name a vertex");
        return Err(TopError::NotDelzant { vertex: render_point(&vertices[at]), detail: bad.detail.clone() });
    }
    let data = QuasitoricData::new(complex, lambda, None)?;
    let u = linear_form(&p.offsets.iter().map(|l| -l.clone()).collect::<Vec<_>>());
    let volume = data.top_evaluate(&u.pow(n as u32))?;
    if volume.is_zero() {
        return Err(TopError::Degenerate("uⁿ[V] = 0".into()));
    }
    let data = data.with_orientation_flip(volume < Q::zero());
    Ok(DelzantData { data, symplectic_class: u, vertices, vertex_facets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{factorial, q, qr};
    use crate::exactcore::QAlgebra;
    use crate::torictop::numbers::{hamiltonian_numbers, mxi_numbers, HamiltonianConvention};
    use crate::torictop::quasitoric::v;

    fn polytope(normals: &[&[i64]], offsets: &[Q]) -> DelzantPolytope {
        DelzantPolytope { normals: normals.iter().map(|r| r.to_vec()).collect(), offsets: offsets.to_vec() }
    }

    fn interval(a: Q) -> DelzantPolytope {
        polytope(&[&[1], &[-1]], &[q(0), -a])
    }

    fn triangle(a: Q) -> DelzantPolytope {
        polytope(&[&[1, 0], &[0, 1], &[-1, -1]], &[q(0), q(0), -a])
    }

    /// Shoelace area of a convex polygon from its unordered vertices.
    fn polygon_area(vs: &[Vec<Q>]) -> Q {
        let n = Q::from_integer(BigInt::from(vs.len()));
        let cx: Q = vs.iter().map(|p| p[0].clone()).sum::<Q>() / &n;
        let cy: Q = vs.iter().map(|p| p[1].clone()).sum::<Q>() / &n;
        let mut sorted = vs.to_vec();
        let angle = |p: &Vec<Q>| crate::exactcore::rational::to_f64(&(&p[1] - &cy)).atan2(crate::exactcore::rational::to_f64(&(&p[0] - &cx)));
        sorted.sort_by(|p, r| angle(p).partial_cmp(&angle(r)).unwrap());
        let mut twice = Q::zero();
        for i in 0..sorted.len() {
            let (p, r) = (&sorted[i], &sorted[(i + 1) % sorted.len()]);
            twice += &p[0] * &r[1] - &r[0] * &p[1];
        }
        twice / q(2)
    }

    #[test]
    fn interval_is_projective_line() {
        let a = qr(7, 3);
        let d = delzant_to_quasitoric(&interval(a.clone())).unwrap();
        assert_eq!(d.symplectic_class, v(2).scale(&a));
        assert_eq!(d.data.complex().facets_one_based(), vec![vec![1], vec![2]]);
        assert_eq!(mxi_numbers(&d.data).unwrap().render(), "2·Z[1]");
        // uⁿ[V] = n!·vol
        assert_eq!(d.data.top_evaluate(&d.symplectic_class).unwrap(), a);
    }

    #[test]
    fn triangle_is_projective_plane() {
        let a = q(3);
        let d = delzant_to_quasitoric(&triangle(a.clone())).unwrap();
        assert_eq!(d.symplectic_class, v(3).scale(&a));
        assert_eq!(d.data.to_json().lambda, vec![vec![1, 0, -1], vec![0, 1, -1]]);
        assert_eq!(mxi_numbers(&d.data).unwrap().render(), "3·Z[2] + 3·Z[1,1]");
        let area = polygon_area(&d.vertices);
        assert_eq!(area, &a * &a / q(2));
        let x = hamiltonian_numbers(&d.data, &d.symplectic_class, HamiltonianConvention::Mxi).unwrap();
        assert_eq!(x.value(&[]), Some(&(factorial(2) * area)));
    }

    #[test]
    fn square_is_product() {
        let (a, b) = (q(2), q(5));
        let sq = polytope(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]], &[q(0), q(0), -a.clone(), -b.clone()]);
        let d = delzant_to_quasitoric(&sq).unwrap();
        assert_eq!(d.symplectic_class, v(3).scale(&a).add(&v(4).scale(&b)));
        assert_eq!(d.data.complex().facets_one_based(), vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]);
        assert_eq!(mxi_numbers(&d.data).unwrap().render(), "4·Z[1,1]");
        let vol = d.data.top_evaluate(&d.symplectic_class.pow(2)).unwrap();
        assert_eq!(vol, q(2) * &a * &b);
        assert_eq!(vol, q(2) * polygon_area(&d.vertices));
    }

    #[test]
    fn hirzebruch_trapezoid_volume() {
        // {x ≥ 0, y ≥ 0, y ≤ b, x + k y ≤ a}
        let (a, b, k) = (q(5), q(1), 2);
        let p = polytope(&[&[1, 0], &[0, 1], &[0, -1], &[-1, -k]], &[q(0), q(0), -b, -a]);
        let d = delzant_to_quasitoric(&p).unwrap();
        let vol = d.data.top_evaluate(&d.symplectic_class.pow(2)).unwrap();
        assert_eq!(vol, q(2) * polygon_area(&d.vertices));
    }

    #[test]
    fn refusals() {
        let quadrant = polytope(&[&[1, 0], &[0, 1]], &[q(0), q(0)]);
        assert!(matches!(delzant_to_quasitoric(&quadrant), Err(TopError::Unbounded(_))));
        let non_delzant = polytope(&[&[1, 0], &[0, 1], &[-1, -2]], &[q(0), q(0), q(-2)]);
        assert!(matches!(delzant_to_quasitoric(&non_delzant), Err(TopError::NotDelzant { .. })));
        let pyramid = polytope(&[&[0, 0, 1], &[1, 0, -1], &[-1, 0, -1], &[0, 1, -1], &[0, -1, -1]], &[q(0), q(-1), q(-1), q(-1), q(-1)]);
        assert!(matches!(delzant_to_quasitoric(&pyramid), Err(TopError::NonSimple { facets: 4, .. })));
        let redundant = polytope(&[&[1], &[-1], &[1]], &[q(0), q(-1), q(-5)]);
        assert!(matches!(delzant_to_quasitoric(&redundant), Err(TopError::Degenerate(_))));
        assert!(matches!(delzant_to_quasitoric(&polytope(&[&[2], &[-1]], &[q(0), q(-1)])), Err(TopError::PolytopeShape(_))));
    }

    #[test]
    fn json_offsets_as_strings() {
        let p = DelzantPolytope::parse_json(r#"{"normals": [[1,0],[0,1],[-1,-1]], "offsets": ["0", 0, "-3/2"]}"#).unwrap();
        assert_eq!(p.offsets, vec![q(0), q(0), qr(-3, 2)]);
    }
}

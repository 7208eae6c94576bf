//! Simplicial complexes on `m` vertices, stored as facet bitmasks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::TopError;

/// Vertex sets are bitmasks, so at most 64 vertices.
pub const MAX_VERTICES: usize = 64;

/// A complex given by its facets; vertices are `0..m` internally and `1..=m` in I/O.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<u64>,
}

pub(crate) fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |acc, &v| acc | (1u64 << v))
}

pub(crate) fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1u64 << i) != 0).collect()
}

pub(crate) fn one_based(mask: u64) -> Vec<usize> {
    members(mask).into_iter().map(|v| v + 1).collect()
}

impl SimplicialComplex {
    /// Facets with 0-based vertices. Facets are sorted and must be pairwise non-contained.
    pub fn new(vertices: usize, facets: &[Vec<usize>]) -> Result<Self, TopError> {
        if vertices > MAX_VERTICES {
            return Err(TopError::InvalidComplex(format!("at most {MAX_VERTICES} vertices, got {vertices}")));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            if f.is_empty() {
                return Err(TopError::InvalidComplex("empty facet".into()));
            }
            if let Some(&bad) = f.iter().find(|&&v| v >= vertices) {
                return Err(TopError::InvalidComplex(format!("vertex {} out of range 1..={vertices}", bad + 1)));
            }
            let mask = mask_of(f);
            if mask.count_ones() as usize != f.len() {
                return Err(TopError::InvalidComplex(format!("repeated vertex in facet {:?}", one_based(mask))));
            }
            masks.push(mask);
        }
        masks.sort_by_key(|&m| members(m));
        masks.dedup();
        for (i, &a) in masks.iter().enumerate() {
            for (j, &b) in masks.iter().enumerate() {
                if i != j && a & b == a {
                    return Err(TopError::InvalidComplex(format!(
                        "facet {:?} is contained in facet {:?}",
                        one_based(a),
                        one_based(b)
                    )));
                }
            }
        }
        Ok(SimplicialComplex { vertices, facets: masks })
    }

    /// Facets with 1-based vertices, as in the JSON formats.
    pub fn from_one_based(vertices: usize, facets: &[Vec<usize>]) -> Result<Self, TopError> {
        let shifted: Result<Vec<Vec<usize>>, TopError> = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&v| v.checked_sub(1).ok_or_else(|| TopError::InvalidComplex("vertices are numbered from 1".into())))
                    .collect()
            })
            .collect();
        Self::new(vertices, &shifted?)
    }

    /// The boundary of the simplex on `n + 1` vertices.
    pub fn simplex_boundary(n: usize) -> Self {
        let full = (1u64 << (n + 1)) - 1;
        let facets: Vec<Vec<usize>> = (0..=n).map(|v| members(full & !(1u64 << v))).collect();
        Self::new(n + 1, &facets).expect("valid boundary")
    }

    /// The join, with the vertices of `other` shifted past those of `self`.
    pub fn join(&self, other: &Self) -> Self {
        let shift = self.vertices;
        let facets: Vec<Vec<usize>> = self
            .facets
            .iter()
            .flat_map(|&a| other.facets.iter().map(move |&b| members(a | (b << shift))))
            .collect();
        Self::new(self.vertices + other.vertices, &facets).expect("join of valid complexes")
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub(crate) fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    /// Facets with 0-based vertices, in lexicographic order.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| members(m)).collect()
    }

    pub fn facets_one_based(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| one_based(m)).collect()
    }

    pub fn is_face_mask(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| f & mask == mask)
    }

    pub fn is_face(&self, vs: &[usize]) -> bool {
        vs.iter().all(|&v| v < self.vertices) && self.is_face_mask(mask_of(vs))
    }

    /// Largest facet size.
    pub fn facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0)
    }

    /// All nonempty faces.
    pub fn faces(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            let mut sub = f;
            while sub != 0 {
                out.insert(sub);
                sub = (sub - 1) & f;
            }
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces().iter().map(|f| if f.count_ones() % 2 == 1 { 1 } else { -1 }).sum()
    }

    /// Ridges and the facets containing them, for a pure complex.
    fn ridges(&self) -> BTreeMap<u64, Vec<usize>> {
        let mut out: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (k, &f) in self.facets.iter().enumerate() {
            for v in members(f) {
                out.entry(f & !(1u64 << v)).or_default().push(k);
            }
        }
        out
    }

    /// Facet orientations `±1` with the first facet positive, or `None` if not orientable.
    /// Assumes a pseudomanifold.
    pub fn orientation(&self) -> Option<Vec<i8>> {
        let ridges = self.ridges();
        let mut sign: Vec<Option<i8>> = vec![None; self.facets.len()];
        let position = |f: u64, v: usize| (f & ((1u64 << v) - 1)).count_ones() as usize;
        for start in 0..self.facets.len() {
            if sign[start].is_some() {
                continue;
            }
            sign[start] = Some(1);
            let mut queue = VecDeque::from([start]);
            while let Some(k) = queue.pop_front() {
                let f = self.facets[k];
                let s = sign[k].expect("visited");
                for a in members(f) {
                    let ridge = f & !(1u64 << a);
                    for &l in &ridges[&ridge] {
                        if l == k {
                            continue;
                        }
                        let g = self.facets[l];
                        let b = members(g & !ridge)[0];
                        let parity = (position(f, a) + position(g, b)) % 2;
                        let want = if parity == 0 { -s } else { s };
                        match sign[l] {
                            None => {
                                sign[l] = Some(want);
                                queue.push_back(l);
                            }
                            Some(t) if t != want => return None,
                            Some(_) => {}
                        }
                    }
                }
            }
        }
        sign.into_iter().collect()
    }

    /// The checkable part of being a triangulated `(n−1)`-sphere.
    pub fn sphere_report(&self) -> SphereReport {
        let n = self.facet_size();
        let mut checks = Vec::new();

        let impure: Vec<Vec<usize>> = self.facets.iter().filter(|f| f.count_ones() as usize != n).map(|&f| one_based(f)).collect();
        checks.push(SphereCheck::new("pure", impure.is_empty(), || format!("facets of the wrong size: {impure:?}")));

        let unused: Vec<usize> = (0..self.vertices).filter(|&v| !self.is_face_mask(1u64 << v)).map(|v| v + 1).collect();
        checks.push(SphereCheck::new("vertices_used", unused.is_empty(), || format!("vertices in no facet: {unused:?}")));

        let bad_ridges: Vec<(Vec<usize>, usize)> = if impure.is_empty() {
            self.ridges().into_iter().filter(|(_, fs)| fs.len() != 2).map(|(r, fs)| (one_based(r), fs.len())).collect()
        } else {
            Vec::new()
        };
        let pseudo = impure.is_empty() && bad_ridges.is_empty();
        checks.push(SphereCheck::new("pseudomanifold", pseudo, || {
            let parts: Vec<String> = bad_ridges.iter().map(|(r, c)| format!("ridge {r:?} lies in {c} facets")).collect();
            if parts.is_empty() {
                "complex is not pure".into()
            } else {
                parts.join("; ")
            }
        }));

        if n >= 2 {
            let parts = self.facet_components();
            checks.push(SphereCheck::new("connected", parts == 1, || format!("{parts} components")));
        }

        let chi = self.euler_characteristic();
        let expected = if n == 0 { 0 } else { 1 + if n.is_multiple_of(2) { -1 } else { 1 } };
        checks.push(SphereCheck::new("euler_characteristic", chi == expected, || format!("χ = {chi}, expected {expected}")));

        if pseudo {
            let orientable = self.orientation().is_some();
            checks.push(SphereCheck::new("orientable", orientable, || "no consistent facet orientation".into()));
        }
        SphereReport { dimension: n.saturating_sub(1), checks }
    }

    fn facet_components(&self) -> usize {
        let mut seen = vec![false; self.facets.len()];
        let mut count = 0;
        for s in 0..self.facets.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(k) = stack.pop() {
                for l in 0..self.facets.len() {
                    if !seen[l] && self.facets[k] & self.facets[l] != 0 {
                        seen[l] = true;
                        stack.push(l);
                    }
                }
            }
        }
        count
    }
}

/// One named check with a diagnostic on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereCheck {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SphereCheck {
    fn new(name: &'static str, passed: bool, detail: impl FnOnce() -> String) -> Self {
        SphereCheck { name, passed, detail: (!passed).then(detail) }
    }
}

/// Outcome of the sphere battery; lists exactly which checks ran.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereReport {
    pub dimension: usize,
    pub checks: Vec<SphereCheck>,
}

impl SphereReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SphereCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

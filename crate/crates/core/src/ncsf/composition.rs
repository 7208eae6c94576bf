//! Compositions (ordered partitions) and integer partitions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactcore::Monoid;

/// An ordered sequence of positive integers. The empty composition is the unit word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    /// Zero parts are dropped, so `from_parts(vec![0])` is the empty composition.
    pub fn from_parts(parts: Vec<usize>) -> Self {
        Composition(parts.into_iter().filter(|&p| p > 0).map(|p| p as u32).collect())
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn single(n: u32) -> Self {
        Self::from_parts(vec![n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// Parts sorted into a partition.
    pub fn sorted(&self) -> Partition {
        Partition::new(self.0.clone())
    }

    /// Bracketed parts, e.g. `[1,2]`.
    pub fn bracket(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(u32::to_string).collect();
        format!("[{}]", inner.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket())
    }
}

impl Monoid for Composition {
    fn identity() -> Self {
        Composition::empty()
    }

    fn combine(&self, other: &Self) -> Self {
        self.concat(other)
    }

    fn weight(&self) -> u32 {
        Composition::weight(self)
    }

    /// Words in the generators `Z_i` render as `Z[1,2]`.
    fn render(&self) -> String {
        if self.0.is_empty() {
            "1".into()
        } else {
            format!("Z{}", self.bracket())
        }
    }
}

/// All compositions of `n` in lexicographic order; `n = 0` gives the empty composition.
pub fn compositions(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    let mut current = Vec::new();
    fn rec(rest: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(current.clone()));
            return;
        }
        for first in 1..=rest {
            current.push(first);
            rec(rest - first, current, out);
            current.pop();
        }
    }
    rec(n, &mut current, &mut out);
    out
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }

    pub fn bracket(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(u32::to_string).collect();
        format!("[{}]", inner.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket())
    }
}

/// Partitions of `n`, largest first part first.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            current.push(p);
            rec(rest - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(1), vec![Composition::single(1)]);
        let three: Vec<Vec<u32>> = compositions(3).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(three, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
        assert_eq!(compositions(6).len(), 32);
        assert_eq!(compositions(0), vec![Composition::empty()]);
        for n in 1..=8 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn partition_basics() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(10).len(), 42);
        assert_eq!(Partition::new(vec![1, 3, 0, 2]).parts(), &[3, 2, 1]);
        assert_eq!(Partition::new(vec![3, 1]).conjugate(), Partition::new(vec![2, 1, 1]));
    }

    #[test]
    fn word_rendering() {
        assert_eq!(Composition::from_parts(vec![1, 2]).render(), "Z[1,2]");
        assert_eq!(Composition::empty().render(), "1");
    }
}

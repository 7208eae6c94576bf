//! Brute-force partition enumerations used as independent oracles.

use super::FreeProbError;
use crate::exactcore::rational::Q;
use crate::exactcore::Ring;

/// Largest `n` for which partitions are enumerated.
pub const MAX_ORACLE_N: usize = 10;

/// A set partition of `{0..n}` as blocks of increasing elements.
pub type SetPartition = Vec<Vec<usize>>;

/// All set partitions of `{0..n}`, via restricted growth strings.
pub fn set_partitions(n: usize) -> Result<Vec<SetPartition>, FreeProbError> {
    if n > MAX_ORACLE_N {
        return Err(FreeProbError::OracleTooLarge(n));
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(i: usize, blocks: usize, labels: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == labels.len() {
            let mut p = vec![Vec::new(); blocks];
            for (x, &b) in labels.iter().enumerate() {
                p[b].push(x);
            }
            out.push(p);
            return;
        }
        for b in 0..=blocks {
            labels[i] = b;
            rec(i + 1, blocks.max(b + 1), labels, out);
        }
    }
    rec(0, 0, &mut labels, &mut out);
    Ok(out)
}

/// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
pub fn is_non_crossing(p: &SetPartition) -> bool {
    let mut block_of = vec![0; p.iter().map(Vec::len).sum()];
    for (i, block) in p.iter().enumerate() {
        for &x in block {
            block_of[x] = i;
        }
    }
    let n = block_of.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if block_of[a] != block_of[c] || block_of[a] == block_of[b] {
                    continue;
                }
                if (c + 1..n).any(|d| block_of[d] == block_of[b]) {
                    return false;
                }
            }
        }
    }
    true
}

/// All non-crossing partitions of `{0..n}`.
pub fn nc_partitions(n: usize) -> Result<Vec<SetPartition>, FreeProbError> {
    Ok(set_partitions(n)?.into_iter().filter(is_non_crossing).collect())
}

fn block_sum(parts: &[SetPartition], cumulants: &[Q]) -> Q {
    let mut total = Q::zero();
    for p in parts {
        let mut term = Q::one();
        for block in p {
            term *= cumulants.get(block.len() - 1).cloned().unwrap_or_else(Q::zero);
        }
        total += term;
    }
    total
}

/// `m_n = Σ_{π∈NC(n)} ∏_{V∈π} κ_{|V|}` for `n = 0..=cumulants.len()`.
pub fn moments_from_free_cumulants_oracle(cumulants: &[Q]) -> Result<Vec<Q>, FreeProbError> {
    (0..=cumulants.len()).map(|n| Ok(block_sum(&nc_partitions(n)?, cumulants))).collect()
}

/// `m_n = Σ_{π} ∏_{V∈π} κ_{|V|}` over all set partitions.
pub fn moments_from_classical_cumulants_oracle(cumulants: &[Q]) -> Result<Vec<Q>, FreeProbError> {
    (0..=cumulants.len()).map(|n| Ok(block_sum(&set_partitions(n)?, cumulants))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::q;

    #[test]
    fn counts() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for n in 0..7 {
            assert_eq!(set_partitions(n).unwrap().len(), bell[n]);
            assert_eq!(nc_partitions(n).unwrap().len(), catalan[n]);
        }
        assert_eq!(nc_partitions(10).unwrap().len(), 16796);
        assert!(matches!(nc_partitions(11), Err(FreeProbError::OracleTooLarge(11))));
    }

    #[test]
    fn semicircle_from_oracle() {
        let m = moments_from_free_cumulants_oracle(&[q(0), q(1), q(0), q(0), q(0), q(0)]).unwrap();
        assert_eq!(m, [1, 0, 1, 0, 2, 0, 5].map(q));
    }
}

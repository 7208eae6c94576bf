//! Integer lattices: kernels, Hermite and Smith normal forms.

use num::bigint::BigInt;
use num::integer::Integer;
use num::{Signed, Zero};

use super::matrix::IntMatrix;

/// Row-style Hermite normal form of the rows of `rows`, dropping zero rows.
///
/// Pivots are positive and entries above each pivot lie in `[0, pivot)`.
pub fn hermite_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        // smallest nonzero |entry| at or below r becomes the pivot candidate
        while let Some(p) = (r..a.len()).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].abs()) {
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].div_floor(&a[r][c]);
                for j in 0..cols {
                    let v = &a[i][j] - &f * &a[r][j];
                    a[i][j] = v;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < a.len() && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            for i in 0..r {
                let f = a[i][c].div_floor(&a[r][c]);
                if !f.is_zero() {
                    for j in 0..cols {
                        let v = &a[i][j] - &f * &a[r][j];
                        a[i][j] = v;
                    }
                }
            }
            r += 1;
        }
    }
    a.truncate(r);
    a
}

/// A basis of the integer kernel `{u ∈ Zⁿ : A·u = 0}` in Hermite normal form.
pub fn lattice_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = a.cols();
    let m = a.rows();
    // rows (A column j | e_j); unimodular row operations keep the second block a basis change
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigInt> = (0..m).map(|i| a.get(i, j).clone()).collect();
            row.extend((0..n).map(|k| BigInt::from((k == j) as i64)));
            row
        })
        .collect();
    rows = hermite_rows_full(&mut rows, m);
    let kernel: Vec<Vec<BigInt>> =
        rows.into_iter().filter(|r| r[..m].iter().all(Zero::is_zero)).map(|r| r[m..].to_vec()).collect();
    hermite_rows(&kernel)
}

/// Echelonizes on the first `lead` columns only, keeping every row.
fn hermite_rows_full(a: &mut [Vec<BigInt>], lead: usize) -> Vec<Vec<BigInt>> {
    let width = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..lead {
        if r == a.len() {
            break;
        }
        while let Some(p) = (r..a.len()).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].abs()) {
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].div_floor(&a[r][c]);
                for j in 0..width {
                    let v = &a[i][j] - &f * &a[r][j];
                    a[i][j] = v;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !a[r][c].is_zero() {
            r += 1;
        }
    }
    a.to_vec()
}

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
pub fn elementary_divisors(a: &IntMatrix) -> Vec<BigInt> {
    let mut m = a.to_rows();
    let rows = a.rows();
    let cols = a.cols();
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // choose the smallest nonzero entry in the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            if m[i][t].is_zero() {
                continue;
            }
            let f = m[i][t].div_floor(&m[t][t]);
            for j in t..cols {
                let v = &m[i][j] - &f * &m[t][j];
                m[i][j] = v;
            }
            clean &= m[i][t].is_zero();
        }
        for j in t + 1..cols {
            if m[t][j].is_zero() {
                continue;
            }
            let f = m[t][j].div_floor(&m[t][t]);
            for i in t..rows {
                let v = &m[i][j] - &f * &m[i][t];
                m[i][j] = v;
            }
            clean &= m[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block; otherwise fold a offending row in
        let p = m[t][t].clone();
        let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&p)));
        if let Some(i) = offending {
            for j in t..cols {
                let v = &m[t][j] + &m[i][j];
                m[t][j] = v;
            }
            continue;
        }
        divisors.push(p.abs());
        t += 1;
    }
    divisors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        let a = IntMatrix::from_i64(&[vec![2, 1, 0], vec![0, 1, 2], vec![1, 1, 1]]).unwrap();
        assert_eq!(lattice_kernel(&a), vec![ints(&[1, -2, 1])]);
        let id = IntMatrix::from_i64(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(lattice_kernel(&id).is_empty());
        let z = IntMatrix::from_i64(&[vec![0, 0, 0]]).unwrap();
        assert_eq!(lattice_kernel(&z), vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
    }

    #[test]
    fn kernel_is_saturated() {
        // over Q the kernel is spanned by (1,1); the integer basis must not be (2,2)
        let a = IntMatrix::from_i64(&[vec![2, -2]]).unwrap();
        assert_eq!(lattice_kernel(&a), vec![ints(&[1, 1])]);
    }

    #[test]
    fn smith_divisors() {
        let a = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
        assert_eq!(elementary_divisors(&a), ints(&[2, 6, 12]));
        let b = IntMatrix::from_i64(&[vec![1, -1], vec![1, 2]]).unwrap();
        assert_eq!(elementary_divisors(&b), ints(&[1, 3]));
    }

    #[test]
    fn hermite_normalization() {
        let h = hermite_rows(&[ints(&[-2, 4]), ints(&[3, 1])]);
        assert!(h.iter().all(|r| r.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())));
        assert_eq!(h, vec![ints(&[1, 5]), ints(&[0, 14])]);
    }
}

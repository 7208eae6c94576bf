//! Tree constants `K_i`: sums over spanning trees directed toward `i`.

use serde::Serialize;

use super::analysis::{linkage_classes, strong_components};
use super::network::Network;
use super::rates::{build_rate_matrix, edge_weights, RateMode};
use super::CrnError;
use crate::exactcore::poly::SparsePoly;
use crate::exactcore::{determinant, PolyMatrix, Ring};

/// Largest class handled by enumerating trees; bigger classes use numeric determinants.
pub const MAX_ENUMERATED_CLASS: usize = 8;

/// `K_i` for every complex, in complex order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TreeConstants {
    #[serde(serialize_with = "render_polys")]
    pub values: Vec<SparsePoly>,
}

fn render_polys<S: serde::Serializer>(ps: &[SparsePoly], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}

/// Fails unless every linkage class is strongly connected.
pub fn require_weakly_reversible(net: &Network) -> Result<Vec<Vec<usize>>, CrnError> {
    let classes = linkage_classes(net);
    if strong_components(net).len() != classes.len() {
        return Err(CrnError::NotWeaklyReversible);
    }
    Ok(classes)
}

/// Sum over in-arborescences of `class` rooted at `root` of the product of edge weights,
/// with `w[k][l]` the weight of `l → k`.
pub fn arborescence_sum(w: &[Vec<SparsePoly>], class: &[usize], root: usize) -> SparsePoly {
    let others: Vec<usize> = class.iter().copied().filter(|&v| v != root).collect();
    let mut parent: Vec<Option<usize>> = vec![None; w.len()];
    let mut total = SparsePoly::zero();
    arborescence_rec(&others, class, w, &mut parent, &SparsePoly::one(), &mut total);
    total
}

fn creates_cycle(v: usize, u: usize, parent: &[Option<usize>]) -> bool {
    let mut x = u;
    loop {
        if x == v {
            return true;
        }
        match parent[x] {
            Some(p) => x = p,
            None => return false,
        }
    }
}

fn arborescence_rec(
    others: &[usize],
    class: &[usize],
    w: &[Vec<SparsePoly>],
    parent: &mut Vec<Option<usize>>,
    acc: &SparsePoly,
    total: &mut SparsePoly,
) {
    let Some((&v, rest)) = others.split_first() else {
        *total = total.add(acc);
        return;
    };
    for &u in class {
        if u == v || w[u][v].is_zero() || creates_cycle(v, u, parent) {
            continue;
        }
        parent[v] = Some(u);
        arborescence_rec(rest, class, w, parent, &acc.mul(&w[u][v]), total);
        parent[v] = None;
    }
}

/// `K_i` for each complex; requires weak reversibility.
pub fn tree_constants(net: &Network, mode: &RateMode) -> Result<TreeConstants, CrnError> {
    let classes = require_weakly_reversible(net)?;
    let w = edge_weights(net, mode)?;
    let mut values = vec![SparsePoly::zero(); net.num_complexes()];
    for class in &classes {
        if class.len() <= MAX_ENUMERATED_CLASS {
            for &i in class {
                values[i] = arborescence_sum(&w, class, i);
            }
        } else {
            if *mode == RateMode::Symbolic {
                return Err(CrnError::ClassTooLarge(class.len()));
            }
            let a = build_rate_matrix(net, mode)?;
            let block = a.select(class, class);
            for (pos, &i) in class.iter().enumerate() {
                values[i] = matrix_tree_minor(&block, pos, pos)?;
            }
        }
    }
    Ok(TreeConstants { values })
}

/// `(−1)^{m−1+i+j}·det(block without row j and column i)`, equal to `K_i` for every `j`.
pub fn matrix_tree_minor(block: &PolyMatrix, i: usize, j: usize) -> Result<SparsePoly, CrnError> {
    let m = block.rows();
    let numeric = super::rates::numeric_matrix(block);
    let det = match numeric {
        Some(q) => SparsePoly::constant(determinant(&q.minor(j, i))?),
        None => determinant(&block.minor(j, i))?,
    };
    Ok(if (m - 1 + i + j).is_multiple_of(2) { det } else { det.neg() })
}

/// The `class × class` block of the rate matrix.
pub fn class_block(a: &PolyMatrix, class: &[usize]) -> PolyMatrix {
    a.select(class, class)
}

/// `A_κ·K` restricted to each class, which vanishes.
pub fn kernel_residual(net: &Network, mode: &RateMode, k: &TreeConstants) -> Result<Vec<SparsePoly>, CrnError> {
    let a = build_rate_matrix(net, mode)?;
    let out = a.mul_vec(&k.values).map_err(|e| CrnError::Internal(e.to_string()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crn::parse_network;
    use crate::exactcore::rational::q;
    use crate::exactcore::QAlgebra;
    use proptest::prelude::*;

    fn v(name: &str) -> SparsePoly {
        SparsePoly::var(name)
    }

    #[test]
    fn examples() {
        let cyc = parse_network("X -> Y : a\nY -> Z : b\nZ -> X : c").unwrap();
        let k = tree_constants(&cyc, &RateMode::Symbolic).unwrap();
        assert_eq!(k.values, vec![v("b").mul(&v("c")), v("c").mul(&v("a")), v("a").mul(&v("b"))]);
        let two = parse_network("A -> B : alpha\nB -> A : beta").unwrap();
        assert_eq!(tree_constants(&two, &RateMode::Symbolic).unwrap().values, vec![v("beta"), v("alpha")]);
        let tri = parse_network("A <-> B : 1, 1\nB <-> C : 1, 1\nC <-> A : 1, 1").unwrap();
        let k = tree_constants(&tri, &RateMode::Symbolic).unwrap();
        assert!(k.values.iter().all(|x| x.as_rational() == Some(q(3))));
        assert!(matches!(tree_constants(&parse_network("A -> B : 1").unwrap(), &RateMode::Symbolic), Err(CrnError::NotWeaklyReversible)));
    }

    /// Random strongly connected graph text on `m` nodes: a Hamiltonian cycle plus extra edges.
    fn random_graph(m: usize, extra: &[(usize, usize)]) -> String {
        let mut lines: Vec<String> = (0..m).map(|i| format!("S{i} -> S{} : k{i}_{}", (i + 1) % m, (i + 1) % m)).collect();
        for &(a, b) in extra {
            let (a, b) = (a % m, b % m);
            if a != b && b != (a + 1) % m {
                let line = format!("S{a} -> S{b} : k{a}_{b}");
                if !lines.contains(&line) {
                    lines.push(line);
                }
            }
        }
        lines.join("\n")
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn matrix_tree_identity(m in 2usize..=5, extra in prop::collection::vec((0usize..6, 0usize..6), 0..6)) {
            let net = parse_network(&random_graph(m, &extra)).unwrap();
            let k = tree_constants(&net, &RateMode::Symbolic).unwrap();
            let a = build_rate_matrix(&net, &RateMode::Symbolic).unwrap();
            for i in 0..m {
                for j in 0..m {
                    prop_assert_eq!(&matrix_tree_minor(&a, i, j).unwrap(), &k.values[i]);
                }
            }
            prop_assert!(kernel_residual(&net, &RateMode::Symbolic, &k).unwrap().iter().all(Ring::is_zero));
        }
    }
}

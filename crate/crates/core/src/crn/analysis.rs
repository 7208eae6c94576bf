//! Graph-theoretic and linear invariants of a network.

use num::bigint::BigInt;
use serde::Serialize;

use super::network::Network;
use super::CrnError;
use crate::exactcore::{IntMatrix, Matrix};

/// Linkage classes, strong components and the deficiency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NetworkAnalysis {
    pub num_species: usize,
    pub num_complexes: usize,
    /// Weakly connected components, as sorted complex indices.
    pub linkage_classes: Vec<Vec<usize>>,
    pub strong_components: Vec<Vec<usize>>,
    pub weakly_reversible: bool,
    pub stoichiometric_rank: usize,
    pub deficiency: usize,
    /// Rows of the Cayley matrix.
    pub cayley: Vec<Vec<i64>>,
}

/// Sorted components of an undirected graph on `n` nodes.
fn weak_components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_slot: Vec<Option<usize>> = vec![None; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        match root_slot[r] {
            Some(g) => groups[g].push(x),
            None => {
                root_slot[r] = Some(groups.len());
                groups.push(vec![x]);
            }
        }
    }
    groups
}

/// Reachability closure; networks are small enough for the cubic bound.
fn reachability(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in edges {
        reach[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    reach
}

pub fn edges(net: &Network) -> Vec<(usize, usize)> {
    net.reactions.iter().map(|r| (r.source, r.target)).collect()
}

pub fn linkage_classes(net: &Network) -> Vec<Vec<usize>> {
    weak_components(net.num_complexes(), &edges(net))
}

pub fn strong_components(net: &Network) -> Vec<Vec<usize>> {
    let n = net.num_complexes();
    let reach = reachability(n, &edges(net));
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&j| reach[i][j] && reach[j][i]).collect();
        for &j in &comp {
            seen[j] = true;
        }
        out.push(comp);
    }
    out
}

/// Columns `Y_target − Y_source`, one per reaction.
pub fn stoichiometric_matrix(net: &Network) -> IntMatrix {
    let s = net.num_species();
    Matrix::from_fn(s, net.reactions.len(), |i, r| {
        let rx = &net.reactions[r];
        BigInt::from(net.complexes[rx.target][i] as i64 - net.complexes[rx.source][i] as i64)
    })
}

/// Complex columns stacked over linkage-class indicator rows.
pub fn cayley_matrix(net: &Network) -> IntMatrix {
    let classes = linkage_classes(net);
    let s = net.num_species();
    Matrix::from_fn(s + classes.len(), net.num_complexes(), |i, k| {
        if i < s {
            BigInt::from(net.complexes[k][i])
        } else {
            BigInt::from(classes[i - s].contains(&k) as i64)
        }
    })
}

pub fn analyze(net: &Network) -> Result<NetworkAnalysis, CrnError> {
    let n = net.num_complexes();
    let linkage = linkage_classes(net);
    let strong = strong_components(net);
    let weakly_reversible = strong.len() == linkage.len();
    let rank = stoichiometric_matrix(net).rank();
    let cayley = cayley_matrix(net);
    let from_rank = n - linkage.len() - rank;
    let from_cayley = n - cayley.rank();
    if from_rank != from_cayley {
        return Err(CrnError::Internal(format!("deficiency {from_rank} from ranks but {from_cayley} from the Cayley matrix")));
    }
    Ok(NetworkAnalysis {
        num_species: net.num_species(),
        num_complexes: n,
        linkage_classes: linkage,
        strong_components: strong,
        weakly_reversible,
        stoichiometric_rank: rank,
        deficiency: from_rank,
        cayley: small_rows(&cayley),
    })
}

/// Rows of a matrix with machine-sized entries.
pub fn small_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| i64::try_from(x).expect("small entry")).collect()).collect()
}

/// `n − l − s′`.
pub fn deficiency(net: &Network) -> Result<usize, CrnError> {
    Ok(analyze(net)?.deficiency)
}

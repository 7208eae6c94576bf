//! Deficiency-zero weakly reversible networks whose Cayley simplex is smooth give `CP^d`.

use num::bigint::BigInt;
use num::{One, ToPrimitive};
use serde::Serialize;

use super::numbers::{mxi_numbers, MxiClass};
use super::quasitoric::QuasitoricData;
use super::TopError;
use crate::crn::analysis::{cayley_matrix, small_rows};
use crate::crn::trees::require_weakly_reversible;
use crate::crn::{deficiency, Network};
use crate::exactcore::lattice::elementary_divisors;
use crate::exactcore::IntMatrix;

/// The projective space attached to a network, with its class.
#[derive(Debug, Clone)]
pub struct ToricBridge {
    pub dimension: usize,
    pub cayley_columns: Vec<Vec<i64>>,
    pub data: QuasitoricData,
    pub class: MxiClass,
}

#[derive(Serialize)]
struct BridgeJson<'a> {
    dimension: usize,
    cayley_columns: &'a [Vec<i64>],
    quasitoric: super::quasitoric::QuasitoricJson,
    class: &'a MxiClass,
}

impl Serialize for ToricBridge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BridgeJson { dimension: self.dimension, cayley_columns: &self.cayley_columns, quasitoric: self.data.to_json(), class: &self.class }.serialize(s)
    }
}

/// Refuses nonzero deficiency, non-weakly-reversible networks and singular simplices.
pub fn crn_to_toric(net: &Network) -> Result<ToricBridge, TopError> {
    let delta = deficiency(net)?;
    if delta != 0 {
        return Err(TopError::DeficiencyNonzero(delta));
    }
    require_weakly_reversible(net).map_err(|_| TopError::NotWeaklyReversible)?;
    let cayley = cayley_matrix(net).transpose();
    let mut columns = small_rows(&cayley);
    columns.sort();
    columns.dedup();
    if columns.len() < 2 {
        return Err(TopError::Degenerate("fewer than two distinct complexes".into()));
    }
    let d = columns.len() - 1;
    for (b, base) in columns.iter().enumerate() {
        let edges: Vec<Vec<i64>> = columns.iter().enumerate().filter(|(k, _)| *k != b).map(|(_, c)| c.iter().zip(base).map(|(x, y)| x - y).collect()).collect();
        let divisors = elementary_divisors(&IntMatrix::from_i64(&edges)?);
        if divisors.len() != d {
            return Err(TopError::Degenerate(format!("Cayley columns span dimension {} instead of {d}", divisors.len())));
        }
        if divisors.iter().any(|x| !x.is_one()) {
            return Err(TopError::NonSmooth { divisors: divisors.iter().map(|x: &BigInt| x.to_i64().unwrap_or(i64::MAX)).collect() });
        }
    }
    let data = QuasitoricData::projective_space(d);
    let class = mxi_numbers(&data)?;
    Ok(ToricBridge { dimension: d, cayley_columns: columns, data, class })
}

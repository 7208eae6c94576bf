//! Complex-balanced steady states and mass-action trajectories.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::analysis::stoichiometric_matrix;
use super::network::Network;
use super::rates::{build_rate_matrix, numeric_matrix, RateMode};
use super::trees::{require_weakly_reversible, tree_constants};
use super::CrnError;
use crate::exactcore::rational::{to_f64, Q};
use crate::exactcore::QAlgebra;

/// Relative tolerance for the log-linear system and the balancing residual.
pub const BIRCH_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SteadyState {
    pub concentrations: Vec<f64>,
    /// `‖A_κ·Ψ(c)‖∞`.
    pub residual: f64,
    pub normalization: Normalization,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// Minimum-norm `log c`.
    MinNormLog,
    /// The point in the stoichiometric class of a given state.
    StoichiometricClass,
}

/// A numeric network: `Y` (species × complexes) and `A_κ` in floating point.
#[derive(Debug, Clone)]
pub struct MassAction {
    pub y: DMatrix<f64>,
    pub rates: DMatrix<f64>,
    pub max_rate: f64,
}

impl MassAction {
    pub fn new(net: &Network, mode: &RateMode) -> Result<Self, CrnError> {
        let a = numeric_matrix(&build_rate_matrix(net, mode)?).ok_or(CrnError::SymbolicRates)?;
        let n = net.num_complexes();
        let rates = DMatrix::from_fn(n, n, |i, j| to_f64(a.get(i, j)));
        let y = DMatrix::from_fn(net.num_species(), n, |i, k| net.complexes[k][i] as f64);
        let max_rate = rates.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        Ok(MassAction { y, rates, max_rate })
    }

    /// `Ψ(c)_l = ∏_j c_j^{Y_jl}`.
    pub fn monomials(&self, c: &DVector<f64>) -> DVector<f64> {
        DVector::from_fn(self.y.ncols(), |l, _| self.y.column(l).iter().zip(c.iter()).map(|(&e, &x)| x.powi(e as i32)).product())
    }

    /// `Y·A_κ·Ψ(c)`.
    pub fn velocity(&self, c: &DVector<f64>) -> DVector<f64> {
        &self.y * (&self.rates * self.monomials(c))
    }

    /// `‖A_κ·Ψ(c)‖∞`.
    pub fn balance_residual(&self, c: &DVector<f64>) -> f64 {
        (&self.rates * self.monomials(c)).amax()
    }
}

/// Relative tolerances for steady states and trajectories.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub birch: f64,
    pub conservation: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { birch: BIRCH_TOLERANCE, conservation: CONSERVATION_TOLERANCE }
    }
}

impl Tolerances {
    /// The same value for every check.
    pub fn uniform(tol: f64) -> Self {
        Tolerances { birch: tol, conservation: tol }
    }
}

/// Solves `⟨Y_k − Y_l, log c⟩ = log K_k − log K_l` within each linkage class.
pub fn birch_point(net: &Network, mode: &RateMode) -> Result<SteadyState, CrnError> {
    birch_point_with(net, mode, Tolerances::default())
}

pub fn birch_point_with(net: &Network, mode: &RateMode, tol: Tolerances) -> Result<SteadyState, CrnError> {
    let classes = require_weakly_reversible(net)?;
    let k = tree_constants(net, mode)?;
    let logs: Vec<f64> = k
        .values
        .iter()
        .map(|p| p.as_rational().map(|x: Q| to_f64(&x).ln()).ok_or(CrnError::SymbolicRates))
        .collect::<Result<_, _>>()?;
    let s = net.num_species();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut rhs: Vec<f64> = Vec::new();
    for class in &classes {
        for (a, &ka) in class.iter().enumerate() {
            for &kb in &class[a + 1..] {
                rows.push((0..s).map(|j| net.complexes[ka][j] as f64 - net.complexes[kb][j] as f64).collect());
                rhs.push(logs[ka] - logs[kb]);
            }
        }
    }
    let m = DMatrix::from_fn(rows.len(), s, |i, j| rows[i][j]);
    let b = DVector::from_vec(rhs);
    let x = if s == 0 {
        DVector::zeros(0)
    } else {
        m.clone().svd(true, true).solve(&b, 1e-12).map_err(|e| CrnError::Numerical(e.to_string()))?
    };
    let lsq = (&m * &x - &b).amax();
    let scale = b.amax().max(1.0);
    if lsq > tol.birch * scale {
        return Err(CrnError::NotComplexBalanced { residual: lsq });
    }
    let c = x.map(f64::exp);
    finish(net, mode, c, Normalization::MinNormLog, tol)
}

fn finish(net: &Network, mode: &RateMode, c: DVector<f64>, normalization: Normalization, tol: Tolerances) -> Result<SteadyState, CrnError> {
    let ma = MassAction::new(net, mode)?;
    let residual = ma.balance_residual(&c);
    let psi_scale = ma.monomials(&c).amax().max(1.0);
    if residual > tol.birch * ma.max_rate.max(1.0) * psi_scale {
        return Err(CrnError::Numerical(format!("balancing residual {residual:e} after solve")));
    }
    Ok(SteadyState { concentrations: c.iter().copied().collect(), residual, normalization })
}

/// Rational basis of `{w : wᵀ(Y_k − Y_l) = 0}` for every reaction.
pub fn conservation_laws(net: &Network) -> Vec<Vec<Q>> {
    stoichiometric_matrix(net).transpose().to_rational().nullspace()
}

/// The complex-balanced point with `c − c0` in the stoichiometric subspace.
pub fn birch_point_in_class(net: &Network, mode: &RateMode, c0: &[f64]) -> Result<SteadyState, CrnError> {
    birch_point_in_class_with(net, mode, c0, Tolerances::default())
}

pub fn birch_point_in_class_with(net: &Network, mode: &RateMode, c0: &[f64], tol: Tolerances) -> Result<SteadyState, CrnError> {
    check_initial(net, c0)?;
    let base = birch_point_with(net, mode, tol)?;
    let laws = conservation_laws(net);
    let s = net.num_species();
    if laws.is_empty() {
        return Ok(SteadyState { normalization: Normalization::StoichiometricClass, ..base });
    }
    let w = DMatrix::from_fn(s, laws.len(), |i, j| to_f64(&laws[j][i]));
    let star = DVector::from_vec(base.concentrations);
    let c0 = DVector::from_column_slice(c0);
    let target = w.transpose() * &c0;
    let state = |a: &DVector<f64>| star.component_mul(&(&w * a).map(f64::exp));
    let mut a = DVector::zeros(laws.len());
    let mut f = w.transpose() * state(&a) - &target;
    for _ in 0..200 {
        if f.amax() <= 1e-13 * target.amax().max(1.0) {
            break;
        }
        let c = state(&a);
        let jac = w.transpose() * DMatrix::from_diagonal(&c) * &w;
        let step = jac.lu().solve(&(-&f)).ok_or_else(|| CrnError::Numerical("singular Newton system".into()))?;
        let mut t = 1.0;
        loop {
            let trial = &a + &step * t;
            let ft = w.transpose() * state(&trial) - &target;
            if ft.norm() < f.norm() || t < 1e-10 {
                a = trial;
                f = ft;
                break;
            }
            t *= 0.5;
        }
    }
    if f.amax() > tol.birch * target.amax().max(1.0) {
        return Err(CrnError::Numerical("Newton iteration for the stoichiometric class did not converge".into()));
    }
    finish(net, mode, state(&a), Normalization::StoichiometricClass, tol)
}

fn check_initial(net: &Network, c0: &[f64]) -> Result<(), CrnError> {
    if c0.len() != net.num_species() {
        return Err(CrnError::InvalidInitial(format!("expected {} concentrations, got {}", net.num_species(), c0.len())));
    }
    if c0.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(CrnError::InvalidInitial("concentrations must be finite and non-negative".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
    /// Largest relative change of any conservation law along the run.
    pub max_conservation_drift: f64,
}

impl Trajectory {
    pub fn final_state(&self) -> &[f64] {
        self.states.last().map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Relative drift allowed for conservation laws.
pub const CONSERVATION_TOLERANCE: f64 = 1e-8;

/// Fixed-step fourth-order Runge–Kutta for `ċ = Y·A_κ·Ψ(c)`.
pub fn simulate(net: &Network, mode: &RateMode, c0: &[f64], t_end: f64, dt: f64) -> Result<Trajectory, CrnError> {
    simulate_with(net, mode, c0, t_end, dt, Tolerances::default())
}

pub fn simulate_with(net: &Network, mode: &RateMode, c0: &[f64], t_end: f64, dt: f64, tol: Tolerances) -> Result<Trajectory, CrnError> {
    check_initial(net, c0)?;
    if !(dt > 0.0 && dt.is_finite()) || !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(CrnError::InvalidInitial("need dt > 0 and t_end >= 0".into()));
    }
    let ma = MassAction::new(net, mode)?;
    let laws: Vec<DVector<f64>> = conservation_laws(net).iter().map(|w| DVector::from_iterator(w.len(), w.iter().map(to_f64))).collect();
    let mut c = DVector::from_column_slice(c0);
    let reference: Vec<(f64, f64)> = laws
        .iter()
        .map(|w| {
            let v = w.dot(&c);
            let scale = if v.abs() > 0.0 { v.abs() } else { w.abs().sum() * c.amax().max(f64::MIN_POSITIVE) };
            (v, scale)
        })
        .collect();
    let steps = (t_end / dt).round() as usize;
    let mut times = vec![0.0];
    let mut states = vec![c.iter().copied().collect::<Vec<_>>()];
    let mut drift = 0.0f64;
    for step in 1..=steps {
        let k1 = ma.velocity(&c);
        let k2 = ma.velocity(&(&c + &k1 * (dt / 2.0)));
        let k3 = ma.velocity(&(&c + &k2 * (dt / 2.0)));
        let k4 = ma.velocity(&(&c + &k3 * dt));
        c += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
        let t = step as f64 * dt;
        if let Some(i) = c.iter().position(|&x| x < -1e-12 || !x.is_finite()) {
            return Err(CrnError::NegativeConcentration { species: net.species[i].clone(), time: t });
        }
        for (w, (v0, scale)) in laws.iter().zip(&reference) {
            drift = drift.max((w.dot(&c) - v0).abs() / scale);
        }
        if drift > tol.conservation {
            return Err(CrnError::ConservationViolated { drift, time: t });
        }
        times.push(t);
        states.push(c.iter().copied().collect());
    }
    Ok(Trajectory { times, states, max_conservation_drift: drift })
}

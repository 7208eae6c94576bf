use clap::Subcommand;
use serde_json::json;

use super::parse::{load_input, parse_floats};
use super::{to_json, CliError, Report, RunConfig};
use crate::crn::{
    analyze, birch_point_in_class_with, birch_point_with, parse_network, simulate_with, toric_binomials, tree_constants, Network, RateMode,
};
use crate::torictop::crn_to_toric;

#[derive(Debug, Subcommand)]
pub enum CrnCommand {
    /// Species, complexes, linkage classes, deficiency and the Cayley matrix.
    Analyze { input: String },
    /// Tree constants of every complex.
    Trees { input: String },
    /// Generators of the toric ideal in the tree constants.
    Ideal { input: String },
    /// The complex-balanced steady state.
    Steady {
        input: String,
        /// Initial concentrations selecting the stoichiometric class, e.g. `1,0.5,0`.
        #[arg(long)]
        initial: Option<String>,
    },
    /// Mass-action trajectory by fixed-step Runge–Kutta.
    Simulate {
        input: String,
        #[arg(long)]
        initial: String,
        #[arg(long, default_value_t = 50.0)]
        t_end: f64,
        #[arg(long, default_value_t = 0.01)]
        dt: f64,
        /// Print every state instead of the final one.
        #[arg(long)]
        full: bool,
    },
    /// The projective space of a smooth deficiency-zero network and its class.
    Toric { input: String },
}

fn load(input: &str) -> Result<Network, CliError> {
    Ok(parse_network(&load_input(input)?)?)
}

fn fmt_vec(xs: &[f64]) -> String {
    xs.iter().map(|x| format!("{x:.10}")).collect::<Vec<_>>().join(", ")
}

pub fn run(cmd: &CrnCommand, cfg: &RunConfig) -> Result<Report, CliError> {
    let mode = |net: &Network| RateMode::infer(net, cfg.bindings.clone());
    match cmd {
        CrnCommand::Analyze { input } => {
            let net = load(input)?;
            let a = analyze(&net)?;
            let text = format!(
                "species: {}\ncomplexes: {}\nlinkage classes: {}\nrank: {}\ndeficiency: {}\nweakly reversible: {}",
                a.num_species,
                a.num_complexes,
                a.linkage_classes.len(),
                a.stoichiometric_rank,
                a.deficiency,
                a.weakly_reversible
            );
            Ok(Report::json(to_json(&a), text))
        }
        CrnCommand::Trees { input } => {
            let net = load(input)?;
            let k = tree_constants(&net, &mode(&net))?;
            let rows: Vec<_> = k.values.iter().enumerate().map(|(i, p)| json!({ "complex": net.render_complex(i), "value": p.to_string() })).collect();
            let text = k.values.iter().enumerate().map(|(i, p)| format!("K{} [{}] = {p}", i + 1, net.render_complex(i))).collect::<Vec<_>>().join("\n");
            Ok(Report::json(json!({ "tree_constants": rows }), text))
        }
        CrnCommand::Ideal { input } => {
            let net = load(input)?;
            let bins = toric_binomials(&net);
            let text = if bins.is_empty() { "0".to_string() } else { bins.iter().map(|b| b.rendered.clone()).collect::<Vec<_>>().join("\n") };
            Ok(Report::json(json!({ "binomials": to_json(&bins) }), text))
        }
        CrnCommand::Steady { input, initial } => {
            let net = load(input)?;
            let m = mode(&net);
            let state = match initial {
                Some(c0) => birch_point_in_class_with(&net, &m, &parse_floats(c0)?, cfg.tolerances)?,
                None => birch_point_with(&net, &m, cfg.tolerances)?,
            };
            let named: serde_json::Map<_, _> = net.species.iter().zip(&state.concentrations).map(|(s, c)| (s.clone(), json!(c))).collect();
            let text = format!("species: {}\nconcentrations: {}\nresidual: {:e}", net.species.join(", "), fmt_vec(&state.concentrations), state.residual);
            let mut value = to_json(&state);
            value["species"] = json!(named);
            Ok(Report::json(value, text))
        }
        CrnCommand::Simulate { input, initial, t_end, dt, full } => {
            let net = load(input)?;
            let traj = simulate_with(&net, &mode(&net), &parse_floats(initial)?, *t_end, *dt, cfg.tolerances)?;
            let value = if *full {
                to_json(&traj)
            } else {
                json!({ "t_end": traj.times.last(), "steps": traj.times.len() - 1, "final_state": traj.final_state(), "max_conservation_drift": traj.max_conservation_drift })
            };
            let text = format!(
                "species: {}\nfinal state at t = {}: {}\nmax conservation drift: {:e}",
                net.species.join(", "),
                traj.times.last().copied().unwrap_or(0.0),
                fmt_vec(traj.final_state()),
                traj.max_conservation_drift
            );
            Ok(Report::json(value, text))
        }
        CrnCommand::Toric { input } => {
            let net = load(input)?;
            let b = crn_to_toric(&net)?;
            let text = format!("CP^{}\nclass: {}", b.dimension, b.class.render());
            Ok(Report::json(to_json(&b), text))
        }
    }
}

use std::collections::BTreeMap;

use clap::{Subcommand, ValueEnum};
use serde_json::json;

use super::parse::{load_input, parse_poly};
use super::{to_json, CliError, Report, RunConfig};
use crate::exactcore::poly::SparsePoly;
use crate::exactcore::rational::{format_rational, Q};
use crate::ncsf::Partition;
use crate::torictop::{
    chern_numbers, delzant_to_quasitoric, hamiltonian_numbers, mxi_numbers, validate_quasitoric, Bundle, DelzantPolytope, HamiltonianConvention,
    QuasitoricData, QuasitoricJson, TopError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Ginzburg,
    Mxi,
}

impl From<ConventionArg> for HamiltonianConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Ginzburg => HamiltonianConvention::Ginzburg,
            ConventionArg::Mxi => HamiltonianConvention::Mxi,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum ToricCommand {
    /// Sphere checks and facet minors of quasitoric data `{"facets", "lambda"}`.
    Validate { input: String },
    /// Class in noncommutative symmetric functions and Chern numbers.
    Charnum {
        #[arg(long, conflicts_with = "quasitoric", required_unless_present = "quasitoric")]
        polytope: Option<String>,
        #[arg(long)]
        quasitoric: Option<String>,
        /// Also the numbers of a symplectic class, in the chosen convention.
        #[arg(long, value_enum)]
        hamiltonian: Option<ConventionArg>,
        /// Class `u` as a linear form in `v1..vm`; the polytope's own class by default.
        #[arg(long)]
        class: Option<String>,
    },
    /// Vertices, dual complex, characteristic matrix and class of a Delzant polytope
    /// `{"normals", "offsets"}`.
    Delzant { input: String },
}

fn quasitoric(input: &str, cfg: &RunConfig) -> Result<QuasitoricData, CliError> {
    Ok(QuasitoricData::parse_json(&load_input(input)?)?.with_orientation_flip(cfg.orientation_flip))
}

fn subscript(n: u32) -> String {
    n.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap_or(0)).unwrap_or(c)).collect()
}

fn superscript(n: u32) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| SUP[c.to_digit(10).unwrap_or(0) as usize]).collect()
}

/// `c₂c₁²` for the partition `[2, 1, 1]`.
fn chern_label(p: &Partition) -> String {
    let mut counts: BTreeMap<std::cmp::Reverse<u32>, u32> = BTreeMap::new();
    for &k in p.parts() {
        *counts.entry(std::cmp::Reverse(k)).or_default() += 1;
    }
    counts.iter().map(|(k, &e)| format!("c{}{}", subscript(k.0), if e > 1 { superscript(e) } else { String::new() })).collect()
}

fn chern_table(values: &BTreeMap<Partition, Q>) -> (String, serde_json::Value) {
    let mut entries: Vec<(&Partition, &Q)> = values.iter().collect();
    entries.sort_by_key(|(p, _)| std::cmp::Reverse(p.len()));
    let text = entries.iter().map(|(p, x)| format!("{}={}", chern_label(p), format_rational(x))).collect::<Vec<_>>().join(", ");
    let json = entries.iter().map(|(p, x)| json!({ "partition": p.parts(), "label": chern_label(p), "value": format_rational(x) })).collect();
    (text, serde_json::Value::Array(json))
}

pub fn run(cmd: &ToricCommand, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        ToricCommand::Validate { input } => {
            let text = load_input(input)?;
            let raw: QuasitoricJson = serde_json::from_str(&text).map_err(|e| TopError::Json(e.to_string()))?;
            let report = validate_quasitoric(&raw.complex()?, &raw.matrix()?);
            let summary = if report.valid { "valid".to_string() } else { format!("invalid: {}", report.summary()) };
            Ok(Report::json(to_json(&report), summary))
        }
        ToricCommand::Charnum { polytope, quasitoric: qt, hamiltonian, class } => {
            let (data, own_class) = match (polytope, qt) {
                (Some(p), _) => {
                    let d = delzant_to_quasitoric(&DelzantPolytope::parse_json(&load_input(p)?)?)?;
                    let flipped = d.data.orientation_flip() != cfg.orientation_flip;
                    (d.data.with_orientation_flip(flipped), Some(d.symplectic_class))
                }
                (None, Some(q)) => (quasitoric(q, cfg)?, None),
                (None, None) => return Err(CliError::input("Usage", "give --polytope or --quasitoric")),
            };
            let mxi = mxi_numbers(&data)?;
            let (tangent_text, tangent_json) = chern_table(&chern_numbers(&data, Bundle::Tangent)?);
            let (normal_text, normal_json) = chern_table(&chern_numbers(&data, Bundle::Normal)?);
            let mut text = format!("{}\ntangent: {tangent_text}\nnormal: {normal_text}", mxi.render());
            let mut value = json!({ "dimension": data.dimension(), "class": to_json(&mxi), "tangent": tangent_json, "normal": normal_json });
            if let Some(conv) = hamiltonian {
                let u: SparsePoly = match (class, own_class) {
                    (Some(c), _) => parse_poly(c, &["v"])?,
                    (None, Some(u)) => u,
                    (None, None) => return Err(CliError::input("Usage", "--hamiltonian on quasitoric data needs --class")),
                };
                let numbers = hamiltonian_numbers(&data, &u, (*conv).into())?;
                let rendered = match numbers.to_mxi_class() {
                    Some(c) => c.render_with_markers(),
                    None => numbers.entries.iter().map(|e| format!("{:?}: {}", e.index, format_rational(&e.value))).collect::<Vec<_>>().join(", "),
                };
                text.push_str(&format!("\nhamiltonian (u = {u}): {rendered}"));
                value["hamiltonian"] = to_json(&numbers);
                value["hamiltonian"]["class"] = json!(u.to_string());
            }
            Ok(Report::text(text, value))
        }
        ToricCommand::Delzant { input } => {
            let d = delzant_to_quasitoric(&DelzantPolytope::parse_json(&load_input(input)?)?)?;
            let data = d.data.clone().with_orientation_flip(d.data.orientation_flip() != cfg.orientation_flip);
            let vertices: Vec<Vec<String>> = d.vertices.iter().map(|x| x.iter().map(format_rational).collect()).collect();
            let text = format!(
                "vertices: {}\nfacets: {:?}\nclass: u = {}\norientation flipped: {}",
                vertices.iter().map(|v| format!("({})", v.join(", "))).collect::<Vec<_>>().join(" "),
                data.complex().facets_one_based(),
                d.symplectic_class,
                data.orientation_flip()
            );
            let value = json!({
                "vertices": vertices,
                "vertex_facets": d.vertex_facets.iter().map(|f| f.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "quasitoric": to_json(&data.to_json()),
                "symplectic_class": d.symplectic_class.to_string(),
                "orientation_flip": data.orientation_flip(),
            });
            Ok(Report::json(value, text))
        }
    }
}

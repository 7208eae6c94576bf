use clap::{Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::parse::{load_input, parse_ncf, parse_poly, parse_qsym, parse_rationals, parse_sym};
use super::{to_json, CliError, Report, RunConfig};
use crate::exactcore::poly::SparsePoly;
use crate::exactcore::rational::{format_rational, Q};
use crate::exactcore::Ring;
use crate::freeprob::{
    classical_cumulants, classical_cumulants_to_moments, free_cumulants_to_moments, hirzebruch_k, l_genus_log, moments_to_free_cumulants,
    nc_cumulant_series, todd_log, CumulantSeq, MomentSeq,
};
use crate::hopfdiff::{
    ab_bfk_to_ln, bfk_antipode, bfk_coproduct, fgl_over_n, ln_antipode, ln_coproduct, mu_coaction, t, verify_hopf, BNormalization,
    CoactionTarget, HopfKind,
};
use crate::ncsf::{hall_pairing, pairing, z, Ncf, SymBasis};

#[derive(Debug, Subcommand)]
pub enum QsymCommand {
    /// Quasi-shuffle product of two expressions in `M[α]`.
    Product { left: String, right: String },
    /// Duality pairing of an expression in `Z[α]` with one in `M[α]`.
    Pair { ncsf: String, qsym: String },
    /// The polynomial in `x1..xk`.
    Realize {
        expr: String,
        #[arg(long)]
        vars: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    E,
    H,
    P,
    M,
    S,
}

impl From<BasisArg> for SymBasis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::E => SymBasis::E,
            BasisArg::H => SymBasis::H,
            BasisArg::P => SymBasis::P,
            BasisArg::M => SymBasis::M,
            BasisArg::S => SymBasis::S,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum SymCommand {
    /// Rewrites an expression such as `e[2,1] - 2 p[3]` in another basis.
    Convert {
        expr: String,
        #[arg(long, value_enum)]
        to: BasisArg,
    },
    /// The Hall inner product.
    Pair { left: String, right: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Ln,
    Bfk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Log,
    B,
}

#[derive(Debug, Subcommand)]
pub enum HopfCommand {
    /// Coproduct of a generator or of an expression (`t1^2 t2` or `Z[1,2] - Z[3]`).
    Coproduct {
        #[arg(long, value_enum, default_value = "bfk")]
        algebra: AlgebraArg,
        #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
        degree: Option<usize>,
        expr: Option<String>,
    },
    /// Antipode of a generator or of an expression.
    Antipode {
        #[arg(long, value_enum, default_value = "bfk")]
        algebra: AlgebraArg,
        #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
        degree: Option<usize>,
        expr: Option<String>,
    },
    /// Checks coassociativity, counit and antipode on generators up to `--order`.
    Verify {
        #[arg(long, value_enum)]
        algebra: Option<AlgebraArg>,
    },
    /// The formal group law over noncommutative symmetric functions and its axiom checks.
    Fgl,
    /// Coaction on `CP_k` or `b_k` generators.
    Coaction {
        #[arg(long, value_enum, default_value = "log")]
        target: TargetArg,
        #[arg(long, value_enum, default_value = "diffeo")]
        normalization: NormalizationArg,
        /// A single generator; all up to `--order` when absent.
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormalizationArg {
    Diffeo,
    Grouplike,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceKind {
    Moments,
    Cumulants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Genus {
    Todd,
    L,
}

#[derive(Debug, Subcommand)]
pub enum FreeCommand {
    /// Moments and free cumulants, in either direction.
    Free {
        #[arg(long, value_enum, default_value = "moments")]
        from: SequenceKind,
        /// `m1,m2,…` or `k1,k2,…`, or a JSON object `{"moments": [...]}` / `{"cumulants": [...]}`.
        values: String,
    },
    /// Moments and classical cumulants, in either direction.
    Classical {
        #[arg(long, value_enum, default_value = "moments")]
        from: SequenceKind,
        values: String,
    },
    /// `K(z) = z / log^{-1}(z)` for a named genus or explicit log coefficients.
    Hirzebruch {
        #[arg(long, value_enum, conflicts_with = "log", required_unless_present = "log")]
        genus: Option<Genus>,
        /// `l1,l2,…` with `l1 = 1`.
        #[arg(long)]
        log: Option<String>,
    },
    /// Noncommutative cumulants from the antipode of the diffeomorphism group.
    Ncseries,
}

pub fn run_qsym(cmd: &QsymCommand) -> Result<Report, CliError> {
    match cmd {
        QsymCommand::Product { left, right } => {
            let p = parse_qsym(left)?.product(&parse_qsym(right)?);
            let text = p.render().replace("Z[", "M[");
            Ok(Report::text(text.clone(), json!({ "product": text })))
        }
        QsymCommand::Pair { ncsf, qsym } => {
            let value = pairing(&parse_ncf(ncsf)?, &parse_qsym(qsym)?);
            Ok(Report::text(format_rational(&value), json!({ "pairing": format_rational(&value) })))
        }
        QsymCommand::Realize { expr, vars } => {
            let poly = parse_qsym(expr)?.realize(*vars);
            Ok(Report::text(poly.to_string(), json!({ "vars": vars, "polynomial": poly.to_string() })))
        }
    }
}

pub fn run_sym(cmd: &SymCommand) -> Result<Report, CliError> {
    match cmd {
        SymCommand::Convert { expr, to } => {
            let f = parse_sym(expr, (*to).into())?;
            Ok(Report::text(f.render(), to_json(&f)))
        }
        SymCommand::Pair { left, right } => {
            let value = hall_pairing(&parse_sym(left, SymBasis::H)?, &parse_sym(right, SymBasis::M)?)?;
            Ok(Report::text(format_rational(&value), json!({ "pairing": format_rational(&value) })))
        }
    }
}

enum Element {
    Free(Ncf),
    Commutative(SparsePoly),
}

fn element(algebra: AlgebraArg, degree: Option<usize>, expr: Option<&str>) -> Result<(String, Element), CliError> {
    match (algebra, degree, expr) {
        (_, Some(0), _) => Err(CliError::input("Usage", "--degree must be at least 1")),
        (AlgebraArg::Bfk, Some(k), _) => Ok((format!("Z[{k}]"), Element::Free(z(k)))),
        (AlgebraArg::Ln, Some(k), _) => Ok((format!("t{k}"), Element::Commutative(t(k)))),
        (AlgebraArg::Bfk, None, Some(e)) => {
            let x = parse_ncf(e)?;
            Ok((x.render(), Element::Free(x)))
        }
        (AlgebraArg::Ln, None, Some(e)) => {
            let x = parse_poly(e, &["t"])?;
            Ok((x.to_string(), Element::Commutative(x)))
        }
        (_, None, None) => Err(CliError::input("Usage", "give --degree or an expression")),
    }
}

pub fn run_hopf(cmd: &HopfCommand, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        HopfCommand::Coproduct { algebra, degree, expr } => {
            let (name, x) = element(*algebra, *degree, expr.as_deref())?;
            let value = match x {
                Element::Free(x) => bfk_coproduct(&x).render(),
                Element::Commutative(x) => ln_coproduct(&x)?.render(),
            };
            let text = format!("Δ({name}) = {value}");
            Ok(Report::text(text, json!({ "input": name, "coproduct": value })))
        }
        HopfCommand::Antipode { algebra, degree, expr } => {
            let (name, x) = element(*algebra, *degree, expr.as_deref())?;
            let value = match x {
                Element::Free(x) => bfk_antipode(&x).render(),
                Element::Commutative(x) => ln_antipode(&x)?.to_string(),
            };
            let text = format!("χ({name}) = {value}");
            Ok(Report::text(text, json!({ "input": name, "antipode": value })))
        }
        HopfCommand::Verify { algebra } => {
            let kinds = match algebra {
                Some(AlgebraArg::Ln) => vec![HopfKind::Ln],
                Some(AlgebraArg::Bfk) => vec![HopfKind::Bfk],
                None => vec![HopfKind::Ln, HopfKind::Bfk],
            };
            let mut reports = Vec::new();
            let mut lines = Vec::new();
            for kind in kinds {
                let r = verify_hopf(kind, cfg.order)?;
                lines.push(format!(
                    "{kind:?} to weight {}: coassociative {}, counital {}, antipode {}",
                    r.weight, r.coassociative, r.counital, r.antipode
                ));
                reports.push(to_json(&r));
            }
            let mut value = json!({ "reports": reports });
            if algebra.is_none() {
                let mismatch = ab_bfk_to_ln(cfg.order)?;
                lines.push(match &mismatch {
                    None => format!("abelianization is a Hopf map to weight {}", cfg.order),
                    Some(m) => format!("abelianization fails: {m:?}"),
                });
                value["abelianization_mismatch"] = to_json(&mismatch);
            }
            Ok(Report::json(value, lines.join("\n")))
        }
        HopfCommand::Fgl => {
            let law = fgl_over_n(cfg.order)?;
            let report = law.report()?;
            let abelian = law.matches_commutative_law()?;
            let mut value = to_json(&report);
            value["abelianization_matches_commutative_law"] = json!(abelian);
            let coeffs: Vec<Value> = (1..=cfg.order as u32)
                .flat_map(|i| (1..=cfg.order as u32 - i).map(move |j| (i, j)))
                .filter_map(|(i, j)| {
                    let c = law.coeff(i, j);
                    (!c.is_zero()).then(|| json!({ "x": i, "y": j, "coefficient": c.render() }))
                })
                .collect();
            value["coefficients"] = json!(coeffs);
            let text = format!(
                "order {}: unit {}, commutative {}, associative {}{}\nabelianization matches the commutative law: {abelian}",
                report.order,
                report.unit,
                report.commutative,
                report.associative,
                report.first_associativity_failure.map(|d| format!(" (first failure in total degree {d})")).unwrap_or_default()
            );
            Ok(Report::json(value, text))
        }
        HopfCommand::Coaction { target, normalization, degree } => {
            let target = match (target, normalization) {
                (TargetArg::Log, _) => CoactionTarget::LogGenerators,
                (TargetArg::B, NormalizationArg::Diffeo) => CoactionTarget::BSeries(BNormalization::Diffeo),
                (TargetArg::B, NormalizationArg::Grouplike) => CoactionTarget::BSeries(BNormalization::Grouplike),
            };
            let top = degree.unwrap_or(cfg.order);
            if *degree == Some(0) {
                return Err(CliError::input("Usage", "--degree must be at least 1"));
            }
            let coaction = mu_coaction(target, top)?;
            let range: Vec<usize> = match degree {
                Some(k) => vec![*k],
                None => (1..=top).collect(),
            };
            let rows: Vec<(String, String)> = range.iter().map(|&k| (format!("{}{k}", target.prefix()), coaction.generator(k).render())).collect();
            let text = rows.iter().map(|(g, v)| format!("ψ({g}) = {v}")).collect::<Vec<_>>().join("\n");
            let value = json!({ "target": to_json(&target), "images": rows.iter().map(|(g, v)| json!({ "generator": g, "image": v })).collect::<Vec<_>>() });
            Ok(Report::text(text, value))
        }
    }
}

fn render_list(name: &str, start: usize, xs: &[Q]) -> String {
    xs.iter().enumerate().map(|(i, x)| format!("{name}{} = {}", i + start, format_rational(x))).collect::<Vec<_>>().join("\n")
}

fn sequence(kind: SequenceKind, values: &str) -> Result<Result<MomentSeq, CumulantSeq>, CliError> {
    let text = if values.trim_start().starts_with('{') || std::path::Path::new(values).is_file() { load_input(values)? } else { values.to_string() };
    if text.trim_start().starts_with('{') {
        let bad = |e: serde_json::Error| CliError::input("Json", e.to_string());
        return Ok(match kind {
            SequenceKind::Moments => {
                let m: MomentSeq = serde_json::from_str(&text).map_err(bad)?;
                Ok(MomentSeq::new(m.moments().to_vec())?)
            }
            SequenceKind::Cumulants => Err(serde_json::from_str(&text).map_err(bad)?),
        });
    }
    let xs = parse_rationals(&text)?;
    Ok(match kind {
        SequenceKind::Moments => Ok(MomentSeq::from_higher(xs)),
        SequenceKind::Cumulants => Err(CumulantSeq::new(xs)),
    })
}

fn sequence_report(from: Result<MomentSeq, CumulantSeq>, to_cumulants: impl Fn(&MomentSeq) -> Result<CumulantSeq, crate::freeprob::FreeProbError>, to_moments: impl Fn(&CumulantSeq) -> Result<MomentSeq, crate::freeprob::FreeProbError>) -> Result<Report, CliError> {
    Ok(match from {
        Ok(m) => {
            let k = to_cumulants(&m)?;
            Report::json(to_json(&k), render_list("k", 1, k.cumulants()))
        }
        Err(k) => {
            let m = to_moments(&k)?;
            Report::json(to_json(&m), render_list("m", 0, m.moments()))
        }
    })
}

pub fn run_freeprob(cmd: &FreeCommand, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        FreeCommand::Free { from, values } => sequence_report(sequence(*from, values)?, moments_to_free_cumulants, free_cumulants_to_moments),
        FreeCommand::Classical { from, values } => sequence_report(sequence(*from, values)?, classical_cumulants, classical_cumulants_to_moments),
        FreeCommand::Hirzebruch { genus, log } => {
            let coeffs = match (genus, log) {
                (Some(Genus::Todd), _) => todd_log(cfg.order + 1),
                (Some(Genus::L), _) => l_genus_log(cfg.order + 1),
                (None, Some(l)) => parse_rationals(l)?,
                (None, None) => return Err(CliError::input("Usage", "give --genus or --log")),
            };
            let k = hirzebruch_k(&coeffs, cfg.order)?;
            let rendered: Vec<String> = k.iter().map(format_rational).collect();
            Ok(Report::json(json!({ "order": cfg.order, "coefficients": rendered }), render_list("K", 0, &k)))
        }
        FreeCommand::Ncseries => {
            let nc = nc_cumulant_series(cfg.order)?;
            let cumulants: Vec<String> = nc.cumulants.iter().map(|k| k.render()).collect();
            let abelian: Vec<String> = nc.abelianized().iter().map(|p| p.to_string()).collect();
            let text = cumulants.iter().enumerate().map(|(i, k)| format!("k{} = {k}", i + 1)).collect::<Vec<_>>().join("\n");
            Ok(Report::json(json!({ "order": cfg.order, "cumulants": cumulants, "abelianized": abelian }), text))
        }
    }
}

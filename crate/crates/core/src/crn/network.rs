//! Reaction networks and their text format.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::CrnError;
use crate::exactcore::rational::{format_rational, is_positive, parse_rational, serde_q, Q};

/// A complex as stoichiometric coefficients over the species list.
pub type Complex = Vec<u32>;

/// A reaction rate: an exact positive number or a named symbol, optionally valued.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Rate {
    Value {
        #[serde(with = "serde_q")]
        value: Q,
    },
    Symbol {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_q")]
        value: Option<Q>,
    },
}

mod opt_q {
    use super::Q;
    use crate::exactcore::rational::serde_q;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => serde_q::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "serde_q")] Q);
        Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rate::Value { value } => f.write_str(&format_rational(value)),
            Rate::Symbol { name, value: None } => f.write_str(name),
            Rate::Symbol { name, value: Some(v) } => write!(f, "{name}={}", format_rational(v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reaction {
    pub source: usize,
    pub target: usize,
    pub rate: Rate,
}

/// Species, distinct complexes and rated edges between complexes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Network {
    pub species: Vec<String>,
    pub complexes: Vec<Complex>,
    pub reactions: Vec<Reaction>,
}

impl Network {
    /// Validates loops, duplicate complexes, isolated complexes and conflicting symbol values.
    pub fn new(species: Vec<String>, complexes: Vec<Complex>, reactions: Vec<Reaction>) -> Result<Self, CrnError> {
        for (i, c) in complexes.iter().enumerate() {
            if c.len() != species.len() {
                return Err(CrnError::Invalid(format!("complex {} has {} entries for {} species", i + 1, c.len(), species.len())));
            }
            if complexes[..i].contains(c) {
                return Err(CrnError::Invalid(format!("complex {} is listed twice", i + 1)));
            }
        }
        let mut used = vec![false; complexes.len()];
        let mut symbols: BTreeMap<&str, Q> = BTreeMap::new();
        for r in &reactions {
            if r.source >= complexes.len() || r.target >= complexes.len() {
                return Err(CrnError::Invalid("reaction refers to a missing complex".into()));
            }
            if r.source == r.target {
                return Err(CrnError::Loop(render_complex(&species, &complexes[r.source])));
            }
            used[r.source] = true;
            used[r.target] = true;
            match &r.rate {
                Rate::Value { value } if !is_positive(value) => return Err(CrnError::NonPositiveRate(format_rational(value))),
                Rate::Symbol { name, value: Some(v) } => {
                    if !is_positive(v) {
                        return Err(CrnError::NonPositiveRate(format!("{name}={}", format_rational(v))));
                    }
                    if let Some(prev) = symbols.insert(name, v.clone()) {
                        if &prev != v {
                            return Err(CrnError::ConflictingRate(name.clone()));
                        }
                    }
                }
                _ => {}
            }
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(CrnError::Invalid(format!("complex {} occurs in no reaction", i + 1)));
        }
        Ok(Network { species, complexes, reactions })
    }

    pub fn num_species(&self) -> usize {
        self.species.len()
    }

    pub fn num_complexes(&self) -> usize {
        self.complexes.len()
    }

    /// Symbol names in first-appearance order.
    pub fn symbols(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for r in &self.reactions {
            if let Rate::Symbol { name, .. } = &r.rate {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
        }
        out
    }

    /// Values attached to symbols in the text.
    pub fn inline_values(&self) -> BTreeMap<String, Q> {
        let mut out = BTreeMap::new();
        for r in &self.reactions {
            if let Rate::Symbol { name, value: Some(v) } = &r.rate {
                out.insert(name.clone(), v.clone());
            }
        }
        out
    }

    pub fn render_complex(&self, k: usize) -> String {
        render_complex(&self.species, &self.complexes[k])
    }
}

/// `2A + B`, or `0` for the empty complex.
pub fn render_complex(species: &[String], c: &[u32]) -> String {
    let terms: Vec<String> = species
        .iter()
        .zip(c)
        .filter(|(_, &n)| n > 0)
        .map(|(s, &n)| if n == 1 { s.clone() } else { format!("{n}{s}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

const ARROWS: [(&str, bool); 7] = [("<->", true), ("<=>", true), ("⇄", true), ("↔", true), ("⇌", true), ("->", false), ("→", false)];

struct Builder {
    species: Vec<String>,
    complexes: Vec<BTreeMap<usize, u32>>,
    reactions: Vec<(usize, usize, Rate)>,
}

impl Builder {
    fn species_index(&mut self, name: &str) -> usize {
        match self.species.iter().position(|s| s == name) {
            Some(i) => i,
            None => {
                self.species.push(name.to_string());
                self.species.len() - 1
            }
        }
    }

    fn complex_index(&mut self, c: BTreeMap<usize, u32>) -> usize {
        match self.complexes.iter().position(|d| *d == c) {
            Some(i) => i,
            None => {
                self.complexes.push(c);
                self.complexes.len() - 1
            }
        }
    }
}

/// Parses one reaction per line: `2A + B -> C : k1` or `A <-> B : 1, 2`.
///
/// Complexes are `+`-separated `[coefficient]Species` terms, `0` or `∅` for the empty
/// complex. A rate is a rational `p/q`, a decimal, a symbol `k1` or a valued symbol
/// `k1=2`. `#` starts a comment.
pub fn parse_network(text: &str) -> Result<Network, CrnError> {
    let mut b = Builder { species: Vec::new(), complexes: Vec::new(), reactions: Vec::new() };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| CrnError::Syntax { line: lineno + 1, message: msg };
        let (body, rates) = line.split_once(':').ok_or_else(|| err("missing `: rate`".into()))?;
        let (lhs, rhs, reversible) = ARROWS
            .iter()
            .find_map(|(arrow, rev)| body.split_once(arrow).map(|(l, r)| (l, r, *rev)))
            .ok_or_else(|| err("missing reaction arrow".into()))?;
        let lhs = parse_complex(lhs).map_err(&err)?;
        let rhs = parse_complex(rhs).map_err(&err)?;
        let rates: Vec<Rate> = rates.split(',').map(|r| parse_rate(r).map_err(&err)).collect::<Result<_, _>>()?;
        let expected = if reversible { 2 } else { 1 };
        if rates.len() != expected {
            return Err(err(format!("expected {expected} rate(s), found {}", rates.len())));
        }
        let lhs: BTreeMap<usize, u32> = lhs.into_iter().map(|(s, n)| (b.species_index(&s), n)).fold(BTreeMap::new(), merge);
        let rhs: BTreeMap<usize, u32> = rhs.into_iter().map(|(s, n)| (b.species_index(&s), n)).fold(BTreeMap::new(), merge);
        let l = b.complex_index(lhs);
        let r = b.complex_index(rhs);
        if l == r {
            return Err(CrnError::Loop(format!("line {}", lineno + 1)));
        }
        let mut rates = rates.into_iter();
        b.reactions.push((l, r, rates.next().expect("one rate")));
        if let Some(back) = rates.next() {
            b.reactions.push((r, l, back));
        }
    }
    let s = b.species.len();
    let complexes = b
        .complexes
        .iter()
        .map(|c| {
            let mut v = vec![0; s];
            for (&i, &n) in c {
                v[i] = n;
            }
            v
        })
        .collect();
    let reactions = b.reactions.into_iter().map(|(source, target, rate)| Reaction { source, target, rate }).collect();
    Network::new(b.species, complexes, reactions)
}

fn merge(mut acc: BTreeMap<usize, u32>, (i, n): (usize, u32)) -> BTreeMap<usize, u32> {
    *acc.entry(i).or_insert(0) += n;
    acc
}

fn parse_complex(text: &str) -> Result<Vec<(String, u32)>, String> {
    let t = text.trim();
    if t == "0" || t == "∅" {
        return Ok(Vec::new());
    }
    t.split('+')
        .map(|term| {
            let term = term.trim();
            let digits = term.len() - term.trim_start_matches(|c: char| c.is_ascii_digit()).len();
            let (coef, name) = term.split_at(digits);
            let name = name.trim();
            let coef: u32 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| format!("bad coefficient in `{term}`"))? };
            if coef == 0 {
                return Err(format!("zero coefficient in `{term}`"));
            }
            let valid = name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !valid {
                return Err(format!("bad species name `{name}`"));
            }
            Ok((name.to_string(), coef))
        })
        .collect()
}

fn parse_rate(text: &str) -> Result<Rate, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty rate".into());
    }
    let positive = |v: Q, shown: &str| if is_positive(&v) { Ok(v) } else { Err(format!("rate `{shown}` must be positive")) };
    if let Some((name, value)) = t.split_once('=') {
        let name = name.trim();
        check_symbol(name)?;
        let v = parse_rational(value).map_err(|e| e.to_string())?;
        return Ok(Rate::Symbol { name: name.to_string(), value: Some(positive(v, t)?) });
    }
    if t.starts_with(|c: char| c.is_alphabetic() || c == '_') && !t.eq_ignore_ascii_case("inf") && !t.eq_ignore_ascii_case("nan") {
        check_symbol(t)?;
        return Ok(Rate::Symbol { name: t.to_string(), value: None });
    }
    let v = parse_rational(t).map_err(|e| e.to_string())?;
    Ok(Rate::Value { value: positive(v, t)? })
}

fn check_symbol(name: &str) -> Result<(), String> {
    let ok = name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_') && name.chars().all(|c| c.is_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(format!("bad rate symbol `{name}`"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{q, qr};

    #[test]
    fn single_reaction() {
        let net = parse_network("2A -> A+B : k1").unwrap();
        assert_eq!(net.species, ["A", "B"]);
        assert_eq!(net.complexes, vec![vec![2, 0], vec![1, 1]]);
        assert_eq!(net.reactions.len(), 1);
        assert_eq!(net.reactions[0].rate, Rate::Symbol { name: "k1".into(), value: None });
    }

    #[test]
    fn triangle_and_sugar() {
        let net = parse_network("A -> B : 1\nB -> C : 1\nC -> A : 1").unwrap();
        assert_eq!(net.num_complexes(), 3);
        let rev = parse_network("# comment\n2A <-> A + B : 1/2, 0.25  # trailing\nA + B ⇄ 2B : k=2, k").unwrap();
        assert_eq!(rev.reactions.len(), 4);
        assert_eq!(rev.reactions[0].rate, Rate::Value { value: qr(1, 2) });
        assert_eq!(rev.reactions[1].rate, Rate::Value { value: qr(1, 4) });
        assert_eq!(rev.inline_values()["k"], q(2));
        assert_eq!(rev.render_complex(1), "A + B");
    }

    #[test]
    fn empty_complex() {
        let net = parse_network("0 -> A : 1\nA → ∅ : 2").unwrap();
        assert_eq!(net.complexes, vec![vec![0], vec![1]]);
        assert_eq!(net.render_complex(0), "0");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_network("A -> A : 1"), Err(CrnError::Loop(_))));
        assert!(matches!(parse_network("A -> B : 1\nB => C : 1"), Err(CrnError::Syntax { line: 2, .. })));
        assert!(matches!(parse_network("0A -> B : 1"), Err(CrnError::Syntax { line: 1, .. })));
        assert!(matches!(parse_network("A -> B : -1"), Err(CrnError::Syntax { .. })));
        assert!(matches!(parse_network("A -> B : k=1\nB -> A : k=2"), Err(CrnError::ConflictingRate(_))));
        assert!(matches!(parse_network("A <-> B : 1"), Err(CrnError::Syntax { .. })));
    }

    #[test]
    fn json_round_trip() {
        let net = parse_network("A <-> B : k=3/2, 2").unwrap();
        let text = serde_json::to_string(&net).unwrap();
        assert_eq!(serde_json::from_str::<Network>(&text).unwrap(), net);
    }
}

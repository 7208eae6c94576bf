//! Inline expressions and input loading for the command line.

use std::path::Path;

use super::CliError;
use crate::exactcore::poly::SparsePoly;
use crate::exactcore::rational::{parse_rational, Q};
use crate::exactcore::{QAlgebra, Ring};
use crate::ncsf::{Composition, Ncf, QSym, SymBasis, SymF};

/// `name[parts]^power` or `name<index>^power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub name: String,
    pub parts: Vec<u32>,
    pub power: u32,
}

/// A coefficient times a product of factors.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coeff: Q,
    pub factors: Vec<Factor>,
}

fn bad(detail: impl Into<String>) -> CliError {
    CliError::input("Expression", detail)
}

struct Cursor<'a> {
    chars: Vec<char>,
    at: usize,
    source: &'a str,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn skip_space(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace() || c == '·' || c == '*') {
            self.at += 1;
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let start = self.at;
        while self.peek().is_some_and(&f) {
            self.at += 1;
        }
        self.chars[start..self.at].iter().collect()
    }

    fn error(&self, what: &str) -> CliError {
        bad(format!("{what} at position {} in `{}`", self.at + 1, self.source))
    }
}

fn number(c: char) -> bool {
    c.is_ascii_digit() || c == '/' || c == '.'
}

/// Parses `2·Z[1,2] − 1/3 Z[3]Z[1] + t1^2 t2 + 5`.
pub fn parse_terms(source: &str) -> Result<Vec<Term>, CliError> {
    let mut cur = Cursor { chars: source.chars().collect(), at: 0, source };
    let mut terms = Vec::new();
    cur.skip_space();
    if cur.peek().is_none() {
        return Err(bad("empty expression"));
    }
    let mut sign = Q::one();
    loop {
        cur.skip_space();
        match cur.peek() {
            Some('+') => cur.at += 1,
            Some('-' | '−') => {
                sign = -sign;
                cur.at += 1;
            }
            _ => {}
        }
        cur.skip_space();
        let digits = cur.take_while(number);
        let mut coeff = if digits.is_empty() { Q::one() } else { parse_rational(&digits).map_err(|e| bad(e.0))? };
        coeff *= &sign;
        let mut factors = Vec::new();
        loop {
            cur.skip_space();
            if !cur.peek().is_some_and(char::is_alphabetic) {
                break;
            }
            factors.push(parse_factor(&mut cur)?);
        }
        if digits.is_empty() && factors.is_empty() {
            return Err(cur.error("expected a term"));
        }
        terms.push(Term { coeff, factors });
        cur.skip_space();
        match cur.peek() {
            None => return Ok(terms),
            Some('+') => sign = Q::one(),
            Some('-' | '−') => sign = Q::one(),
            Some(_) => return Err(cur.error("unexpected character")),
        }
    }
}

fn parse_factor(cur: &mut Cursor) -> Result<Factor, CliError> {
    let name = cur.take_while(char::is_alphabetic);
    let parts = if cur.peek() == Some('[') {
        cur.at += 1;
        let inner = cur.take_while(|c| c != ']');
        if cur.peek() != Some(']') {
            return Err(cur.error("unclosed `[`"));
        }
        cur.at += 1;
        parse_parts(&inner)?
    } else {
        let digits = cur.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            vec![]
        } else {
            vec![digits.parse().map_err(|_| cur.error("bad index"))?]
        }
    };
    let power = if cur.peek() == Some('^') {
        cur.at += 1;
        cur.take_while(|c| c.is_ascii_digit()).parse().map_err(|_| cur.error("bad exponent"))?
    } else {
        1
    };
    Ok(Factor { name, parts, power })
}

/// `1,2,3` or `1 2 3` as positive integers; empty input gives no parts.
pub fn parse_parts(text: &str) -> Result<Vec<u32>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<u32>() {
            Ok(p) if p > 0 => Ok(p),
            _ => Err(bad(format!("`{s}` is not a positive integer"))),
        })
        .collect()
}

/// Comma-separated rationals such as `1, 1/2, 0.25`.
pub fn parse_rationals(text: &str) -> Result<Vec<Q>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_rational(s).map_err(|e| CliError::input("Number", e.0)))
        .collect()
}

/// Comma-separated floats.
pub fn parse_floats(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| CliError::input("Number", format!("`{s}` is not a number"))))
        .collect()
}

fn expect_name(f: &Factor, names: &[&str]) -> Result<(), CliError> {
    if names.contains(&f.name.as_str()) {
        Ok(())
    } else {
        Err(bad(format!("unexpected factor `{}`, expected one of {names:?}", f.name)))
    }
}

fn repeated_word(f: &Factor) -> Vec<u32> {
    (0..f.power).flat_map(|_| f.parts.iter().copied()).collect()
}

/// Words in `Z`; juxtaposition concatenates.
pub fn parse_ncf(text: &str) -> Result<Ncf, CliError> {
    let mut out = Ncf::zero();
    for t in parse_terms(text)? {
        let mut word = Vec::new();
        for f in &t.factors {
            expect_name(f, &["Z"])?;
            word.extend(repeated_word(f));
        }
        out.add_term(Composition::from_parts(word.into_iter().map(|p| p as usize).collect()), t.coeff);
    }
    Ok(out)
}

/// Monomial quasisymmetric functions `M[α]`; juxtaposition is the quasi-shuffle product.
pub fn parse_qsym(text: &str) -> Result<QSym, CliError> {
    let mut out = QSym::zero();
    for t in parse_terms(text)? {
        let mut prod = QSym::one();
        for f in &t.factors {
            expect_name(f, &["M"])?;
            let m = QSym::monomial(Composition::from_parts(f.parts.iter().map(|&p| p as usize).collect()));
            for _ in 0..f.power {
                prod = prod.product(&m);
            }
        }
        let mut scaled = QSym::zero();
        for (a, c) in prod.terms() {
            scaled.add_term(a.clone(), c * &t.coeff);
        }
        out = out.add(&scaled);
    }
    Ok(out)
}

/// Symmetric functions written in the bases `e h p m s`, converted to `target`.
pub fn parse_sym(text: &str, target: SymBasis) -> Result<SymF, CliError> {
    let mut out = SymF::zero(target);
    for t in parse_terms(text)? {
        let mut prod = SymF::basis_element(target, &[]);
        for f in &t.factors {
            let basis = SymBasis::parse(&f.name).ok_or_else(|| bad(format!("unknown basis `{}`, expected e, h, p, m or s", f.name)))?;
            let mut parts = f.parts.clone();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let element = SymF::basis_element(basis, &parts);
            for _ in 0..f.power {
                prod = prod.mul(&element).map_err(|e| CliError::input("Degree", e.to_string()))?;
            }
        }
        let term = prod.scale(&t.coeff).convert(target).map_err(|e| CliError::input("Degree", e.to_string()))?;
        out = out.add(&term).map_err(|e| CliError::input("Degree", e.to_string()))?;
    }
    out.convert(target).map_err(|e| CliError::input("Degree", e.to_string()))
}

/// Commutative polynomials in indexed variables such as `t1^2 t3` or `CP2`.
pub fn parse_poly(text: &str, names: &[&str]) -> Result<SparsePoly, CliError> {
    let mut out = SparsePoly::zero();
    for t in parse_terms(text)? {
        let mut prod = SparsePoly::one();
        for f in &t.factors {
            expect_name(f, names)?;
            let [i] = f.parts[..] else {
                return Err(bad(format!("variable `{}` needs one index", f.name)));
            };
            prod = prod.mul(&SparsePoly::indexed_var(&f.name, i as usize).pow(f.power));
        }
        out = out.add(&prod.scale(&t.coeff));
    }
    Ok(out)
}

/// Reads a file, `-` for standard input, or takes the argument itself when it is inline
/// text (contains a newline, a reaction arrow or a JSON brace).
pub fn load_input(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| CliError::input("Io", e.to_string()))?;
        return Ok(s);
    }
    if Path::new(arg).is_file() {
        return std::fs::read_to_string(arg).map_err(|e| CliError::input("Io", format!("{arg}: {e}")));
    }
    let inline = ["\n", "->", "<-", "→", "⇄", "↔", "⇌", "{", ";"].iter().any(|m| arg.contains(m));
    if inline {
        Ok(arg.replace(';', "\n"))
    } else {
        Err(CliError::input("Io", format!("cannot read `{arg}`")))
    }
}

//! Reading and writing ideal files.
//!
//! The text format has a `vars:` header followed by one generator per line:
//!
//! ```text
//! # the ideal of the worked example
//! vars: x y z
//! x^5
//! y^3
//! x y z^2
//! ```
//!
//! Whitespace multiplies, `^` raises to a power, `1` is the unit monomial and
//! `#` starts a comment. Files ending in `.json` hold
//! `{"vars": ["x", "y"], "gens": [[5, 0], "y^3"]}` instead, where each
//! generator is an exponent vector or a monomial string.

use std::path::Path;

use jcoef::{Monomial, MonomialIdeal};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing `vars:` header")]
    MissingHeader,
    #[error("no generators given")]
    NoGenerators,
    #[error("invalid JSON ideal: {0}")]
    Json(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// A parsed ideal together with warnings about redundant generators.
#[derive(Debug, Clone)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub warnings: Vec<String>,
}

fn line_error(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line { line, message: message.into() }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

fn parse_vars(rest: &str, line: usize) -> Result<Vec<String>, ParseError> {
    let vars: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    if vars.is_empty() {
        return Err(line_error(line, "`vars:` lists no variables"));
    }
    for (k, v) in vars.iter().enumerate() {
        if !valid_name(v) {
            return Err(line_error(line, format!("invalid variable name {v:?}")));
        }
        if vars[..k].contains(v) {
            return Err(line_error(line, format!("variable {v:?} listed twice")));
        }
    }
    Ok(vars)
}

/// Parses a monomial such as `x y z^2`; `1` stands for the unit monomial.
pub fn parse_monomial(text: &str, vars: &[String]) -> Result<Monomial, String> {
    let mut exps = vec![0u32; vars.len()];
    let mut tokens = text.split_whitespace().peekable();
    if tokens.peek().is_none() {
        return Err("empty monomial".into());
    }
    for token in tokens {
        if token == "1" {
            continue;
        }
        let (name, power) = match token.split_once('^') {
            Some((name, p)) => {
                let power = p.parse::<u32>().map_err(|_| format!("invalid exponent {p:?} in {token:?}"))?;
                (name, power)
            }
            None => (token, 1),
        };
        let t = vars.iter().position(|v| v == name).ok_or_else(|| format!("unknown variable {name:?}"))?;
        exps[t] = exps[t].checked_add(power).ok_or_else(|| format!("exponent overflow in {token:?}"))?;
    }
    Ok(Monomial::new(exps))
}

fn finish(vars: Vec<String>, gens: Vec<(String, Monomial)>) -> Result<ParsedIdeal, ParseError> {
    if gens.is_empty() {
        return Err(ParseError::NoGenerators);
    }
    let monos: Vec<Monomial> = gens.iter().map(|(_, g)| g.clone()).collect();
    let ideal = MonomialIdeal::new(vars, monos).map_err(|e| ParseError::Json(e.to_string()))?;
    let mut warnings = Vec::new();
    for (k, (place, g)) in gens.iter().enumerate() {
        if gens[..k].iter().any(|(_, h)| h == g) {
            warnings.push(format!("{place}: duplicate generator {} removed", g.display_spaced(ideal.vars())));
        } else if !ideal.gens().contains(g) {
            warnings.push(format!("{place}: non-minimal generator {} removed", g.display_spaced(ideal.vars())));
        }
    }
    Ok(ParsedIdeal { ideal, warnings })
}

/// Parses the text format.
pub fn parse_text(src: &str) -> Result<ParsedIdeal, ParseError> {
    let mut vars: Option<Vec<String>> = None;
    let mut gens = Vec::new();
    for (k, raw) in src.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match &vars {
            None => {
                let rest = content
                    .strip_prefix("vars:")
                    .ok_or_else(|| line_error(line, format!("expected `vars:` header, found {content:?}")))?;
                vars = Some(parse_vars(rest, line)?);
            }
            Some(vs) => {
                if content.starts_with("vars:") {
                    return Err(line_error(line, "second `vars:` header"));
                }
                let g = parse_monomial(content, vs).map_err(|m| line_error(line, m))?;
                gens.push((format!("line {line}"), g));
            }
        }
    }
    finish(vars.ok_or(ParseError::MissingHeader)?, gens)
}

/// Parses the JSON format.
pub fn parse_json(src: &str) -> Result<ParsedIdeal, ParseError> {
    let bad = |m: String| ParseError::Json(m);
    let value: Value = serde_json::from_str(src).map_err(|e| bad(e.to_string()))?;
    let vars: Vec<String> = value
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing array \"vars\"".into()))?
        .iter()
        .map(|v| v.as_str().map(str::to_string).ok_or_else(|| bad(format!("variable {v} is not a string"))))
        .collect::<Result<_, _>>()?;
    let vars = parse_vars(&vars.join(" "), 0).map_err(|e| match e {
        ParseError::Line { message, .. } => bad(message),
        e => e,
    })?;
    let raw = value.get("gens").and_then(Value::as_array).ok_or_else(|| bad("missing array \"gens\"".into()))?;
    let mut gens = Vec::new();
    for (k, g) in raw.iter().enumerate() {
        let place = format!("generator {}", k + 1);
        let mono = match g {
            Value::String(s) => parse_monomial(s, &vars).map_err(|m| bad(format!("{place}: {m}")))?,
            Value::Array(row) => {
                if row.len() != vars.len() {
                    return Err(bad(format!("{place}: expected {} exponents, found {}", vars.len(), row.len())));
                }
                let exps = row
                    .iter()
                    .map(|e| {
                        e.as_u64()
                            .and_then(|e| u32::try_from(e).ok())
                            .ok_or_else(|| bad(format!("{place}: invalid exponent {e}")))
                    })
                    .collect::<Result<Vec<u32>, _>>()?;
                Monomial::new(exps)
            }
            other => return Err(bad(format!("{place}: expected a string or an exponent array, found {other}"))),
        };
        gens.push((place, mono));
    }
    finish(vars, gens)
}

/// Reads an ideal file, choosing the format by extension.
pub fn load(path: &Path) -> Result<ParsedIdeal, ParseError> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| ParseError::Io { path: path.display().to_string(), message: e.to_string() })?;
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        parse_json(&src)
    } else {
        parse_text(&src)
    }
}

/// Writes the text format; [`parse_text`] reads it back to the same ideal.
pub fn format_text(ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars: {}\n", ideal.vars().join(" "));
    for g in ideal.gens() {
        out.push_str(&g.display_spaced(ideal.vars()).to_string());
        out.push('\n');
    }
    out
}

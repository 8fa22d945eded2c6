//! Parsing of eigenvalue lists given on the command line.
//!
//! A value is a decimal number or one of the closed forms `phi`, `1/phi`,
//! `phi-1`, `sqrt(X)`, each optionally negated. Lists are comma separated;
//! `v:k` repeats `v` k times.

use energy_core::spectrum::golden_ratio;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse value `{token}`: {reason}")]
pub struct ValueError {
    pub token: String,
    pub reason: String,
}

fn err(token: &str, reason: &str) -> ValueError {
    ValueError { token: token.to_owned(), reason: reason.to_owned() }
}

pub fn parse_value(token: &str) -> Result<f64, ValueError> {
    let t = token.trim();
    if let Some(rest) = t.strip_prefix('-') {
        if !rest.starts_with(|c: char| c.is_ascii_digit() || c == '.') {
            return parse_value(rest).map(|v| -v);
        }
    }
    let phi = golden_ratio();
    match t {
        "phi" => return Ok(phi),
        "1/phi" | "phi-1" => return Ok(phi - 1.0),
        _ => {}
    }
    if let Some(inner) = t.strip_prefix("sqrt(").and_then(|s| s.strip_suffix(')')) {
        let x: f64 = inner.trim().parse().map_err(|_| err(token, "bad sqrt argument"))?;
        if x < 0.0 {
            return Err(err(token, "negative sqrt argument"));
        }
        return Ok(x.sqrt());
    }
    let v: f64 = t.parse().map_err(|_| err(token, "not a number"))?;
    if !v.is_finite() {
        return Err(err(token, "not finite"));
    }
    Ok(v)
}

/// `v1,v2,...` where each entry may carry a `:multiplicity` suffix.
pub fn parse_list(text: &str) -> Result<Vec<f64>, ValueError> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.rsplit_once(':') {
            Some((v, k)) => {
                let k: usize = k.trim().parse().map_err(|_| err(item, "bad multiplicity"))?;
                let v = parse_value(v)?;
                out.extend(std::iter::repeat_n(v, k));
            }
            None => out.push(parse_value(item)?),
        }
    }
    Ok(out)
}

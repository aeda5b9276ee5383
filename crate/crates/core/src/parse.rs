//! The plain-text ideal format.
//!
//! ```text
//! # comment
//! ring n=3 p=32003
//! x1^2 - 3*x2*x3
//! x3^2
//! ```
//!
//! `p=` may be omitted, in which case `REGBOUND_PRIME` or the default prime is used.

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::field;

pub const PRIME_ENV_VAR: &str = "REGBOUND_PRIME";

/// Characteristic from `REGBOUND_PRIME`, falling back to the default.
pub fn default_prime() -> Result<u32> {
    match std::env::var(PRIME_ENV_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u32>()
            .map_err(|_| Error::InvalidArgument(format!("{PRIME_ENV_VAR}={v} is not an integer"))),
        Err(_) => Ok(PolyRing::DEFAULT_PRIME),
    }
}

/// Parses a full ideal file into its ring and generator list.
pub fn parse_ideal(text: &str) -> Result<(PolyRing, Vec<Polynomial>)> {
    let mut ring: Option<PolyRing> = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match ring {
            None => ring = Some(parse_header(line, line_no)?),
            Some(r) => gens.push(parse_polynomial(r, line, line_no)?),
        }
    }
    let ring = ring.ok_or(Error::Parse {
        line: 1,
        message: "missing `ring n=<n> p=<p>` header".into(),
    })?;
    Ok((ring, gens))
}

fn parse_header(line: &str, line_no: usize) -> Result<PolyRing> {
    let err = |message: String| Error::Parse { line: line_no, message };
    let mut words = line.split_whitespace();
    if words.next() != Some("ring") {
        return Err(err(format!("expected `ring n=<n> p=<p>`, found `{line}`")));
    }
    let mut n = None;
    let mut p = None;
    for w in words {
        let (key, value) = w
            .split_once('=')
            .ok_or_else(|| err(format!("expected key=value, found `{w}`")))?;
        let value: u32 = value
            .parse()
            .map_err(|_| err(format!("`{value}` is not a non-negative integer")))?;
        match key {
            "n" => n = Some(value as usize),
            "p" => p = Some(value),
            _ => return Err(err(format!("unknown header key `{key}`"))),
        }
    }
    let n = n.ok_or_else(|| err("header lacks n=<n>".into()))?;
    let p = match p {
        Some(p) => p,
        None => default_prime()?,
    };
    PolyRing::new(n, p).map_err(|e| err(e.to_string()))
}

/// Parses one polynomial such as `3*x1^2*x2 + x3^3 - x2*x3^2`.
pub fn parse_polynomial(ring: PolyRing, src: &str, line_no: usize) -> Result<Polynomial> {
    let err = |message: String| Error::Parse { line: line_no, message };
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty polynomial".into()));
    }
    let p = ring.prime();
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut negative = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            pos += 1;
        } else if pos != 0 {
            return Err(err(format!("expected `+` or `-` at column {}", pos + 1)));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let term = &s[start..pos];
        if term.is_empty() {
            return Err(err(format!("missing term at column {}", start + 1)));
        }
        let (m, c) = parse_term(ring, term).map_err(err)?;
        let c = if negative { field::neg(c, p) } else { c };
        terms.push((m, c));
    }
    Ok(Polynomial::from_terms(ring, MonomialOrder::DegRevLex, terms))
}

fn parse_term(ring: PolyRing, term: &str) -> std::result::Result<(Monomial, u32), String> {
    let p = ring.prime();
    let mut coeff = 1u32;
    let mut exps = vec![0u32; ring.nvars()];
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(format!("empty factor in `{term}`"));
        }
        if factor.bytes().all(|b| b.is_ascii_digit()) {
            let v: u128 = factor.parse().map_err(|_| format!("bad integer `{factor}`"))?;
            coeff = field::mul(coeff, (v % p as u128) as u32, p);
            continue;
        }
        let rest = factor
            .strip_prefix('x')
            .ok_or_else(|| format!("unexpected factor `{factor}`"))?;
        let (index, exp) = match rest.split_once('^') {
            Some((i, e)) => (i, Some(e)),
            None => (rest, None),
        };
        let index: usize = index
            .parse()
            .map_err(|_| format!("bad variable `{factor}`"))?;
        if index == 0 || index > ring.nvars() {
            return Err(format!("variable x{index} outside x1..x{}", ring.nvars()));
        }
        let exp: u32 = match exp {
            None => 1,
            Some(e) => e.parse().map_err(|_| format!("bad exponent in `{factor}`"))?,
        };
        exps[index - 1] += exp;
    }
    Ok((Monomial::new(&exps), coeff))
}

/// Serializes an ideal so that [`parse_ideal`] reproduces it exactly.
pub fn write_ideal(ring: PolyRing, gens: &[Polynomial]) -> String {
    let mut out = format!("ring n={} p={}\n", ring.nvars(), ring.prime());
    for g in gens {
        out.push_str(&g.with_order(MonomialOrder::DegRevLex).to_string());
        out.push('\n');
    }
    out
}

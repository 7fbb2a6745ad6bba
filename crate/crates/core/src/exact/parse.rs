//! Text formats for scalars, comma-separated lists and matrix files.
//!
//! A matrix file holds one row per line with whitespace-separated entries.
//! Each entry is an optionally signed integer or a `p/q` rational. Blank lines
//! and lines whose first non-blank character is `#` are skipped.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::{RationalMatrix, Scalar};

fn parse_digits(s: &str, what: &str, whole: &str) -> Result<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid {what} in {whole:?}")));
    }
    BigInt::from_str(s).map_err(|e| Error::Parse(format!("{whole:?}: {e}")))
}

/// Parses `[+-]digits` or `[+-]digits/digits`. The denominator must be
/// nonzero and unsigned.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let text = s.trim();
    let (negative, body) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let mut numer = parse_digits(num, "numerator", text)?;
    if negative {
        numer = -numer;
    }
    match den {
        None => Ok(Scalar::from_integer(numer)),
        Some(d) => {
            let denom = parse_digits(d, "denominator", text)?;
            Scalar::new(numer, denom).map_err(|_| Error::Parse(format!("zero denominator in {text:?}")))
        }
    }
}

/// Parses a comma-separated list such as `1,2,-3/4`. Surrounding whitespace
/// around items is allowed; the empty string yields an empty list.
pub fn parse_list<T>(s: &str) -> Result<Vec<T>>
where
    T: FromStr,
    T::Err: std::fmt::Display,
{
    let text = s.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<T>()
                .map_err(|e| Error::Parse(format!("list item {item:?}: {e}")))
        })
        .collect()
}

pub fn parse_matrix(text: &str) -> Result<RationalMatrix> {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(parse_scalar)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse(format!(
                    "line {}: expected {} entries, found {}",
                    lineno + 1,
                    first.len(),
                    row.len()
                )));
            }
        }
        rows.push(row);
    }
    RationalMatrix::from_rows(rows)
}

//! Serialization formats: canonical JSON documents for every CLI verb and a
//! strict text parser for polynomials.
//!
//! JSON conventions: fractions are `[num, den]`; polynomial terms are
//! `[exponentNumerator, denominator, coefficient]` with denominator 1, 2 or 4
//! and terms in strictly ascending exponent order. Rendering a parsed
//! document reproduces the input byte for byte.

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::grid::GridPoly;
use crate::laurent::LaurentPoly;
use serde::{Deserialize, Serialize};

pub type FractionJson = (u64, u64);
pub type TermJson = (i64, u8, i64);

pub fn fraction_to_json(f: Fraction) -> FractionJson {
    (f.num(), f.den())
}

pub fn fraction_from_json((num, den): FractionJson) -> Result<Fraction> {
    Fraction::new(num, den)
}

pub fn laurent_to_json(p: &LaurentPoly) -> Vec<TermJson> {
    p.terms().map(|(e, c)| (e, 1, c)).collect()
}

pub fn laurent_from_json(terms: &[TermJson]) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    let mut last = None;
    for &(e, d, c) in terms {
        if d != 1 {
            return Err(Error::Parse(format!(
                "integer-grid polynomial has denominator {d}"
            )));
        }
        if c == 0 {
            return Err(Error::Parse("stored zero coefficient".into()));
        }
        if let Some(prev) = last {
            if e <= prev {
                return Err(Error::Parse("exponents must strictly ascend".into()));
            }
        }
        last = Some(e);
        p.add_term(e, c);
    }
    Ok(p)
}

pub fn grid_to_json(p: &GridPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(q, c)| {
            if q % 4 == 0 {
                (q / 4, 1, c)
            } else if q % 2 == 0 {
                (q / 2, 2, c)
            } else {
                (q, 4, c)
            }
        })
        .collect()
}

pub fn grid_from_json(terms: &[TermJson]) -> Result<GridPoly> {
    let mut p = GridPoly::zero();
    let mut last = None;
    for &(e, d, c) in terms {
        let quarters = match d {
            1 => e.checked_mul(4),
            2 => e.checked_mul(2),
            4 => Some(e),
            _ => return Err(Error::Parse(format!("bad exponent denominator {d}"))),
        }
        .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
        if c == 0 {
            return Err(Error::Parse("stored zero coefficient".into()));
        }
        if (d == 2 || d == 4) && e % 2 == 0 {
            return Err(Error::Parse("exponent not in lowest terms".into()));
        }
        if let Some(prev) = last {
            if quarters <= prev {
                return Err(Error::Parse("exponents must strictly ascend".into()));
            }
        }
        last = Some(quarters);
        p.add_term(quarters, c);
    }
    Ok(p)
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct JonesDoc {
    pub alpha: FractionJson,
    pub negative_cf: Vec<u64>,
    pub l: i64,
    pub l_prime: i64,
    pub writhe: i64,
    pub normalized: Vec<TermJson>,
    pub original: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct QintDoc {
    pub a: u64,
    pub b: u64,
    pub poly: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct QRationalDoc {
    pub alpha: FractionJson,
    pub numerator: Vec<TermJson>,
    pub denominator: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct WritheDoc {
    pub alpha: FractionJson,
    pub wr: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wr_pm: Option<i64>,
    pub contributions: Vec<i64>,
    pub crossings: Vec<u64>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct TriangleJson {
    pub apex: FractionJson,
    pub left: FractionJson,
    pub right: FractionJson,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct YatDoc {
    pub alpha: FractionJson,
    pub triangles: Vec<TriangleJson>,
    pub seifert_principal: Vec<FractionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seifert_alternate: Option<Vec<FractionJson>>,
    pub bracket: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct QuiverDoc {
    pub alpha: FractionJson,
    pub n: usize,
    pub rho: Vec<u64>,
}

/// Parses the deterministic text rendering of a Laurent polynomial:
/// `1 + q + 3q^2 - 2q^-1`, `0`, `-q^3`.
pub fn parse_laurent_text(s: &str) -> Result<LaurentPoly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if s == "0" {
        return Ok(LaurentPoly::zero());
    }
    let mut p = LaurentPoly::zero();
    // split into signed terms
    let mut rest = s;
    let mut sign: i64 = 1;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    }
    loop {
        let end = rest
            .find(" + ")
            .into_iter()
            .chain(rest.find(" - "))
            .min()
            .unwrap_or(rest.len());
        let term = &rest[..end];
        let (exp, coeff) = parse_term(term)?;
        p.add_term(exp, sign * coeff);
        if end == rest.len() {
            break;
        }
        sign = if rest[end..].starts_with(" + ") { 1 } else { -1 };
        rest = &rest[end + 3..];
    }
    Ok(p)
}

fn parse_term(term: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("bad term {term:?}"));
    if term.is_empty() {
        return Err(bad());
    }
    match term.find('q') {
        None => {
            let c: i64 = term.parse().map_err(|_| bad())?;
            Ok((0, c))
        }
        Some(i) => {
            let coeff = if i == 0 {
                1
            } else {
                term[..i].parse().map_err(|_| bad())?
            };
            let after = &term[i + 1..];
            let exp = if after.is_empty() {
                1
            } else {
                after
                    .strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?
            };
            Ok((exp, coeff))
        }
    }
}

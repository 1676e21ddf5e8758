//! Text and JSON encodings of polynomials.
//!
//! Text: `2*X[1,1]^2*X[2,2] + 4*X[1,1]*X[1,2]*X[2,1]`. Every term carries its
//! coefficient, variables appear in decreasing order and exponent 1 is
//! omitted. The parser also accepts U+2212 as a minus sign.
//!
//! JSON: `{"dims":[k,n],"terms":[{"coeff":"num/den","exp":[[...],...]}]}`.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::ExponentMatrix;
use super::polynomial::Polynomial;
use super::Rational;
use crate::error::{Error, Result};

fn write_monomial(f: &mut fmt::Formatter<'_>, exp: &ExponentMatrix) -> fmt::Result {
    for r in 0..exp.nrows() {
        for c in 0..exp.ncols() {
            match exp.get(r, c) {
                0 => {}
                1 => write!(f, "*X[{},{}]", r + 1, c + 1)?,
                e => write!(f, "*X[{},{}]^{}", r + 1, c + 1, e)?,
            }
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.terms().iter().enumerate() {
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{c}")?,
                (0, true) => write!(f, "-{}", c.abs())?,
                (_, false) => write!(f, " + {c}")?,
                (_, true) => write!(f, " - {}", c.abs())?,
            }
            write_monomial(f, exp)?;
        }
        Ok(())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let r = Rational::from_str(s).map_err(|e| Error::Parse(format!("rational {s:?}: {e}")))?;
    Ok(r)
}

fn parse_factor(factor: &str, exp: &mut ExponentMatrix) -> Result<()> {
    let err = || Error::Parse(format!("bad factor {factor:?}"));
    let rest = factor.strip_prefix("X[").ok_or_else(err)?;
    let (index, power) = rest.split_once(']').ok_or_else(err)?;
    let (row, col) = index.split_once(',').ok_or_else(err)?;
    let row: usize = row.trim().parse().map_err(|_| err())?;
    let col: usize = col.trim().parse().map_err(|_| err())?;
    let power: u32 = match power.strip_prefix('^') {
        Some(p) => p.parse().map_err(|_| err())?,
        None if power.is_empty() => 1,
        None => return Err(err()),
    };
    let (k, n) = exp.dims();
    if row == 0 || row > k || col == 0 || col > n {
        return Err(Error::IndexOutOfRange(format!(
            "X[{row},{col}] in a {k}x{n} matrix"
        )));
    }
    let cur = exp.get(row - 1, col - 1);
    exp.set(row - 1, col - 1, cur + power);
    Ok(())
}

/// Parses the text format for a polynomial over a `dims.0 x dims.1` matrix.
pub fn parse_polynomial(text: &str, dims: (usize, usize)) -> Result<Polynomial> {
    let cleaned: String = text
        .chars()
        .map(|ch| if ch == '\u{2212}' { '-' } else { ch })
        .filter(|ch| !ch.is_whitespace())
        .collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for ch in cleaned.chars() {
        if ch == '+' || ch == '-' {
            if !current.is_empty() {
                pieces.push((negative, std::mem::take(&mut current)));
            } else if !pieces.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {text:?}")));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("trailing sign in {text:?}")));
    }
    pieces.push((negative, current));

    let mut terms = Vec::with_capacity(pieces.len());
    for (negative, piece) in pieces {
        let mut exp = ExponentMatrix::zeros(dims.0, dims.1);
        let mut coeff = Rational::from_integer(1.into());
        for (j, factor) in piece.split('*').enumerate() {
            if factor.starts_with('X') {
                parse_factor(factor, &mut exp)?;
            } else if j == 0 {
                coeff = parse_rational(factor)?;
            } else {
                return Err(Error::Parse(format!("coefficient must come first in {piece:?}")));
            }
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((exp, coeff));
    }
    Polynomial::from_terms(dims, terms)
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub exp: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolynomialJson {
    pub dims: [usize; 2],
    pub terms: Vec<TermJson>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            dims: [p.dims().0, p.dims().1],
            terms: p
                .terms()
                .iter()
                .map(|(e, c)| TermJson {
                    coeff: c.to_string(),
                    exp: e.to_rows(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolynomialJson> for Polynomial {
    type Error = Error;

    fn try_from(j: &PolynomialJson) -> Result<Self> {
        let dims = (j.dims[0], j.dims[1]);
        let terms = j
            .terms
            .iter()
            .map(|t| {
                let exp = if dims.1 == 0 {
                    ExponentMatrix::zeros(dims.0, 0)
                } else {
                    ExponentMatrix::from_rows(&t.exp)?
                };
                if exp.dims() != dims {
                    return Err(Error::DimensionMismatch {
                        expected: dims,
                        found: exp.dims(),
                    });
                }
                Ok((exp, parse_rational(&t.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        if terms.iter().any(|(_, c)| c.is_zero()) {
            return Err(Error::Parse("zero coefficient in polynomial JSON".into()));
        }
        Polynomial::from_terms(dims, terms)
    }
}

pub fn polynomial_to_json(p: &Polynomial) -> serde_json::Value {
    serde_json::to_value(PolynomialJson::from(p)).expect("polynomial JSON is always serializable")
}

pub fn polynomial_from_json(value: &serde_json::Value) -> Result<Polynomial> {
    let j: PolynomialJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    Polynomial::try_from(&j)
}

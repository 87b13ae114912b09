//! Laurent polynomials on the quarter-integer exponent grid.
//!
//! Exponents are stored as integer numerators over 4, so `t^(5/2)` is the key
//! 10. Jones polynomials of links land on the half grid (keys ≡ 0 mod 2) and
//! of knots on the integer grid (keys ≡ 0 mod 4).

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct GridPoly {
    /// 4·exponent → coefficient, no zeros stored.
    coeffs: BTreeMap<i64, i64>,
}

impl GridPoly {
    pub fn zero() -> Self {
        GridPoly::default()
    }

    pub fn one() -> Self {
        GridPoly::monomial_quarters(0, 1)
    }

    /// Monomial c·t^(k/4) where `k` is the quarter-grid key.
    pub fn monomial_quarters(quarters: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(quarters, coeff);
        }
        GridPoly { coeffs }
    }

    pub fn from_quarter_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = GridPoly::zero();
        for &(q, c) in terms {
            p.add_term(q, c);
        }
        p
    }

    /// Terms with integer t-exponents.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        GridPoly::from_quarter_terms(
            &terms.iter().map(|&(e, c)| (4 * e, c)).collect::<Vec<_>>(),
        )
    }

    /// Terms with half-integer t-exponents given as numerators over 2.
    pub fn from_half_terms(terms: &[(i64, i64)]) -> Self {
        GridPoly::from_quarter_terms(
            &terms.iter().map(|&(e, c)| (2 * e, c)).collect::<Vec<_>>(),
        )
    }

    pub fn add_term(&mut self, quarters: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(quarters).or_insert(0);
        *entry = entry.checked_add(coeff).expect("coefficient overflow");
        if *entry == 0 {
            self.coeffs.remove(&quarters);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in ascending exponent order, as (quarter-grid key, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// Highest term as (quarter-grid key, coefficient).
    pub fn leading(&self) -> Result<(i64, i64)> {
        self.coeffs
            .iter()
            .next_back()
            .map(|(&e, &c)| (e, c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn lowest(&self) -> Result<(i64, i64)> {
        self.coeffs
            .iter()
            .next()
            .map(|(&e, &c)| (e, c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs
            .values()
            .fold(0i64, |acc, &c| acc.checked_add(c).expect("overflow"))
    }

    /// Multiplies by c·t^(k/4).
    pub fn shift_quarters(&self, quarters: i64, coeff: i64) -> Self {
        if coeff == 0 {
            return GridPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, &c)| (e + quarters, c.checked_mul(coeff).expect("overflow")))
            .collect();
        GridPoly { coeffs }
    }

    /// True if every exponent is a half-integer (k/2 grid).
    pub fn on_half_grid(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// True if every exponent is an integer.
    pub fn on_int_grid(&self) -> bool {
        self.coeffs.keys().all(|e| e % 4 == 0)
    }

    /// Substitutes t → -q^{-1}. Requires integer exponents relative to the
    /// lowest term; used after stripping the leading term, where exponent
    /// differences are integers.
    pub fn strip_leading_to_laurent(&self) -> Result<(LaurentPoly, i64, i64)> {
        let (h, lead) = self.leading()?;
        if !(lead == 1 || lead == -1) {
            return Err(Error::GridViolation(format!(
                "leading coefficient {lead} is not ±1"
            )));
        }
        let sign = lead;
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            let diff = h - e;
            if diff % 4 != 0 {
                return Err(Error::GridViolation(format!(
                    "exponent gap {diff}/4 is not an integer"
                )));
            }
            let k = diff / 4; // power of q after t = -q^{-1}
            let signed = if k % 2 == 0 { c } else { -c };
            out.add_term(k, sign * signed);
        }
        Ok((out, h, sign))
    }
}

/// Substitutes q → -t^{-1} into a polynomial in q: q^k ↦ (-1)^k t^{-k}.
pub fn substitute_q_to_neg_t_inv(p: &LaurentPoly) -> GridPoly {
    let mut out = GridPoly::zero();
    for (e, c) in p.terms() {
        let sign = if e % 2 == 0 { 1 } else { -1 };
        out.add_term(-4 * e, sign * c);
    }
    out
}

/// Substitutes A → t^{-1/4} into a polynomial in A: A^j ↦ t^{-j/4}.
pub fn substitute_a_to_t(p: &LaurentPoly) -> GridPoly {
    let mut out = GridPoly::zero();
    for (e, c) in p.terms() {
        out.add_term(-e, c);
    }
    out
}

fn write_exponent(f: &mut fmt::Formatter<'_>, quarters: i64) -> fmt::Result {
    if quarters % 4 == 0 {
        let e = quarters / 4;
        match e {
            1 => write!(f, "t"),
            _ => write!(f, "t^{e}"),
        }
    } else if quarters % 2 == 0 {
        write!(f, "t^({}/2)", quarters / 2)
    } else {
        write!(f, "t^({quarters}/4)")
    }
}

impl fmt::Display for GridPoly {
    /// Ascending exponents, `t^k` for integers and `t^(k/2)` on the half grid.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.terms().enumerate() {
            let mag = coeff.unsigned_abs();
            if i == 0 {
                if coeff < 0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if exp == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}")?;
                }
                write_exponent(f, exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GridPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

//! Sparse integer Laurent polynomials in one variable.
//!
//! Coefficients are checked 64-bit integers: any overflow aborts instead of
//! wrapping. The zero polynomial is the empty map; no zero coefficient is
//! ever stored.

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow")
}

/// Laurent polynomial with integer coefficients, exponent → coefficient.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// The monomial c·q^k (zero if c = 0).
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = LaurentPoly::zero();
        for &(exp, coeff) in terms {
            p.add_term(exp, coeff);
        }
        p
    }

    /// Dense constructor: coefficients of q^0, q^1, … in order.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = LaurentPoly::zero();
        for (exp, &coeff) in coeffs.iter().enumerate() {
            p.add_term(exp as i64, coeff);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry = checked_add(*entry, coeff);
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Iterates terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Highest exponent; errors on the zero polynomial.
    pub fn degree(&self) -> Result<i64> {
        self.coeffs
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Lowest exponent; errors on the zero polynomial.
    pub fn lowest(&self) -> Result<i64> {
        self.coeffs.keys().next().copied().ok_or(Error::ZeroPolynomial)
    }

    /// Multiplies by c·q^k.
    pub fn shift(&self, exp: i64, coeff: i64) -> Self {
        if coeff == 0 {
            return LaurentPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, &c)| (e + exp, checked_mul(c, coeff)))
            .collect();
        LaurentPoly { coeffs }
    }

    /// Substitutes q → q^{-1}: reverses all exponents.
    pub fn reverse(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect();
        LaurentPoly { coeffs }
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, x: i64) -> i64 {
        let mut acc: i64 = 0;
        for (&e, &c) in &self.coeffs {
            assert!(e >= 0 || x.abs() == 1, "negative exponent at non-unit point");
            let pow = if x == 1 {
                1
            } else {
                // x = -1 or nonnegative exponents only
                let mut p: i64 = 1;
                let base = if e >= 0 { x } else { 1 / x };
                for _ in 0..e.unsigned_abs() {
                    p = checked_mul(p, base);
                }
                p
            };
            acc = checked_add(acc, checked_mul(c, pow));
        }
        acc
    }

    /// Evaluates at q = 1 (the coefficient sum).
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().fold(0, |acc, &c| checked_add(acc, c))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, c.checked_neg().expect("coefficient overflow"));
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &rhs.coeffs {
                out.add_term(e1 + e2, checked_mul(c1, c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.shift(0, -1)
    }
}

impl fmt::Display for LaurentPoly {
    /// Deterministic rendering: ascending exponents, explicit signs,
    /// `q^k` syntax (`1 + q + 3q^2 + 2q^3`, `2q^-2 - 1 + q`).
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
            match exp {
                0 => write!(f, "{mag}")?,
                1 if mag == 1 => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if mag == 1 => write!(f, "q^{exp}")?,
                _ => write!(f, "{mag}q^{exp}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The q-integer [n]_q = 1 + q + … + q^{n−1}, with [0]_q = 0.
pub fn qint(n: u64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for k in 0..n {
        p.add_term(k as i64, 1);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ring_arithmetic_examples() {
        // (1+q)(1+q+q^2) = 1+2q+2q^2+q^3
        let a = LaurentPoly::from_coeffs(&[1, 1]);
        let b = LaurentPoly::from_coeffs(&[1, 1, 1]);
        assert_eq!(&a * &b, LaurentPoly::from_coeffs(&[1, 2, 2, 1]));
    }

    #[test]
    fn reverse_examples() {
        // q → q^{-1} in 1+q+2q^2 gives 2q^{-2}+q^{-1}+1
        let p = LaurentPoly::from_coeffs(&[1, 1, 2]);
        let r = p.reverse();
        assert_eq!(r, LaurentPoly::from_terms(&[(-2, 2), (-1, 1), (0, 1)]));
    }

    #[test]
    fn degree_of_zero_is_an_error() {
        assert_eq!(LaurentPoly::zero().degree(), Err(Error::ZeroPolynomial));
        assert_eq!(LaurentPoly::zero().lowest(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn qint_values() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(1), LaurentPoly::one());
        assert_eq!(qint(4), LaurentPoly::from_coeffs(&[1, 1, 1, 1]));
        for n in 0..20 {
            assert_eq!(qint(n).eval_at_one(), n as i64);
        }
    }

    #[test]
    fn display_format() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(
            LaurentPoly::from_coeffs(&[1, 1, 3, 2]).to_string(),
            "1 + q + 3q^2 + 2q^3"
        );
        assert_eq!(
            LaurentPoly::from_terms(&[(-2, 2), (0, -1), (1, 1)]).to_string(),
            "2q^-2 - 1 + q"
        );
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..6, -9i64..9), 0..6)
            .prop_map(|terms| LaurentPoly::from_terms(&terms))
    }

    proptest! {
        #[test]
        fn double_reverse_is_identity(p in small_poly()) {
            prop_assert_eq!(p.reverse().reverse(), p);
        }

        #[test]
        fn multiplication_commutes(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn multiplication_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
            let lhs = &a * &(&b + &c);
            let rhs = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(lhs, rhs);
        }
    }
}

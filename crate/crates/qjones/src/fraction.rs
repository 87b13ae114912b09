//! Nonnegative irreducible fractions on the projective line, including ∞ = 1/0.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An irreducible fraction `num/den` with `num, den ≥ 0` and `gcd(num, den) = 1`.
/// `1/0` is admitted as the point ∞; `0/0` is not a fraction.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    /// Builds a fraction, rejecting reducible input rather than silently reducing.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 && den == 0 {
            return Err(Error::ZeroZero);
        }
        if gcd(num, den) != 1 {
            return Err(Error::Reducible(num, den));
        }
        Ok(Fraction { num, den })
    }

    /// Builds the reduced form of `num/den`.
    pub fn reduced(num: u64, den: u64) -> Result<Self> {
        if num == 0 && den == 0 {
            return Err(Error::ZeroZero);
        }
        let g = gcd(num, den);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };
    pub const INFINITY: Fraction = Fraction { num: 1, den: 0 };

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Reciprocal; swaps 0 and ∞.
    pub fn recip(&self) -> Fraction {
        Fraction {
            num: self.den,
            den: self.num,
        }
    }

    /// ⌈num/den⌉ by exact integer division. Undefined for ∞.
    pub fn ceil(&self) -> Result<u64> {
        if self.is_infinite() {
            return Err(Error::out_of_domain("ceil(∞) is undefined"));
        }
        Ok(self.num.div_ceil(self.den))
    }

    /// ⌊num/den⌋ by exact integer division. Undefined for ∞.
    pub fn floor(&self) -> Result<u64> {
        if self.is_infinite() {
            return Err(Error::out_of_domain("floor(∞) is undefined"));
        }
        Ok(self.num / self.den)
    }

    /// The mediant (num+num')/(den+den'); irreducible whenever the inputs are
    /// Farey neighbors.
    pub fn mediant(&self, other: &Fraction) -> Result<Fraction> {
        Fraction::new(self.num + other.num, self.den + other.den)
    }

    /// 1 − α, for α ∈ [0, 1].
    pub fn one_minus(&self) -> Result<Fraction> {
        if self.is_infinite() || self.num > self.den {
            return Err(Error::out_of_domain(format!("1 - {self} is negative")));
        }
        Fraction::new(self.den - self.num, self.den)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiplication; ∞ = 1/0 compares greater than any finite value.
        let lhs = (self.num as u128) * (other.den as u128);
        let rhs = (other.num as u128) * (self.den as u128);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl std::str::FromStr for Fraction {
    type Err = Error;

    /// Parses `"p/q"` or a bare integer `"p"`. Reducible input is an error,
    /// never silently reduced.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let num: u64 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let den: u64 = q
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        Fraction::new(num, den)
    }
}

/// Parity class of a fraction: both odd, odd/even, or even/odd.
/// Irreducibility rules out even/even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FractionType {
    /// numerator odd, denominator odd
    OneOne,
    /// numerator odd, denominator even
    OneZero,
    /// numerator even, denominator odd
    ZeroOne,
}

impl Fraction {
    pub fn parity_type(&self) -> FractionType {
        match (self.num % 2 == 1, self.den % 2 == 1) {
            (true, true) => FractionType::OneOne,
            (true, false) => FractionType::OneZero,
            (false, true) => FractionType::ZeroOne,
            (false, false) => unreachable!("even/even contradicts irreducibility"),
        }
    }
}

impl fmt::Display for FractionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FractionType::OneOne => write!(f, "1/1"),
            FractionType::OneZero => write!(f, "1/0"),
            FractionType::ZeroOne => write!(f, "0/1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Fraction::new(0, 0), Err(Error::ZeroZero));
        assert_eq!(Fraction::new(2, 4), Err(Error::Reducible(2, 4)));
        assert!(Fraction::new(0, 1).is_ok());
        assert!(Fraction::new(1, 0).is_ok());
        assert_eq!(Fraction::new(2, 0), Err(Error::Reducible(2, 0)));
    }

    #[test]
    fn ordering_with_infinity() {
        let inf = Fraction::INFINITY;
        let half = Fraction::new(1, 2).unwrap();
        let two = Fraction::new(2, 1).unwrap();
        assert!(half < two);
        assert!(two < inf);
        assert!(Fraction::ZERO < half);
        assert_eq!(inf.cmp(&inf), Ordering::Equal);
    }

    #[test]
    fn ceil_and_floor() {
        let f = Fraction::new(21, 13).unwrap();
        assert_eq!(f.ceil().unwrap(), 2);
        assert_eq!(f.floor().unwrap(), 1);
        assert_eq!(Fraction::new(3, 1).unwrap().ceil().unwrap(), 3);
        assert!(Fraction::INFINITY.ceil().is_err());
    }

    #[test]
    fn parity_types() {
        assert_eq!(
            Fraction::new(13, 21).unwrap().parity_type(),
            FractionType::OneOne
        );
        assert_eq!(
            Fraction::new(9, 16).unwrap().parity_type(),
            FractionType::OneZero
        );
        assert_eq!(
            Fraction::new(2, 3).unwrap().parity_type(),
            FractionType::ZeroOne
        );
        assert_eq!(Fraction::INFINITY.parity_type(), FractionType::OneZero);
    }

    #[test]
    fn parse_round_trip() {
        let f: Fraction = "12/5".parse().unwrap();
        assert_eq!(f.to_string(), "12/5");
        let g: Fraction = "7".parse().unwrap();
        assert_eq!(g, Fraction::new(7, 1).unwrap());
        assert!("4/6".parse::<Fraction>().is_err());
        assert!("a/b".parse::<Fraction>().is_err());
    }
}

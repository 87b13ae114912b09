//! q-deformed integers (a, b)_q built from coprime pairs by the Euclidean
//! recursion
//!
//!   (a, b)_q = (a−r, r)_q + q·(a, b−a)_q              for a < b, r = b mod a,
//!   (a, b)_q = (a−b, b)_q + q^⌈a/b⌉·(r, b−r)_q        for a > b, r = a mod b,
//!
//! with (1, n)_q = (n, 1)_q = [n+1]_q for n ≥ 0. Specializing q = 1 recovers
//! a + b.

use crate::error::{Error, Result};
use crate::fraction::gcd;
use crate::laurent::{qint, LaurentPoly};
use std::collections::HashMap;

fn check_pair(a: u64, b: u64) -> Result<()> {
    if a == 0 && b == 0 {
        return Err(Error::NotCoprime(0, 0));
    }
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    Ok(())
}

fn q_pair_memo(a: u64, b: u64, memo: &mut HashMap<(u64, u64), LaurentPoly>) -> LaurentPoly {
    if a == 1 || b == 1 {
        return qint(a + b);
    }
    if let Some(p) = memo.get(&(a, b)) {
        return p.clone();
    }
    // a ≠ b since gcd(a, b) = 1 and both exceed 1.
    let result = if a < b {
        let r = b % a;
        let left = q_pair_memo(a - r, r, memo);
        let right = q_pair_memo(a, b - a, memo).shift(1, 1);
        &left + &right
    } else {
        let r = a % b;
        let c = a.div_ceil(b) as i64;
        let left = q_pair_memo(a - b, b, memo);
        let right = q_pair_memo(r, b - r, memo).shift(c, 1);
        &left + &right
    };
    memo.insert((a, b), result.clone());
    result
}

/// (a, b)_q for a coprime pair; the base cases (1, n) and (n, 1) admit n ≥ 0.
pub fn q_pair(a: u64, b: u64) -> Result<LaurentPoly> {
    check_pair(a, b)?;
    let mut memo = HashMap::new();
    Ok(q_pair_memo(a, b, &mut memo))
}

/// The weighted Farey sum (a, x)_q ⊕ (b, y)_q = (a+b, x+y)_q, defined when
/// x/a and y/b are Farey neighbors (ay − bx = 1):
///
///   weight q^⌈x/y⌉       if 1 ≤ a ≤ x,
///   weight q^⌊x/y + 1⌋   if 1 ≤ y ≤ b.
pub fn q_pair_weighted_sum(a: u64, x: u64, b: u64, y: u64) -> Result<LaurentPoly> {
    check_pair(a, x)?;
    check_pair(b, y)?;
    // ordered neighbor condition for the fractions x/a, y/b
    let det = (a as i128) * (y as i128) - (b as i128) * (x as i128);
    if det != 1 {
        return Err(Error::NotNeighbors(x, a, y, b));
    }
    let w = if a >= 1 && a <= x {
        // ⌈x/y⌉
        x.div_ceil(y)
    } else if y >= 1 && y <= b {
        // ⌊x/y + 1⌋ = ⌊x/y⌋ + 1
        x / y + 1
    } else {
        return Err(Error::out_of_domain(format!(
            "weighted sum needs 1 ≤ {a} ≤ {x} or 1 ≤ {y} ≤ {b}"
        )));
    };
    let left = q_pair(a, x)?;
    let right = q_pair(b, y)?.shift(w as i64, 1);
    Ok(&left + &right)
}

/// (x, a)_q computed from (a, x)_q by exponent reversal:
/// (x, a)_q = q^deg · (a, x)_{q^{-1}}.
pub fn q_pair_reverse(a: u64, x: u64) -> Result<LaurentPoly> {
    let p = q_pair(a, x)?;
    let deg = p.degree().map_err(|_| Error::ZeroPolynomial)?;
    Ok(p.reverse().shift(deg, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        assert_eq!(q_pair(1, 4).unwrap(), qint(5));
        assert_eq!(q_pair(4, 1).unwrap(), qint(5));
        assert_eq!(q_pair(1, 0).unwrap(), qint(1));
        assert_eq!(q_pair(0, 1).unwrap(), qint(1));
        assert_eq!(q_pair(0, 0), Err(Error::NotCoprime(0, 0)));
        assert_eq!(q_pair(2, 4), Err(Error::NotCoprime(2, 4)));
    }

    #[test]
    fn recursion_examples() {
        // (3,2)_q = (3)_q + q^2 (2)_q
        assert_eq!(
            q_pair(3, 2).unwrap(),
            LaurentPoly::from_coeffs(&[1, 1, 2, 1])
        );
        // (3,4)_q = (3)_q + q(4)_q
        assert_eq!(
            q_pair(3, 4).unwrap(),
            LaurentPoly::from_coeffs(&[1, 2, 2, 1, 1])
        );
        // (3,5)_q = (1,2)_q + q(3,2)_q
        assert_eq!(
            q_pair(3, 5).unwrap(),
            LaurentPoly::from_coeffs(&[1, 2, 2, 2, 1])
        );
        // (3,7)_q = (3)_q + q(3,4)_q
        let expected = &qint(3) + &q_pair(3, 4).unwrap().shift(1, 1);
        assert_eq!(q_pair(3, 7).unwrap(), expected);
    }

    #[test]
    fn specialization_at_one() {
        for a in 0..30u64 {
            for b in 0..30u64 {
                if (a == 0 && b == 0) || gcd(a, b) != 1 {
                    continue;
                }
                assert_eq!(q_pair(a, b).unwrap().eval_at_one(), (a + b) as i64);
            }
        }
    }

    #[test]
    fn positive_coefficients_with_constant_term_one() {
        for a in 1..25u64 {
            for b in 1..25u64 {
                if gcd(a, b) != 1 {
                    continue;
                }
                let p = q_pair(a, b).unwrap();
                assert_eq!(p.coeff(0), 1, "constant term of ({a},{b})_q");
                let deg = p.degree().unwrap();
                for e in 0..=deg {
                    assert!(p.coeff(e) >= 1, "gap at q^{e} in ({a},{b})_q");
                }
            }
        }
    }

    #[test]
    fn weighted_sum_examples() {
        // (1,1) ⊕ (1,2) with weight ⌈1/2⌉ = 1 gives (2,3)_q
        assert_eq!(
            q_pair_weighted_sum(1, 1, 1, 2).unwrap(),
            q_pair(2, 3).unwrap()
        );
        assert_eq!(
            q_pair(2, 3).unwrap(),
            LaurentPoly::from_coeffs(&[1, 2, 1, 1])
        );
        // non-neighbors rejected
        assert!(q_pair_weighted_sum(1, 3, 1, 2).is_err());
        // degenerate zero pair rejected
        assert!(q_pair_weighted_sum(1, 1, 0, 0).is_err());
    }

    #[test]
    fn weighted_sum_matches_mediant_pair() {
        for a in 1..20u64 {
            for x in a..20u64 {
                for b in 1..20u64 {
                    let ay = 1 + (b * x) as u128;
                    if ay % a as u128 != 0 {
                        continue;
                    }
                    let y = (ay / a as u128) as u64;
                    if y == 0 || gcd(a, x) != 1 || gcd(b, y) != 1 {
                        continue;
                    }
                    let sum = q_pair_weighted_sum(a, x, b, y).unwrap();
                    assert_eq!(sum, q_pair(a + b, x + y).unwrap(), "({a},{x}) ⊕ ({b},{y})");
                }
            }
        }
    }

    #[test]
    fn reversal_examples() {
        // (2,3)_q = 1+2q+q^2+q^3 reverses to (3,2)_q = 1+q+2q^2+q^3
        assert_eq!(q_pair_reverse(2, 3).unwrap(), q_pair(3, 2).unwrap());
        // palindromic base cases are fixed points
        assert_eq!(q_pair_reverse(1, 5).unwrap(), q_pair(5, 1).unwrap());
        assert_eq!(q_pair_reverse(1, 1).unwrap(), q_pair(1, 1).unwrap());
    }

    #[test]
    fn reversal_matches_direct() {
        for a in 1..22u64 {
            for b in 1..22u64 {
                if gcd(a, b) != 1 {
                    continue;
                }
                assert_eq!(
                    q_pair_reverse(a, b).unwrap(),
                    q_pair(b, a).unwrap(),
                    "reverse of ({a},{b})"
                );
            }
        }
    }
}

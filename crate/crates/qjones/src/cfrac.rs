//! Regular and negative continued fractions, Farey machinery, and the
//! Stern-Brocot parent decomposition.

use crate::error::{Error, Result};
use crate::fraction::{Fraction, FractionType};

/// Requested length parity for a regular expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Regular continued fraction [a_1, a_2, …, a_n]: a_1 ≥ 0, a_i ≥ 1 for i ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularCf {
    terms: Vec<u64>,
}

impl RegularCf {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::out_of_domain("empty regular continued fraction"));
        }
        if terms[1..].iter().any(|&a| a == 0) {
            return Err(Error::out_of_domain(
                "regular continued fraction terms after the first must be positive",
            ));
        }
        Ok(RegularCf { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_sum(&self) -> u64 {
        self.terms.iter().sum()
    }

    /// Exact bottom-up evaluation.
    pub fn evaluate(&self) -> Result<Fraction> {
        let (mut n, mut d) = (1u128, 0u128);
        for &a in self.terms.iter().rev() {
            // a + 1/(n/d) = (a*n + d)/n
            let num = (a as u128)
                .checked_mul(n)
                .and_then(|p| p.checked_add(d))
                .ok_or_else(|| Error::out_of_domain("overflow evaluating continued fraction"))?;
            d = n;
            n = num;
            if n > u64::MAX as u128 || d > u64::MAX as u128 {
                return Err(Error::out_of_domain(
                    "overflow evaluating continued fraction",
                ));
            }
        }
        if n == 0 && d == 0 {
            return Err(Error::DivisionByZero);
        }
        Fraction::reduced(n as u64, d as u64)
    }
}

/// Negative continued fraction [c_1, …, c_l]^-: canonical terms are all ≥ 2,
/// but evaluation tolerates interior 1s (they arise for the decremented
/// prefixes used by the ancestor-triangle edge labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeCf {
    terms: Vec<u64>,
}

impl NegativeCf {
    /// Canonical form: every term ≥ 2.
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::out_of_domain("empty negative continued fraction"));
        }
        if terms.iter().any(|&c| c < 2) {
            return Err(Error::out_of_domain(
                "canonical negative continued fraction terms must be ≥ 2",
            ));
        }
        Ok(NegativeCf { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// l' = Σ(c_j − 2) + 1.
    pub fn l_prime(&self) -> i64 {
        self.terms.iter().map(|&c| c as i64 - 2).sum::<i64>() + 1
    }

    /// wt = −Σ(c_j − 2) + l − 1 = l − l'.
    pub fn weight(&self) -> i64 {
        self.terms.len() as i64 - self.l_prime()
    }

    pub fn evaluate(&self) -> Result<Fraction> {
        evaluate_negative(&self.terms)
    }
}

/// Evaluates [c_1, …, c_l]^- = c_1 − 1/(c_2 − …) bottom-up over the signed
/// projective line. Terms may be 1 (non-canonical); division by zero and
/// negative results are signaled, not crashed.
pub fn evaluate_negative(terms: &[u64]) -> Result<Fraction> {
    if terms.is_empty() {
        return Err(Error::out_of_domain("empty negative continued fraction"));
    }
    // value = n/d with d ≥ 0; (±1)/0 is projective ∞.
    let (mut n, mut d): (i128, i128) = (1, 0);
    for &c in terms.iter().rev() {
        // c - 1/(n/d) = (c*n - d)/n
        let num = (c as i128)
            .checked_mul(n)
            .and_then(|p| p.checked_sub(d))
            .ok_or_else(|| Error::out_of_domain("overflow evaluating continued fraction"))?;
        d = n;
        n = num;
        if n == 0 && d == 0 {
            return Err(Error::DivisionByZero);
        }
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd_i128(n.unsigned_abs(), d.unsigned_abs()) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if d == 0 {
            n = 1; // projective ∞
        }
    }
    if n < 0 {
        return Err(Error::NegativeValue);
    }
    if n > u64::MAX as i128 || d > u64::MAX as i128 {
        return Err(Error::out_of_domain(
            "overflow evaluating continued fraction",
        ));
    }
    Fraction::reduced(n as u64, d as u64)
}

fn gcd_i128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_i128(b, a % b)
    }
}

/// Euclidean regular expansion of a finite positive fraction, with an optional
/// length-parity adjustment via the rewrite […, a_n] = […, a_n − 1, 1].
pub fn regular_expand(alpha: Fraction, parity: Option<Parity>) -> Result<RegularCf> {
    if alpha.is_infinite() || alpha.is_zero() {
        return Err(Error::out_of_domain(format!(
            "regular expansion needs a finite positive fraction, got {alpha}"
        )));
    }
    let mut terms = Vec::new();
    let (mut p, mut q) = (alpha.num(), alpha.den());
    while q != 0 {
        terms.push(p / q);
        let r = p % q;
        p = q;
        q = r;
    }
    if let Some(want) = parity {
        let is_odd = terms.len() % 2 == 1;
        let matches = match want {
            Parity::Odd => is_odd,
            Parity::Even => !is_odd,
        };
        if !matches {
            let last = *terms.last().expect("nonempty");
            if last >= 2 {
                *terms.last_mut().unwrap() = last - 1;
                terms.push(1);
            } else if terms.len() >= 2 {
                // […, a, 1] = […, a+1]
                terms.pop();
                *terms.last_mut().unwrap() += 1;
            } else {
                // [1] = [0, 1]
                terms = vec![0, 1];
            }
        }
    }
    let cf = RegularCf::new(terms)?;
    debug_assert_eq!(cf.evaluate()?, alpha);
    Ok(cf)
}

/// Greedy negative expansion of α > 1: c_1 = ⌈α⌉, α ← 1/(c_1 − α).
pub fn negative_expand(alpha: Fraction) -> Result<NegativeCf> {
    if alpha.is_infinite() || alpha <= Fraction::ONE {
        return Err(Error::out_of_domain(format!(
            "negative expansion needs α > 1, got {alpha}"
        )));
    }
    let mut terms = Vec::new();
    let (mut p, mut q) = (alpha.num(), alpha.den());
    loop {
        let c = p.div_ceil(q);
        terms.push(c);
        let r = c * q - p; // 0 ≤ r < q
        if r == 0 {
            break;
        }
        p = q;
        q = r;
    }
    let cf = NegativeCf::new(terms)?;
    debug_assert_eq!(cf.evaluate()?, alpha);
    Ok(cf)
}

/// Converts a regular expansion to the canonical negative expansion of the
/// same value (which must exceed 1). Exact: evaluate, then re-expand.
pub fn regular_to_negative(cf: &RegularCf) -> Result<NegativeCf> {
    negative_expand(cf.evaluate()?)
}

/// Converts a negative expansion to a regular one of the requested parity.
pub fn negative_to_regular(cf: &NegativeCf, parity: Option<Parity>) -> Result<RegularCf> {
    regular_expand(cf.evaluate()?, parity)
}

/// Ordered Farey-neighbor test: x/a and y/b are neighbors when ay − bx = 1
/// (which forces x/a < y/b).
pub fn farey_neighbors(alpha: Fraction, beta: Fraction) -> bool {
    let lhs = (alpha.den() as i128) * (beta.num() as i128);
    let rhs = (beta.den() as i128) * (alpha.num() as i128);
    lhs - rhs == 1
}

/// Farey sum (mediant) of a neighbor pair.
pub fn farey_sum(alpha: Fraction, beta: Fraction) -> Result<Fraction> {
    if !farey_neighbors(alpha, beta) && !farey_neighbors(beta, alpha) {
        return Err(Error::NotNeighbors(
            alpha.num(),
            alpha.den(),
            beta.num(),
            beta.den(),
        ));
    }
    alpha.mediant(&beta)
}

/// The unique Farey-neighbor pair (left, right), left < right, with
/// left ♯ right = α. Rejects 0/1 and 1/0.
pub fn farey_parents(alpha: Fraction) -> Result<(Fraction, Fraction)> {
    if alpha.is_zero() || alpha.is_infinite() {
        return Err(Error::out_of_domain(format!("{alpha} has no parents")));
    }
    // Walk the convergents; the previous convergent is one parent.
    let cf = regular_expand(alpha, None)?;
    let (mut h_prev, mut k_prev) = (1u64, 0u64);
    let (mut h, mut k) = (cf.terms()[0], 1u64);
    for &a in &cf.terms()[1..] {
        let h_next = a * h + h_prev;
        let k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    debug_assert_eq!(Fraction::new(h, k)?, alpha);
    let p1 = Fraction::new(h_prev, k_prev)?;
    let p2 = Fraction::new(h - h_prev, k - k_prev)?;
    let (left, right) = if p1 < p2 { (p1, p2) } else { (p2, p1) };
    debug_assert!(farey_neighbors(left, right));
    debug_assert_eq!(left.mediant(&right)?, alpha);
    Ok((left, right))
}

/// One step of the parent decomposition chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParentStep {
    pub child: Fraction,
    pub left: Fraction,
    pub right: Fraction,
}

/// Full parent decomposition of α: the first triple decomposes α itself and
/// the last is 1/1 = 0/1 ♯ 1/0. Each next child is the parent that lies
/// deeper in the Stern-Brocot tree (the larger num+den).
pub fn stern_brocot_path(alpha: Fraction) -> Result<Vec<ParentStep>> {
    if alpha.is_zero() || alpha.is_infinite() {
        return Err(Error::out_of_domain(format!("{alpha} has no parents")));
    }
    let mut chain = Vec::new();
    let mut current = alpha;
    loop {
        let (left, right) = farey_parents(current)?;
        chain.push(ParentStep {
            child: current,
            left,
            right,
        });
        if current == Fraction::ONE {
            break;
        }
        let sum_l = left.num() + left.den();
        let sum_r = right.num() + right.den();
        current = if sum_l >= sum_r { left } else { right };
    }
    Ok(chain)
}

/// Parity type from the negative expansion alone, by the numerator/denominator
/// parity recursion; must agree with the direct parity test on the value.
pub fn type_by_recursion(cf: &NegativeCf) -> FractionType {
    let c = cf.terms();
    let odd = |x: u64| (x % 2) as u8;
    let (mut n_prev2, mut d_prev2) = (odd(c[0]), 1u8); // α_1
    if c.len() == 1 {
        return type_from_parities(n_prev2, d_prev2);
    }
    // α_2: n = (1 + (-1)^{c_1 c_2})/2, d = (1 - (-1)^{c_2})/2
    let (mut n_prev, mut d_prev) = (1 - odd(c[0]) * odd(c[1]), odd(c[1]));
    if c.len() == 2 {
        return type_from_parities(n_prev, d_prev);
    }
    for &cj in &c[2..] {
        let n = (n_prev * odd(cj) + n_prev2) % 2;
        let d = (d_prev * odd(cj) + d_prev2) % 2;
        n_prev2 = n_prev;
        d_prev2 = d_prev;
        n_prev = n;
        d_prev = d;
    }
    type_from_parities(n_prev, d_prev)
}

fn type_from_parities(n: u8, d: u8) -> FractionType {
    match (n, d) {
        (1, 1) => FractionType::OneOne,
        (1, 0) => FractionType::OneZero,
        (0, 1) => FractionType::ZeroOne,
        _ => unreachable!("even/even parity contradicts irreducibility"),
    }
}

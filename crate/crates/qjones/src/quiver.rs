//! Fence quivers on a path of n vertices whose closure counts give the
//! coefficients of the pair q-integers: for x/a = [a_1, …, a_{2m}] with all
//! a_i ≥ 1 and n = Σa_i,
//!
//!   (a, x)_q = 1 + ρ_1 q + … + ρ_{n−1} q^{n−1} + q^n,
//!
//! where ρ_i counts the i-vertex closures (vertex sets with no out-arrows).

use crate::cfrac::{regular_expand, Parity};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::laurent::LaurentPoly;

/// Orientation pattern of the arrow blocks. The identity against (a, x)_q
/// holds for exactly one of the two; `OddBlocksBackward` is the frozen
/// choice, selected by exhaustive check over all coprime pairs a + x ≤ 20.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockOrientation {
    OddBlocksBackward,
    OddBlocksForward,
}

/// A path quiver 1 — 2 — … — n with arrows oriented in alternating blocks
/// given by the even-length regular expansion of x/a; the final block is one
/// arrow short (a path on n vertices has n − 1 arrows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FenceQuiver {
    vertex_count: usize,
    /// forward[i] ⇔ the arrow between vertices i+1 and i+2 points right.
    forward: Vec<bool>,
}

impl FenceQuiver {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[bool] {
        &self.forward
    }
}

pub fn build_quiver(alpha: Fraction) -> Result<FenceQuiver> {
    build_quiver_with(alpha, BlockOrientation::OddBlocksBackward)
}

pub fn build_quiver_with(alpha: Fraction, orientation: BlockOrientation) -> Result<FenceQuiver> {
    if alpha.is_infinite() || alpha < Fraction::ONE {
        return Err(Error::out_of_domain(format!(
            "fence quivers need x/a with 1 ≤ a ≤ x, got {alpha}"
        )));
    }
    let cf = regular_expand(alpha, Some(Parity::Even))?;
    if cf.terms().iter().any(|&a| a == 0) {
        return Err(Error::out_of_domain(format!(
            "{alpha} has no even expansion with all terms ≥ 1"
        )));
    }
    let n: u64 = cf.term_sum();
    let mut forward = Vec::with_capacity(n as usize - 1);
    let odd_forward = orientation == BlockOrientation::OddBlocksForward;
    'outer: for (block, &size) in cf.terms().iter().enumerate() {
        let dir = (block % 2 == 0) == odd_forward;
        for _ in 0..size {
            if forward.len() == n as usize - 1 {
                break 'outer;
            }
            forward.push(dir);
        }
    }
    Ok(FenceQuiver {
        vertex_count: n as usize,
        forward,
    })
}

/// ρ_i by dynamic programming over the path: a closure may not contain the
/// tail of any arrow whose head lies outside it.
pub fn count_closures(quiver: &FenceQuiver, size: usize) -> Result<u64> {
    let n = quiver.vertex_count;
    if size > n {
        return Err(Error::out_of_domain(format!(
            "closure size {size} exceeds {n} vertices"
        )));
    }
    // dp[in][k]: number of admissible prefixes with k chosen vertices whose
    // last vertex is in/out of the set.
    let mut dp = vec![[0u64; 2]; n + 1];
    dp[0][0] = 1; // first vertex out
    dp[1][1] = 1; // first vertex in
    for (i, &fwd) in quiver.forward.iter().enumerate() {
        let mut next = vec![[0u64; 2]; n + 1];
        for k in 0..=i + 1 {
            for prev_in in [0usize, 1] {
                let ways = dp[k][prev_in];
                if ways == 0 {
                    continue;
                }
                for cur_in in [0usize, 1] {
                    // forward arrow i → i+1 forbids prev ∈ C, cur ∉ C;
                    // backward forbids cur ∈ C, prev ∉ C.
                    let illegal = if fwd {
                        prev_in == 1 && cur_in == 0
                    } else {
                        cur_in == 1 && prev_in == 0
                    };
                    if illegal {
                        continue;
                    }
                    next[k + cur_in][cur_in] += ways;
                }
            }
        }
        dp = next;
    }
    Ok(dp[size][0] + dp[size][1])
}

/// Brute-force closure count by subset enumeration; the independent check
/// for the DP, capped at 20 vertices.
pub fn count_closures_brute(quiver: &FenceQuiver, size: usize) -> Result<u64> {
    let n = quiver.vertex_count;
    if n > 20 {
        return Err(Error::out_of_domain(format!(
            "brute-force closure count capped at 20 vertices, got {n}"
        )));
    }
    let mut count = 0u64;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != size {
            continue;
        }
        let in_set = |v: usize| mask >> v & 1 == 1;
        let ok = quiver.forward.iter().enumerate().all(|(i, &fwd)| {
            let (tail, head) = if fwd { (i, i + 1) } else { (i + 1, i) };
            !(in_set(tail) && !in_set(head))
        });
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

/// The full closure polynomial Σ ρ_i q^i.
pub fn closure_polynomial(quiver: &FenceQuiver) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for i in 0..=quiver.vertex_count {
        p.add_term(i as i64, count_closures(quiver, i)? as i64);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fraction::gcd;
    use crate::qint::q_pair;

    fn frac(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(build_quiver(frac(3, 2)).unwrap().vertex_count(), 3);
        assert_eq!(build_quiver(frac(4, 3)).unwrap().vertex_count(), 4);
        assert_eq!(build_quiver(frac(12, 5)).unwrap().vertex_count(), 6);
        assert!(build_quiver(Fraction::ONE).is_err());
        assert!(build_quiver(frac(2, 3)).is_err());
    }

    #[test]
    fn closure_counts_for_three_halves() {
        // coefficients of (2,3)_q = 1 + 2q + q² + q³
        let g = build_quiver(frac(3, 2)).unwrap();
        assert_eq!(count_closures(&g, 0).unwrap(), 1);
        assert_eq!(count_closures(&g, 1).unwrap(), 2);
        assert_eq!(count_closures(&g, 2).unwrap(), 1);
        assert_eq!(count_closures(&g, 3).unwrap(), 1);
        assert!(count_closures(&g, 4).is_err());
    }

    #[test]
    fn closure_counts_for_four_thirds() {
        // coefficients of (3,4)_q = 1 + 2q + 2q² + q³ + q⁴
        let g = build_quiver(frac(4, 3)).unwrap();
        let rho: Vec<u64> = (0..=4).map(|i| count_closures(&g, i).unwrap()).collect();
        assert_eq!(rho, vec![1, 2, 2, 1, 1]);
    }

    #[test]
    fn dp_matches_brute_force() {
        for a in 1..12u64 {
            for x in a + 1..16u64 {
                if gcd(a, x) != 1 {
                    continue;
                }
                let g = build_quiver(frac(x, a)).unwrap();
                if g.vertex_count() > 16 {
                    continue;
                }
                for i in 0..=g.vertex_count() {
                    assert_eq!(
                        count_closures(&g, i).unwrap(),
                        count_closures_brute(&g, i).unwrap(),
                        "closures of size {i} for {x}/{a}"
                    );
                }
            }
        }
    }

    #[test]
    fn closure_polynomial_is_pair_q_integer() {
        for a in 1..12u64 {
            for x in a + 1..18u64 {
                if gcd(a, x) != 1 {
                    continue;
                }
                let g = build_quiver(frac(x, a)).unwrap();
                assert_eq!(
                    closure_polynomial(&g).unwrap(),
                    q_pair(a, x).unwrap(),
                    "closure polynomial of {x}/{a}"
                );
            }
        }
    }

    #[test]
    fn frozen_orientation_is_the_unique_fit() {
        let mut backward_ok = true;
        let mut forward_ok = true;
        for a in 1..10u64 {
            for x in a + 1..20 - a {
                if gcd(a, x) != 1 {
                    continue;
                }
                let expected = q_pair(a, x).unwrap();
                let b = build_quiver_with(frac(x, a), BlockOrientation::OddBlocksBackward).unwrap();
                let f = build_quiver_with(frac(x, a), BlockOrientation::OddBlocksForward).unwrap();
                backward_ok &= closure_polynomial(&b).unwrap() == expected;
                forward_ok &= closure_polynomial(&f).unwrap() == expected;
            }
        }
        assert!(backward_ok, "frozen orientation must satisfy the identity");
        assert!(!forward_ok, "the identity must pin the orientation uniquely");
    }

    #[test]
    fn empty_closure_and_full_set() {
        let g = build_quiver(frac(17, 5)).unwrap();
        assert_eq!(count_closures(&g, 0).unwrap(), 1);
        assert_eq!(count_closures(&g, g.vertex_count()).unwrap(), 1);
    }
}

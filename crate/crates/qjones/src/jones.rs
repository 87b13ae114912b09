//! Normalized Jones polynomials J_α(q) by three routes, and recovery of the
//! original Jones polynomial V_α(t) from J_α, the writhe, and the negative
//! continued fraction lengths.

use crate::cfrac::{farey_parents, negative_expand};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::grid::{substitute_q_to_neg_t_inv, GridPoly};
use crate::laurent::LaurentPoly;
use crate::qint::q_pair;
use crate::qrational::q_rational;
use crate::writhe::writhe_sign_walk;
use std::collections::HashMap;

fn normalize(alpha: Fraction) -> Result<Fraction> {
    if alpha.is_zero() {
        return Err(Error::out_of_domain("J is not defined for 0"));
    }
    Ok(if !alpha.is_infinite() && alpha < Fraction::ONE {
        alpha.recip()
    } else {
        alpha
    })
}

/// J_α(q) = q·N_q(α) + (1−q)·D_q(α). Accepts any α > 0 (reciprocals agree)
/// and ∞, where J_∞ = q.
pub fn jones_normalized(alpha: Fraction) -> Result<LaurentPoly> {
    let alpha = normalize(alpha)?;
    let qr = q_rational(alpha)?;
    let q = LaurentPoly::monomial(1, 1);
    let one_minus_q = LaurentPoly::from_terms(&[(0, 1), (1, -1)]);
    Ok(&(&q * &qr.num) + &(&one_minus_q * &qr.den))
}

fn jones_rec_memo(alpha: Fraction, memo: &mut HashMap<Fraction, LaurentPoly>) -> Result<LaurentPoly> {
    if alpha == Fraction::ONE {
        return Ok(LaurentPoly::one());
    }
    if alpha.is_infinite() {
        return Ok(LaurentPoly::monomial(1, 1));
    }
    if let Some(p) = memo.get(&alpha) {
        return Ok(p.clone());
    }
    let (left, right) = farey_parents(alpha)?;
    let l = jones_rec_memo(left, memo)?;
    let r = jones_rec_memo(right, memo)?;
    let w = left.num().div_ceil(right.num()) as i64;
    let result = &l + &r.shift(w, 1);
    memo.insert(alpha, result.clone());
    Ok(result)
}

/// J_α(q) by the Farey-sum recursion from J_1 = 1 and J_∞ = q:
/// J_{α♯β} = J_α + q^⌈N(α)/N(β)⌉ J_β over the parent chain.
pub fn jones_by_recursion(alpha: Fraction) -> Result<LaurentPoly> {
    let alpha = normalize(alpha)?;
    let mut memo = HashMap::new();
    jones_rec_memo(alpha, &mut memo)
}

/// J_{x/a}(q) = q²(a, x−a)_q − (q−1)(a, x)_q for 1 ≤ a < x.
pub fn jones_by_pairs(alpha: Fraction) -> Result<LaurentPoly> {
    let alpha = normalize(alpha)?;
    if alpha.is_infinite() || alpha == Fraction::ONE {
        return Err(Error::out_of_domain(format!(
            "the pair formula needs 1 ≤ a < x, got {alpha}"
        )));
    }
    let (x, a) = (alpha.num(), alpha.den());
    let head = q_pair(a, x - a)?.shift(2, 1);
    let q_minus_one = LaurentPoly::from_terms(&[(0, -1), (1, 1)]);
    let tail = &q_minus_one * &q_pair(a, x)?;
    Ok(&head - &tail)
}

/// Data recovered alongside V_α(t).
#[derive(Clone, Debug)]
pub struct JonesPair {
    pub alpha: Fraction,
    pub normalized: LaurentPoly,
    pub original: GridPoly,
    pub writhe: i64,
    pub cf_len: i64,
    pub cf_len_prime: i64,
}

/// V_α(t) for α > 1 with α = [c_1..c_l]^-:
///
///   V_α(t) = (−1)^{wr+l} · t^{(−3wr − 3l + 7l')/4} · J_α(−t^{−1}),
///
/// reading the unit (−t)^{3/4} as −t^{3/4} so that every sign is an integer
/// power of −1.
pub fn jones_original(alpha: Fraction) -> Result<JonesPair> {
    if alpha.is_infinite() || alpha <= Fraction::ONE {
        return Err(Error::out_of_domain(format!(
            "V needs α > 1, got {alpha}"
        )));
    }
    let cf = negative_expand(alpha)?;
    let l = cf.len() as i64;
    let lp = cf.l_prime();
    let wr = writhe_sign_walk(alpha)?.wr;
    let normalized = jones_normalized(alpha)?;

    let quarters = -3 * wr - 3 * l + 7 * lp;
    if quarters.rem_euclid(2) != 0 {
        return Err(Error::GridViolation(format!(
            "exponent {quarters}/4 for V_{alpha} is off the half grid"
        )));
    }
    let sign = if (wr + l).rem_euclid(2) == 0 { 1 } else { -1 };
    let substituted = substitute_q_to_neg_t_inv(&normalized);
    let original = substituted.shift_quarters(quarters, sign);
    if !original.on_half_grid() {
        return Err(Error::GridViolation(format!("V_{alpha} off the half grid")));
    }
    // numerator of α odd ⟺ the link is a knot ⟺ integer t-powers
    if alpha.num() % 2 == 1 && !original.on_int_grid() {
        return Err(Error::GridViolation(format!(
            "V_{alpha} is a knot polynomial off the integer grid"
        )));
    }
    Ok(JonesPair {
        alpha,
        normalized,
        original,
        writhe: wr,
        cf_len: l,
        cf_len_prime: lp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fraction::gcd;

    fn frac(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn golden_normalized_values() {
        assert_eq!(
            jones_normalized(frac(12, 5)).unwrap(),
            LaurentPoly::from_coeffs(&[1, 1, 3, 2, 2, 2, 1])
        );
        assert_eq!(
            jones_normalized(frac(16, 9)).unwrap(),
            LaurentPoly::from_coeffs(&[1, 2, 2, 3, 3, 3, 1, 1])
        );
        assert_eq!(
            jones_normalized(frac(3, 2)).unwrap(),
            LaurentPoly::from_terms(&[(0, 1), (1, 1), (3, 1)])
        );
    }

    #[test]
    fn initial_data_and_first_steps() {
        assert_eq!(jones_by_recursion(Fraction::ONE).unwrap(), LaurentPoly::one());
        assert_eq!(
            jones_by_recursion(Fraction::INFINITY).unwrap(),
            LaurentPoly::monomial(1, 1)
        );
        // 2 = 1 ♯ ∞: J_2 = 1 + q·q
        assert_eq!(
            jones_by_recursion(frac(2, 1)).unwrap(),
            LaurentPoly::from_terms(&[(0, 1), (2, 1)])
        );
        assert_eq!(
            jones_by_recursion(frac(3, 2)).unwrap(),
            LaurentPoly::from_terms(&[(0, 1), (1, 1), (3, 1)])
        );
    }

    #[test]
    fn pair_formula_examples() {
        // 5/3 → 1+q+q²+q³+q⁴
        assert_eq!(
            jones_by_pairs(frac(5, 3)).unwrap(),
            LaurentPoly::from_coeffs(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            jones_by_pairs(frac(12, 5)).unwrap(),
            jones_normalized(frac(12, 5)).unwrap()
        );
        assert_eq!(
            jones_by_pairs(frac(2, 1)).unwrap(),
            LaurentPoly::from_terms(&[(0, 1), (2, 1)])
        );
    }

    #[test]
    fn three_way_agreement_and_shape() {
        for a in 1..18u64 {
            for x in a + 1..24u64 {
                if gcd(a, x) != 1 {
                    continue;
                }
                let alpha = frac(x, a);
                let j1 = jones_normalized(alpha).unwrap();
                let j2 = jones_by_recursion(alpha).unwrap();
                let j3 = jones_by_pairs(alpha).unwrap();
                assert_eq!(j1, j2, "normalized vs recursion at {alpha}");
                assert_eq!(j1, j3, "normalized vs pairs at {alpha}");
                assert_eq!(j1.eval_at_one(), x as i64, "J(1) at {alpha}");
                assert_eq!(j1.coeff(0), 1, "constant term at {alpha}");
                assert!(j1.lowest().unwrap() == 0, "negative exponent at {alpha}");
            }
        }
    }

    #[test]
    fn pair_identity_with_remainder() {
        // (a, x)_q = J_{x/a}(q) + q(a−r, r)_q
        for a in 1..18u64 {
            for x in a + 1..24u64 {
                if gcd(a, x) != 1 {
                    continue;
                }
                let r = x % a;
                let lhs = q_pair(a, x).unwrap();
                let rhs = &jones_normalized(frac(x, a)).unwrap()
                    + &q_pair(a - r, r).unwrap().shift(1, 1);
                assert_eq!(lhs, rhs, "at ({a}, {x})");
            }
        }
    }

    #[test]
    fn golden_original_values() {
        // V_{16/9}: wr = 3, l = 3, l' = 4, leading +t^{5/2}
        let p = jones_original(frac(16, 9)).unwrap();
        assert_eq!((p.writhe, p.cf_len, p.cf_len_prime), (3, 3, 4));
        assert_eq!(
            p.original,
            GridPoly::from_half_terms(&[
                (5, 1),
                (3, -2),
                (1, 2),
                (-1, -3),
                (-3, 3),
                (-5, -3),
                (-7, 1),
                (-9, -1),
            ])
        );

        // V_{21/13}: wr = −1, l = 4, l' = 3, leading −t³
        let p = jones_original(frac(21, 13)).unwrap();
        assert_eq!((p.writhe, p.cf_len, p.cf_len_prime), (-1, 4, 3));
        assert_eq!(
            p.original,
            GridPoly::from_int_terms(&[
                (3, -1),
                (2, 3),
                (1, -3),
                (0, 4),
                (-1, -4),
                (-2, 3),
                (-3, -2),
                (-4, 1),
            ])
        );

        // V_{12/5}: leading −t^{3/2} forces wr(5/12) = 2
        let p = jones_original(frac(12, 5)).unwrap();
        assert_eq!(p.writhe, 2);
        assert_eq!(
            p.original,
            GridPoly::from_half_terms(&[
                (3, -1),
                (1, 1),
                (-1, -3),
                (-3, 2),
                (-5, -2),
                (-7, 2),
                (-9, -1),
            ])
        );
    }

    #[test]
    fn misprint_regression_21_13() {
        // All three methods give 2q⁶ (not 2q²): J(1) = 21 pins it.
        let expected = LaurentPoly::from_coeffs(&[1, 3, 3, 4, 4, 3, 2, 1]);
        assert_eq!(jones_normalized(frac(21, 13)).unwrap(), expected);
        assert_eq!(jones_by_recursion(frac(21, 13)).unwrap(), expected);
        assert_eq!(jones_by_pairs(frac(21, 13)).unwrap(), expected);
        assert_eq!(expected.eval_at_one(), 21);
    }

    #[test]
    fn original_matches_tree_assembly() {
        use crate::ancestor::AncestorTriangle;
        for (x, a) in [(12u64, 5u64), (21, 13), (16, 9), (3, 1), (7, 4), (11, 7)] {
            let alpha = frac(x, a);
            let p = jones_original(alpha).unwrap();
            let tree = AncestorTriangle::build(alpha.recip()).unwrap();
            let v = tree.bracket_to_jones(p.writhe).unwrap();
            assert_eq!(p.original, v, "tree assembly at {alpha}");
        }
    }
}

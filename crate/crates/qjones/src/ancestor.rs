//! Ancestor triangles: the stack of fundamental triangles recording the full
//! Stern-Brocot parent decomposition of a fraction α ∈ (0, 1), together with
//! the path-sum bracket ⟨Γ_α⟩ over its upward paths.

use crate::cfrac::{negative_expand, stern_brocot_path, NegativeCf};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::grid::GridPoly;
use crate::laurent::LaurentPoly;
use std::collections::HashMap;

/// One fundamental triangle: apex = left ♯ right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FundamentalTriangle {
    pub apex: Fraction,
    pub left: Fraction,
    pub right: Fraction,
}

/// Which oblique side of the big triangle a vertex lies on. The target α is
/// the bottom apex where both sides meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Apex,
}

/// The ancestor triangle of α ∈ (0, 1): fundamental triangles in top-down
/// order (index 0 contains the edge joining 1/0 and 0/1), plus the side
/// assignment of every vertex.
#[derive(Clone, Debug)]
pub struct AncestorTriangle {
    target: Fraction,
    cf: NegativeCf, // negative expansion of 1/α
    triangles: Vec<FundamentalTriangle>,
    sides: HashMap<Fraction, Side>,
    apex_of: HashMap<Fraction, usize>,
}

impl AncestorTriangle {
    pub fn build(alpha: Fraction) -> Result<Self> {
        if alpha.is_zero() || alpha.is_infinite() || alpha >= Fraction::ONE {
            return Err(Error::out_of_domain(format!(
                "ancestor triangle needs α ∈ (0,1), got {alpha}"
            )));
        }
        let cf = negative_expand(alpha.recip())?;
        let mut triangles: Vec<FundamentalTriangle> = stern_brocot_path(alpha)?
            .into_iter()
            .map(|step| FundamentalTriangle {
                apex: step.child,
                left: step.left,
                right: step.right,
            })
            .collect();
        triangles.reverse();

        let expected = cf.terms()[0] + cf.terms()[1..].iter().map(|&c| c - 1).sum::<u64>();
        assert_eq!(
            triangles.len() as u64,
            expected,
            "triangle count mismatch for {alpha}"
        );

        let apex_of: HashMap<Fraction, usize> = triangles
            .iter()
            .enumerate()
            .map(|(i, t)| (t.apex, i))
            .collect();

        // The left oblique side is the always-smaller-parent walk from α
        // up to 0/1; every other vertex sits on the right side.
        let mut sides = HashMap::new();
        for t in &triangles {
            sides.insert(t.apex, Side::Right);
            sides.insert(t.left, Side::Right);
            sides.insert(t.right, Side::Right);
        }
        let mut v = alpha;
        let mut left_edges = 0u64;
        while v != Fraction::ZERO {
            sides.insert(v, Side::Left);
            let i = apex_of[&v];
            v = triangles[i].left;
            left_edges += 1;
        }
        sides.insert(Fraction::ZERO, Side::Left);
        sides.insert(alpha, Side::Apex);
        assert_eq!(left_edges, cf.len() as u64, "left side length ≠ l");

        Ok(AncestorTriangle {
            target: alpha,
            cf,
            triangles,
            sides,
            apex_of,
        })
    }

    pub fn target(&self) -> Fraction {
        self.target
    }

    /// Negative expansion of 1/α.
    pub fn cf(&self) -> &NegativeCf {
        &self.cf
    }

    pub fn triangles(&self) -> &[FundamentalTriangle] {
        &self.triangles
    }

    pub fn side(&self, v: Fraction) -> Side {
        self.sides[&v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Fraction> + '_ {
        self.sides.keys().copied()
    }

    /// The triangle whose apex is `v`, if any.
    pub fn triangle_of_apex(&self, v: Fraction) -> Option<&FundamentalTriangle> {
        self.apex_of.get(&v).map(|&i| &self.triangles[i])
    }

    /// Number of edges on the left oblique side (= l).
    pub fn left_edge_count(&self) -> u64 {
        self.cf.len() as u64
    }

    /// Number of edges on the right oblique side between α and 1/1 (= l').
    pub fn right_edge_count(&self) -> u64 {
        self.cf.l_prime() as u64
    }

    /// All edges of the complex: the top edge (0/1, 1/0) plus both
    /// parent edges of every apex.
    pub fn edges(&self) -> Vec<(Fraction, Fraction)> {
        let mut out = vec![(Fraction::ZERO, Fraction::INFINITY)];
        for t in &self.triangles {
            out.push((t.apex, t.left));
            out.push((t.apex, t.right));
        }
        out
    }

    /// True if the edge {u, v} joins the two oblique sides (the strip
    /// crossings counted by the Seifert-path walk; the top edge qualifies).
    pub fn is_crossing_edge(&self, u: Fraction, v: Fraction) -> bool {
        matches!(
            (self.side(u), self.side(v)),
            (Side::Left, Side::Right) | (Side::Right, Side::Left)
        )
    }

    /// The path-sum bracket ⟨Γ_α⟩ ∈ Z[t, t^{-1}]: sum over upward paths from
    /// α to 0/1 or 1/1 of the products of edge weights, −t^{-1} per left-step
    /// and −t per right-step. Computed by dynamic programming over vertices.
    pub fn bracket_path_sum(&self) -> LaurentPoly {
        fn add_into(map: &mut HashMap<Fraction, LaurentPoly>, key: Fraction, val: LaurentPoly) {
            let entry = map.entry(key).or_default();
            *entry = &*entry + &val;
        }
        let mut acc: HashMap<Fraction, LaurentPoly> = HashMap::new();
        acc.insert(self.target, LaurentPoly::one());
        for t in self.triangles.iter().rev() {
            // Paths stop at 1/1; do not continue to its parents.
            if t.apex == Fraction::ONE {
                continue;
            }
            let Some(s) = acc.get(&t.apex).cloned() else {
                continue;
            };
            add_into(&mut acc, t.left, s.shift(-1, -1));
            add_into(&mut acc, t.right, s.shift(1, -1));
        }
        let zero = acc.remove(&Fraction::ZERO).unwrap_or_default();
        let one = acc.remove(&Fraction::ONE).unwrap_or_default();
        &zero + &one
    }

    /// Assembles V from the path sum and the writhe:
    /// V = (−t^{3/4})^w · ⟨Γ_α⟩ with w = −wr − wt.
    pub fn bracket_to_jones(&self, writhe: i64) -> Result<GridPoly> {
        let w = -writhe - self.cf.weight();
        let bracket = self.bracket_path_sum();
        let mut v = GridPoly::zero();
        for (e, c) in bracket.terms() {
            v.add_term(4 * e, c);
        }
        let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
        let v = v.shift_quarters(3 * w, sign);
        if !v.on_half_grid() {
            return Err(Error::GridViolation(format!(
                "V for {} is off the half-integer grid",
                self.target
            )));
        }
        // odd denominator of α ∈ (0,1) means a knot: integer powers only
        if self.target.den() % 2 == 1 && !v.on_int_grid() {
            return Err(Error::GridViolation(format!(
                "V for the knot {} is off the integer grid",
                self.target
            )));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn triangle_counts() {
        // 11/7 = [2,3,2,2]^-: 2 + 2 + 1 + 1 = 6 triangles
        assert_eq!(AncestorTriangle::build(frac(7, 11)).unwrap().triangles().len(), 6);
        // 7/4 = [2,4]^-: 2 + 3 = 5 triangles for the mirrored target 4/7
        assert_eq!(AncestorTriangle::build(frac(4, 7)).unwrap().triangles().len(), 5);
        // 2 = [2]^-: 2 triangles
        assert_eq!(AncestorTriangle::build(frac(1, 2)).unwrap().triangles().len(), 2);
        assert!(AncestorTriangle::build(frac(3, 2)).is_err());
    }

    #[test]
    fn initial_triangle_holds_the_top_edge() {
        let tree = AncestorTriangle::build(frac(7, 11)).unwrap();
        let t0 = &tree.triangles()[0];
        assert_eq!(t0.apex, Fraction::ONE);
        assert_eq!((t0.left, t0.right), (Fraction::ZERO, Fraction::INFINITY));
        for t in tree.triangles() {
            assert_eq!(t.left.mediant(&t.right).unwrap(), t.apex);
        }
    }

    #[test]
    fn side_assignment() {
        let tree = AncestorTriangle::build(frac(7, 11)).unwrap();
        assert_eq!(tree.side(Fraction::ZERO), Side::Left);
        assert_eq!(tree.side(Fraction::INFINITY), Side::Right);
        assert_eq!(tree.side(Fraction::ONE), Side::Right);
        assert_eq!(tree.side(frac(7, 11)), Side::Apex);
        // α_j = 1/[c_1..c_j]^- sit on the left side
        assert_eq!(tree.side(frac(1, 2)), Side::Left);
        assert_eq!(tree.side(frac(3, 5)), Side::Left);
        assert_eq!(tree.side(frac(5, 8)), Side::Left);
        assert_eq!(tree.side(frac(2, 3)), Side::Right);
    }

    #[test]
    fn bracket_extreme_terms() {
        for (num, den) in [(7u64, 11u64), (5, 12), (13, 21), (9, 16), (1, 2), (2, 3)] {
            let tree = AncestorTriangle::build(frac(num, den)).unwrap();
            let b = tree.bracket_path_sum();
            let l = tree.left_edge_count() as i64;
            let lp = tree.right_edge_count() as i64;
            assert_eq!(b.lowest().unwrap(), -l, "lowest exponent for {num}/{den}");
            assert_eq!(b.degree().unwrap(), lp, "highest exponent for {num}/{den}");
            let low_sign = if l % 2 == 0 { 1 } else { -1 };
            let high_sign = if lp % 2 == 0 { 1 } else { -1 };
            assert_eq!(b.coeff(-l), low_sign);
            assert_eq!(b.coeff(lp), high_sign);
        }
    }

    /// Brute-force path enumeration, independent of the DP: every upward
    /// path as (net t-degree, step count).
    fn enumerate_paths(tree: &AncestorTriangle, v: Fraction) -> Vec<(i64, i64)> {
        if v == Fraction::ZERO || v == Fraction::ONE {
            return vec![(0, 0)];
        }
        let t = tree.triangle_of_apex(v).expect("apex");
        let mut out = Vec::new();
        for (d, k) in enumerate_paths(tree, t.left) {
            out.push((d - 1, k + 1)); // left step multiplies by -t^{-1}
        }
        for (d, k) in enumerate_paths(tree, t.right) {
            out.push((d + 1, k + 1)); // right step multiplies by -t
        }
        out
    }

    #[test]
    fn path_sum_matches_enumeration() {
        for (num, den) in [(1u64, 2u64), (1, 3), (2, 3), (3, 5), (5, 8), (7, 11), (5, 12)] {
            let tree = AncestorTriangle::build(frac(num, den)).unwrap();
            assert!(tree.triangles().len() <= 10);
            let mut expected = LaurentPoly::zero();
            for (d, k) in enumerate_paths(&tree, frac(num, den)) {
                expected.add_term(d, if k % 2 == 0 { 1 } else { -1 });
            }
            assert_eq!(tree.bracket_path_sum(), expected, "bracket of {num}/{den}");
        }
    }

    #[test]
    fn signed_path_count_at_one() {
        // ⟨Γ⟩ at t = 1 equals the signed path count
        let tree = AncestorTriangle::build(frac(5, 12)).unwrap();
        let b = tree.bracket_path_sum();
        assert_eq!(b.eval_at_one(), b.terms().map(|(_, c)| c).sum::<i64>());
    }

    #[test]
    fn degenerate_last_term_two() {
        // c_l = 2 makes consecutive decremented prefixes coincide; the build
        // must not duplicate vertices.
        let tree = AncestorTriangle::build(frac(7, 11)).unwrap(); // [2,3,2,2]
        let mut seen = std::collections::HashSet::new();
        for v in tree.vertices() {
            assert!(seen.insert(v), "duplicate vertex {v}");
        }
    }
}

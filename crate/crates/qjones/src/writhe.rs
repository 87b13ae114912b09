//! Writhes of rational link diagrams computed three ways from the ancestor
//! triangle: the Seifert-path sign walk over fundamental triangles, the
//! per-quadrilateral crossing-count formula, and the type-dispatched
//! recursion on the negative continued fraction.

use crate::ancestor::AncestorTriangle;
use crate::cfrac::evaluate_negative;
use crate::error::{Error, Result};
use crate::fraction::{Fraction, FractionType};
use std::collections::HashSet;

/// A Seifert path: a downward walk from 1/0 to the target whose edges each
/// join a 1/0-type vertex to vertices of one fixed other type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertPath {
    pub vertices: Vec<Fraction>,
    pub variant: PathVariant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathVariant {
    /// γ_α; for even-denominator targets its vertices are 1/0- and 0/1-typed.
    Principal,
    /// γ'_α, defined only for even-denominator (1/0-type) targets.
    Alternate,
}

/// Writhe of D(α), plus the alternate-orientation writhe when the target is
/// a two-component link (1/0-type).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WritheResult {
    pub wr: i64,
    pub wr_pm: Option<i64>,
}

fn normalized(alpha: Fraction) -> Result<Fraction> {
    if alpha.is_zero() || alpha.is_infinite() || alpha == Fraction::ONE {
        return Err(Error::out_of_domain(format!(
            "writhe is defined for α ∈ (0,1) (or its reciprocal), got {alpha}"
        )));
    }
    Ok(if alpha > Fraction::ONE {
        alpha.recip()
    } else {
        alpha
    })
}

fn sorted_edge(u: Fraction, v: Fraction) -> (Fraction, Fraction) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Every simple 1/0 → target path in the subgraph induced by the vertex
/// types {1/0, other}. There is exactly one for each admissible flavor.
fn flavor_paths(tree: &AncestorTriangle, other: FractionType) -> Vec<Vec<Fraction>> {
    let allowed = |v: Fraction| {
        let t = v.parity_type();
        t == FractionType::OneZero || t == other
    };
    let mut adj: std::collections::HashMap<Fraction, Vec<Fraction>> = Default::default();
    for (u, v) in tree.edges() {
        if allowed(u) && allowed(v) {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
    }
    for list in adj.values_mut() {
        list.sort();
    }
    let target = tree.target();
    let mut found = Vec::new();
    let mut stack = vec![Fraction::INFINITY];
    let mut visited: HashSet<Fraction> = [Fraction::INFINITY].into();
    dfs(&adj, target, &mut stack, &mut visited, &mut found);
    found
}

fn dfs(
    adj: &std::collections::HashMap<Fraction, Vec<Fraction>>,
    target: Fraction,
    stack: &mut Vec<Fraction>,
    visited: &mut HashSet<Fraction>,
    found: &mut Vec<Vec<Fraction>>,
) {
    let v = *stack.last().expect("nonempty stack");
    if v == target {
        found.push(stack.clone());
        return;
    }
    let Some(next) = adj.get(&v) else {
        return;
    };
    for &w in next {
        if visited.insert(w) {
            stack.push(w);
            dfs(adj, target, stack, visited, found);
            stack.pop();
            visited.remove(&w);
        }
    }
}

/// The Seifert path(s) of the tree's target: the principal path always, and
/// the alternate one exactly when the target is 1/0-type.
pub fn seifert_paths(tree: &AncestorTriangle) -> (SeifertPath, Option<SeifertPath>) {
    let target = tree.target();
    let one_path = |other: FractionType, variant: PathVariant| -> SeifertPath {
        let mut paths = flavor_paths(tree, other);
        assert_eq!(
            paths.len(),
            1,
            "expected a unique Seifert path to {target}, found {}",
            paths.len()
        );
        SeifertPath {
            vertices: paths.pop().unwrap(),
            variant,
        }
    };
    match target.parity_type() {
        FractionType::OneOne => (one_path(FractionType::OneOne, PathVariant::Principal), None),
        FractionType::ZeroOne => (one_path(FractionType::ZeroOne, PathVariant::Principal), None),
        FractionType::OneZero => (
            one_path(FractionType::ZeroOne, PathVariant::Principal),
            Some(one_path(FractionType::OneOne, PathVariant::Alternate)),
        ),
    }
}

fn path_edge_set(path: &SeifertPath) -> HashSet<(Fraction, Fraction)> {
    path.vertices
        .windows(2)
        .map(|w| sorted_edge(w[0], w[1]))
        .collect()
}

/// Sum of the triangle signs propagated along a Seifert path: the sign flips
/// between consecutive triangles exactly when the path traverses their
/// shared edge.
fn triangle_sign_sum(tree: &AncestorTriangle, path: &SeifertPath, initial: i64) -> i64 {
    let edges = path_edge_set(path);
    let mut sign = initial;
    let mut total = sign;
    let triangles = tree.triangles();
    for t in triangles.iter().skip(1) {
        let shared = sorted_edge(t.left, t.right);
        if edges.contains(&shared) {
            sign = -sign;
        }
        total += sign;
    }
    total
}

/// Writhe by the sign walk over fundamental triangles.
pub fn writhe_sign_walk(alpha: Fraction) -> Result<WritheResult> {
    let alpha = normalized(alpha)?;
    let tree = AncestorTriangle::build(alpha)?;
    let (principal, alternate) = seifert_paths(&tree);
    let initial = if alpha.parity_type() == FractionType::OneOne {
        1
    } else {
        -1
    };
    let wr = -triangle_sign_sum(&tree, &principal, initial);
    // The alternate walk starts at −1 and yields wr_pm with the opposite
    // overall sign to the principal one; pinned by wr_pm(1/2) = −2.
    let wr_pm = alternate.map(|p| triangle_sign_sum(&tree, &p, -1));
    Ok(WritheResult { wr, wr_pm })
}

/// The E_j endpoints: α_j = 1/[c_1..c_j]^- and β_j = 1/[c_1..(c_j − 1)]^-.
fn level_endpoints(cf: &[u64]) -> Result<Vec<(Fraction, Fraction)>> {
    let mut out = Vec::with_capacity(cf.len());
    for j in 1..=cf.len() {
        let a = evaluate_negative(&cf[..j])?.recip();
        let mut dec = cf[..j].to_vec();
        dec[j - 1] -= 1;
        let b = evaluate_negative(&dec)?.recip();
        out.push((a, b));
    }
    Ok(out)
}

/// z_j values along a Seifert path: the number of strip crossings made before
/// first reaching an endpoint of E_j (traversing the top edge counts).
fn crossing_counts(
    tree: &AncestorTriangle,
    path: &SeifertPath,
    levels: &[(Fraction, Fraction)],
) -> Vec<u64> {
    let mut z = vec![u64::MAX; levels.len()];
    let mut crossings = 0u64;
    let record = |v: Fraction, crossings: u64, z: &mut Vec<u64>| {
        for (j, &(a, b)) in levels.iter().enumerate() {
            if z[j] == u64::MAX && (v == a || v == b) {
                z[j] = crossings;
            }
        }
    };
    record(path.vertices[0], crossings, &mut z);
    for w in path.vertices.windows(2) {
        if tree.is_crossing_edge(w[0], w[1]) {
            crossings += 1;
        }
        record(w[1], crossings, &mut z);
    }
    assert!(
        z.iter().all(|&v| v != u64::MAX),
        "Seifert path missed a level of {}",
        tree.target()
    );
    z
}

/// Per-level contributions of the quadrilateral formula, exposed for the CLI.
#[derive(Clone, Debug)]
pub struct QuadrilateralBreakdown {
    pub result: WritheResult,
    /// t_α([E_{j−1}, E_j]) for j = 1..l.
    pub contributions: Vec<i64>,
    /// z_j for the principal path.
    pub crossings: Vec<u64>,
}

fn sgn(parity: i64) -> i64 {
    if parity.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Writhe by the quadrilateral formula: per-level contributions driven by
/// the crossing counts z_j of the Seifert path.
pub fn writhe_quadrilateral_detail(alpha: Fraction) -> Result<QuadrilateralBreakdown> {
    let alpha = normalized(alpha)?;
    let tree = AncestorTriangle::build(alpha)?;
    let cf = tree.cf().terms().to_vec();
    let levels = level_endpoints(&cf)?;
    let (principal, alternate) = seifert_paths(&tree);
    let z = crossing_counts(&tree, &principal, &levels);
    let edges = path_edge_set(&principal);

    // Shared by both paths: the level contribution for j ≥ 2 depends on
    // whether the path runs along F_j (which joins α_{j−1} and β_j).
    let level_term = |j: usize, zj: i64, edges: &HashSet<(Fraction, Fraction)>| -> i64 {
        let cj = cf[j - 1] as i64;
        let f_j = sorted_edge(levels[j - 2].0, levels[j - 1].1);
        if edges.contains(&f_j) {
            sgn(zj) * (cj - 3)
        } else {
            sgn(zj - 1) * (cj - 1)
        }
    };

    let mut contributions = Vec::with_capacity(cf.len());
    let c1 = cf[0] as i64;
    contributions.push(match z[0] {
        0 => -c1,
        1 => c1,
        2 => c1 - 2,
        other => panic!("z_1 = {other} is out of range for {alpha}"),
    });
    for j in 2..=cf.len() {
        contributions.push(level_term(j, z[j - 1] as i64, &edges));
    }
    let wr = contributions.iter().sum();

    let wr_pm = match alternate {
        None => None,
        Some(alt) => {
            let zp = crossing_counts(&tree, &alt, &levels);
            let alt_edges = path_edge_set(&alt);
            let mut total = -c1;
            for j in 2..=cf.len() {
                total += level_term(j, zp[j - 1] as i64, &alt_edges);
            }
            Some(total)
        }
    };

    Ok(QuadrilateralBreakdown {
        result: WritheResult { wr, wr_pm },
        contributions,
        crossings: z,
    })
}

pub fn writhe_quadrilateral(alpha: Fraction) -> Result<WritheResult> {
    Ok(writhe_quadrilateral_detail(alpha)?.result)
}

/// z_l of a target in its own ancestor triangle (the final crossing count of
/// the principal Seifert path), consumed by the recursion below.
fn final_crossing_count(alpha: Fraction) -> Result<u64> {
    let tree = AncestorTriangle::build(alpha)?;
    let cf = tree.cf().terms().to_vec();
    let levels = level_endpoints(&cf)?;
    let (principal, _) = seifert_paths(&tree);
    let z = crossing_counts(&tree, &principal, &levels);
    Ok(*z.last().expect("nonempty"))
}

fn even_indicator(c: u64) -> i64 {
    // (1 + (−1)^c) / 2
    if c % 2 == 0 {
        1
    } else {
        0
    }
}

fn odd_indicator(c: u64) -> i64 {
    1 - even_indicator(c)
}

/// wr or wr_pm of a truncation, selected by the parity of the given term:
/// even picks the principal writhe, odd the alternate.
fn writhe_variant(alpha: Fraction, pick_alternate_if_odd: u64) -> Result<i64> {
    let r = writhe_recursive(alpha)?;
    if pick_alternate_if_odd % 2 == 0 {
        Ok(r.wr)
    } else {
        r.wr_pm.ok_or_else(|| {
            Error::out_of_domain(format!("wr_pm is undefined for {alpha} (odd denominator)"))
        })
    }
}

/// Writhe by the recursion on the negative continued fraction of 1/α,
/// dispatched on the parity types of α and its one-step truncation.
pub fn writhe_recursive(alpha: Fraction) -> Result<WritheResult> {
    let alpha = normalized(alpha)?;
    let cf = crate::cfrac::negative_expand(alpha.recip())?;
    let c = cf.terms().to_vec();
    let l = c.len();

    if l == 1 {
        let c1 = c[0] as i64;
        let wr = if c[0] % 2 == 0 { c1 } else { -c1 };
        let wr_pm = (c[0] % 2 == 0).then_some(-c1);
        return Ok(WritheResult { wr, wr_pm });
    }
    if l == 2 {
        let (c1, c2) = (c[0] as i64, c[1] as i64);
        let wr = sgn((c1 - 1) * c2) * c1 + sgn(c1) * c2 - 1;
        let wr_pm = (c[0] % 2 == 1 && c[1] % 2 == 1).then_some(-c1 + c2 - 1);
        return Ok(WritheResult { wr, wr_pm });
    }

    let prev = evaluate_negative(&c[..l - 1])?.recip();
    let prev2 = evaluate_negative(&c[..l - 2])?.recip();
    let (cl, cl1) = (c[l - 1], c[l - 2]);
    let (cl_i, cl1_i) = (cl as i64, cl1 as i64);

    let wr;
    let mut wr_pm = None;
    match (prev.parity_type(), alpha.parity_type()) {
        (FractionType::OneZero, FractionType::OneOne) => {
            let z = final_crossing_count(prev)? as i64;
            let pm = writhe_recursive(prev)?.wr_pm.expect("1/0-type truncation");
            wr = pm + sgn(z + even_indicator(cl) + 1) * (cl_i - 1);
        }
        (FractionType::ZeroOne, FractionType::OneOne) => {
            let z = final_crossing_count(prev2)? as i64;
            let base = writhe_variant(prev2, cl)?; // ε(c_l)
            wr = base + sgn(z + even_indicator(cl1) + odd_indicator(cl)) * (-cl1_i + cl_i + 2);
        }
        (FractionType::OneZero, FractionType::ZeroOne) => {
            let z = final_crossing_count(prev)? as i64;
            wr = writhe_recursive(prev)?.wr + sgn(z + even_indicator(cl)) * (cl_i - 1);
        }
        (FractionType::OneOne, FractionType::ZeroOne) => {
            let z = final_crossing_count(prev2)? as i64;
            wr = writhe_recursive(prev2)?.wr
                + sgn(z + even_indicator(cl1)) * (-cl1_i + cl_i + 2);
        }
        (FractionType::ZeroOne, FractionType::OneZero) => {
            let z1 = final_crossing_count(prev)? as i64;
            wr = writhe_recursive(prev)?.wr + sgn(z1 + even_indicator(cl)) * (cl_i - 1);
            // The closed form for the alternate writhe breaks when the
            // alternate Seifert path runs along an F edge; recurse through
            // the mirror identity wr_pm(α) = −wr(1 − α) instead.
            wr_pm = Some(-writhe_recursive(alpha.one_minus()?)?.wr);
        }
        (FractionType::OneOne, FractionType::OneZero) => {
            let z2 = final_crossing_count(prev2)? as i64;
            wr = writhe_recursive(prev2)?.wr
                + sgn(z2 + even_indicator(cl1)) * (-cl1_i + cl_i + 2);
            wr_pm = Some(
                writhe_recursive(prev)?.wr + sgn(z2 + even_indicator(cl1) + 1) * (cl_i - 1),
            );
        }
        (a, b) => unreachable!("consecutive truncations share type {a} = {b}"),
    }
    Ok(WritheResult { wr, wr_pm })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn paper_values_by_sign_walk() {
        assert_eq!(writhe_sign_walk(frac(3, 5)).unwrap().wr, 0);
        assert_eq!(writhe_sign_walk(frac(13, 21)).unwrap().wr, -1);
        let r = writhe_sign_walk(frac(9, 16)).unwrap();
        assert_eq!(r.wr, 3);
        assert!(r.wr_pm.is_some());
        // derived from the leading term of V
        assert_eq!(writhe_sign_walk(frac(5, 12)).unwrap().wr, 2);
    }

    #[test]
    fn base_cases() {
        // wr(1/c) = (−1)^c c, and wr_pm(1/c) = −c for even c
        for c in 2..10u64 {
            let alpha = frac(1, c);
            let expected = if c % 2 == 0 { c as i64 } else { -(c as i64) };
            for f in [writhe_sign_walk, writhe_quadrilateral, writhe_recursive] {
                let r = f(alpha).unwrap();
                assert_eq!(r.wr, expected, "wr(1/{c})");
                if c % 2 == 0 {
                    assert_eq!(r.wr_pm, Some(-(c as i64)), "wr_pm(1/{c})");
                } else {
                    assert_eq!(r.wr_pm, None);
                }
            }
        }
        assert_eq!(writhe_recursive(frac(1, 3)).unwrap().wr, -3);
    }

    #[test]
    fn reciprocal_normalization() {
        assert_eq!(
            writhe_sign_walk(frac(21, 13)).unwrap(),
            writhe_sign_walk(frac(13, 21)).unwrap()
        );
        assert!(writhe_sign_walk(Fraction::ONE).is_err());
        assert!(writhe_sign_walk(Fraction::ZERO).is_err());
    }

    #[test]
    fn quadrilateral_examples() {
        // 9/16: z_1 = 1, wr = wr(1/2) − (−1)^{z_1} = 3
        let d = writhe_quadrilateral_detail(frac(9, 16)).unwrap();
        assert_eq!(d.crossings[0], 1);
        assert_eq!(d.result.wr, 3);
        // 13/21: wr = wr(3/5) + (−1)^{z_2} with z_2(α_2) = 1
        let d = writhe_quadrilateral_detail(frac(13, 21)).unwrap();
        assert_eq!(d.result.wr, -1);
        assert_eq!(final_crossing_count(frac(3, 5)).unwrap(), 1);
        // 1/2
        assert_eq!(writhe_quadrilateral(frac(1, 2)).unwrap().wr, 2);
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(writhe_recursive(frac(13, 21)).unwrap().wr, -1);
        let r = writhe_recursive(frac(9, 16)).unwrap();
        assert_eq!(r.wr, 3);
        assert_eq!(r.wr_pm, Some(3));
    }

    #[test]
    fn seifert_path_shapes() {
        // odd denominator: a unique principal path
        let tree = AncestorTriangle::build(frac(13, 21)).unwrap();
        let (p, alt) = seifert_paths(&tree);
        assert!(alt.is_none());
        assert_eq!(p.vertices.first(), Some(&Fraction::INFINITY));
        assert_eq!(p.vertices.last(), Some(&frac(13, 21)));
        // even denominator: exactly two
        let tree = AncestorTriangle::build(frac(9, 16)).unwrap();
        let (p, alt) = seifert_paths(&tree);
        let alt = alt.expect("two Seifert paths");
        assert_eq!(p.variant, PathVariant::Principal);
        assert_eq!(alt.variant, PathVariant::Alternate);
        assert_ne!(p.vertices, alt.vertices);
    }

    #[test]
    fn three_way_agreement_small() {
        for den in 2..40u64 {
            for num in 1..den {
                let Ok(alpha) = Fraction::new(num, den) else {
                    continue;
                };
                let a = writhe_sign_walk(alpha).unwrap();
                let b = writhe_quadrilateral(alpha).unwrap();
                let c = writhe_recursive(alpha).unwrap();
                assert_eq!(a, b, "sign walk vs quadrilateral at {alpha}");
                assert_eq!(a, c, "sign walk vs recursion at {alpha}");
            }
        }
    }

    #[test]
    fn alternate_orientation_mirror_identity() {
        // wr_pm(α) = −wr(1 − α) for 1/0-type α
        for den in 2..40u64 {
            for num in 1..den {
                let Ok(alpha) = Fraction::new(num, den) else {
                    continue;
                };
                if alpha.parity_type() != FractionType::OneZero {
                    continue;
                }
                let pm = writhe_sign_walk(alpha).unwrap().wr_pm.unwrap();
                let mirror = writhe_sign_walk(alpha.one_minus().unwrap()).unwrap().wr;
                assert_eq!(pm, -mirror, "wr_pm vs mirror at {alpha}");
            }
        }
    }
}

//! q-rational numbers [α]_q = N_q(α)/D_q(α).
//!
//! The numerator and denominator are produced directly from pair q-integers
//! (no polynomial division): for α = x/a ≥ 1 with r = x mod a,
//!
//!   N_q(x/a) = (a, x−a)_q,    D_q(x/a) = (a−r, r)_q,
//!
//! with the conventions N_q(1/0) = 1, D_q(1/0) = 0. The unreduced evaluation
//! of the q-deformed negative continued fraction is kept as a cross-check via
//! cross-multiplication.

use crate::cfrac::{farey_neighbors, NegativeCf};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::laurent::{qint, LaurentPoly};
use crate::qint::q_pair;

/// A q-rational: the source fraction with its numerator/denominator pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRational {
    pub source: Fraction,
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

/// [α]_q for α ≥ 1 or α = ∞.
pub fn q_rational(alpha: Fraction) -> Result<QRational> {
    if alpha.is_infinite() {
        return Ok(QRational {
            source: alpha,
            num: LaurentPoly::one(),
            den: LaurentPoly::zero(),
        });
    }
    if alpha < Fraction::ONE {
        return Err(Error::out_of_domain(format!(
            "q-rationals are defined for α ≥ 1, got {alpha}; use the reciprocal"
        )));
    }
    let (x, a) = (alpha.num(), alpha.den());
    let r = x % a;
    Ok(QRational {
        source: alpha,
        num: q_pair(a, x - a)?,
        den: q_pair(a - r, r)?,
    })
}

/// Bottom-up evaluation of the q-deformed negative continued fraction
/// [c_1]_q − q^{c_1−1}/([c_2]_q − …), kept as an unreduced
/// (numerator, denominator) pair. No polynomial division is performed.
pub fn q_cf_evaluate(cf: &NegativeCf) -> (LaurentPoly, LaurentPoly) {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::zero();
    for &c in cf.terms().iter().rev() {
        // [c]_q - q^{c-1} · den/num = ([c]_q·num - q^{c-1}·den) / num
        let head = &qint(c) * &num;
        let tail = den.shift(c as i64 - 1, 1);
        den = num;
        num = &head - &tail;
    }
    (num, den)
}

/// Weighted q-Farey sum: for Farey-neighbor sources α, β (α < β, both ≥ 1,
/// β = ∞ allowed), the weight is q^w with w = ⌈N(α)/N(β)⌉ and
///
///   [α]_q ⊕ [β]_q = (N_q(α) + q^w N_q(β)) / (D_q(α) + q^w D_q(β)),
///
/// which equals [α ♯ β]_q componentwise.
pub fn q_farey_sum(a: &QRational, b: &QRational) -> Result<QRational> {
    if !farey_neighbors(a.source, b.source) {
        return Err(Error::NotNeighbors(
            a.source.num(),
            a.source.den(),
            b.source.num(),
            b.source.den(),
        ));
    }
    if a.source < Fraction::ONE {
        return Err(Error::out_of_domain(format!(
            "q-Farey sum needs sources ≥ 1, got {}",
            a.source
        )));
    }
    let w = a.source.num().div_ceil(b.source.num()) as i64;
    let source = a.source.mediant(&b.source)?;
    Ok(QRational {
        source,
        num: &a.num + &b.num.shift(w, 1),
        den: &a.den + &b.den.shift(w, 1),
    })
}

//! Hat series: Laurent extensions of `t(y)` and `m(x)` on which `vee` and
//! `wedge` act by plain multiplication, up to the unit `hat(1)`.

use malachite_base::num::basic::traits::One;
use malachite_q::Rational;

use super::{require_concave, require_convex, vee, wedge};
use crate::error::{Error, Result};
use crate::poly::{binomial, LaurentSeries, TaggedPoly};

/// First `terms` coefficients of `sqrt(1-4z)`.
pub fn sqrt_one_minus_4z(terms: usize) -> Vec<Rational> {
    // C(1/2, n) (-4)^n: consecutive ratio (4n-6)/n.
    binomial_series(terms, 6)
}

/// First `terms` coefficients of `1/sqrt(1-4z)`, the central binomials.
pub fn inv_sqrt_one_minus_4z(terms: usize) -> Vec<Rational> {
    binomial_series(terms, 2)
}

fn binomial_series(terms: usize, shift: i64) -> Vec<Rational> {
    let mut out = Vec::with_capacity(terms);
    let mut c = Rational::ONE;
    for n in 0..terms as i64 {
        if n > 0 {
            c *= Rational::from(4 * n - shift) / Rational::from(n);
        }
        out.push(c.clone());
    }
    out
}

fn check_order(order: i64) -> Result<()> {
    if order < 1 {
        return Err(Error::domain(format!(
            "hat series order must be at least 1, got {order}"
        )));
    }
    Ok(())
}

/// `t(y) - t(y/(y-1))/(y-1)` expanded in `1/y`, known to `y^(-order)`.
///
/// With `d = deg t`, the numerator `q = (y-1)^d t(y/(y-1))` is a polynomial
/// obtained by exact shifts and a reversal, and the division by
/// `(y-1)^(d+1)` uses `sum_i C(d+i, d) y^(-(d+1)-i)`.
pub fn hat_t(t: &TaggedPoly, order: i64) -> Result<LaurentSeries> {
    require_concave("hat_t", t)?;
    check_order(order)?;
    let tag = t.tag();
    let Some(d) = t.degree() else {
        return Ok(LaurentSeries::new(tag, order, Vec::new()));
    };
    let q = t
        .taylor_shift(&Rational::ONE)
        .reversed(d)?
        .taylor_shift(&Rational::from(-1));
    let terms = (0..order).map(|i| {
        let c = binomial(d as u64 + i as u64, d as u64);
        (-(d as i64 + 1) - i, Rational::from(c))
    });
    let inv_pow = LaurentSeries::from_terms(tag, d as i64 + order, terms);
    let tail = LaurentSeries::from_poly(&q, order).mul(&inv_pow)?;
    LaurentSeries::from_poly(t, order).sub(&tail)
}

/// `(1/s) [m s / 2]_{>=0} + m/2` with `s = sqrt(1-4/x)`, known to
/// `x^(-order)`.
pub fn hat_m(m: &TaggedPoly, order: i64) -> Result<LaurentSeries> {
    require_convex("hat_m", m)?;
    check_order(order)?;
    let tag = m.tag();
    let Some(d) = m.degree() else {
        return Ok(LaurentSeries::new(tag, order, Vec::new()));
    };
    let s = sqrt_one_minus_4z(d + 1);
    let half = Rational::from_signeds(1, 2);
    let nonneg: Vec<Rational> = (0..=d)
        .map(|k| (k..=d).map(|e| m.coeff(e) * &s[e - k]).sum::<Rational>() * &half)
        .collect();
    let p = TaggedPoly::new(tag, nonneg);
    let deep = order + d as i64;
    let inv_s = inv_sqrt_one_minus_4z(deep as usize + 1);
    let inv_s = LaurentSeries::from_terms(tag, deep, inv_s.into_iter().enumerate().map(|(n, c)| (-(n as i64), c)));
    let r = LaurentSeries::from_poly(&p, deep).mul(&inv_s)?;
    r.add(&LaurentSeries::from_poly(&m.scale(&half), order))
        .map(|h| h.truncate(order))
}

/// `hat(a) hat(b)` and `hat(a op b) hat(1)` compared to `y^(-order)`.
fn hat_identity(
    a: &TaggedPoly,
    b: &TaggedPoly,
    order: i64,
    hat: fn(&TaggedPoly, i64) -> Result<LaurentSeries>,
    op: fn(&TaggedPoly, &TaggedPoly) -> Result<TaggedPoly>,
) -> Result<bool> {
    let da = a.degree().unwrap_or(0) as i64;
    let db = b.degree().unwrap_or(0) as i64;
    let lhs = hat(a, order + db)?.mul(&hat(b, order + da)?)?;
    let unit = hat(&TaggedPoly::one(a.tag()), order + da + db)?;
    let rhs = hat(&op(a, b)?, order)?.mul(&unit)?;
    lhs.agrees_to(&rhs, order)
}

/// `hat_t(t1) hat_t(t2) = hat_t(t1 ∨ t2) hat_t(1)` through `y^(-order)`.
pub fn check_hat_identity_vee(t1: &TaggedPoly, t2: &TaggedPoly, order: i64) -> Result<bool> {
    hat_identity(t1, t2, order, hat_t, vee)
}

/// `hat_m(m1) hat_m(m2) = hat_m(m1 ∧ m2) hat_m(1)` through `x^(-order)`.
pub fn check_hat_identity_wedge(m1: &TaggedPoly, m2: &TaggedPoly, order: i64) -> Result<bool> {
    hat_identity(m1, m2, order, hat_m, wedge)
}

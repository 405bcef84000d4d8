//! The basis changes between concave (`y`, `u`) and convex (`x`, `v`)
//! polynomials, the products they conjugate (`vee`, `wedge`), their
//! bivariate lifts, the hat series, and identity checks.
//!
//! `apply_m` sends `y^n` to `sum_k (-1)^k C(n-k,k) x^(n-k)`; `apply_t` sends
//! `x^n` to `sum_k C(2n-k,n-k) k/(2n-k) y^k`. They are mutually inverse.

pub mod closed;
mod hat;
mod kernel;

use malachite_base::num::basic::traits::One;
use malachite_q::Rational;

pub use hat::{
    check_hat_identity_vee, check_hat_identity_wedge, hat_m, hat_t, inv_sqrt_one_minus_4z, sqrt_one_minus_4z,
};

use crate::error::{Error, Result};
use crate::poly::{clear_denominators, rescale, BasisTag, JointPoly, TaggedPoly};

pub(crate) fn require_concave(op: &'static str, p: &TaggedPoly) -> Result<()> {
    if p.tag().is_concave() {
        Ok(())
    } else {
        Err(Error::WrongBasis { op, found: p.tag() })
    }
}

pub(crate) fn require_convex(op: &'static str, p: &TaggedPoly) -> Result<()> {
    if p.tag().is_concave() {
        Err(Error::WrongBasis { op, found: p.tag() })
    } else {
        Ok(())
    }
}

/// Concave to convex basis: `y -> x`, `u -> v`.
pub fn apply_m(t: &TaggedPoly) -> Result<TaggedPoly> {
    require_concave("apply_m", t)?;
    let (ints, den) = clear_denominators(t.coeffs());
    let out = rescale(kernel::concave_to_convex(&ints), &den);
    Ok(TaggedPoly::new(t.tag().to_convex(), out))
}

/// Convex to concave basis: `x -> y`, `v -> u`.
pub fn apply_t(m: &TaggedPoly) -> Result<TaggedPoly> {
    require_convex("apply_t", m)?;
    let (ints, den) = clear_denominators(m.coeffs());
    let out = rescale(kernel::convex_to_concave(&ints), &den);
    Ok(TaggedPoly::new(m.tag().to_concave(), out))
}

/// `t1 ∨ t2 = T(M(t1) * M(t2))` on concave polynomials.
pub fn vee(t1: &TaggedPoly, t2: &TaggedPoly) -> Result<TaggedPoly> {
    t1.ensure_same(t2)?;
    require_concave("vee", t1)?;
    apply_t(&apply_m(t1)?.mul(&apply_m(t2)?)?)
}

/// `m1 ∧ m2 = M(T(m1) * T(m2))` on convex polynomials.
pub fn wedge(m1: &TaggedPoly, m2: &TaggedPoly) -> Result<TaggedPoly> {
    m1.ensure_same(m2)?;
    require_convex("wedge", m1)?;
    apply_m(&apply_t(m1)?.mul(&apply_t(m2)?)?)
}

/// Which basis change a lift applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// Concave to convex.
    M,
    /// Convex to concave.
    T,
}

impl Transform {
    pub fn apply(self, p: &TaggedPoly) -> Result<TaggedPoly> {
        match self {
            Transform::M => apply_m(p),
            Transform::T => apply_t(p),
        }
    }
}

/// Applies `op` to the upper variable, column by column.
pub fn lift1(op: Transform, p: &JointPoly) -> Result<JointPoly> {
    let (up, lo) = p.tags();
    let cols = p.columns().iter().map(|c| op.apply(c)).collect::<Result<Vec<_>>>()?;
    let new_up = match op {
        Transform::M if up.is_concave() => up.to_convex(),
        Transform::T if !up.is_concave() => up.to_concave(),
        _ => return Err(Error::WrongBasis { op: "lift1", found: up }),
    };
    JointPoly::from_columns(new_up, lo, &cols)
}

/// Applies `op` to the lower variable, row by row.
pub fn lift2(op: Transform, p: &JointPoly) -> Result<JointPoly> {
    let (up, lo) = p.tags();
    let new_lo = match op {
        Transform::M if lo.is_concave() => lo.to_convex(),
        Transform::T if !lo.is_concave() => lo.to_concave(),
        _ => return Err(Error::WrongBasis { op: "lift2", found: lo }),
    };
    let rows = p.rows().iter().map(|r| op.apply(r)).collect::<Result<Vec<_>>>()?;
    JointPoly::from_rows(up, new_lo, &rows)
}

/// Re-expresses a joint polynomial in the requested pair of variables.
pub fn convert_joint(p: &JointPoly, upper: BasisTag, lower: BasisTag) -> Result<JointPoly> {
    if !upper.is_upper() || lower.is_upper() {
        return Err(Error::domain(format!("({upper}, {lower}) is not an upper/lower pair")));
    }
    let mut q = p.clone();
    if q.upper_tag() != upper {
        let op = if upper.is_concave() { Transform::T } else { Transform::M };
        q = lift1(op, &q)?;
    }
    if q.lower_tag() != lower {
        let op = if lower.is_concave() { Transform::T } else { Transform::M };
        q = lift2(op, &q)?;
    }
    Ok(q)
}

/// `M(t)(4) == t(2) + 2 t'(2)`, exactly.
pub fn check_m4_identity(t: &TaggedPoly) -> Result<bool> {
    let m = apply_m(t)?;
    let two = Rational::from(2);
    let rhs = t.eval(&two) + &two * t.derivative().eval(&two);
    Ok(m.eval(&Rational::from(4)) == rhs)
}

/// Checks `m(y^2/(y-1)) (y-2)/(y-1) = t(y) - t(y/(y-1))/(y-1)` at each
/// sample, with `m = M(t)`.
pub fn check_curious_formula(t: &TaggedPoly, samples: &[Rational]) -> Result<bool> {
    let m = apply_m(t)?;
    for y in samples {
        if *y == 1u32 {
            return Err(Error::domain("sample point y = 1 is excluded"));
        }
        let ym1 = y - Rational::ONE;
        let lhs = m.eval(&(y * y / &ym1)) * (y - Rational::from(2)) / &ym1;
        let rhs = t.eval(y) - t.eval(&(y / &ym1)) / &ym1;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `num / den` as a power series in `t` whose coefficients are polynomials;
/// `den[0]` must be a nonzero constant.
fn series_quotient(num: &[TaggedPoly], den: &[TaggedPoly], terms: usize) -> Result<Vec<TaggedPoly>> {
    let tag = den[0].tag();
    let d0 = match den[0].coeffs() {
        [c] if *c != 0u32 => c.clone(),
        _ => return Err(Error::domain("series denominator must start with a nonzero constant")),
    };
    let inv = Rational::ONE / d0;
    let mut out: Vec<TaggedPoly> = Vec::with_capacity(terms);
    for n in 0..terms {
        let mut acc = num.get(n).cloned().unwrap_or_else(|| TaggedPoly::zero(tag));
        for k in 1..=n.min(den.len().saturating_sub(1)) {
            acc = acc.sub(&den[k].mul(&out[n - k])?)?;
        }
        out.push(acc.scale(&inv));
    }
    Ok(out)
}

/// Coefficients of `t^0..=t^max_order` in `1/(1+(t^2-t)x)`.
pub fn gen_func_m_series(max_order: usize) -> Result<Vec<TaggedPoly>> {
    let x = TaggedPoly::var(BasisTag::X);
    let den = [TaggedPoly::one(BasisTag::X), x.neg(), x];
    series_quotient(&[TaggedPoly::one(BasisTag::X)], &den, max_order + 1)
}

/// Coefficients of `t^0..=t^max_order` in `2/(2-y+y*sqrt(1-4t))`.
pub fn gen_func_t_series(max_order: usize) -> Result<Vec<TaggedPoly>> {
    let y = TaggedPoly::var(BasisTag::Y);
    let s = sqrt_one_minus_4z(max_order + 1);
    let two = TaggedPoly::constant(BasisTag::Y, Rational::from(2));
    let den: Vec<TaggedPoly> = s
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let term = y.scale(c);
            if n == 0 {
                two.sub(&y).and_then(|p| p.add(&term))
            } else {
                Ok(term)
            }
        })
        .collect::<Result<_>>()?;
    series_quotient(&[two], &den, max_order + 1)
}

/// True iff the `t^n` coefficient of `1/(1+(t^2-t)x)` is `M(y^n)` for all
/// `n <= max_order`.
pub fn gen_func_check_m(max_order: usize) -> Result<bool> {
    let series = gen_func_m_series(max_order)?;
    for (n, f) in series.iter().enumerate() {
        if apply_m(&TaggedPoly::monomial(BasisTag::Y, n, Rational::ONE))? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the `t^n` coefficient of `2/(2-y+y*sqrt(1-4t))` is `T(x^n)` for
/// all `n <= max_order`.
pub fn gen_func_check_t(max_order: usize) -> Result<bool> {
    let series = gen_func_t_series(max_order)?;
    for (n, g) in series.iter().enumerate() {
        if apply_t(&TaggedPoly::monomial(BasisTag::X, n, Rational::ONE))? != *g {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both generating-function checks.
pub fn gen_func_check(max_order: usize) -> Result<bool> {
    Ok(gen_func_check_m(max_order)? && gen_func_check_t(max_order)?)
}

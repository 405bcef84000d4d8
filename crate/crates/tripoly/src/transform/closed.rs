//! Monomial images written out term by term. These are slower than the
//! kernels and serve as their reference.

use malachite_base::num::arithmetic::traits::DivExact;
use malachite_base::num::basic::traits::Zero;
use malachite_nz::integer::Integer;
use malachite_q::Rational;

use crate::error::Result;
use crate::poly::{binomial, TaggedPoly};

/// Coefficients of the convex image of `y^n`:
/// `sum_k (-1)^k C(n-k, k) x^(n-k)`.
pub fn concave_monomial_image(n: usize) -> Vec<Integer> {
    let mut out = vec![Integer::ZERO; n + 1];
    for k in 0..=n / 2 {
        let c = binomial((n - k) as u64, k as u64);
        out[n - k] = if k % 2 == 0 { c } else { -c };
    }
    out
}

/// Coefficients of the concave image of `x^n`:
/// `sum_{k=1..n} C(2n-k, n-k) k/(2n-k) y^k`, and `1` for `n = 0`.
pub fn convex_monomial_image(n: usize) -> Vec<Integer> {
    let mut out = vec![Integer::ZERO; n + 1];
    if n == 0 {
        out[0] = Integer::from(1);
        return out;
    }
    for (k, slot) in out.iter_mut().enumerate().skip(1) {
        let b = binomial((2 * n - k) as u64, (n - k) as u64) * Integer::from(k as u64);
        *slot = b.div_exact(Integer::from((2 * n - k) as u64));
    }
    out
}

fn expand(p: &TaggedPoly, image: fn(usize) -> Vec<Integer>) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; p.coeffs().len()];
    for (n, c) in p.coeffs().iter().enumerate() {
        if *c == 0u32 {
            continue;
        }
        for (k, b) in image(n).into_iter().enumerate() {
            if b != 0 {
                out[k] += c * Rational::from(b);
            }
        }
    }
    out
}

/// Concave-to-convex change of basis by summing monomial images.
pub fn to_convex_by_monomials(t: &TaggedPoly) -> Result<TaggedPoly> {
    super::require_concave("to_convex_by_monomials", t)?;
    Ok(TaggedPoly::new(t.tag().to_convex(), expand(t, concave_monomial_image)))
}

/// Convex-to-concave change of basis by summing monomial images.
pub fn to_concave_by_monomials(m: &TaggedPoly) -> Result<TaggedPoly> {
    super::require_convex("to_concave_by_monomials", m)?;
    Ok(TaggedPoly::new(m.tag().to_concave(), expand(m, convex_monomial_image)))
}

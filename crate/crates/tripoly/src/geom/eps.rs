//! Point families `base + eps * dir` and the choice of a small `eps`.
//!
//! Every orientation in a family is a polynomial of degree at most two in
//! `eps`. Its sign for all small `eps` is the sign of the lowest nonzero
//! coefficient, and it keeps that sign below an explicit bound. The chosen
//! `eps` is the first `2^-k` under every bound.

use std::cmp::Ordering;

use malachite_base::num::arithmetic::traits::{Abs, Sign};
use malachite_base::num::basic::traits::One;
use malachite_q::Rational;

use super::{order_type, Point, PointSet};
use crate::error::{Error, Result};

const MAX_HALVINGS: u32 = 64;

#[derive(Clone, Debug)]
pub(crate) struct EpsPoint {
    pub base: Point,
    pub dir: Point,
}

impl EpsPoint {
    pub fn fixed(p: Point) -> Self {
        EpsPoint {
            base: p,
            dir: Point::origin(),
        }
    }

    pub fn at(&self, eps: &Rational) -> Point {
        &self.base + &self.dir.scale(eps)
    }
}

/// `orient(a, b, c)` as `[c0, c1, c2]` in powers of `eps`.
pub(crate) fn orient_poly(a: &EpsPoint, b: &EpsPoint, c: &EpsPoint) -> [Rational; 3] {
    let u0 = &b.base - &a.base;
    let u1 = &b.dir - &a.dir;
    let v0 = &c.base - &a.base;
    let v1 = &c.dir - &a.dir;
    [u0.cross(&v0), u0.cross(&v1) + u1.cross(&v0), u1.cross(&v1)]
}

/// Sign of `c` for all small positive `eps`, and a bound below which that
/// sign holds. `None` if `c` is identically zero.
pub(crate) fn limit_sign(c: &[Rational]) -> Option<(Ordering, Rational)> {
    let j = c.iter().position(|v| *v != 0u32)?;
    let lead = (&c[j]).abs();
    let rest: Rational = c[j + 1..].iter().map(|v| v.abs()).sum();
    let bound = if rest == 0u32 {
        Rational::ONE
    } else {
        &lead / (&lead + rest)
    };
    Some((c[j].sign(), bound))
}

/// Largest `2^-k`, `k >= 2`, strictly below `bound`.
pub(crate) fn ladder(bound: &Rational) -> Result<Rational> {
    let mut eps = Rational::from_signeds(1, 4);
    for _ in 2..=MAX_HALVINGS {
        if eps < *bound {
            return Ok(eps);
        }
        eps /= Rational::from(2);
    }
    Err(Error::Realization(format!(
        "no eps above 2^-{MAX_HALVINGS} is small enough"
    )))
}

/// True iff `c0 + c1 t + c2 t^2` vanishes somewhere in the open interval
/// `(0, 1)`.
pub(crate) fn has_root_in_unit_interval(c: &[Rational; 3]) -> bool {
    let [c0, c1, c2] = c;
    let f1 = c0 + c1 + c2;
    if *c2 == 0u32 {
        if *c1 == 0u32 {
            return false;
        }
        let r = -(c0 / c1);
        return r > 0u32 && r < 1u32;
    }
    if c0.sign() != Ordering::Equal && c0.sign() != f1.sign() && f1.sign() != Ordering::Equal {
        return true;
    }
    let disc = c1 * c1 - Rational::from(4) * c0 * c2;
    if disc < 0u32 {
        return false;
    }
    let v = -(c1 / (Rational::from(2) * c2));
    if v <= 0u32 || v >= 1u32 {
        return false;
    }
    let fv = c0 + c1 * &v + c2 * &v * &v;
    fv.sign() != f1.sign() || fv == 0u32
}

/// Chooses `eps` so that the family has its limiting order type, and, when
/// `monotone`, strictly increasing `x` in list order. The order type at
/// `eps` is certified equal to the one at `eps / 2`.
pub(crate) fn settle(family: &[EpsPoint], monotone: bool) -> Result<(Rational, PointSet)> {
    let n = family.len();
    let mut bound = Rational::ONE;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let c = orient_poly(&family[i], &family[j], &family[k]);
                let (_, b) = limit_sign(&c)
                    .ok_or_else(|| Error::Realization(format!("points {i}, {j}, {k} stay collinear for every eps")))?;
                bound = bound.min(b);
            }
        }
    }
    if monotone {
        for (i, w) in family.windows(2).enumerate() {
            let c = [&w[1].base.x - &w[0].base.x, &w[1].dir.x - &w[0].dir.x];
            match limit_sign(&c) {
                Some((Ordering::Greater, b)) => bound = bound.min(b),
                _ => {
                    return Err(Error::Realization(format!(
                        "points {i} and {} are not x-ordered for small eps",
                        i + 1
                    )))
                }
            }
        }
    }
    let eps = ladder(&bound)?;
    let at = |e: &Rational| family.iter().map(|p| p.at(e)).collect::<PointSet>();
    let points = at(&eps);
    let half = &eps / Rational::from(2);
    if order_type(&points)? != order_type(&at(&half))? {
        return Err(Error::Realization(format!(
            "order type still changes below eps = {eps}"
        )));
    }
    Ok((eps, points))
}

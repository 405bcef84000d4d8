use malachite_base::num::basic::traits::Zero;
use malachite_q::Rational;

use super::tagged::mul_coeffs;
use super::{BasisTag, TaggedPoly};
use crate::error::{Error, Result};

/// A Laurent series in `1/var`, known exactly down to `var^(-order)`.
///
/// Coefficients below `-order` are unknown, not zero. Products shrink the
/// known range as needed: if `a` is known to order `Na` with top exponent
/// `da`, and `b` likewise, then `a*b` is known to order
/// `min(Na - db, Nb - da)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    tag: BasisTag,
    order: i64,
    /// `coeffs[k]` multiplies `var^(k - order)`.
    coeffs: Vec<Rational>,
}

impl LaurentSeries {
    /// `coeffs[k]` is the coefficient of `var^(k - order)`.
    pub fn new(tag: BasisTag, order: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0u32) {
            coeffs.pop();
        }
        LaurentSeries { tag, order, coeffs }
    }

    /// A polynomial viewed as a series known to `order`.
    pub fn from_poly(p: &TaggedPoly, order: i64) -> Self {
        let coeffs = if order >= 0 {
            let mut v = vec![Rational::ZERO; order as usize];
            v.extend(p.coeffs().iter().cloned());
            v
        } else {
            p.coeffs().iter().skip((-order) as usize).cloned().collect()
        };
        Self::new(p.tag(), order, coeffs)
    }

    /// Builds from `(exponent, coefficient)` pairs; exponents below
    /// `-order` are dropped.
    pub fn from_terms(tag: BasisTag, order: i64, terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in terms {
            let k = e + order;
            if k < 0 {
                continue;
            }
            let k = k as usize;
            if k >= coeffs.len() {
                coeffs.resize(k + 1, Rational::ZERO);
            }
            coeffs[k] += c;
        }
        Self::new(tag, order, coeffs)
    }

    pub fn tag(&self) -> BasisTag {
        self.tag
    }

    /// Coefficients are known for every exponent `>= -order`.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Largest exponent with a nonzero coefficient, if any is known.
    pub fn top_exponent(&self) -> Option<i64> {
        self.coeffs.len().checked_sub(1).map(|k| k as i64 - self.order)
    }

    /// `None` below the truncation order.
    pub fn coeff(&self, e: i64) -> Option<Rational> {
        let k = e + self.order;
        if k < 0 {
            return None;
        }
        Some(self.coeffs.get(k as usize).cloned().unwrap_or(Rational::ZERO))
    }

    /// Known nonzero terms, highest exponent first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != 0u32)
            .map(move |(k, c)| (k as i64 - self.order, c))
    }

    fn ensure_same(&self, other: &Self) -> Result<()> {
        if self.tag == other.tag {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                left: self.tag,
                right: other.tag,
            })
        }
    }

    /// Top exponent used for order bookkeeping; an all-zero series behaves as
    /// if its first unknown term sat just below the known range.
    fn effective_top(&self) -> i64 {
        self.top_exponent().unwrap_or(-self.order - 1)
    }

    /// Drops every term below `var^(-order)`.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        let skip = (self.order - order) as usize;
        Self::new(self.tag, order, self.coeffs.iter().skip(skip).cloned().collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let order = self.order.min(other.order);
        let terms = self
            .terms()
            .chain(other.terms())
            .map(|(e, c)| (e, c.clone()))
            .collect::<Vec<_>>();
        Ok(Self::from_terms(self.tag, order, terms))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.tag, self.order, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.tag, self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product, with the truncation order worked out from both operands.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let order = (self.order - other.effective_top()).min(other.order - self.effective_top());
        let prod = mul_coeffs(&self.coeffs, &other.coeffs);
        // prod[k] multiplies var^(k - self.order - other.order).
        let offset = self.order + other.order;
        let terms = prod.into_iter().enumerate().map(|(k, c)| (k as i64 - offset, c));
        Ok(Self::from_terms(self.tag, order, terms))
    }

    /// The polynomial made of the nonnegative powers. Needs `order >= 0`.
    pub fn nonneg_part(&self) -> Result<TaggedPoly> {
        if self.order < 0 {
            return Err(Error::domain(format!(
                "constant term unknown: series only known to order {}",
                self.order
            )));
        }
        Ok(TaggedPoly::new(
            self.tag,
            self.coeffs.iter().skip(self.order as usize).cloned().collect(),
        ))
    }

    /// Coefficient-wise equality for every exponent `>= -order`. Both series
    /// must be known that far.
    pub fn agrees_to(&self, other: &Self, order: i64) -> Result<bool> {
        self.ensure_same(other)?;
        if self.order < order || other.order < order {
            return Err(Error::domain(format!(
                "cannot compare to order {order}: operands known to {} and {}",
                self.order, other.order
            )));
        }
        let top = self.effective_top().max(other.effective_top());
        Ok((-order..=top).all(|e| self.coeff(e) == other.coeff(e)))
    }
}

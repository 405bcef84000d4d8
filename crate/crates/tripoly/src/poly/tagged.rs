use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_q::Rational;

use super::{clear_denominators, intpoly, rescale, BasisTag};
use crate::error::{Error, Result};

/// A dense univariate polynomial over the rationals, tagged with its variable.
///
/// The coefficient list is indexed by exponent and never has a trailing zero,
/// so the zero polynomial has an empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaggedPoly {
    tag: BasisTag,
    coeffs: Vec<Rational>,
}

impl TaggedPoly {
    pub fn new(tag: BasisTag, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0u32) {
            coeffs.pop();
        }
        TaggedPoly { tag, coeffs }
    }

    pub fn from_ints(tag: BasisTag, coeffs: &[i64]) -> Self {
        Self::new(tag, coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn from_integers(tag: BasisTag, coeffs: Vec<Integer>) -> Self {
        Self::new(tag, coeffs.into_iter().map(Rational::from).collect())
    }

    pub fn zero(tag: BasisTag) -> Self {
        TaggedPoly {
            tag,
            coeffs: Vec::new(),
        }
    }

    pub fn one(tag: BasisTag) -> Self {
        Self::constant(tag, Rational::ONE)
    }

    pub fn constant(tag: BasisTag, c: Rational) -> Self {
        Self::new(tag, vec![c])
    }

    /// The variable itself.
    pub fn var(tag: BasisTag) -> Self {
        Self::monomial(tag, 1, Rational::ONE)
    }

    /// `c * var^exp`.
    pub fn monomial(tag: BasisTag, exp: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::ZERO; exp + 1];
        coeffs[exp] = c;
        Self::new(tag, coeffs)
    }

    pub fn tag(&self) -> BasisTag {
        self.tag
    }

    /// Coefficients indexed by exponent.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| *c != 0u32)
    }

    /// The coefficient of `var^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or(Rational::ZERO)
    }

    /// Same coefficients under another variable name.
    pub fn retag(mut self, tag: BasisTag) -> Self {
        self.tag = tag;
        self
    }

    pub(crate) fn ensure_same(&self, other: &Self) -> Result<()> {
        if self.tag == other.tag {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                left: self.tag,
                right: other.tag,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::new(self.tag, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TaggedPoly {
            tag: self.tag,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.tag, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        Ok(Self::new(self.tag, mul_coeffs(&self.coeffs, &other.coeffs)))
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::ZERO; k];
        coeffs.extend(self.coeffs.iter().cloned());
        TaggedPoly { tag: self.tag, coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::ZERO, |acc, c| acc * at + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from(k as u64))
            .collect();
        Self::new(self.tag, coeffs)
    }

    /// `p(var + c)`, by repeated synthetic division.
    pub fn taylor_shift(&self, c: &Rational) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for k in (i..n.saturating_sub(1)).rev() {
                let t = c * &a[k + 1];
                a[k] += t;
            }
        }
        Self::new(self.tag, a)
    }

    /// Coefficient reversal at degree `d`: `var^d * p(1/var)`.
    pub fn reversed(&self, d: usize) -> Result<Self> {
        if self.coeffs.len() > d + 1 {
            return Err(Error::domain(format!(
                "cannot reverse a degree-{} polynomial at degree {d}",
                self.coeffs.len() - 1
            )));
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(d + 1, Rational::ZERO);
        coeffs.reverse();
        Ok(Self::new(self.tag, coeffs))
    }

    /// The coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<Integer>> {
        self.coeffs.iter().map(super::integer_value).collect()
    }
}

/// Exact product of coefficient lists, routed through the integer kernel.
pub(crate) fn mul_coeffs(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (ia, da) = clear_denominators(a);
    let (ib, db) = clear_denominators(b);
    rescale(intpoly::mul(&ia, &ib), &(da * db))
}

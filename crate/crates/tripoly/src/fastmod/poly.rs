use std::fmt;

use super::ntt::convolve;
use super::Modulus;
use crate::error::{Error, Result};
use crate::poly::{BasisTag, TaggedPoly};

/// Dense polynomial over `Z/p`, tagged like [`TaggedPoly`]. Residues lie in
/// `[0, p)` and trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    tag: BasisTag,
    modulus: Modulus,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(tag: BasisTag, modulus: Modulus, mut coeffs: Vec<u64>) -> Self {
        let p = modulus.value();
        coeffs.iter_mut().for_each(|c| *c %= p);
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { tag, modulus, coeffs }
    }

    pub fn from_i64s(tag: BasisTag, modulus: Modulus, coeffs: &[i64]) -> Self {
        Self::new(tag, modulus, coeffs.iter().map(|&c| modulus.reduce_i64(c)).collect())
    }

    /// Reduction of an exact polynomial; fails if a denominator vanishes.
    pub fn from_poly(p: &TaggedPoly, modulus: Modulus) -> Result<Self> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| modulus.reduce_rational(c))
            .collect::<Result<_>>()?;
        Ok(Self::new(p.tag(), modulus, coeffs))
    }

    pub fn zero(tag: BasisTag, modulus: Modulus) -> Self {
        Self::new(tag, modulus, Vec::new())
    }

    pub fn tag(&self) -> BasisTag {
        self.tag
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn retag(mut self, tag: BasisTag) -> Self {
        self.tag = tag;
        self
    }

    pub(crate) fn ensure_same(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus.value(), other.modulus.value()));
        }
        if self.tag != other.tag {
            return Err(Error::BasisMismatch {
                left: self.tag,
                right: other.tag,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let m = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| m.add(self.coeff(k), other.coeff(k))).collect();
        Ok(Self::new(self.tag, m, c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let m = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| m.sub(self.coeff(k), other.coeff(k))).collect();
        Ok(Self::new(self.tag, m, c))
    }

    pub fn scale(&self, c: u64) -> Self {
        let m = self.modulus;
        Self::new(
            self.tag,
            m,
            self.coeffs.iter().map(|&a| m.mul(a, c % m.value())).collect(),
        )
    }

    /// NTT product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        Ok(Self::new(
            self.tag,
            self.modulus,
            convolve(self.modulus, &self.coeffs, &other.coeffs)?,
        ))
    }

    pub fn eval(&self, at: u64) -> u64 {
        let m = self.modulus;
        self.coeffs.iter().rev().fold(0, |acc, &c| m.add(m.mul(acc, at), c))
    }

    /// `y^d p(1/y)`; requires `deg p <= d`.
    pub fn reversed(&self, d: usize) -> Result<Self> {
        if self.degree().is_some_and(|k| k > d) {
            return Err(Error::domain(format!(
                "degree {} exceeds reversal degree {d}",
                self.coeffs.len() - 1
            )));
        }
        let mut c = self.coeffs.clone();
        c.resize(d + 1, 0);
        c.reverse();
        Ok(Self::new(self.tag, self.modulus, c))
    }

    /// Signed residues, for display and comparison with small integers.
    pub fn centered(&self) -> Vec<i64> {
        self.coeffs.iter().map(|&c| self.modulus.centered(c)).collect()
    }
}

impl fmt::Display for ModPoly {
    /// Written with centered residues, e.g. `y^2-y (mod 998244353)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ints: Vec<i64> = self.centered();
        write!(f, "{} (mod {})", TaggedPoly::from_ints(self.tag, &ints), self.modulus)
    }
}

use malachite_base::num::basic::traits::Zero;
use malachite_q::Rational;

use super::tagged::mul_coeffs;
use super::{BasisTag, TaggedPoly};
use crate::error::{Error, Result};

/// A dense bivariate polynomial in an upper variable (`x` or `y`) and a lower
/// variable (`u` or `v`).
///
/// Row `i`, column `j` holds the coefficient of `upper^i * lower^j`. Trailing
/// all-zero rows and columns are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JointPoly {
    upper: BasisTag,
    lower: BasisTag,
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl JointPoly {
    /// Builds from row vectors; rows may have different lengths.
    pub fn new(upper: BasisTag, lower: BasisTag, rows: Vec<Vec<Rational>>) -> Result<Self> {
        check_tags(upper, lower)?;
        let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for mut r in rows {
            r.resize(cols, Rational::ZERO);
            data.extend(r);
        }
        Ok(Self::from_flat(upper, lower, n, cols, data))
    }

    pub fn from_ints(upper: BasisTag, lower: BasisTag, rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            upper,
            lower,
            rows.iter()
                .map(|r| r.iter().map(|&c| Rational::from(c)).collect())
                .collect(),
        )
    }

    fn from_flat(upper: BasisTag, lower: BasisTag, rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        let mut p = JointPoly {
            upper,
            lower,
            rows,
            cols,
            data,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        let nonzero = |c: &Rational| *c != 0u32;
        let rows = (0..self.rows)
            .rev()
            .find(|&i| self.data[i * self.cols..(i + 1) * self.cols].iter().any(nonzero))
            .map_or(0, |i| i + 1);
        let cols = (0..self.cols)
            .rev()
            .find(|&j| (0..rows).any(|i| nonzero(&self.data[i * self.cols + j])))
            .map_or(0, |j| j + 1);
        if rows == self.rows && cols == self.cols {
            return;
        }
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            data.extend(self.data[i * self.cols..i * self.cols + cols].iter().cloned());
        }
        self.rows = rows;
        self.cols = cols;
        self.data = data;
    }

    pub fn zero(upper: BasisTag, lower: BasisTag) -> Result<Self> {
        Self::new(upper, lower, Vec::new())
    }

    /// `c * upper^i * lower^j`.
    pub fn monomial(upper: BasisTag, lower: BasisTag, i: usize, j: usize, c: Rational) -> Result<Self> {
        let mut rows = vec![Vec::new(); i + 1];
        rows[i] = vec![Rational::ZERO; j + 1];
        rows[i][j] = c;
        Self::new(upper, lower, rows)
    }

    /// The outer product `p(upper) * q(lower)`.
    pub fn outer(p: &TaggedPoly, q: &TaggedPoly) -> Result<Self> {
        let rows = p
            .coeffs()
            .iter()
            .map(|a| q.coeffs().iter().map(|b| a * b).collect())
            .collect();
        Self::new(p.tag(), q.tag(), rows)
    }

    /// Assembles from column polynomials (column `j` is the upper-variable
    /// polynomial multiplying `lower^j`).
    pub fn from_columns(upper: BasisTag, lower: BasisTag, columns: &[TaggedPoly]) -> Result<Self> {
        let rows = columns.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
        let cols = columns.len();
        let mut data = vec![Rational::ZERO; rows * cols];
        for (j, c) in columns.iter().enumerate() {
            for (i, v) in c.coeffs().iter().enumerate() {
                data[i * cols + j] = v.clone();
            }
        }
        check_tags(upper, lower)?;
        Ok(Self::from_flat(upper, lower, rows, cols, data))
    }

    /// Assembles from row polynomials (row `i` is the lower-variable
    /// polynomial multiplying `upper^i`).
    pub fn from_rows(upper: BasisTag, lower: BasisTag, rows: &[TaggedPoly]) -> Result<Self> {
        Self::new(upper, lower, rows.iter().map(|r| r.coeffs().to_vec()).collect())
    }

    pub fn upper_tag(&self) -> BasisTag {
        self.upper
    }

    pub fn lower_tag(&self) -> BasisTag {
        self.lower
    }

    pub fn tags(&self) -> (BasisTag, BasisTag) {
        (self.upper, self.lower)
    }

    /// `(rows, cols)`: one more than the largest upper and lower exponents.
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_empty()
    }

    /// The coefficient of `upper^i * lower^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        if i < self.rows && j < self.cols {
            self.data[i * self.cols + j].clone()
        } else {
            Rational::ZERO
        }
    }

    /// Coefficients of `upper^i` as a polynomial in the lower variable.
    pub fn row(&self, i: usize) -> TaggedPoly {
        let coeffs = if i < self.rows {
            self.data[i * self.cols..(i + 1) * self.cols].to_vec()
        } else {
            Vec::new()
        };
        TaggedPoly::new(self.lower, coeffs)
    }

    /// Coefficients of `lower^j` as a polynomial in the upper variable.
    pub fn column(&self, j: usize) -> TaggedPoly {
        let coeffs = if j < self.cols {
            (0..self.rows).map(|i| self.data[i * self.cols + j].clone()).collect()
        } else {
            Vec::new()
        };
        TaggedPoly::new(self.upper, coeffs)
    }

    pub fn columns(&self) -> Vec<TaggedPoly> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn rows(&self) -> Vec<TaggedPoly> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Nonzero terms as `(i, j, coefficient)`, row-major.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0u32)
            .map(move |(k, c)| (k / self.cols, k % self.cols, c))
    }

    /// Smallest upper exponent and smallest lower exponent carrying a nonzero
    /// coefficient (taken independently).
    pub fn min_exponents(&self) -> Option<(usize, usize)> {
        let i = self.terms().map(|t| t.0).min()?;
        let j = self.terms().map(|t| t.1).min()?;
        Some((i, j))
    }

    /// Exponent transpose `p(a, b) -> p(b, a)`. Both variables must be in the
    /// same basis family (`(y, u)` or `(x, v)`).
    pub fn transpose(&self) -> Result<Self> {
        if self.upper.mirrored() != self.lower {
            return Err(Error::domain(format!(
                "cannot transpose a joint polynomial in ({}, {})",
                self.upper, self.lower
            )));
        }
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.data[i * self.cols + j].clone());
            }
        }
        Ok(Self::from_flat(self.upper, self.lower, self.cols, self.rows, data))
    }

    fn ensure_same(&self, other: &Self) -> Result<()> {
        if self.upper != other.upper {
            return Err(Error::BasisMismatch {
                left: self.upper,
                right: other.upper,
            });
        }
        if self.lower != other.lower {
            return Err(Error::BasisMismatch {
                left: self.lower,
                right: other.lower,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let rows = self.rows.max(other.rows);
        let cols = self.cols.max(other.cols);
        let data = (0..rows * cols)
            .map(|k| self.coeff(k / cols, k % cols) + other.coeff(k / cols, k % cols))
            .collect();
        Ok(Self::from_flat(self.upper, self.lower, rows, cols, data))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let data = self.data.iter().map(|a| a * c).collect();
        Self::from_flat(self.upper, self.lower, self.rows, self.cols, data)
    }

    /// Product, computed as one univariate product after packing rows.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.upper, self.lower);
        }
        let width = self.cols + other.cols - 1;
        let flat = |p: &Self| {
            let mut v = vec![Rational::ZERO; (p.rows - 1) * width + p.cols];
            for i in 0..p.rows {
                for j in 0..p.cols {
                    v[i * width + j] = p.data[i * p.cols + j].clone();
                }
            }
            v
        };
        let prod = mul_coeffs(&flat(self), &flat(other));
        let rows = self.rows + other.rows - 1;
        let mut data = vec![Rational::ZERO; rows * width];
        for (k, c) in prod.into_iter().enumerate() {
            data[k] = c;
        }
        Ok(Self::from_flat(self.upper, self.lower, rows, width, data))
    }

    pub fn eval(&self, upper: &Rational, lower: &Rational) -> Rational {
        self.rows()
            .iter()
            .rev()
            .fold(Rational::ZERO, |acc, r| acc * upper + r.eval(lower))
    }

    pub fn integer_coeffs(&self) -> bool {
        self.data.iter().all(|c| *c.denominator_ref() == 1u32)
    }
}

fn check_tags(upper: BasisTag, lower: BasisTag) -> Result<()> {
    if upper.is_upper() && !lower.is_upper() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "joint polynomial needs an upper and a lower variable, got ({upper}, {lower})"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BasisTag::{U, Y};

    #[test]
    fn yu_monomial() {
        let p = JointPoly::monomial(Y, U, 1, 1, Rational::from(1)).unwrap();
        assert_eq!(p.coeff(1, 1), Rational::from(1));
        assert_eq!(p.coeff(0, 1), Rational::ZERO);
        assert_eq!(p.min_exponents(), Some((1, 1)));
    }

    #[test]
    fn transpose_swaps_exponents() {
        // (y^2 + y) u^2 -> y^2 (u^2 + u)
        let p = JointPoly::from_ints(Y, U, &[&[], &[0, 0, 1], &[0, 0, 1]]).unwrap();
        let q = JointPoly::from_ints(Y, U, &[&[], &[], &[0, 1, 1]]).unwrap();
        assert_eq!(p.transpose().unwrap(), q);
        assert_eq!(q.transpose().unwrap(), p);
    }

    #[test]
    fn mixed_basis_transpose_is_rejected() {
        let p = JointPoly::from_ints(BasisTag::X, U, &[&[1]]).unwrap();
        assert!(p.transpose().is_err());
    }

    #[test]
    fn product_matches_outer_products() {
        let a = TaggedPoly::from_ints(Y, &[0, 1, 1]);
        let b = TaggedPoly::from_ints(U, &[0, 2, 0, 1]);
        let c = TaggedPoly::from_ints(Y, &[3, -1]);
        let d = TaggedPoly::from_ints(U, &[1, 1]);
        let lhs = JointPoly::outer(&a, &b)
            .unwrap()
            .mul(&JointPoly::outer(&c, &d).unwrap())
            .unwrap();
        let rhs = JointPoly::outer(&a.mul(&c).unwrap(), &b.mul(&d).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rows_and_columns_round_trip() {
        let p = JointPoly::from_ints(Y, U, &[&[0, 4], &[1, 0, 2], &[0, 3]]).unwrap();
        assert_eq!(JointPoly::from_columns(Y, U, &p.columns()).unwrap(), p);
        assert_eq!(JointPoly::from_rows(Y, U, &p.rows()).unwrap(), p);
        assert_eq!(p.eval(&Rational::from(2), &Rational::from(3)), Rational::from(86));
    }
}

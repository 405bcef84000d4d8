use malachite_base::num::arithmetic::traits::BinomialCoefficient;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_q::Rational;

use crate::error::{Error, Result};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::from(0);
    }
    Integer::from(Natural::binomial_coefficient(Natural::from(n), Natural::from(k)))
}

/// The Catalan number `C_n = binom(2n+1, n) / (2n+1)`.
pub fn catalan(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::domain(format!("catalan({n}) is undefined for negative n")));
    }
    let n = n as u64;
    Ok(Rational::from_integers(
        binomial(2 * n + 1, n),
        Integer::from(2 * n + 1),
    ))
}

/// A precomputed Pascal triangle and Catalan sequence up to a fixed size.
#[derive(Clone, Debug)]
pub struct Binomials {
    rows: Vec<Vec<Integer>>,
    catalan: Vec<Integer>,
}

impl Binomials {
    /// Table of `C(n, k)` for `n <= max_n`, and `C_n` for `n <= max_n`.
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![Integer::from(1)]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(Integer::from(1));
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(Integer::from(1));
            rows.push(row);
        }
        let catalan = (0..=max_n)
            .map(|n| {
                let c = catalan(n as i64).expect("n is nonnegative");
                super::integer_value(&c).expect("Catalan numbers are integers")
            })
            .collect();
        Binomials { rows, catalan }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`; `None` if `n` is beyond the table.
    pub fn binom(&self, n: usize, k: usize) -> Option<&Integer> {
        let row = self.rows.get(n)?;
        Some(row.get(k).unwrap_or(&ZERO))
    }

    pub fn catalan(&self, n: usize) -> Option<&Integer> {
        self.catalan.get(n)
    }
}

static ZERO: Integer = Integer::const_from_signed(0);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let want = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(catalan(n as i64).unwrap(), Rational::from(*w));
        }
        assert!(catalan(-1).is_err());
    }

    #[test]
    fn table_matches_free_functions() {
        let t = Binomials::new(30);
        for n in 0..=30usize {
            for k in 0..=n + 1 {
                assert_eq!(t.binom(n, k).unwrap(), &binomial(n as u64, k as u64));
            }
            let c = catalan(n as i64).unwrap();
            assert_eq!(Rational::from(t.catalan(n).unwrap().clone()), c);
        }
        assert!(t.binom(31, 0).is_none());
    }

    #[test]
    fn catalan_convolution_recurrence() {
        for n in 0..=20i64 {
            let rhs = (0..=n).fold(Rational::from(0), |acc, i| {
                acc + catalan(i).unwrap() * catalan(n - i).unwrap()
            });
            assert_eq!(catalan(n + 1).unwrap(), rhs);
        }
    }
}

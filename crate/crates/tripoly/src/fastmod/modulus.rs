use std::fmt;

use malachite_nz::natural::Natural;
use malachite_q::Rational;

use crate::error::{Error, Result};

/// An odd prime below `2^32` together with a primitive root, so residue
/// products fit in `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u64,
    root: u64,
    two_adicity: u32,
}

impl Default for Modulus {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Modulus {
    /// `119 * 2^23 + 1` with primitive root 3.
    pub const DEFAULT: Modulus = Modulus {
        p: 998_244_353,
        root: 3,
        two_adicity: 23,
    };

    /// Validates `p` and finds its smallest primitive root.
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 32).contains(&p) || p.is_multiple_of(2) {
            return Err(Error::domain(format!("modulus {p} must be an odd prime below 2^32")));
        }
        if prime_factors(p) != [p] {
            return Err(Error::domain(format!("modulus {p} is not prime")));
        }
        let factors = prime_factors(p - 1);
        let mut m = Modulus {
            p,
            root: 0,
            two_adicity: (p - 1).trailing_zeros(),
        };
        m.root = (2..p)
            .find(|&g| factors.iter().all(|&q| m.pow(g, (p - 1) / q) != 1))
            .expect("a prime has a primitive root");
        Ok(m)
    }

    pub fn value(self) -> u64 {
        self.p
    }

    pub fn primitive_root(self) -> u64 {
        self.root
    }

    /// Largest power-of-two NTT length.
    pub fn max_transform_len(self) -> usize {
        1usize << self.two_adicity.min(usize::BITS - 2)
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.p) {
            return Err(Error::domain(format!("0 has no inverse mod {}", self.p)));
        }
        Ok(self.pow(a, self.p - 2))
    }

    pub fn reduce_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// `n / d mod p`; fails if `p` divides the denominator.
    pub fn reduce_rational(self, r: &Rational) -> Result<u64> {
        let p = Natural::from(self.p);
        let residue = |n: &Natural| u64::try_from(&(n % &p)).expect("residue below p");
        let n = residue(r.numerator_ref());
        let d = residue(r.denominator_ref());
        let v = self.mul(n, self.inv(d)?);
        Ok(if *r < 0u32 { self.neg(v) } else { v })
    }

    /// The residue as a signed integer in `(-p/2, p/2]`.
    pub fn centered(self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

//! Shifts, substitutions, basis changes and the two sums over `Z/p`.

use super::ntt::convolve;
use super::{ModPoly, Modulus};
use crate::error::{Error, Result};

/// `k!` and `1/k!` for `k <= n`.
pub struct Factorials {
    m: Modulus,
    fact: Vec<u64>,
    inv_fact: Vec<u64>,
}

impl Factorials {
    /// Requires `n < p`.
    pub fn new(m: Modulus, n: usize) -> Result<Self> {
        if n as u64 >= m.value() {
            return Err(Error::domain(format!("factorials up to {n} vanish mod {m}")));
        }
        let mut fact = vec![1u64; n + 1];
        for k in 1..=n {
            fact[k] = m.mul(fact[k - 1], k as u64);
        }
        let mut inv_fact = vec![1u64; n + 1];
        inv_fact[n] = m.inv(fact[n])?;
        for k in (1..=n).rev() {
            inv_fact[k - 1] = m.mul(inv_fact[k], k as u64);
        }
        Ok(Factorials { m, fact, inv_fact })
    }

    pub fn fact(&self, k: usize) -> u64 {
        self.fact[k]
    }

    pub fn inv_fact(&self, k: usize) -> u64 {
        self.inv_fact[k]
    }

    pub fn binom(&self, n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        self.m
            .mul(self.fact[n], self.m.mul(self.inv_fact[k], self.inv_fact[n - k]))
    }
}

/// `t(y + c)` by one convolution of factorial-weighted coefficients.
pub fn taylor_shift(t: &ModPoly, c: u64) -> Result<ModPoly> {
    let Some(d) = t.degree() else {
        return Ok(t.clone());
    };
    let m = t.modulus();
    let f = Factorials::new(m, d)?;
    let a: Vec<u64> = (0..=d).rev().map(|i| m.mul(t.coeff(i), f.fact(i))).collect();
    let mut e = Vec::with_capacity(d + 1);
    let mut pw = 1;
    for j in 0..=d {
        e.push(m.mul(pw, f.inv_fact(j)));
        pw = m.mul(pw, c);
    }
    let conv = convolve(m, &a, &e)?;
    let out = (0..=d).map(|k| m.mul(conv[d - k], f.inv_fact(k))).collect();
    Ok(ModPoly::new(t.tag(), m, out))
}

/// `(y-1)^d t(y/(y-1))` for `d >= deg t`. An involution for fixed `d`.
pub fn moebius_subst_deg(t: &ModPoly, d: usize) -> Result<ModPoly> {
    if t.is_zero() {
        return Ok(t.clone());
    }
    // With r = y^d t(1/y): the result is y^d r(1 - 1/y).
    let r = taylor_shift(&t.reversed(d)?, 1)?;
    let m = t.modulus();
    let alt = (0..=d)
        .map(|k| if k % 2 == 1 { m.neg(r.coeff(k)) } else { r.coeff(k) })
        .collect();
    ModPoly::new(t.tag(), m, alt).reversed(d)
}

/// `(y-1)^deg(t) t(y/(y-1))`.
pub fn moebius_subst(t: &ModPoly) -> Result<ModPoly> {
    moebius_subst_deg(t, t.degree().unwrap_or(0))
}

/// First `n` coefficients of `1/a` by Newton iteration.
pub fn inverse_series(m: Modulus, a: &[u64], n: usize) -> Result<Vec<u64>> {
    let a0 = a.first().copied().unwrap_or(0);
    let mut b = vec![m.inv(a0)?];
    let mut len = 1;
    while len < n {
        len = (2 * len).min(n);
        let head = &a[..a.len().min(len)];
        let mut ab = convolve(m, head, &b)?;
        ab.resize(len, 0);
        // b <- b (2 - a b)
        let mut corr: Vec<u64> = ab.iter().map(|&c| m.neg(c)).collect();
        corr[0] = m.add(corr[0], 2);
        b = convolve(m, &b, &corr)?;
        b.truncate(len);
    }
    b.truncate(n);
    b.resize(n, 0);
    Ok(b)
}

fn check_concave(op: &'static str, p: &ModPoly) -> Result<()> {
    if p.tag().is_concave() {
        Ok(())
    } else {
        Err(Error::WrongBasis { op, found: p.tag() })
    }
}

fn check_convex(op: &'static str, p: &ModPoly) -> Result<()> {
    if p.tag().is_concave() {
        Err(Error::WrongBasis { op, found: p.tag() })
    } else {
        Ok(())
    }
}

/// `M` over `Z/p` from the closed form: `y^n -> sum_k (-1)^k C(n-k,k) x^(n-k)`.
pub fn apply_m_mod(t: &ModPoly) -> Result<ModPoly> {
    check_concave("apply_m_mod", t)?;
    let m = t.modulus();
    let d = t.degree().unwrap_or(0);
    let f = Factorials::new(m, d)?;
    let mut out = vec![0u64; d + 1];
    for (n, &c) in t.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        for k in 0..=n / 2 {
            let v = m.mul(c, f.binom(n - k, k));
            out[n - k] = if k % 2 == 1 {
                m.sub(out[n - k], v)
            } else {
                m.add(out[n - k], v)
            };
        }
    }
    Ok(ModPoly::new(t.tag().to_convex(), m, out))
}

/// `T` over `Z/p` from the closed form: `x^n -> sum_k C(2n-k,n-k) k/(2n-k) y^k`.
pub fn apply_t_mod(p: &ModPoly) -> Result<ModPoly> {
    check_convex("apply_t_mod", p)?;
    let m = p.modulus();
    let d = p.degree().unwrap_or(0);
    let f = Factorials::new(m, 2 * d)?;
    let mut out = vec![0u64; d + 1];
    out[0] = p.coeff(0);
    for (n, &c) in p.coeffs().iter().enumerate().skip(1) {
        if c == 0 {
            continue;
        }
        // C(2n-k,n-k) k/(2n-k) = k (2n-k-1)! / ((n-k)! n!)
        let base = m.mul(c, f.inv_fact(n));
        for (k, slot) in out.iter_mut().enumerate().take(n + 1).skip(1) {
            let w = m.mul(f.fact(2 * n - k - 1), f.inv_fact(n - k));
            *slot = m.add(*slot, m.mul(base, m.mul(w, k as u64)));
        }
    }
    Ok(ModPoly::new(p.tag().to_concave(), m, out))
}

/// Algorithm used for `vee_mod` and `wedge_mod`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Route {
    /// Quadratic closed-form basis changes around an NTT product.
    #[default]
    ClosedForm,
    /// Products of hat series divided by the unit series, `O(n log n)`.
    HatSeries,
}

/// `y^-d hat_t(t)` as a series in `z = 1/y`, first `n` terms.
fn hat_t_series(t: &ModPoly, n: usize) -> Result<Vec<u64>> {
    let m = t.modulus();
    let d = t.degree().unwrap_or(0);
    let q = moebius_subst_deg(t, d)?.reversed(d)?;
    let f = Factorials::new(m, d + n)?;
    let inv_pow: Vec<u64> = (0..n).map(|i| f.binom(d + i, d)).collect();
    let tail = convolve(m, q.coeffs(), &inv_pow)?;
    let mut out: Vec<u64> = (0..n).map(|k| if k <= d { t.coeff(d - k) } else { 0 }).collect();
    // The tail term z^(d+1+i) lands at index d+1+i relative to y^d.
    for (i, &c) in tail.iter().enumerate() {
        let k = d + 1 + i;
        if k < n {
            out[k] = m.sub(out[k], c);
        }
    }
    Ok(out)
}

/// Coefficients of `sqrt(1-4z)` (`shift = 6`) or `1/sqrt(1-4z)` (`shift = 2`).
fn binomial_series(m: Modulus, n: usize, shift: u64) -> Result<Vec<u64>> {
    if n as u64 >= m.value() {
        return Err(Error::domain(format!("{n} series terms exceed the modulus {m}")));
    }
    let mut out = Vec::with_capacity(n);
    let mut c = 1u64;
    for k in 0..n as u64 {
        if k > 0 {
            let num = m.sub(m.mul(4, k % m.value()), shift);
            c = m.mul(c, m.mul(num, m.inv(k)?));
        }
        out.push(c);
    }
    Ok(out)
}

/// `x^-d hat_m(m)` as a series in `z = 1/x`, first `n` terms.
fn hat_m_series(p: &ModPoly, n: usize) -> Result<Vec<u64>> {
    let m = p.modulus();
    let d = p.degree().unwrap_or(0);
    let half = m.inv(2)?;
    let rev = p.reversed(d)?;
    let s = binomial_series(m, d + 1, 6)?;
    let mut nonneg = convolve(m, rev.coeffs(), &s)?;
    nonneg.resize(d + 1, 0);
    let inv_s = binomial_series(m, n, 2)?;
    let mut out = convolve(m, &nonneg, &inv_s)?;
    out.resize(n, 0);
    for (k, o) in out.iter_mut().enumerate() {
        *o = m.mul(m.add(*o, rev.coeff(k)), half);
    }
    Ok(out)
}

type HatFn = fn(&ModPoly, usize) -> Result<Vec<u64>>;

/// `hat(a) hat(b) / hat(1)`, read back as a polynomial of degree
/// `deg a + deg b`.
fn hat_product(a: &ModPoly, b: &ModPoly, hat: HatFn) -> Result<ModPoly> {
    let m = a.modulus();
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Ok(ModPoly::zero(a.tag(), m));
    };
    let n = da + db + 1;
    let unit = ModPoly::new(a.tag(), m, vec![1]);
    let inv_unit = inverse_series(m, &hat(&unit, n)?, n)?;
    let mut r = convolve(m, &hat(a, n)?, &hat(b, n)?)?;
    r.truncate(n);
    let mut r = convolve(m, &r, &inv_unit)?;
    r.resize(n, 0);
    r.reverse();
    Ok(ModPoly::new(a.tag(), m, r))
}

/// `t1 ∨ t2` over `Z/p`.
pub fn vee_mod(t1: &ModPoly, t2: &ModPoly, route: Route) -> Result<ModPoly> {
    t1.ensure_same(t2)?;
    check_concave("vee_mod", t1)?;
    match route {
        Route::ClosedForm => apply_t_mod(&apply_m_mod(t1)?.mul(&apply_m_mod(t2)?)?),
        Route::HatSeries => hat_product(t1, t2, hat_t_series),
    }
}

/// `m1 ∧ m2` over `Z/p`.
pub fn wedge_mod(m1: &ModPoly, m2: &ModPoly, route: Route) -> Result<ModPoly> {
    m1.ensure_same(m2)?;
    check_convex("wedge_mod", m1)?;
    match route {
        Route::ClosedForm => apply_m_mod(&apply_t_mod(m1)?.mul(&apply_t_mod(m2)?)?),
        Route::HatSeries => hat_product(m1, m2, hat_m_series),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{BasisTag, TaggedPoly};
    use crate::transform::{apply_m, apply_t, hat_m, hat_t, vee, wedge};
    use rand::{Rng, SeedableRng};

    const P: Modulus = Modulus::DEFAULT;

    fn y(c: &[i64]) -> ModPoly {
        ModPoly::from_i64s(BasisTag::Y, P, c)
    }

    fn x(c: &[i64]) -> ModPoly {
        ModPoly::from_i64s(BasisTag::X, P, c)
    }

    fn random(rng: &mut impl Rng, tag: BasisTag, d: usize) -> TaggedPoly {
        let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-9..=9)).collect();
        TaggedPoly::from_ints(tag, &c)
    }

    fn reduce(t: &TaggedPoly) -> ModPoly {
        ModPoly::from_poly(t, P).unwrap()
    }

    #[test]
    fn shifts() {
        assert_eq!(taylor_shift(&y(&[0, 0, 1]), 1).unwrap(), y(&[1, 2, 1]));
        assert_eq!(taylor_shift(&y(&[1, 0, 0, 1]), P.neg(1)).unwrap(), y(&[0, 3, -3, 1]));
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let t = random(&mut rng, BasisTag::Y, 300);
        let c = crate::poly::ratio(-7, 1);
        assert_eq!(
            taylor_shift(&reduce(&t), P.reduce_i64(-7)).unwrap(),
            reduce(&t.taylor_shift(&c))
        );
        let back = taylor_shift(&taylor_shift(&reduce(&t), 5).unwrap(), P.neg(5)).unwrap();
        assert_eq!(back, reduce(&t));
    }

    #[test]
    fn moebius() {
        assert_eq!(moebius_subst(&y(&[0, 0, 1])).unwrap(), y(&[0, 0, 1]));
        assert_eq!(moebius_subst(&y(&[1])).unwrap(), y(&[1]));
        // (y-1)^2 + y(y-1) + y^2 for t = 1 + y + y^2
        assert_eq!(moebius_subst(&y(&[1, 1, 1])).unwrap(), y(&[1, -3, 3]));
        let mut rng = rand::rngs::StdRng::seed_from_u64(4);
        for d in [1, 7, 64] {
            let t = reduce(&random(&mut rng, BasisTag::Y, d));
            let d = t.degree().unwrap();
            assert_eq!(moebius_subst_deg(&moebius_subst_deg(&t, d).unwrap(), d).unwrap(), t);
        }
    }

    #[test]
    fn series_inverse() {
        let a = [1, P.neg(1)];
        assert_eq!(inverse_series(P, &a, 5).unwrap(), vec![1; 5]);
        assert!(inverse_series(P, &[0, 1], 3).is_err());
    }

    #[test]
    fn closed_forms_match_exact() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for d in [0, 1, 5, 40] {
            let t = random(&mut rng, BasisTag::Y, d);
            assert_eq!(apply_m_mod(&reduce(&t)).unwrap(), reduce(&apply_m(&t).unwrap()));
            let mx = random(&mut rng, BasisTag::X, d);
            assert_eq!(apply_t_mod(&reduce(&mx)).unwrap(), reduce(&apply_t(&mx).unwrap()));
        }
        assert!(apply_m_mod(&x(&[1])).is_err());
    }

    #[test]
    fn hat_series_match_exact() {
        let t1 = TaggedPoly::from_ints(BasisTag::Y, &[0, 0, 5, 2, 1]);
        let s = hat_t_series(&reduce(&t1), 9).unwrap();
        let h = hat_t(&t1, 4).unwrap();
        for (k, v) in s.iter().enumerate() {
            assert_eq!(*v, P.reduce_rational(&h.coeff(4 - k as i64).unwrap()).unwrap());
        }
        let m = TaggedPoly::from_ints(BasisTag::X, &[0, 3, 1]);
        let s = hat_m_series(&reduce(&m), 7).unwrap();
        let h = hat_m(&m, 4).unwrap();
        for (k, v) in s.iter().enumerate() {
            assert_eq!(*v, P.reduce_rational(&h.coeff(2 - k as i64).unwrap()).unwrap());
        }
    }

    #[test]
    fn sums_match_exact() {
        let t1 = y(&[0, 0, 5, 2, 1]);
        let t4 = y(&[0, 3, 4, 1]);
        let want = y(&[0, 141, 141, 97, 58, 24, 7, 1]);
        for route in [Route::ClosedForm, Route::HatSeries] {
            assert_eq!(vee_mod(&t1, &t4, route).unwrap(), want);
            assert_eq!(vee_mod(&y(&[1]), &t4, route).unwrap(), t4);
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(6);
        for (d1, d2) in [(3, 5), (20, 9), (48, 60)] {
            let (a, b) = (random(&mut rng, BasisTag::Y, d1), random(&mut rng, BasisTag::Y, d2));
            let exact = reduce(&vee(&a, &b).unwrap());
            let (a, b) = (reduce(&a), reduce(&b));
            assert_eq!(vee_mod(&a, &b, Route::ClosedForm).unwrap(), exact);
            assert_eq!(vee_mod(&a, &b, Route::HatSeries).unwrap(), exact);
            let (a, b) = (random(&mut rng, BasisTag::X, d1), random(&mut rng, BasisTag::X, d2));
            let exact = reduce(&wedge(&a, &b).unwrap());
            let (a, b) = (reduce(&a), reduce(&b));
            assert_eq!(wedge_mod(&a, &b, Route::ClosedForm).unwrap(), exact);
            assert_eq!(wedge_mod(&a, &b, Route::HatSeries).unwrap(), exact);
        }
        assert!(wedge_mod(&t1, &t4, Route::ClosedForm).is_err());
    }
}

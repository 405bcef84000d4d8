use super::Modulus;
use crate::error::{Error, Result};

/// Below this length products use the schoolbook method.
const NAIVE_CUTOFF: usize = 32;

fn bit_reverse(a: &mut [u64]) {
    let n = a.len();
    let mut j = 0;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
}

/// In-place transform of a power-of-two length buffer; `inverse` includes
/// the `1/n` scaling.
pub fn ntt(m: Modulus, a: &mut [u64], inverse: bool) -> Result<()> {
    let n = a.len();
    if n <= 1 {
        return Ok(());
    }
    if !n.is_power_of_two() {
        return Err(Error::domain(format!("transform length {n} is not a power of two")));
    }
    if n > m.max_transform_len() {
        return Err(Error::TransformLength {
            len: n,
            max: m.max_transform_len(),
        });
    }
    let p = m.value();
    bit_reverse(a);
    let mut len = 2;
    while len <= n {
        let mut w = m.pow(m.primitive_root(), (p - 1) / len as u64);
        if inverse {
            w = m.inv(w)?;
        }
        let half = len / 2;
        let mut ws = Vec::with_capacity(half);
        let mut cur = 1;
        for _ in 0..half {
            ws.push(cur);
            cur = m.mul(cur, w);
        }
        for block in a.chunks_exact_mut(len) {
            let (lo, hi) = block.split_at_mut(half);
            for ((x, y), &wk) in lo.iter_mut().zip(hi.iter_mut()).zip(&ws) {
                let v = m.mul(*y, wk);
                *y = m.sub(*x, v);
                *x = m.add(*x, v);
            }
        }
        len <<= 1;
    }
    if inverse {
        let inv_n = m.inv(n as u64)?;
        a.iter_mut().for_each(|x| *x = m.mul(*x, inv_n));
    }
    Ok(())
}

fn schoolbook(m: Modulus, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = m.add(out[i + j], m.mul(x, y));
        }
    }
    out
}

/// Product of residue vectors.
pub fn convolve(m: Modulus, a: &[u64], b: &[u64]) -> Result<Vec<u64>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    if a.len().min(b.len()) <= NAIVE_CUTOFF {
        return Ok(schoolbook(m, a, b));
    }
    let len = a.len() + b.len() - 1;
    let n = len.next_power_of_two();
    if n > m.max_transform_len() {
        return Err(Error::TransformLength {
            len: n,
            max: m.max_transform_len(),
        });
    }
    let mut fa = a.to_vec();
    fa.resize(n, 0);
    let mut fb = b.to_vec();
    fb.resize(n, 0);
    ntt(m, &mut fa, false)?;
    ntt(m, &mut fb, false)?;
    fa.iter_mut().zip(&fb).for_each(|(x, &y)| *x = m.mul(*x, y));
    ntt(m, &mut fa, true)?;
    fa.truncate(len);
    Ok(fa)
}

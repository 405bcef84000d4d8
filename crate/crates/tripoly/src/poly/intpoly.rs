//! Integer polynomial kernels used behind the rational front end.

use malachite_base::num::arithmetic::traits::UnsignedAbs;
use malachite_base::num::basic::traits::Zero;
use malachite_base::num::logic::traits::SignificantBits;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_nz::platform::Limb;

const LIMB_BITS: u64 = Limb::BITS as u64;

/// Below this length (of the shorter factor) schoolbook beats packing.
const KRONECKER_THRESHOLD: usize = 24;

/// Product of two dense integer polynomials (ascending coefficients).
pub(crate) fn mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < KRONECKER_THRESHOLD {
        schoolbook(a, b)
    } else {
        kronecker(a, b)
    }
}

pub(crate) fn schoolbook(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut out = vec![Integer::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if *y != 0 {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn max_bits(v: &[Integer]) -> u64 {
    v.iter().map(|x| x.significant_bits()).max().unwrap_or(0)
}

/// Packs `v` into one integer with `slot` limbs per coefficient.
fn pack(v: &[Integer], slot: usize) -> Integer {
    let mut pos = vec![0 as Limb; slot * v.len()];
    let mut neg = vec![0 as Limb; slot * v.len()];
    let mut any_neg = false;
    for (i, c) in v.iter().enumerate() {
        let limbs = c.unsigned_abs_ref().to_limbs_asc();
        let dst = if *c >= 0 {
            &mut pos
        } else {
            any_neg = true;
            &mut neg
        };
        dst[i * slot..i * slot + limbs.len()].copy_from_slice(&limbs);
    }
    let p = Integer::from(Natural::from_owned_limbs_asc(pos));
    if any_neg {
        p - Integer::from(Natural::from_owned_limbs_asc(neg))
    } else {
        p
    }
}

/// Kronecker substitution: evaluate both factors at `2^(64*slot)`, multiply
/// once, and read the signed digits back out.
fn kronecker(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let n = a.len().min(b.len()) as u64;
    let bits = max_bits(a) + max_bits(b) + (64 - n.leading_zeros() as u64) + 2;
    let slot = bits.div_ceil(LIMB_BITS) as usize;
    let product = pack(a, slot) * pack(b, slot);

    let out_len = a.len() + b.len() - 1;
    let negative = product < 0;
    let mut limbs = product.unsigned_abs().to_limbs_asc();
    limbs.resize(out_len * slot + 1, 0);
    if negative {
        let mut carry = true;
        for l in limbs.iter_mut() {
            let (v, c) = (!*l).overflowing_add(carry as Limb);
            *l = v;
            carry = c;
        }
    }

    let half = Integer::from(Natural::from(1u32) << (slot as u64 * LIMB_BITS - 1));
    let full = Integer::from(Natural::from(1u32) << (slot as u64 * LIMB_BITS));
    let mut carry = false;
    (0..out_len)
        .map(|i| {
            let mut v = Integer::from(Natural::from_limbs_asc(&limbs[i * slot..(i + 1) * slot]));
            if carry {
                v += Integer::from(1);
            }
            carry = v >= half;
            if carry {
                v -= &full;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_poly(rng: &mut impl Rng, len: usize, bits: u32) -> Vec<Integer> {
        (0..len)
            .map(|_| {
                let mut x = Integer::from(rng.gen_range(-1000i64..1000));
                for _ in 0..bits / 32 {
                    x = x * Integer::from(1u64 << 32) + Integer::from(rng.gen::<u32>());
                }
                if rng.gen_bool(0.5) {
                    -x
                } else {
                    x
                }
            })
            .collect()
    }

    #[test]
    fn kronecker_matches_schoolbook() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for &(la, lb, bits) in &[(30, 40, 0), (50, 25, 64), (64, 64, 300), (100, 31, 5)] {
            let a = random_poly(&mut rng, la, bits);
            let b = random_poly(&mut rng, lb, bits);
            assert_eq!(kronecker(&a, &b), schoolbook(&a, &b));
        }
    }

    #[test]
    fn kronecker_handles_zeros_and_signs() {
        let a: Vec<Integer> = [0, -1, 0, 5, -7].iter().map(|&x| Integer::from(x)).collect();
        let b: Vec<Integer> = [-3, 0, 0, 2].iter().map(|&x| Integer::from(x)).collect();
        assert_eq!(kronecker(&a, &b), schoolbook(&a, &b));
        let z = vec![Integer::ZERO; 40];
        assert!(kronecker(&z, &z).iter().all(|c| *c == 0));
    }
}

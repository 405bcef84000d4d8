//! In-place integer recurrences for the two basis changes.
//!
//! Both run in O(n^2) big-integer additions and never multiply.

use malachite_base::num::arithmetic::traits::NegAssign;
use malachite_base::num::basic::traits::Zero;
use malachite_nz::integer::Integer;

/// Concave-to-convex coefficients (`y^n -> x^n - (n-1) x^(n-1) + ...`).
///
/// With `p_n = x p_(n-1) - x p_(n-2)`, the coefficient table
/// `D_j[i] = D_j[i-1] - D_(j+1)[i-1]`, `D_j[0] = t_j` ends with
/// `m_i = D_i[i]`. Alternating the sign of every other row turns the
/// subtraction into an addition, which runs in place over one array.
pub(crate) fn concave_to_convex(t: &[Integer]) -> Vec<Integer> {
    let n = t.len();
    let mut a = vec![Integer::ZERO; n];
    for j in (0..n).rev() {
        let mut head = t[j].clone();
        if j % 2 == 1 {
            head.neg_assign();
        }
        let mut prev_old = std::mem::replace(&mut a[0], head);
        for i in 1..=j {
            std::mem::swap(&mut a[i], &mut prev_old);
            let (lo, hi) = a.split_at_mut(i);
            hi[0] += &lo[i - 1];
        }
    }
    for v in a.iter_mut().skip(1).step_by(2) {
        v.neg_assign();
    }
    a
}

/// Convex-to-concave coefficients (`x^n -> y^n + (n-1) y^(n-1) + ...`).
///
/// Horner in `x`: multiplying by `x` sends `y^j` to `y + ... + y^(j+1)`, so
/// the new coefficient of `y^k` is the suffix sum of the old ones from
/// `k-1`. The running value is stored high-degree first, which makes those
/// suffix sums prefix sums and the new constant term a push.
pub(crate) fn convex_to_concave(m: &[Integer]) -> Vec<Integer> {
    let Some((top, rest)) = m.split_last() else {
        return Vec::new();
    };
    let mut rev = Vec::with_capacity(m.len());
    rev.push(top.clone());
    for mk in rest.iter().rev() {
        for i in 1..rev.len() {
            let (lo, hi) = rev.split_at_mut(i);
            hi[0] += &lo[i - 1];
        }
        rev.push(mk.clone());
    }
    rev.reverse();
    rev
}

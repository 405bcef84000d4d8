use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{moebius_subst_deg, taylor_shift, vee_mod, wedge_mod, ModPoly, Modulus, Route};
use crate::error::Result;
use crate::poly::{BasisTag, TaggedPoly};
use crate::transform::{vee, wedge};

/// Cross-validation of the modular path at one degree. Timings are mean
/// nanoseconds per call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastCheckRow {
    pub degree: usize,
    pub trials: usize,
    pub vee_agree: usize,
    pub wedge_agree: usize,
    pub routes_agree: usize,
    pub shift_involution: usize,
    pub moebius_involution: usize,
    pub ns_mul: u128,
    pub ns_vee_closed: u128,
    pub ns_vee_hat: u128,
    pub ns_wedge_closed: u128,
    pub ns_wedge_hat: u128,
    pub ns_exact: u128,
}

impl FastCheckRow {
    pub fn passed(&self) -> bool {
        let t = self.trials;
        [
            self.vee_agree,
            self.wedge_agree,
            self.routes_agree,
            self.shift_involution,
            self.moebius_involution,
        ]
        .iter()
        .all(|&k| k == t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastCheckReport {
    pub modulus: Modulus,
    pub rows: Vec<FastCheckRow>,
}

impl FastCheckReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(FastCheckRow::passed)
    }
}

fn random_poly(rng: &mut StdRng, tag: BasisTag, d: usize) -> TaggedPoly {
    let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(0..10)).collect();
    c[d] = rng.gen_range(1..10);
    TaggedPoly::from_ints(tag, &c)
}

fn timed<T>(acc: &mut u128, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let v = f();
    *acc += start.elapsed().as_nanos();
    v
}

/// Random pairs of degree `d` with small nonnegative coefficients: exact
/// `vee`/`wedge` reduced mod `p` against both modular routes, plus the
/// shift and substitution involutions.
pub fn fastcheck(modulus: Modulus, degrees: &[usize], trials: usize, seed: u64) -> Result<FastCheckReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(degrees.len());
    for &d in degrees {
        let mut row = FastCheckRow {
            degree: d,
            trials,
            vee_agree: 0,
            wedge_agree: 0,
            routes_agree: 0,
            shift_involution: 0,
            moebius_involution: 0,
            ns_mul: 0,
            ns_vee_closed: 0,
            ns_vee_hat: 0,
            ns_wedge_closed: 0,
            ns_wedge_hat: 0,
            ns_exact: 0,
        };
        for _ in 0..trials {
            let (t1, t2) = (
                random_poly(&mut rng, BasisTag::Y, d),
                random_poly(&mut rng, BasisTag::Y, d),
            );
            let (m1, m2) = (t1.clone().retag(BasisTag::X), t2.clone().retag(BasisTag::X));
            let exact_vee = timed(&mut row.ns_exact, || vee(&t1, &t2))?;
            let exact_wedge = timed(&mut row.ns_exact, || wedge(&m1, &m2))?;
            let (a, b) = (ModPoly::from_poly(&t1, modulus)?, ModPoly::from_poly(&t2, modulus)?);
            let (ma, mb) = (a.clone().retag(BasisTag::X), b.clone().retag(BasisTag::X));
            timed(&mut row.ns_mul, || a.mul(&b))?;
            let vc = timed(&mut row.ns_vee_closed, || vee_mod(&a, &b, Route::ClosedForm))?;
            let vh = timed(&mut row.ns_vee_hat, || vee_mod(&a, &b, Route::HatSeries))?;
            let wc = timed(&mut row.ns_wedge_closed, || wedge_mod(&ma, &mb, Route::ClosedForm))?;
            let wh = timed(&mut row.ns_wedge_hat, || wedge_mod(&ma, &mb, Route::HatSeries))?;
            row.vee_agree += usize::from(vc == ModPoly::from_poly(&exact_vee, modulus)?);
            row.wedge_agree += usize::from(wc == ModPoly::from_poly(&exact_wedge, modulus)?);
            row.routes_agree += usize::from(vc == vh && wc == wh);
            let c = rng.gen_range(1..modulus.value());
            let back = taylor_shift(&taylor_shift(&a, c)?, modulus.neg(c))?;
            row.shift_involution += usize::from(back == a);
            let twice = moebius_subst_deg(&moebius_subst_deg(&a, d)?, d)?;
            row.moebius_involution += usize::from(twice == a);
        }
        let n = trials.max(1) as u128;
        for v in [
            &mut row.ns_mul,
            &mut row.ns_vee_closed,
            &mut row.ns_vee_hat,
            &mut row.ns_wedge_closed,
            &mut row.ns_wedge_hat,
        ] {
            *v /= n;
        }
        row.ns_exact /= 2 * n;
        rows.push(row);
    }
    Ok(FastCheckReport { modulus, rows })
}

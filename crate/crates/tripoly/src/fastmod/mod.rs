//! Polynomial calculus over a prime field: NTT products, Taylor shifts, the
//! `y -> y/(y-1)` substitution and modular `vee`/`wedge`.

mod check;
mod modulus;
mod ntt;
mod ops;
mod poly;

pub use check::{fastcheck, FastCheckReport, FastCheckRow};
pub use modulus::Modulus;
pub use ntt::{convolve, ntt};
pub use ops::{
    apply_m_mod, apply_t_mod, inverse_series, moebius_subst, moebius_subst_deg, taylor_shift, vee_mod, wedge_mod,
    Factorials, Route,
};
pub use poly::ModPoly;

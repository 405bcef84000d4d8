use std::cmp::Ordering;
use std::fmt;

use malachite_base::num::arithmetic::traits::Pow;
use malachite_nz::natural::Natural;
use malachite_q::Rational;

use crate::error::{Error, Result};
use crate::geom::is_chain;
use crate::nearedge::{chain_polys, CoreDag, Evaluator, NearEdgeExpr, Node};
use crate::poly::{rational_to_f64, BasisTag};
use crate::transform::apply_t;

/// Growth of `twin(A, N)`: `a^{yv}_A(2,4)^{2N}` triangulations on `2kN+2`
/// points, so `base^(1/k)` per point.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    pub expr: NearEdgeExpr,
    pub base_value: Rational,
    pub segments: u64,
    pub rate: f64,
    /// Set when `A` is not a chain, so the rate is only conjectured.
    pub conjectural: bool,
}

impl GrowthReport {
    /// Rate truncated to 5 decimals.
    pub fn rate_5dp(&self) -> String {
        format_root(&self.base_value, self.segments, 5)
    }

    /// Exact comparison of per-point rates.
    pub fn cmp_rate(&self, other: &GrowthReport) -> Ordering {
        cmp_roots(&self.base_value, self.segments, &other.base_value, other.segments)
    }
}

impl fmt::Display for GrowthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rate {} per point (base a^yv(2,4) = {}, k = {})",
            self.rate_5dp(),
            self.base_value,
            self.segments
        )?;
        if self.conjectural {
            f.write_str(" CONJECTURE: not a chain")?;
        }
        Ok(())
    }
}

/// `a^(1/k)` versus `b^(1/l)` for positive rationals.
pub fn cmp_roots(a: &Rational, k: u64, b: &Rational, l: u64) -> Ordering {
    // a^l vs b^k, cross-multiplied.
    let (an, ad) = (a.numerator_ref().pow(l), a.denominator_ref().pow(l));
    let (bn, bd) = (b.numerator_ref().pow(k), b.denominator_ref().pow(k));
    (an * bd).cmp(&(bn * ad))
}

/// `value^(1/k)` truncated to `digits` decimals, decided exactly.
/// `value` must be positive.
pub fn format_root(value: &Rational, k: u64, digits: u32) -> String {
    let scale = Natural::from(10u32).pow(digits as u64);
    let (num, den) = (value.numerator_ref(), value.denominator_ref());
    // Largest r with r^k * den <= num * scale^k.
    let target = num * scale.pow(k);
    let fits = |r: &Natural| r.pow(k) * den <= target;
    let guess = rational_to_f64(value).powf(1.0 / k as f64) * 10f64.powi(digits as i32);
    let one = Natural::from(1u32);
    let mut r = Natural::from(guess.max(0.0).floor() as u64);
    while !fits(&r) {
        r -= &one;
    }
    while fits(&(&r + &one)) {
        r += &one;
    }
    let s = r.to_string();
    let d = digits as usize;
    if d == 0 {
        return s;
    }
    let s = format!("{s:0>width$}", width = d + 1);
    format!("{}.{}", &s[..s.len() - d], &s[s.len() - d..])
}

/// True when every leaf is a chain; sums and flips of chains are chains.
pub fn expr_is_chain(expr: &NearEdgeExpr) -> Result<bool> {
    let mut dag = CoreDag::new();
    let root = dag.add(expr);
    for id in 0..=root {
        if let Node::Leaf(i) = dag.node(id) {
            if !is_chain(dag.leaf(i))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Growth report using a caller-owned evaluator, so repeated subtrees are
/// shared across calls.
pub fn growth_rate_with(ev: &mut Evaluator, expr: &NearEdgeExpr) -> Result<GrowthReport> {
    let k = expr.segment_count().0;
    if k == 0 {
        return Err(Error::domain("growth rate of a single point"));
    }
    let a = ev.joint_poly(expr, BasisTag::Y, BasisTag::V)?;
    let base = a.eval(&Rational::from(2), &Rational::from(4));
    if base <= 0u32 {
        return Err(Error::domain(format!("non-positive base value {base}")));
    }
    let rate = rational_to_f64(&base).powf(1.0 / k as f64);
    Ok(GrowthReport {
        expr: expr.clone(),
        base_value: base,
        segments: k,
        rate,
        conjectural: !expr_is_chain(expr)?,
    })
}

/// Growth rate of the twin chains of `expr`.
pub fn growth_rate(expr: &NearEdgeExpr) -> Result<GrowthReport> {
    growth_rate_with(&mut Evaluator::new(), expr)
}

/// `[y^1] T(m_A)` against `m_A(4)` for a chain `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeuristicReport {
    pub lhs: Rational,
    pub rhs: Rational,
    pub ratio: Rational,
}

impl fmt::Display for HeuristicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[y^1] T(m) = {}, m(4) = {}, ratio = {} (~{:.6})",
            self.lhs,
            self.rhs,
            self.ratio,
            rational_to_f64(&self.ratio)
        )
    }
}

/// Both sides of the single-segment heuristic; diagnostic only.
pub fn heuristic_diagnostic(expr: &NearEdgeExpr) -> Result<HeuristicReport> {
    let c = chain_polys(expr)?;
    let lhs = apply_t(&c.m)?.coeff(1);
    let rhs = c.m.eval(&Rational::from(4));
    if rhs == 0u32 {
        return Err(Error::domain("m(4) vanishes"));
    }
    let ratio = &lhs / &rhs;
    Ok(HeuristicReport { lhs, rhs, ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::realize;
    use crate::nearedge::joint_poly;
    use crate::poly::ratio;

    #[test]
    fn base_values() {
        let e = growth_rate(&NearEdgeExpr::E).unwrap();
        assert_eq!(e.base_value, 8u32);
        assert_eq!(e.rate_5dp(), "8.00000");
        assert!(!e.conjectural);
        let c2 = growth_rate(&NearEdgeExpr::Ccvx(2)).unwrap();
        assert_eq!(c2.base_value, 72u32);
        assert_eq!(c2.rate_5dp(), "8.48528");
        let k5 = growth_rate(&NearEdgeExpr::koch(NearEdgeExpr::E, 5)).unwrap();
        assert_eq!(k5.segments, 32);
        assert_eq!(k5.rate_5dp(), "9.02446");
    }

    #[test]
    fn exact_rounding() {
        assert_eq!(format_root(&ratio(1, 1), 3, 5), "1.00000");
        assert_eq!(format_root(&ratio(2, 1), 2, 5), "1.41421");
        assert_eq!(format_root(&ratio(3, 1), 2, 5), "1.73205");
        assert_eq!(format_root(&ratio(2, 3), 1, 5), "0.66666");
        assert_eq!(format_root(&ratio(1, 100_000), 1, 5), "0.00001");
        assert_eq!(format_root(&ratio(99_999, 10_000_000_000), 1, 5), "0.00000");
        assert_eq!(format_root(&ratio(123_456_789, 1), 1, 0), "123456789");
        assert_eq!(cmp_roots(&ratio(8, 1), 1, &ratio(72, 1), 2), Ordering::Less);
        assert_eq!(cmp_roots(&ratio(4, 1), 1, &ratio(16, 1), 2), Ordering::Equal);
    }

    #[test]
    fn chain_flag_matches_geometry() {
        let bad = NearEdgeExpr::leaf(crate::geom::PointSet::from_ints(&[(0, 0), (1, -3), (2, 2), (3, 0)])).unwrap();
        for expr in [
            NearEdgeExpr::vee(NearEdgeExpr::Ccvx(2), NearEdgeExpr::flip(NearEdgeExpr::Cccv(2))),
            NearEdgeExpr::vee(bad.clone(), NearEdgeExpr::E),
            NearEdgeExpr::wedge(NearEdgeExpr::E, NearEdgeExpr::flip(bad)),
        ] {
            let geometric = is_chain(&realize(&expr).unwrap()).unwrap();
            assert_eq!(expr_is_chain(&expr).unwrap(), geometric);
            assert_eq!(growth_rate(&expr).unwrap().conjectural, !geometric);
        }
    }

    #[test]
    fn flip_swaps_the_evaluation_point() {
        let a = NearEdgeExpr::vee(NearEdgeExpr::Ccvx(2), NearEdgeExpr::flip(NearEdgeExpr::Cccv(3)));
        let p = joint_poly(&a, BasisTag::X, BasisTag::V).unwrap();
        let q = joint_poly(&NearEdgeExpr::flip(a), BasisTag::X, BasisTag::V).unwrap();
        let (s, t) = (Rational::from(2), Rational::from(5));
        assert_eq!(p.eval(&s, &t), q.eval(&t, &s));
    }

    #[test]
    fn heuristic() {
        let e = heuristic_diagnostic(&NearEdgeExpr::E).unwrap();
        assert_eq!(
            (e.lhs.clone(), e.rhs.clone(), e.ratio.clone()),
            (ratio(1, 1), ratio(4, 1), ratio(1, 4))
        );
        let k3 = heuristic_diagnostic(&NearEdgeExpr::koch(NearEdgeExpr::E, 3)).unwrap();
        assert!(k3.ratio > 0u32 && k3.ratio <= 1u32);
        let p = heuristic_diagnostic(&NearEdgeExpr::poly_chain(NearEdgeExpr::Ccvx(2), 4).unwrap()).unwrap();
        assert!(p.ratio > 0u32);
    }
}

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geom::{PointSet, Polyline};

/// A near-edge built from the primitive edge, explicit point sets, the two
/// sums and the vertical flip. The derived forms are kept as written and
/// expanded only when evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NearEdgeExpr {
    /// The two points `(0,0)` and `(1,0)`.
    E,
    /// An explicit point set, sorted by `x`.
    Leaf(Arc<PointSet>),
    /// Convex sum.
    Vee(Arc<NearEdgeExpr>, Arc<NearEdgeExpr>),
    /// Concave sum.
    Wedge(Arc<NearEdgeExpr>, Arc<NearEdgeExpr>),
    Flip(Arc<NearEdgeExpr>),
    /// `E ∨ ... ∨ E`, `i` copies.
    Ccvx(usize),
    /// `E ∧ ... ∧ E`, `i` copies.
    Cccv(usize),
    /// `K_0(a) = a`, `K_s(a) = flip(K_(s-1)(a)) ∨ flip(K_(s-1)(a))`.
    Koch(Arc<NearEdgeExpr>, usize),
    /// `flip(a) ∨ ... ∨ flip(a)`, `n` copies.
    PolyChain(Arc<NearEdgeExpr>, usize),
    /// `flip(poly(a, n)) ∨ E ∨ flip(poly(a, n))`.
    TwinChain(Arc<NearEdgeExpr>, usize),
}

/// Number of segments of the realized polyline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegmentCount(pub u64);

impl NearEdgeExpr {
    pub fn e() -> Self {
        NearEdgeExpr::E
    }

    /// A leaf from points with distinct `x`, in general position.
    pub fn leaf(points: PointSet) -> Result<Self> {
        let sorted = points.sorted_by_x()?;
        sorted.check_general_position()?;
        if sorted.is_empty() {
            return Err(Error::domain("a leaf needs at least one point"));
        }
        Ok(NearEdgeExpr::Leaf(Arc::new(sorted)))
    }

    pub fn vee(a: NearEdgeExpr, b: NearEdgeExpr) -> Self {
        NearEdgeExpr::Vee(Arc::new(a), Arc::new(b))
    }

    pub fn wedge(a: NearEdgeExpr, b: NearEdgeExpr) -> Self {
        NearEdgeExpr::Wedge(Arc::new(a), Arc::new(b))
    }

    pub fn flip(a: NearEdgeExpr) -> Self {
        NearEdgeExpr::Flip(Arc::new(a))
    }

    pub fn ccvx(i: usize) -> Result<Self> {
        check_copies("ccvx", i)?;
        Ok(NearEdgeExpr::Ccvx(i))
    }

    pub fn cccv(i: usize) -> Result<Self> {
        check_copies("cccv", i)?;
        Ok(NearEdgeExpr::Cccv(i))
    }

    pub fn koch(a: NearEdgeExpr, s: usize) -> Self {
        NearEdgeExpr::Koch(Arc::new(a), s)
    }

    pub fn poly_chain(a: NearEdgeExpr, n: usize) -> Result<Self> {
        check_copies("poly", n)?;
        Ok(NearEdgeExpr::PolyChain(Arc::new(a), n))
    }

    pub fn twin_chain(a: NearEdgeExpr, n: usize) -> Result<Self> {
        check_copies("twin", n)?;
        Ok(NearEdgeExpr::TwinChain(Arc::new(a), n))
    }

    /// Segments of the polyline: `1` for `E`, additive over both sums.
    pub fn segment_count(&self) -> SegmentCount {
        let k = |e: &NearEdgeExpr| e.segment_count().0;
        SegmentCount(match self {
            NearEdgeExpr::E => 1,
            NearEdgeExpr::Leaf(p) => p.len() as u64 - 1,
            NearEdgeExpr::Vee(a, b) | NearEdgeExpr::Wedge(a, b) => k(a) + k(b),
            NearEdgeExpr::Flip(a) => k(a),
            NearEdgeExpr::Ccvx(i) | NearEdgeExpr::Cccv(i) => *i as u64,
            NearEdgeExpr::Koch(a, s) => k(a) << s,
            NearEdgeExpr::PolyChain(a, n) => k(a) * *n as u64,
            NearEdgeExpr::TwinChain(a, n) => 2 * k(a) * *n as u64 + 1,
        })
    }

    /// Points of the realized near-edge.
    pub fn point_count(&self) -> u64 {
        self.segment_count().0 + 1
    }

    /// The whole polyline of a leaf, in `x` order.
    pub fn leaf_polyline(points: &PointSet) -> Polyline {
        Polyline((0..points.len()).collect())
    }
}

fn check_copies(what: &str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain(format!("{what} needs at least one copy")));
    }
    Ok(())
}

impl fmt::Display for NearEdgeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NearEdgeExpr::E => f.write_str("E"),
            NearEdgeExpr::Leaf(p) => {
                f.write_str("pts[")?;
                for (i, q) in p.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{q}")?;
                }
                f.write_str("]")
            }
            NearEdgeExpr::Vee(a, b) => write!(f, "vee({a},{b})"),
            NearEdgeExpr::Wedge(a, b) => write!(f, "wedge({a},{b})"),
            NearEdgeExpr::Flip(a) => write!(f, "flip({a})"),
            NearEdgeExpr::Ccvx(i) => write!(f, "ccvx({i})"),
            NearEdgeExpr::Cccv(i) => write!(f, "cccv({i})"),
            NearEdgeExpr::Koch(a, s) => write!(f, "koch({a},{s})"),
            NearEdgeExpr::PolyChain(a, n) => write!(f, "poly({a},{n})"),
            NearEdgeExpr::TwinChain(a, n) => write!(f, "twin({a},{n})"),
        }
    }
}

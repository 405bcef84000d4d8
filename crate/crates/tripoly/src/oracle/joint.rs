//! Joint triangulation polynomials by enumerating roofs and floors.
//!
//! A roof is a monotone polyline from the first to the last point with every
//! other point strictly below it; a floor has every other point strictly
//! above. Any roof lies weakly above any floor, so every pair bounds a
//! region, which splits into lenses at the shared vertices.

use malachite_q::Rational;

use super::region::{Geometry, RegionCounter};
use crate::error::{Error, Result};
use crate::geom::{is_chain, PointSet, Polyline};
use crate::poly::{BasisTag, JointPoly, TaggedPoly};

/// Largest near-edge whose roofs and floors are enumerated.
pub const MAX_NEAR_EDGE: usize = 24;

/// A standalone near-edge prepared for enumeration. Indices refer to the
/// points sorted by `x`.
pub struct NearEdgeOracle {
    points: PointSet,
    geom: Geometry,
}

impl NearEdgeOracle {
    pub fn new(points: &PointSet) -> Result<Self> {
        if points.len() > MAX_NEAR_EDGE {
            return Err(Error::ResourceLimit(format!(
                "{} points exceed the near-edge oracle limit of {MAX_NEAR_EDGE}",
                points.len()
            )));
        }
        let points = points.sorted_by_x()?;
        let geom = Geometry::new(&points)?;
        Ok(NearEdgeOracle { points, geom })
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Every monotone polyline from the first to the last point with the
    /// remaining points strictly on side `side` (`-1` below, `+1` above).
    fn sides(&self, side: i8) -> Vec<Polyline> {
        let n = self.len();
        if n < 2 {
            return Vec::new();
        }
        let inner = n - 2;
        let mut out = Vec::new();
        for mask in 0u32..1 << inner {
            let mut line = vec![0];
            line.extend((0..inner).filter(|b| mask >> b & 1 == 1).map(|b| b + 1));
            line.push(n - 1);
            if self.all_on_side(&line, side) {
                out.push(Polyline(line));
            }
        }
        out
    }

    fn all_on_side(&self, line: &[usize], side: i8) -> bool {
        line.windows(2)
            .all(|w| (w[0] + 1..w[1]).all(|p| self.geom.orient(w[0], w[1], p) == side))
    }

    pub fn roofs(&self) -> Vec<Polyline> {
        self.sides(-1)
    }

    pub fn floors(&self) -> Vec<Polyline> {
        self.sides(1)
    }

    pub fn is_floor(&self, l: &Polyline) -> bool {
        let idx = l.indices();
        idx.len() >= 2
            && idx[0] == 0
            && *idx.last().unwrap() == self.len() - 1
            && idx.windows(2).all(|w| w[0] < w[1])
            && self.all_on_side(idx, 1)
    }

    /// Triangulations of the region between roof `u` and floor `l`.
    pub fn between(&self, counter: &mut RegionCounter<'_>, u: &Polyline, l: &Polyline) -> u128 {
        let (u, l) = (u.indices(), l.indices());
        let common: Vec<usize> = u.iter().copied().filter(|v| l.contains(v)).collect();
        let mut total = 1u128;
        for w in common.windows(2) {
            let (a, b) = (w[0], w[1]);
            let lower: Vec<usize> = l.iter().copied().filter(|&v| a < v && v < b).collect();
            let upper: Vec<usize> = u.iter().copied().filter(|&v| a < v && v < b).collect();
            if lower.is_empty() && upper.is_empty() {
                continue;
            }
            let mut poly = vec![a];
            poly.extend(&lower);
            poly.push(b);
            poly.extend(upper.iter().rev());
            let interior: Vec<usize> = (a + 1..b)
                .filter(|v| !lower.contains(v) && !upper.contains(v))
                .collect();
            total *= counter.count(&poly, &interior);
            if total == 0 {
                break;
            }
        }
        total
    }

    /// `sum_T y^|U| u^|L|` over every roof, floor and triangulation between.
    pub fn joint_poly(&self) -> Result<JointPoly> {
        if self.len() == 1 {
            return JointPoly::from_ints(BasisTag::Y, BasisTag::U, &[&[1]]);
        }
        if self.is_empty() {
            return Err(Error::domain("empty near-edge"));
        }
        let mut counter = RegionCounter::new(&self.geom);
        let roofs = self.roofs();
        let floors = self.floors();
        let rows = roofs.iter().map(|u| u.segments()).max().unwrap_or(0) + 1;
        let cols = floors.iter().map(|l| l.segments()).max().unwrap_or(0) + 1;
        let mut table = vec![vec![0u128; cols]; rows];
        for u in &roofs {
            for l in &floors {
                table[u.segments()][l.segments()] += self.between(&mut counter, u, l);
            }
        }
        let rows = table
            .into_iter()
            .map(|r| r.into_iter().map(rational_from_u128).collect())
            .collect();
        JointPoly::new(BasisTag::Y, BasisTag::U, rows)
    }

    /// `sum_T y^|U|` over triangulations whose floor is `l`.
    pub fn fixed_floor(&self, l: &Polyline) -> Result<TaggedPoly> {
        if !self.is_floor(l) {
            return Err(Error::InvalidFloor(format!(
                "{:?} is not a floor of this near-edge",
                l.indices()
            )));
        }
        let mut counter = RegionCounter::new(&self.geom);
        let mut coeffs: Vec<u128> = Vec::new();
        for u in self.roofs() {
            let c = self.between(&mut counter, &u, l);
            if coeffs.len() <= u.segments() {
                coeffs.resize(u.segments() + 1, 0);
            }
            coeffs[u.segments()] += c;
        }
        Ok(TaggedPoly::new(
            BasisTag::Y,
            coeffs.into_iter().map(rational_from_u128).collect(),
        ))
    }
}

fn rational_from_u128(c: u128) -> Rational {
    Rational::from(malachite_nz::natural::Natural::from(c))
}

/// `a^{yu}` of a standalone near-edge, by enumeration.
pub fn brute_joint_poly(points: &PointSet) -> Result<JointPoly> {
    NearEdgeOracle::new(points)?.joint_poly()
}

/// `t^L`: the part of `a^{yu}` with floor `floor`, as a polynomial in `y`.
/// Floor indices refer to the points sorted by `x`.
pub fn fixed_floor_poly(points: &PointSet, floor: &Polyline) -> Result<TaggedPoly> {
    NearEdgeOracle::new(points)?.fixed_floor(floor)
}

/// `t_C`: upper triangulations of a chain counted by roof length.
pub fn upper_triangulation_poly(points: &PointSet) -> Result<TaggedPoly> {
    if !is_chain(points)? {
        return Err(Error::NotAChain);
    }
    let o = NearEdgeOracle::new(points)?;
    if o.len() == 1 {
        return Ok(TaggedPoly::one(BasisTag::Y));
    }
    o.fixed_floor(&Polyline((0..o.len()).collect()))
}

/// All roofs of a standalone near-edge, indices in `x` order.
pub fn valid_roofs(points: &PointSet) -> Result<Vec<Polyline>> {
    Ok(NearEdgeOracle::new(points)?.roofs())
}

/// All floors of a standalone near-edge, indices in `x` order.
pub fn valid_floors(points: &PointSet) -> Result<Vec<Polyline>> {
    Ok(NearEdgeOracle::new(points)?.floors())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{lower_hull, realize};
    use crate::nearedge::NearEdgeExpr;

    fn y(c: &[i64]) -> TaggedPoly {
        TaggedPoly::from_ints(BasisTag::Y, c)
    }

    #[test]
    fn primitive_edge() {
        let e = realize(&NearEdgeExpr::E).unwrap();
        assert_eq!(
            brute_joint_poly(&e).unwrap(),
            JointPoly::from_ints(BasisTag::Y, BasisTag::U, &[&[], &[0, 1]]).unwrap()
        );
        assert_eq!(fixed_floor_poly(&e, &Polyline(vec![0, 1])).unwrap(), y(&[0, 1]));
    }

    #[test]
    fn convex_chains() {
        let c2 = realize(&NearEdgeExpr::Ccvx(2)).unwrap();
        let want = JointPoly::outer(&y(&[0, 1, 1]), &TaggedPoly::from_ints(BasisTag::U, &[0, 0, 1])).unwrap();
        assert_eq!(brute_joint_poly(&c2).unwrap(), want);
        let c3 = realize(&NearEdgeExpr::Ccvx(3)).unwrap();
        let want = JointPoly::outer(&y(&[0, 2, 2, 1]), &TaggedPoly::from_ints(BasisTag::U, &[0, 0, 0, 1])).unwrap();
        assert_eq!(brute_joint_poly(&c3).unwrap(), want);
        let c4 = realize(&NearEdgeExpr::Ccvx(4)).unwrap();
        assert_eq!(upper_triangulation_poly(&c4).unwrap(), y(&[0, 5, 5, 3, 1]));
        let v3 = realize(&NearEdgeExpr::Cccv(3)).unwrap();
        assert_eq!(upper_triangulation_poly(&v3).unwrap(), y(&[0, 0, 0, 1]));
    }

    #[test]
    fn single_point() {
        let p = PointSet::from_ints(&[(0, 0)]);
        assert_eq!(
            brute_joint_poly(&p).unwrap(),
            JointPoly::from_ints(BasisTag::Y, BasisTag::U, &[&[1]]).unwrap()
        );
    }

    #[test]
    fn floors_are_validated() {
        let c2 = realize(&NearEdgeExpr::Ccvx(2)).unwrap();
        assert!(matches!(
            fixed_floor_poly(&c2, &Polyline(vec![0, 2])),
            Err(Error::InvalidFloor(_))
        ));
        let low = lower_hull(&c2).unwrap();
        assert_eq!(fixed_floor_poly(&c2, &low).unwrap(), y(&[0, 1, 1]));
    }

    #[test]
    fn non_chains_are_rejected() {
        let p = PointSet::from_ints(&[(0, 0), (1, -3), (2, 2), (3, 0)]);
        assert!(matches!(upper_triangulation_poly(&p), Err(Error::NotAChain)));
    }
}

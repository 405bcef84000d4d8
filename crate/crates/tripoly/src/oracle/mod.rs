//! Exhaustive reference computations for small point sets: triangulation
//! counts and joint triangulation polynomials straight from their
//! definitions.

mod joint;
mod region;

pub use joint::{
    brute_joint_poly, fixed_floor_poly, upper_triangulation_poly, valid_floors, valid_roofs, NearEdgeOracle,
};
pub use region::{Geometry, RegionCounter, Triangulation, MAX_POINTS};

use crate::error::{Error, Result};
use crate::geom::{convex_hull_ccw, PointSet};

/// Default cap on the size of arbitrary point sets handed to the oracle.
pub const DEFAULT_CAP: usize = 16;

/// Number of triangulations of `points`, for at most [`DEFAULT_CAP`] points.
pub fn count_all_triangulations(points: &PointSet) -> Result<u128> {
    count_all_triangulations_capped(points, DEFAULT_CAP)
}

pub fn count_all_triangulations_capped(points: &PointSet, cap: usize) -> Result<u128> {
    let (g, hull, inner) = setup(points, cap)?;
    if points.len() < 3 {
        return Ok(1);
    }
    Ok(RegionCounter::new(&g).count(&hull, &inner))
}

/// Every triangulation of `points`, as triangle lists.
pub fn enumerate_triangulations(points: &PointSet, cap: usize) -> Result<Vec<Triangulation>> {
    let (g, hull, inner) = setup(points, cap)?;
    if points.len() < 3 {
        return Ok(vec![Triangulation { triangles: Vec::new() }]);
    }
    Ok(RegionCounter::new(&g).enumerate(&hull, &inner))
}

fn setup(points: &PointSet, cap: usize) -> Result<(Geometry, Vec<usize>, Vec<usize>)> {
    if points.len() > cap.min(MAX_POINTS) {
        return Err(Error::ResourceLimit(format!(
            "{} points exceed the cap of {cap}",
            points.len()
        )));
    }
    let g = Geometry::new(points)?;
    let hull = convex_hull_ccw(points);
    let inner = (0..points.len()).filter(|i| !hull.contains(i)).collect();
    Ok((g, hull, inner))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::geom::{double_circle, Point};
    use crate::poly::{catalan, Rational};

    fn convex(n: usize) -> PointSet {
        // Points on the parabola y = x^2 are in convex position.
        (0..n as i64).map(|i| Point::from_ints(i, i * i)).collect()
    }

    #[test]
    fn convex_polygons_give_catalan_numbers() {
        for n in 3..=10 {
            let c = catalan(n as i64 - 2).unwrap();
            assert_eq!(
                Rational::from(count_all_triangulations(&convex(n)).unwrap()),
                c,
                "n = {n}"
            );
        }
    }

    #[test]
    fn double_circle_of_three() {
        assert_eq!(count_all_triangulations(&double_circle(3).unwrap()).unwrap(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            count_all_triangulations_capped(&convex(6), 5),
            Err(Error::ResourceLimit(_))
        ));
        assert_eq!(count_all_triangulations(&convex(2)).unwrap(), 1);
    }

    #[test]
    fn enumeration_is_distinct_maximal_and_complete() {
        let sets = [
            double_circle(3).unwrap(),
            PointSet::from_ints(&[(0, 0), (9, 1), (11, 8), (4, 12), (-2, 7), (3, 4), (6, 5), (5, 8)]),
        ];
        for p in &sets {
            let g = Geometry::new(p).unwrap();
            let ts = enumerate_triangulations(p, DEFAULT_CAP).unwrap();
            assert_eq!(ts.len() as u128, count_all_triangulations(p).unwrap());
            let distinct: HashSet<_> = ts.iter().map(|t| t.edges()).collect();
            assert_eq!(distinct.len(), ts.len());
            let n = p.len();
            let h = convex_hull_ccw(p).len();
            for t in &ts {
                assert_eq!(t.triangles.len(), 2 * n - h - 2);
                let edges = t.edges();
                for a in 0..n {
                    for b in a + 1..n {
                        let present = edges.contains(&(a, b));
                        let blocked = edges.iter().any(|&(c, d)| g.crosses(a, b, c, d));
                        assert!(present ^ blocked, "edge {a}-{b}");
                    }
                }
            }
        }
    }
}

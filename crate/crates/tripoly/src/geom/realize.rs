//! Coordinates for near-edge expressions and the double circle.
//!
//! Realized near-edges are kept normalized: sorted by `x`, first point
//! `(0,0)`, last point `(1,0)`.

use malachite_base::num::basic::traits::One;
use malachite_q::Rational;

use super::eps::{settle, EpsPoint};
use super::{Point, PointSet};
use crate::error::{Error, Result};
use crate::nearedge::{CoreDag, NearEdgeExpr, Node, NodeId};

/// `(0,0)` and `(1,0)`.
pub fn primitive_edge() -> PointSet {
    PointSet::from_ints(&[(0, 0), (1, 0)])
}

/// Sorts by `x` and maps the endpoints to `(0,0)` and `(1,0)` with an
/// orientation-preserving shear and scale.
pub fn normalize(points: &PointSet) -> Result<PointSet> {
    let p = points.sorted_by_x()?;
    if p.len() < 2 {
        return Ok(p.map(|_| Point::origin()));
    }
    let (a, b) = (&p[0], &p[p.len() - 1]);
    let w = &b.x - &a.x;
    let slope = (&b.y - &a.y) / &w;
    Ok(p.map(|q| {
        let dx = &q.x - &a.x;
        let dy = &q.y - &a.y - &dx * &slope;
        Point::new(dx / &w, dy / &w)
    }))
}

/// Vertical reflection.
pub fn flip(points: &PointSet) -> PointSet {
    points.map(|p| Point::new(p.x.clone(), -&p.y))
}

/// Interior points of a normalized near-edge placed along `from -> to`, with
/// its upper side to the left of that direction.
fn along<'a>(a: &'a PointSet, from: &Point, to: &Point) -> impl Iterator<Item = EpsPoint> + 'a {
    let d = to - from;
    let normal = d.rot90();
    let from = from.clone();
    a.points()[1..a.len() - 1].iter().map(move |q| EpsPoint {
        base: &from + &d.scale(&q.x),
        dir: normal.scale(&q.y),
    })
}

fn sum(a: &PointSet, b: &PointSet, apex_y: i64) -> Result<PointSet> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::domain("only near-edges with at least two points can be glued"));
    }
    let (a, b) = (normalize(a)?, normalize(b)?);
    let d = Point::from_ints(0, 0);
    let e = Point::from_ints(1, apex_y);
    let f = Point::from_ints(2, 0);
    let mut family = vec![EpsPoint::fixed(d.clone())];
    family.extend(along(&a, &d, &e));
    family.push(EpsPoint::fixed(e.clone()));
    family.extend(along(&b, &e, &f));
    family.push(EpsPoint::fixed(f));
    let (_, points) = settle(&family, true)?;
    let half = Rational::from_signeds(1, 2);
    Ok(points.map(|p| p.scale(&half)))
}

/// `a ∨ b`: glued onto `(0,0)-(1,-1)-(2,0)`, then scaled to unit width.
pub fn convex_sum(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    sum(a, b, -1)
}

/// `a ∧ b`: glued onto `(0,0)-(1,1)-(2,0)`, then scaled to unit width.
pub fn concave_sum(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    sum(a, b, 1)
}

/// Normalized coordinates for every core node reachable from `root`.
pub(crate) fn realize_node(dag: &CoreDag, root: NodeId) -> Result<PointSet> {
    let mut memo: Vec<Option<PointSet>> = vec![None; dag.len()];
    for id in 0..=root {
        let p = match dag.node(id) {
            Node::E => primitive_edge(),
            Node::Leaf(i) => normalize(dag.leaf(i))?,
            Node::Flip(a) => flip(memo_get(&memo, a)),
            Node::Vee(a, b) => convex_sum(memo_get(&memo, a), memo_get(&memo, b))?,
            Node::Wedge(a, b) => concave_sum(memo_get(&memo, a), memo_get(&memo, b))?,
        };
        memo[id] = Some(p);
    }
    Ok(memo[root].take().expect("root realized"))
}

fn memo_get(memo: &[Option<PointSet>], id: NodeId) -> &PointSet {
    memo[id].as_ref().expect("children precede parents")
}

/// Exact coordinates with the order type the expression defines.
///
/// Every node is realized, so this is meant for small expressions.
pub fn realize(expr: &NearEdgeExpr) -> Result<PointSet> {
    let mut dag = CoreDag::new();
    let root = dag.add(expr);
    realize_node(&dag, root)
}

/// Rational point on the unit circle near angle `theta`.
fn circle_point(theta: f64, den: i64) -> Point {
    let half = theta / 2.0;
    if (half - std::f64::consts::FRAC_PI_2).abs() < 1e-12 {
        return Point::from_ints(-1, 0);
    }
    let t = Rational::from_signeds((half.tan() * den as f64).round() as i64, den);
    let t2 = &t * &t;
    let q = Rational::ONE + &t2;
    Point::new((Rational::ONE - &t2) / &q, Rational::from(2) * t / q)
}

/// `2n` points: a rational approximation of the regular `n`-gon,
/// counterclockwise, followed by one point just inside the midpoint of each
/// edge `i -> i+1`.
pub fn double_circle(n: usize) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::domain("the double circle needs n >= 3"));
    }
    let den = 64 * n as i64;
    let outer: Vec<Point> = (0..n)
        .map(|i| circle_point(2.0 * std::f64::consts::PI * i as f64 / n as f64, den))
        .collect();
    let mut family: Vec<EpsPoint> = outer.iter().cloned().map(EpsPoint::fixed).collect();
    let half = Rational::from_signeds(1, 2);
    for i in 0..n {
        let mid = (&outer[i] + &outer[(i + 1) % n]).scale(&half);
        let dir = Point::new(-&mid.x, -&mid.y);
        family.push(EpsPoint { base: mid, dir });
    }
    let (_, points) = settle(&family, false)?;
    Ok(points)
}

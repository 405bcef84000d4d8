//! Exact planar geometry: points, orientation, order types, hulls, the chain
//! and near-edge predicates, and realization of near-edge expressions.

mod eps;
mod io;
mod nearedge;
mod realize;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use malachite_base::num::arithmetic::traits::Sign;
use malachite_base::num::basic::traits::Zero;
use malachite_q::Rational;

use crate::error::{Error, Result};

pub use io::{parse_points, read_points, write_points};
pub use nearedge::is_near_edge;
pub use realize::{concave_sum, convex_sum, double_circle, flip, normalize, primitive_edge, realize};

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Rational::from(x), Rational::from(y))
    }

    pub fn origin() -> Self {
        Point::new(Rational::ZERO, Rational::ZERO)
    }

    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn scale(&self, c: &Rational) -> Point {
        Point::new(&self.x * c, &self.y * c)
    }

    /// Rotation by a quarter turn counterclockwise.
    pub fn rot90(&self) -> Point {
        Point::new(-&self.y, self.x.clone())
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl Mul<&Point> for &Rational {
    type Output = Point;
    fn mul(self, p: &Point) -> Point {
        p.scale(self)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

/// Turn direction of an ordered triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Greater => Orientation::CounterClockwise,
        }
    }

    /// `+1`, `0` or `-1`.
    pub fn as_i8(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }
}

/// Sign of `(b - a) x (c - a)`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Orientation {
    Orientation::from_ordering((b - a).cross(&(c - a)).sign())
}

/// An ordered list of points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PointSet(Vec<Point>);

impl PointSet {
    pub fn new(points: Vec<Point>) -> Self {
        PointSet(points)
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Self {
        PointSet(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn into_points(self) -> Vec<Point> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.0.iter()
    }

    pub fn orient(&self, i: usize, j: usize, k: usize) -> Orientation {
        orient(&self.0[i], &self.0[j], &self.0[k])
    }

    /// Indices sorted by `x`; errors on a repeated `x`.
    pub fn x_order(&self) -> Result<Vec<usize>> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.0[a].x.cmp(&self.0[b].x));
        if let Some(w) = idx.windows(2).find(|w| self.0[w[0]].x == self.0[w[1]].x) {
            return Err(Error::domain(format!(
                "points {} and {} share an x-coordinate",
                w[0], w[1]
            )));
        }
        Ok(idx)
    }

    /// The same points sorted by `x`; errors on a repeated `x`.
    pub fn sorted_by_x(&self) -> Result<PointSet> {
        Ok(PointSet(
            self.x_order()?.into_iter().map(|i| self.0[i].clone()).collect(),
        ))
    }

    /// The first collinear triple, if any.
    pub fn collinear_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.orient(i, j, k) == Orientation::Collinear {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn check_general_position(&self) -> Result<()> {
        match self.collinear_triple() {
            Some((i, j, k)) => Err(Error::Degenerate(i, j, k)),
            None => Ok(()),
        }
    }

    pub fn map(&self, f: impl Fn(&Point) -> Point) -> PointSet {
        PointSet(self.0.iter().map(f).collect())
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        PointSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;
    fn index(&self, i: usize) -> &Point {
        &self.0[i]
    }
}

/// Counterclockwise flags of every triple `i < j < k`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderType {
    n: usize,
    ccw: Vec<bool>,
}

impl OrderType {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        // Triples before i, then pairs (j, k) with i < j < k.
        let n = self.n;
        let before_i = (0..i).map(|a| (n - a - 1) * (n - a - 2) / 2).sum::<usize>();
        let m = n - i - 1;
        let (j, k) = (j - i - 1, k - i - 1);
        before_i + j * (2 * m - j - 1) / 2 + (k - j - 1)
    }

    /// Orientation of `(i, j, k)` for any three distinct indices.
    pub fn sign(&self, i: usize, j: usize, k: usize) -> Orientation {
        let mut t = [i, j, k];
        let mut swaps = 0;
        for a in 0..3 {
            for b in 0..2 - a {
                if t[b] > t[b + 1] {
                    t.swap(b, b + 1);
                    swaps += 1;
                }
            }
        }
        let o = if self.ccw[self.slot(t[0], t[1], t[2])] {
            Orientation::CounterClockwise
        } else {
            Orientation::Clockwise
        };
        if swaps % 2 == 1 {
            o.reversed()
        } else {
            o
        }
    }

    /// Raw flags, lexicographic in `(i, j, k)`.
    pub fn flags(&self) -> &[bool] {
        &self.ccw
    }
}

/// The order type of `points`; errors on a collinear triple.
pub fn order_type(points: &PointSet) -> Result<OrderType> {
    let n = points.len();
    let mut ccw = Vec::with_capacity(n * n.saturating_sub(1) * n.saturating_sub(2) / 6);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                match points.orient(i, j, k) {
                    Orientation::Collinear => return Err(Error::Degenerate(i, j, k)),
                    o => ccw.push(o == Orientation::CounterClockwise),
                }
            }
        }
    }
    Ok(OrderType { n, ccw })
}

/// Indices into a point set, in path order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyline(pub Vec<usize>);

impl Polyline {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn segments(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }
}

fn monotone_hull(points: &PointSet, keep: Orientation) -> Result<Polyline> {
    let order = points.x_order()?;
    let mut hull: Vec<usize> = Vec::with_capacity(order.len());
    for i in order {
        while hull.len() >= 2 {
            let o = points.orient(hull[hull.len() - 2], hull[hull.len() - 1], i);
            if o == keep {
                break;
            }
            hull.pop();
        }
        hull.push(i);
    }
    Ok(Polyline(hull))
}

/// Upper hull from the leftmost to the rightmost point.
pub fn upper_hull(points: &PointSet) -> Result<Polyline> {
    monotone_hull(points, Orientation::Clockwise)
}

/// Lower hull from the leftmost to the rightmost point.
pub fn lower_hull(points: &PointSet) -> Result<Polyline> {
    monotone_hull(points, Orientation::CounterClockwise)
}

/// Hull vertices counterclockwise from the lexicographically smallest point.
/// Collinear boundary points are dropped.
pub fn convex_hull_ccw(points: &PointSet) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| points[a].cmp(&points[b]));
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && points.orient(lower[lower.len() - 2], lower[lower.len() - 1], i) != Orientation::CounterClockwise
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && points.orient(upper[upper.len() - 2], upper[upper.len() - 1], i) != Orientation::CounterClockwise
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// True iff segments `ab` and `cd` cross at a point interior to both.
/// Callers guarantee general position; shared endpoints never cross.
pub(crate) fn segments_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 != o2 && o3 != o4 && [o1, o2, o3, o4].iter().all(|o| *o != Orientation::Collinear)
}

/// True iff each edge between x-consecutive points crosses no other segment
/// spanned by the set.
pub fn is_chain(points: &PointSet) -> Result<bool> {
    let order = points.x_order()?;
    points.check_general_position()?;
    let n = points.len();
    for w in order.windows(2) {
        let (a, b) = (&points[w[0]], &points[w[1]]);
        for i in 0..n {
            for j in i + 1..n {
                if [i, j].iter().any(|v| *v == w[0] || *v == w[1]) {
                    continue;
                }
                if segments_cross(a, b, &points[i], &points[j]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The line through two distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    a: Point,
    b: Point,
}

impl Line {
    pub fn through(a: Point, b: Point) -> Result<Self> {
        if a == b {
            return Err(Error::domain("a line needs two distinct points"));
        }
        Ok(Line { a, b })
    }

    /// Orthogonal projection of `p`.
    pub fn project(&self, p: &Point) -> Point {
        let d = &self.b - &self.a;
        let t = (p - &self.a).dot(&d) / d.dot(&d);
        &self.a + &d.scale(&t)
    }
}

/// Moves `p` toward its projection `h` on `line`, to `h + eps (p - h)`.
pub fn shrink_point(p: &Point, line: &Line, eps: &Rational) -> Point {
    let h = line.project(p);
    &h + &(p - &h).scale(eps)
}

/// Shrinks every point of `points` toward `line` by `eps` in `(0, 1]`.
pub fn shrink(points: &[Point], line: &Line, eps: &Rational) -> Result<Vec<Point>> {
    if *eps <= 0u32 || *eps > 1u32 {
        return Err(Error::domain(format!("shrink factor {eps} is outside (0, 1]")));
    }
    Ok(points.iter().map(|p| shrink_point(p, line, eps)).collect())
}

//! Triangulations of a simple polygon with interior points.
//!
//! The triangle on the first boundary edge either reaches an interior point,
//! which joins the boundary, or another boundary vertex, which splits the
//! polygon in two. Subproblems are memoized on the boundary cycle, rotated
//! to start at its smallest index, together with the set of interior points.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geom::{Orientation, PointSet};

/// Largest point set the bitmask representation supports.
pub const MAX_POINTS: usize = 64;

/// Orientation signs and `y` ranks of a fixed point set.
#[derive(Clone, Debug)]
pub struct Geometry {
    n: usize,
    orient: Vec<i8>,
    y_rank: Vec<u32>,
}

impl Geometry {
    /// Precomputes every orientation; errors on collinear triples and on
    /// more than [`MAX_POINTS`] points.
    pub fn new(points: &PointSet) -> Result<Self> {
        let n = points.len();
        if n > MAX_POINTS {
            return Err(Error::ResourceLimit(format!(
                "{n} points exceed the oracle limit of {MAX_POINTS}"
            )));
        }
        let mut orient = vec![0i8; n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let o = points.orient(i, j, k);
                    if o == Orientation::Collinear {
                        return Err(Error::Degenerate(i, j, k));
                    }
                    let s = o.as_i8();
                    for (a, b, c, sign) in [
                        (i, j, k, s),
                        (j, k, i, s),
                        (k, i, j, s),
                        (j, i, k, -s),
                        (i, k, j, -s),
                        (k, j, i, -s),
                    ] {
                        orient[(a * n + b) * n + c] = sign;
                    }
                }
            }
        }
        let mut by_y: Vec<usize> = (0..n).collect();
        by_y.sort_by(|&a, &b| points[a].y.cmp(&points[b].y));
        let mut y_rank = vec![0u32; n];
        for w in 1..n {
            let (prev, cur) = (by_y[w - 1], by_y[w]);
            y_rank[cur] = y_rank[prev] + u32::from(points[cur].y != points[prev].y);
        }
        Ok(Geometry { n, orient, y_rank })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `+1` counterclockwise, `-1` clockwise, `0` for repeated indices.
    #[inline]
    pub fn orient(&self, a: usize, b: usize, c: usize) -> i8 {
        self.orient[(a * self.n + b) * self.n + c]
    }

    /// Proper crossing of segments `ab` and `cd`; shared endpoints never cross.
    pub fn crosses(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        if a == c || a == d || b == c || b == d {
            return false;
        }
        self.orient(a, b, c) != self.orient(a, b, d) && self.orient(c, d, a) != self.orient(c, d, b)
    }

    /// `p` strictly inside the counterclockwise triangle `abc`.
    pub fn in_triangle(&self, a: usize, b: usize, c: usize, p: usize) -> bool {
        self.orient(a, b, p) > 0 && self.orient(b, c, p) > 0 && self.orient(c, a, p) > 0
    }

    /// Crossing-number test with the half-open rule on `y`.
    pub fn in_polygon(&self, poly: &[usize], p: usize) -> bool {
        let yp = self.y_rank[p];
        let mut inside = false;
        for (k, &u) in poly.iter().enumerate() {
            let v = poly[(k + 1) % poly.len()];
            let (yu, yv) = (self.y_rank[u], self.y_rank[v]);
            if (yu > yp) != (yv > yp) && (yv > yu) == (self.orient(u, v, p) > 0) {
                inside = !inside;
            }
        }
        inside
    }
}

/// A triangulation as counterclockwise triangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    pub triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    /// Sorted, deduplicated edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])])
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }
}

type Key = (Vec<u8>, u64);

fn canonical(boundary: &[usize]) -> Vec<u8> {
    let start = (0..boundary.len()).min_by_key(|&i| boundary[i]).unwrap_or(0);
    boundary[start..]
        .iter()
        .chain(&boundary[..start])
        .map(|&v| v as u8)
        .collect()
}

fn mask_of(points: &[usize]) -> u64 {
    points.iter().fold(0, |m, &p| m | 1 << p)
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// One way to finish the triangle on edge `b0 b1`.
enum Step {
    Insert(usize),
    Split { k: usize, left: u64, right: u64 },
}

/// Memoized triangulation counter over one [`Geometry`].
pub struct RegionCounter<'g> {
    g: &'g Geometry,
    memo: HashMap<Key, u128>,
}

impl<'g> RegionCounter<'g> {
    pub fn new(g: &'g Geometry) -> Self {
        RegionCounter {
            g,
            memo: HashMap::new(),
        }
    }

    pub fn geometry(&self) -> &Geometry {
        self.g
    }

    /// Triangulations of the counterclockwise polygon `boundary` with the
    /// given interior points. Fewer than three boundary vertices means a
    /// degenerate region with exactly one (empty) triangulation.
    pub fn count(&mut self, boundary: &[usize], interior: &[usize]) -> u128 {
        self.count_key(canonical(boundary), mask_of(interior))
    }

    fn count_key(&mut self, boundary: Vec<u8>, interior: u64) -> u128 {
        if boundary.len() < 3 {
            return u128::from(interior == 0);
        }
        if boundary.len() == 3 && interior == 0 {
            return 1;
        }
        let key = (boundary, interior);
        if let Some(&c) = self.memo.get(&key) {
            return c;
        }
        let b: Vec<usize> = key.0.iter().map(|&v| v as usize).collect();
        let mut total = 0u128;
        for step in steps(self.g, &b, interior) {
            total += match step {
                Step::Insert(c) => {
                    let mut nb = Vec::with_capacity(b.len() + 1);
                    nb.push(b[0]);
                    nb.push(c);
                    nb.extend_from_slice(&b[1..]);
                    self.count_key(canonical(&nb), interior & !(1 << c))
                }
                Step::Split { k, left, right } => {
                    let l = self.count_key(canonical(&b[1..=k]), left);
                    if l == 0 {
                        continue;
                    }
                    let mut rb = b[k..].to_vec();
                    rb.push(b[0]);
                    l * self.count_key(canonical(&rb), right)
                }
            };
        }
        self.memo.insert(key, total);
        total
    }

    /// Every triangulation, without memoization; for small regions only.
    pub fn enumerate(&self, boundary: &[usize], interior: &[usize]) -> Vec<Triangulation> {
        enumerate(self.g, boundary.to_vec(), mask_of(interior))
            .into_iter()
            .map(|triangles| Triangulation { triangles })
            .collect()
    }
}

fn enumerate(g: &Geometry, b: Vec<usize>, interior: u64) -> Vec<Vec<[usize; 3]>> {
    if b.len() < 3 {
        return if interior == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for step in steps(g, &b, interior) {
        match step {
            Step::Insert(c) => {
                let mut nb = vec![b[0], c];
                nb.extend_from_slice(&b[1..]);
                for mut t in enumerate(g, nb, interior & !(1 << c)) {
                    t.push([b[0], b[1], c]);
                    out.push(t);
                }
            }
            Step::Split { k, left, right } => {
                let c = b[k];
                let mut rb = b[k..].to_vec();
                rb.push(b[0]);
                let rights = enumerate(g, rb, right);
                for l in enumerate(g, b[1..=k].to_vec(), left) {
                    for r in &rights {
                        let mut t = l.clone();
                        t.extend_from_slice(r);
                        t.push([b[0], b[1], c]);
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// Admissible apexes for the triangle on `b[0] b[1]`.
fn steps(g: &Geometry, b: &[usize], interior: u64) -> Vec<Step> {
    let (b0, b1) = (b[0], b[1]);
    let m = b.len();
    let diagonal_ok = |x: usize, c: usize| (0..m).all(|i| !g.crosses(x, c, b[i], b[(i + 1) % m]));
    let empty = |c: usize| {
        members(interior).all(|p| p == c || !g.in_triangle(b0, b1, c, p))
            && b.iter()
                .all(|&p| p == b0 || p == b1 || p == c || !g.in_triangle(b0, b1, c, p))
    };
    let mut out = Vec::new();
    for c in members(interior) {
        if g.orient(b0, b1, c) > 0 && empty(c) && diagonal_ok(b0, c) && diagonal_ok(b1, c) {
            out.push(Step::Insert(c));
        }
    }
    for k in 2..m {
        let c = b[k];
        if g.orient(b0, b1, c) <= 0 || !empty(c) {
            continue;
        }
        if (k != 2 && !diagonal_ok(b1, c)) || (k != m - 1 && !diagonal_ok(b0, c)) {
            continue;
        }
        let left_poly = &b[1..=k];
        let left = if left_poly.len() < 3 {
            0
        } else {
            members(interior)
                .filter(|&p| g.in_polygon(left_poly, p))
                .fold(0, |a, p| a | 1 << p)
        };
        out.push(Step::Split {
            k,
            left,
            right: interior & !left,
        });
    }
    out
}

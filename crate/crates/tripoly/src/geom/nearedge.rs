use std::cmp::Ordering;

use malachite_base::num::arithmetic::traits::Sign;

use super::eps::{has_root_in_unit_interval, orient_poly, EpsPoint};
use super::{Line, PointSet, Polyline};
use crate::error::{Error, Result};

/// True iff the polyline is monotone in some rotated frame and shrinking it
/// toward the line through its endpoints, by any factor in `(0, 1]`, keeps
/// the order type of `points`.
///
/// Only triples mixing polyline and other points can change; each such
/// orientation is a quadratic in the factor and is checked for a root.
pub fn is_near_edge(points: &PointSet, poly: &Polyline) -> Result<bool> {
    let idx = poly.indices();
    if idx.len() < 2 {
        return Err(Error::domain("a near-edge needs at least two points"));
    }
    if idx.iter().any(|&i| i >= points.len()) {
        return Err(Error::domain("polyline index out of range"));
    }
    let mut seen = vec![false; points.len()];
    for &i in idx {
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::domain(format!("polyline repeats point {i}")));
        }
    }
    points.check_general_position()?;

    let dirs: Vec<_> = poly.edges().map(|(a, b)| &points[b] - &points[a]).collect();
    let monotone = dirs.iter().any(|a| {
        dirs.iter().all(|v| match a.cross(v).sign() {
            Ordering::Greater => true,
            Ordering::Equal => a.dot(v) > 0u32,
            Ordering::Less => false,
        })
    });
    if !monotone {
        return Ok(false);
    }

    let line = Line::through(points[idx[0]].clone(), points[*idx.last().unwrap()].clone())?;
    let family: Vec<EpsPoint> = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if seen[i] {
                let h = line.project(p);
                EpsPoint { dir: p - &h, base: h }
            } else {
                EpsPoint::fixed(p.clone())
            }
        })
        .collect();
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let on = [i, j, k].iter().filter(|&&v| seen[v]).count();
                if on == 0 || on == 3 {
                    continue;
                }
                if has_root_in_unit_interval(&orient_poly(&family[i], &family[j], &family[k])) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

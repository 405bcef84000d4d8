//! Point files: one `x y` pair per line, integers or `p/q`, `#` comments.

use std::fmt::Write as _;
use std::path::Path;

use super::{Point, PointSet};
use crate::error::{Error, Result};
use crate::poly::parse_rational;

pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [x, y] = fields[..] else {
            return Err(Error::domain(format!("line {}: expected two coordinates", n + 1)));
        };
        let coord = |s: &str| parse_rational(s).map_err(|e| Error::domain(format!("line {}: {e}", n + 1)));
        out.push(Point::new(coord(x)?, coord(y)?));
    }
    Ok(PointSet::new(out))
}

pub fn read_points(path: impl AsRef<Path>) -> Result<PointSet> {
    parse_points(&std::fs::read_to_string(path)?)
}

pub fn write_points(points: &PointSet) -> String {
    let mut s = String::new();
    for p in points {
        let _ = writeln!(s, "{p}");
    }
    s
}

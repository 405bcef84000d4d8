//! Binary order-type databases: fixed-size records of `n` points, each
//! point an unsigned little-endian `x` then `y`.

use std::fs::File;
use std::io::{BufReader, Read, Seek, SeekFrom};
use std::ops::Range;
use std::path::{Path, PathBuf};

use malachite_q::Rational;

use crate::error::{Error, Result};
use crate::geom::{convex_hull_ccw, Point, PointSet, Polyline};
use crate::nearedge::NearEdgeExpr;

/// Bytes per coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoordWidth {
    U8,
    U16,
}

impl CoordWidth {
    /// 8 bits up to 8 points, 16 bits above.
    pub fn for_points(n: usize) -> Self {
        if n <= 8 {
            CoordWidth::U8
        } else {
            CoordWidth::U16
        }
    }

    pub fn from_bits(bits: u32) -> Result<Self> {
        match bits {
            8 => Ok(CoordWidth::U8),
            16 => Ok(CoordWidth::U16),
            _ => Err(Error::DbFormat(format!("unsupported coordinate width {bits}"))),
        }
    }

    pub fn bytes(self) -> usize {
        match self {
            CoordWidth::U8 => 1,
            CoordWidth::U16 => 2,
        }
    }
}

/// One point set from the database.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderTypeRecord {
    pub index: u64,
    pub points: PointSet,
    /// Hull vertices counterclockwise from the lexicographically smallest.
    pub hull: Polyline,
}

impl OrderTypeRecord {
    /// Validates general position and computes the hull.
    pub fn new(index: u64, points: PointSet) -> Result<Self> {
        if let Some(triple) = points.collinear_triple() {
            return Err(Error::DegenerateRecord { index, triple });
        }
        let hull = Polyline(convex_hull_ccw(&points));
        Ok(OrderTypeRecord { index, points, hull })
    }
}

/// A database file opened for random access by record index.
#[derive(Clone, Debug)]
pub struct OrderTypeDb {
    path: PathBuf,
    n: usize,
    width: CoordWidth,
    len: u64,
}

impl OrderTypeDb {
    /// Checks that the file size is a whole number of records.
    pub fn open(path: impl AsRef<Path>, n: usize, width: CoordWidth) -> Result<Self> {
        if n < 3 {
            return Err(Error::DbFormat(format!("records need at least 3 points, got {n}")));
        }
        let path = path.as_ref().to_path_buf();
        let size = std::fs::metadata(&path)?.len();
        let rec = (n * 2 * width.bytes()) as u64;
        if size % rec != 0 {
            return Err(Error::DbFormat(format!(
                "{}: size {size} is not a multiple of the record size {rec}",
                path.display()
            )));
        }
        Ok(OrderTypeDb {
            path,
            n,
            width,
            len: size / rec,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn points_per_record(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> CoordWidth {
        self.width
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn record_bytes(&self) -> usize {
        self.n * 2 * self.width.bytes()
    }

    fn decode(&self, index: u64, bytes: &[u8]) -> PointSet {
        let w = self.width.bytes();
        let coord = |k: usize| -> i64 {
            let b = &bytes[k * w..(k + 1) * w];
            match self.width {
                CoordWidth::U8 => b[0] as i64,
                CoordWidth::U16 => u16::from_le_bytes([b[0], b[1]]) as i64,
            }
        };
        debug_assert_eq!(bytes.len(), self.record_bytes(), "record {index}");
        PointSet::new(
            (0..self.n)
                .map(|i| Point::from_ints(coord(2 * i), coord(2 * i + 1)))
                .collect(),
        )
    }

    /// Raw point sets for `range`, in file order, without validation.
    pub fn read_range(&self, range: Range<u64>) -> Result<Vec<(u64, PointSet)>> {
        let end = range.end.min(self.len);
        if range.start >= end {
            return Ok(Vec::new());
        }
        let rec = self.record_bytes();
        let mut f = BufReader::new(File::open(&self.path)?);
        f.seek(SeekFrom::Start(range.start * rec as u64))?;
        let mut buf = vec![0u8; rec];
        let mut out = Vec::with_capacity((end - range.start) as usize);
        for i in range.start..end {
            f.read_exact(&mut buf)?;
            out.push((i, self.decode(i, &buf)));
        }
        Ok(out)
    }

    /// Validated records for `range`; a collinear triple is an error.
    pub fn records(&self, range: Range<u64>) -> Result<Vec<OrderTypeRecord>> {
        self.read_range(range)?
            .into_iter()
            .map(|(i, p)| OrderTypeRecord::new(i, p))
            .collect()
    }

    pub fn record(&self, index: u64) -> Result<OrderTypeRecord> {
        if index >= self.len {
            return Err(Error::DbFormat(format!(
                "record {index} out of range (database has {})",
                self.len
            )));
        }
        self.records(index..index + 1)?
            .pop()
            .ok_or_else(|| Error::DbFormat("empty read".into()))
    }
}

/// Opens `path` and returns every record; degenerate records are fatal
/// unless `skip_degenerate`, in which case their indices are returned.
pub fn read_order_type_db(
    path: impl AsRef<Path>,
    n: usize,
    width: CoordWidth,
    skip_degenerate: bool,
) -> Result<(Vec<OrderTypeRecord>, Vec<u64>)> {
    let db = OrderTypeDb::open(path, n, width)?;
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (i, p) in db.read_range(0..db.len())? {
        match OrderTypeRecord::new(i, p) {
            Ok(r) => records.push(r),
            Err(Error::DegenerateRecord { index, .. }) if skip_degenerate => skipped.push(index),
            Err(e) => return Err(e),
        }
    }
    Ok((records, skipped))
}

/// Serializes point sets with non-negative integer coordinates.
pub fn encode_records(sets: &[Vec<(u16, u16)>], width: CoordWidth) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let n = sets.first().map_or(0, Vec::len);
    for s in sets {
        if s.len() != n {
            return Err(Error::DbFormat("records must have equal sizes".into()));
        }
        for &(x, y) in s {
            for c in [x, y] {
                match width {
                    CoordWidth::U8 => out.push(
                        u8::try_from(c)
                            .map_err(|_| Error::DbFormat(format!("coordinate {c} does not fit in 8 bits")))?,
                    ),
                    CoordWidth::U16 => out.extend(c.to_le_bytes()),
                }
            }
        }
    }
    Ok(out)
}

/// The other points of the record, ordered counterclockwise around hull
/// vertex `hull[j]`, as a leaf.
///
/// A projective map sends the apex to infinity above the near-edge, so rays
/// from the apex become vertical lines and orientations of the remaining
/// points are preserved.
pub fn near_edge_from_record(rec: &OrderTypeRecord, j: usize) -> Result<NearEdgeExpr> {
    let h = rec.hull.indices();
    if j >= h.len() {
        return Err(Error::domain(format!("hull index {j} out of range 0..{}", h.len())));
    }
    let pts = rec.points.points();
    let apex = &pts[h[j]];
    let e1 = &pts[h[(j + 1) % h.len()]] - apex;
    let e2 = &pts[h[(j + h.len() - 1) % h.len()]] - apex;
    let spread = &e1 - &e2;
    let mapped = pts
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != h[j])
        .map(|(_, q)| {
            let p = q - apex;
            // Positive on the cone spanned by e1 and e2.
            let den = spread.cross(&p);
            Point::new(e1.cross(&p) / &den, Rational::from(1) / den)
        })
        .collect();
    NearEdgeExpr::leaf(PointSet::new(mapped))
}

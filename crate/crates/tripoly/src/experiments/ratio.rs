//! Extreme coefficient ratios `[y^i] t^L / [y^j] t^L` over database
//! near-edges and all of their floors, grouped by upper hull size.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use malachite_q::Rational;
use rayon::prelude::*;

use super::db::{near_edge_from_record, OrderTypeDb, OrderTypeRecord};
use crate::error::{Error, Result};
use crate::nearedge::NearEdgeExpr;
use crate::oracle::NearEdgeOracle;
use crate::poly::TaggedPoly;

/// For upper hull size `k`, `cells[r][c]` with `r < c` is the minimum of
/// `[y^(k+r)] / [y^(k+c)]`, `cells[c][r]` its maximum, and the diagonal 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioMatrix {
    pub k: usize,
    pub cells: Vec<Vec<Option<Rational>>>,
}

impl RatioMatrix {
    fn new(k: usize, size: usize) -> Self {
        RatioMatrix {
            k,
            cells: vec![vec![None; size]; size],
        }
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Folds in one `t^L` whose smallest exponent is `k`.
    pub fn observe(&mut self, t: &TaggedPoly) {
        let n = self.size();
        for a in 0..n {
            for b in a..n {
                let den = t.coeff(self.k + b);
                if den == 0u32 {
                    continue;
                }
                let r = t.coeff(self.k + a) / den;
                let lo = &mut self.cells[a][b];
                if lo.as_ref().is_none_or(|v| r < *v) {
                    *lo = Some(r.clone());
                }
                let hi = &mut self.cells[b][a];
                if hi.as_ref().is_none_or(|v| r > *v) {
                    *hi = Some(r);
                }
            }
        }
    }

    pub fn merge(&mut self, other: &RatioMatrix) {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                let Some(v) = &other.cells[a][b] else { continue };
                let mine = &mut self.cells[a][b];
                let better = match mine {
                    None => true,
                    Some(m) if a <= b => v < m,
                    Some(m) => v > m,
                };
                if better {
                    *mine = Some(v.clone());
                }
            }
        }
    }
}

impl fmt::Display for RatioMatrix {
    /// `k` followed by right-aligned rows; `-` marks pairs never observed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.as_ref().map_or("-".to_string(), ToString::to_string))
                    .collect()
            })
            .collect();
        let w = text.iter().flatten().map(String::len).max().unwrap_or(1);
        writeln!(f, "k = {}", self.k)?;
        for row in &text {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>w$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Accumulated matrices keyed by `k`.
pub type RatioTable = BTreeMap<usize, RatioMatrix>;

fn observe_near_edge(table: &mut RatioTable, expr: &NearEdgeExpr) -> Result<()> {
    let NearEdgeExpr::Leaf(points) = expr else {
        return Err(Error::domain("ratio experiment expects leaf near-edges"));
    };
    let oracle = NearEdgeOracle::new(points)?;
    let top = oracle.len().saturating_sub(1);
    for floor in oracle.floors() {
        let t = oracle.fixed_floor(&floor)?;
        let Some(k) = t.min_exponent() else { continue };
        table
            .entry(k)
            .or_insert_with(|| RatioMatrix::new(k, top + 1 - k))
            .observe(&t);
    }
    Ok(())
}

/// Matrices for one record, over every hull apex.
pub fn ratio_record(rec: &OrderTypeRecord) -> Result<RatioTable> {
    let mut table = RatioTable::new();
    for j in 0..rec.hull.indices().len() {
        observe_near_edge(&mut table, &near_edge_from_record(rec, j)?)?;
    }
    Ok(table)
}

pub fn merge_tables(into: &mut RatioTable, from: RatioTable) {
    for (k, m) in from {
        match into.get_mut(&k) {
            Some(mine) => mine.merge(&m),
            None => {
                into.insert(k, m);
            }
        }
    }
}

/// Runs over `range` (default: all records) of a database of `n`-point
/// sets, so near-edges have `n - 1` points. Collinear records are fatal
/// unless `skip_degenerate`.
pub fn ratio_experiment(db: &OrderTypeDb, range: Option<Range<u64>>, skip_degenerate: bool) -> Result<RatioTable> {
    let range = range.unwrap_or(0..db.len());
    let raw = db.read_range(range)?;
    let tables: Vec<Result<RatioTable>> = raw
        .into_par_iter()
        .map(|(i, p)| match OrderTypeRecord::new(i, p) {
            Ok(rec) => ratio_record(&rec),
            Err(Error::DegenerateRecord { .. }) if skip_degenerate => Ok(RatioTable::new()),
            Err(e) => Err(e),
        })
        .collect();
    let mut out = RatioTable::new();
    for t in tables {
        merge_tables(&mut out, t?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::db::{encode_records, CoordWidth};
    use crate::oracle::{brute_joint_poly, fixed_floor_poly, valid_floors};
    use crate::poly::{ratio, BasisTag, JointPoly};

    #[test]
    fn observe_tracks_extremes() {
        let mut m = RatioMatrix::new(1, 3);
        m.observe(&TaggedPoly::from_ints(BasisTag::Y, &[0, 2, 1, 1]));
        m.observe(&TaggedPoly::from_ints(BasisTag::Y, &[0, 6, 2, 1]));
        assert_eq!(m.cells[0][1], Some(ratio(2, 1)));
        assert_eq!(m.cells[1][0], Some(ratio(3, 1)));
        assert_eq!(m.cells[0][2], Some(ratio(2, 1)));
        assert_eq!(m.cells[2][0], Some(ratio(6, 1)));
        assert_eq!(m.cells[1][1], Some(ratio(1, 1)));
        assert!(m.to_string().starts_with("k = 1\n"));
    }

    #[test]
    fn fixed_floors_sum_to_the_joint_polynomial() {
        let p = crate::geom::PointSet::from_ints(&[(0, 0), (2, 3), (3, -1), (5, 2), (6, 0)]);
        let mut sum = JointPoly::zero(BasisTag::Y, BasisTag::U).unwrap();
        for l in valid_floors(&p).unwrap() {
            let t = fixed_floor_poly(&p, &l).unwrap();
            let u = TaggedPoly::monomial(BasisTag::U, l.segments(), ratio(1, 1));
            sum = sum.add(&JointPoly::outer(&t, &u).unwrap()).unwrap();
        }
        assert_eq!(sum, brute_joint_poly(&p).unwrap());
    }

    #[test]
    fn matches_direct_recomputation() {
        let dir = tempfile::tempdir().unwrap();
        let sets = vec![
            vec![(0, 0), (6, 0), (7, 5), (2, 6), (3, 2)],
            vec![(0, 0), (8, 1), (4, 7), (3, 3), (5, 2)],
            vec![(0, 0), (9, 0), (9, 9), (0, 9), (4, 6)],
        ];
        let path = dir.path().join("five.b8");
        std::fs::write(&path, encode_records(&sets, CoordWidth::U8).unwrap()).unwrap();
        let db = OrderTypeDb::open(&path, 5, CoordWidth::U8).unwrap();
        let table = ratio_experiment(&db, None, false).unwrap();
        // Direct: every (record, apex, floor) through the free functions.
        let mut direct: BTreeMap<(usize, usize, usize), (Rational, Rational)> = BTreeMap::new();
        for rec in db.records(0..db.len()).unwrap() {
            for j in 0..rec.hull.indices().len() {
                let NearEdgeExpr::Leaf(p) = near_edge_from_record(&rec, j).unwrap() else {
                    unreachable!()
                };
                for l in valid_floors(&p).unwrap() {
                    let t = fixed_floor_poly(&p, &l).unwrap();
                    let k = t.min_exponent().unwrap();
                    for i in k..p.len() {
                        for jj in i..p.len() {
                            if t.coeff(jj) == 0u32 {
                                continue;
                            }
                            let r = t.coeff(i) / t.coeff(jj);
                            let e = direct.entry((k, i, jj)).or_insert((r.clone(), r.clone()));
                            if r < e.0 {
                                e.0 = r.clone();
                            }
                            if r > e.1 {
                                e.1 = r;
                            }
                        }
                    }
                }
            }
        }
        for ((k, i, j), (lo, hi)) in direct {
            let m = &table[&k];
            assert_eq!(m.cells[i - k][j - k].as_ref(), Some(&lo));
            assert_eq!(m.cells[j - k][i - k].as_ref(), Some(&hi));
        }
        for m in table.values() {
            for a in 0..m.size() {
                assert_eq!(m.cells[a][a], Some(ratio(1, 1)));
                for b in a + 1..m.size() {
                    if let (Some(lo), Some(hi)) = (&m.cells[a][b], &m.cells[b][a]) {
                        assert!(lo <= hi);
                    }
                }
            }
        }
    }
}

//! Ranked growth rates of `koch(A, s)` over every database near-edge `A`.

use std::cmp::Ordering;
use std::fmt;
use std::fs;
use std::ops::Range;
use std::path::{Path, PathBuf};

use malachite_q::Rational;
use rayon::prelude::*;

use super::db::{near_edge_from_record, OrderTypeDb, OrderTypeRecord};
use super::growth::{cmp_roots, format_root, growth_rate_with};
use crate::error::{Error, Result};
use crate::nearedge::{Evaluator, NearEdgeExpr};
use crate::poly::parse_rational;

/// One ranked `(rate, record, apex)` tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanEntry {
    pub index: u64,
    pub apex: usize,
    pub base_value: Rational,
    pub segments: u64,
    pub conjectural: bool,
}

impl ScanEntry {
    pub fn rate_5dp(&self) -> String {
        format_root(&self.base_value, self.segments, 5)
    }

    /// Descending rate, then ascending record and apex.
    pub fn rank_cmp(&self, other: &ScanEntry) -> Ordering {
        cmp_roots(&other.base_value, other.segments, &self.base_value, self.segments)
            .then(self.index.cmp(&other.index))
            .then(self.apex.cmp(&other.apex))
    }
}

impl fmt::Display for ScanEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.rate_5dp(), self.index, self.apex)
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub koch: usize,
    pub top: usize,
    /// Records to scan; defaults to the whole database.
    pub range: Option<Range<u64>>,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Records per parallel batch and checkpoint.
    pub batch: u64,
    /// Plain-text cursor file for resuming.
    pub checkpoint: Option<PathBuf>,
    /// Skip collinear records instead of failing.
    pub skip_degenerate: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            koch: 2,
            top: 30,
            range: None,
            workers: None,
            batch: 4096,
            checkpoint: None,
            skip_degenerate: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanResult {
    pub entries: Vec<ScanEntry>,
    /// Near-edges evaluated, one per record and hull vertex.
    pub evaluations: u64,
    pub skipped: Vec<u64>,
}

/// Every hull apex of one record.
pub fn scan_record(rec: &OrderTypeRecord, koch: usize) -> Result<Vec<ScanEntry>> {
    let mut ev = Evaluator::new();
    (0..rec.hull.indices().len())
        .map(|j| {
            let a = near_edge_from_record(rec, j)?;
            let g = growth_rate_with(&mut ev, &NearEdgeExpr::koch(a, koch))?;
            Ok(ScanEntry {
                index: rec.index,
                apex: j,
                base_value: g.base_value,
                segments: g.segments,
                conjectural: g.conjectural,
            })
        })
        .collect()
}

fn keep_top(entries: &mut Vec<ScanEntry>, top: usize) {
    entries.sort_by(ScanEntry::rank_cmp);
    entries.truncate(top);
}

struct Checkpoint {
    header: String,
    cursor: u64,
    state: ScanResult,
}

fn header(db: &OrderTypeDb, cfg: &ScanConfig, range: &Range<u64>) -> String {
    format!(
        "scan n {} koch {} top {} range {}..{} records {}",
        db.points_per_record(),
        cfg.koch,
        cfg.top,
        range.start,
        range.end,
        db.len()
    )
}

impl Checkpoint {
    fn load(path: &Path, header: &str) -> Result<Option<Checkpoint>> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let bad = |m: &str| Error::Checkpoint(format!("{}: {m}", path.display()));
        let mut lines = text.lines();
        if lines.next() != Some(header) {
            return Err(bad("belongs to a different scan"));
        }
        let mut cursor = None;
        let mut state = ScanResult::default();
        for line in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            match f.as_slice() {
                ["cursor", c] => cursor = Some(c.parse().map_err(|_| bad("bad cursor"))?),
                ["evaluations", c] => state.evaluations = c.parse().map_err(|_| bad("bad count"))?,
                ["skipped", rest @ ..] => {
                    state.skipped = rest
                        .iter()
                        .map(|s| s.parse())
                        .collect::<Result<_, _>>()
                        .map_err(|_| bad("bad skip"))?
                }
                ["entry", i, j, k, c, base] => state.entries.push(ScanEntry {
                    index: i.parse().map_err(|_| bad("bad index"))?,
                    apex: j.parse().map_err(|_| bad("bad apex"))?,
                    segments: k.parse().map_err(|_| bad("bad segments"))?,
                    conjectural: *c == "1",
                    base_value: parse_rational(base)?,
                }),
                [] => {}
                _ => return Err(bad(&format!("unreadable line {line:?}"))),
            }
        }
        let cursor = cursor.ok_or_else(|| bad("missing cursor"))?;
        Ok(Some(Checkpoint {
            header: header.to_string(),
            cursor,
            state,
        }))
    }

    fn save(&self, path: &Path) -> Result<()> {
        let mut out = format!(
            "{}\ncursor {}\nevaluations {}\n",
            self.header, self.cursor, self.state.evaluations
        );
        if !self.state.skipped.is_empty() {
            let s: Vec<String> = self.state.skipped.iter().map(u64::to_string).collect();
            out += &format!("skipped {}\n", s.join(" "));
        }
        for e in &self.state.entries {
            out += &format!(
                "entry {} {} {} {} {}\n",
                e.index,
                e.apex,
                e.segments,
                u8::from(e.conjectural),
                e.base_value
            );
        }
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, out)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

fn run_batch(db: &OrderTypeDb, cfg: &ScanConfig, batch: Range<u64>, state: &mut ScanResult) -> Result<()> {
    let raw = db.read_range(batch)?;
    let results: Vec<(u64, Result<Vec<ScanEntry>>)> = raw
        .into_par_iter()
        .map(|(i, p)| (i, OrderTypeRecord::new(i, p).and_then(|r| scan_record(&r, cfg.koch))))
        .collect();
    for (i, r) in results {
        match r {
            Ok(entries) => {
                state.evaluations += entries.len() as u64;
                state.entries.extend(entries);
            }
            Err(Error::DegenerateRecord { .. }) if cfg.skip_degenerate => state.skipped.push(i),
            Err(e) => return Err(e),
        }
    }
    keep_top(&mut state.entries, cfg.top);
    Ok(())
}

/// Scans `cfg.range`, resuming from `cfg.checkpoint` when it exists.
/// Output depends only on the database and the configuration.
pub fn scan_pipeline(db: &OrderTypeDb, cfg: &ScanConfig) -> Result<ScanResult> {
    let range = cfg.range.clone().unwrap_or(0..db.len());
    let range = range.start..range.end.min(db.len());
    let header = header(db, cfg, &range);
    let mut ck = match &cfg.checkpoint {
        Some(path) => Checkpoint::load(path, &header)?,
        None => None,
    }
    .unwrap_or(Checkpoint {
        header,
        cursor: range.start,
        state: ScanResult::default(),
    });
    let pool = match cfg.workers {
        Some(w) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::domain(format!("thread pool: {e}")))?,
        ),
        None => None,
    };
    let batch = cfg.batch.max(1);
    while ck.cursor < range.end {
        let end = (ck.cursor + batch).min(range.end);
        let work = |state: &mut ScanResult| run_batch(db, cfg, ck.cursor..end, state);
        let mut state = std::mem::take(&mut ck.state);
        match &pool {
            Some(p) => p.install(|| work(&mut state))?,
            None => work(&mut state)?,
        }
        ck.state = state;
        ck.cursor = end;
        if let Some(path) = &cfg.checkpoint {
            ck.save(path)?;
        }
    }
    keep_top(&mut ck.state.entries, cfg.top);
    Ok(ck.state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::db::{encode_records, CoordWidth};
    use crate::experiments::growth_rate;

    fn fixture() -> (tempfile::TempDir, OrderTypeDb) {
        let dir = tempfile::tempdir().unwrap();
        let sets = vec![
            vec![(0, 0), (6, 0), (7, 5), (2, 6), (3, 2)],
            vec![(0, 0), (8, 1), (4, 7), (3, 3), (5, 2)],
            vec![(0, 0), (9, 0), (9, 9), (0, 9), (4, 6)],
        ];
        let path = dir.path().join("five.b8");
        fs::write(&path, encode_records(&sets, CoordWidth::U8).unwrap()).unwrap();
        let db = OrderTypeDb::open(&path, 5, CoordWidth::U8).unwrap();
        (dir, db)
    }

    #[test]
    fn entries_match_direct_growth_calls() {
        let (_dir, db) = fixture();
        let cfg = ScanConfig {
            koch: 1,
            top: 100,
            ..ScanConfig::default()
        };
        let r = scan_pipeline(&db, &cfg).unwrap();
        let hulls: u64 = db
            .records(0..3)
            .unwrap()
            .iter()
            .map(|r| r.hull.indices().len() as u64)
            .sum();
        assert_eq!(r.evaluations, hulls);
        assert_eq!(r.entries.len() as u64, hulls);
        for e in &r.entries {
            let rec = db.record(e.index).unwrap();
            let a = near_edge_from_record(&rec, e.apex).unwrap();
            let g = growth_rate(&NearEdgeExpr::koch(a, 1)).unwrap();
            assert_eq!(g.base_value, e.base_value);
            assert_eq!(g.rate_5dp(), e.rate_5dp());
        }
        assert!(r.entries.windows(2).all(|w| w[0].rank_cmp(&w[1]) == Ordering::Less));
    }

    #[test]
    fn deterministic_and_resumable() {
        let (dir, db) = fixture();
        let base = ScanConfig {
            koch: 1,
            top: 4,
            ..ScanConfig::default()
        };
        let full = scan_pipeline(&db, &base).unwrap();
        let two = scan_pipeline(
            &db,
            &ScanConfig {
                workers: Some(2),
                batch: 1,
                ..base.clone()
            },
        )
        .unwrap();
        assert_eq!(full, two);
        let ck = dir.path().join("scan.ck");
        let first = ScanConfig {
            range: Some(0..2),
            batch: 1,
            checkpoint: Some(ck.clone()),
            ..base.clone()
        };
        scan_pipeline(&db, &first).unwrap();
        // A different range is a different scan.
        let resumed = ScanConfig {
            range: Some(0..3),
            batch: 1,
            checkpoint: Some(ck.clone()),
            ..base.clone()
        };
        assert!(matches!(scan_pipeline(&db, &resumed), Err(Error::Checkpoint(_))));
        fs::remove_file(&ck).unwrap();
        let partial = ScanConfig {
            range: Some(0..3),
            batch: 2,
            checkpoint: Some(ck.clone()),
            ..base.clone()
        };
        let out = scan_pipeline(&db, &partial).unwrap();
        assert_eq!(out, full);
        // Re-running from a finished checkpoint does no work.
        assert_eq!(scan_pipeline(&db, &partial).unwrap(), full);
        let text: Vec<String> = full.entries.iter().map(ToString::to_string).collect();
        assert!(text[0].starts_with('(') && text[0].ends_with(')'));
    }
}

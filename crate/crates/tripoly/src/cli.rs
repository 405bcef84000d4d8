//! The `tripoly` command line. [`run`] returns the process exit code:
//! 0 on success, 1 on a domain error, 2 on a usage error.

use std::io::Write;
use std::ops::Range;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::experiments::{
    growth_rate, ratio_experiment, scan_pipeline, CoordWidth, OrderTypeDb, RatioTable, ScanConfig,
};
use crate::fastmod::{fastcheck, Modulus};
use crate::geom::{read_points, Polyline};
use crate::nearedge::{count_glued_polygon, count_triangulations, joint_poly, parse_expr, NearEdgeExpr};
use crate::oracle::{brute_joint_poly, count_all_triangulations, fixed_floor_poly, NearEdgeOracle};
use crate::poly::{BasisTag, JointPoly, LaurentSeries, TaggedPoly};
use crate::transform::{apply_m, apply_t, hat_m, hat_t, vee, wedge};

/// Default directory for order-type databases.
pub const DB_DIR_ENV: &str = "TRIPOLY_DB_DIR";

#[derive(Parser, Debug)]
#[command(name = "tripoly", version, about = "Triangulation polynomials of near-edges")]
struct Cli {
    /// Structured JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    /// Convex (x) to concave (y).
    M2t,
    /// Concave (y) to convex (x).
    T2m,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Tags {
    Yu,
    Xu,
    Yv,
    Xv,
}

impl Tags {
    fn pair(self) -> (BasisTag, BasisTag) {
        match self {
            Tags::Yu => (BasisTag::Y, BasisTag::U),
            Tags::Xu => (BasisTag::X, BasisTag::U),
            Tags::Yv => (BasisTag::Y, BasisTag::V),
            Tags::Xv => (BasisTag::X, BasisTag::V),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleMode {
    Count,
    Jp,
    Tl,
}

#[derive(Args, Debug)]
struct DbArgs {
    /// Database file; relative paths fall back to $TRIPOLY_DB_DIR.
    #[arg(long)]
    db: Option<PathBuf>,
    /// Points per record.
    #[arg(long)]
    n: usize,
    /// Coordinate width in bits (default: 8 up to 8 points, else 16).
    #[arg(long)]
    width: Option<u32>,
    /// Records `A..B` to process.
    #[arg(long)]
    range: Option<String>,
    #[arg(long)]
    workers: Option<usize>,
    /// Skip records with collinear triples.
    #[arg(long)]
    skip_degenerate: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Change basis of a polynomial.
    Transform {
        #[arg(long, value_enum)]
        dir: Direction,
        #[arg(long)]
        poly: String,
    },
    /// Convex sum of t-polynomials or concave sum of m-polynomials.
    Op {
        #[arg(long, conflicts_with = "wedge", required_unless_present = "wedge")]
        vee: bool,
        #[arg(long)]
        wedge: bool,
        p1: String,
        p2: String,
    },
    /// Hat series to a given order.
    Hat {
        #[arg(long, conflicts_with = "m", required_unless_present = "m")]
        t: bool,
        #[arg(long)]
        m: bool,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        order: i64,
    },
    /// Joint triangulation polynomial of an expression.
    Jp {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value = "yu")]
        tags: Tags,
    },
    /// Number of triangulations of an expression or a point file.
    Count {
        #[arg(long, conflicts_with = "points", required_unless_present = "points")]
        expr: Option<String>,
        #[arg(long)]
        points: Option<PathBuf>,
    },
    /// Triangulations of a convex polygon with near-edges glued on its sides.
    Glue {
        /// Comma-separated expressions, one per side.
        #[arg(long)]
        edges: String,
    },
    /// Growth rate of the twin chains of an expression.
    Growth {
        #[arg(long)]
        expr: String,
    },
    /// Brute-force enumeration on a point file.
    Oracle {
        #[arg(value_enum)]
        mode: OracleMode,
        #[arg(long)]
        points: PathBuf,
        /// Floor as comma-separated indices in x order (default: lower hull).
        #[arg(long)]
        floor: Option<String>,
    },
    /// Ranked growth rates of koch(A, s) over a database.
    Scan {
        #[command(flatten)]
        db: DbArgs,
        #[arg(long, default_value_t = 2)]
        koch: usize,
        #[arg(long, default_value_t = 30)]
        top: usize,
        /// Resumable cursor file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Extreme coefficient ratios of fixed-floor polynomials over a database.
    Ratio {
        #[command(flatten)]
        db: DbArgs,
    },
    /// Cross-check the modular path against exact arithmetic.
    Fastcheck {
        #[arg(long, value_delimiter = ',')]
        deg: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 998_244_353)]
        modulus: u64,
    },
}

fn usage(msg: impl Into<String>) -> Error {
    Error::parse(0, msg)
}

fn parse_poly(text: &str, default: BasisTag) -> Result<TaggedPoly> {
    TaggedPoly::parse(text, default)
}

fn poly_json(p: &TaggedPoly) -> Value {
    json!({
        "text": p.to_string(),
        "var": p.tag().to_string(),
        "coeffs": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn joint_json(p: &JointPoly) -> Value {
    let (r, c) = p.dims();
    let rows: Vec<Vec<String>> = (0..r)
        .map(|i| (0..c).map(|j| p.coeff(i, j).to_string()).collect())
        .collect();
    json!({
        "text": p.to_string(),
        "vars": [p.upper_tag().to_string(), p.lower_tag().to_string()],
        "coeffs": rows,
    })
}

fn laurent_json(s: &LaurentSeries) -> Value {
    let terms: Vec<Value> = s.terms().map(|(e, c)| json!([e, c.to_string()])).collect();
    json!({ "text": s.to_string(), "var": s.tag().to_string(), "order": s.order(), "terms": terms })
}

/// Splits at commas outside parentheses and brackets.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out
}

fn parse_range(text: &str) -> Result<Range<u64>> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| usage(format!("range {text:?} is not A..B")))?;
    let a = a
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad range start in {text:?}")))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad range end in {text:?}")))?;
    if a > b {
        return Err(usage(format!("empty range {text:?}")));
    }
    Ok(a..b)
}

fn parse_indices(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| usage(format!("bad index {s:?} in {text:?}")))
        })
        .collect()
}

fn resolve_db(args: &DbArgs) -> Result<(PathBuf, CoordWidth)> {
    let width = match args.width {
        Some(bits) => CoordWidth::from_bits(bits)?,
        None => CoordWidth::for_points(args.n),
    };
    let dir = std::env::var_os(DB_DIR_ENV).map(PathBuf::from);
    let path = match (&args.db, &dir) {
        (Some(p), Some(d)) if p.is_relative() && !p.exists() => d.join(p),
        (Some(p), _) => p.clone(),
        (None, Some(d)) => {
            let ext = if width == CoordWidth::U8 { "b08" } else { "b16" };
            d.join(format!("otypes{:02}.{ext}", args.n))
        }
        (None, None) => return Err(usage(format!("--db is required when {DB_DIR_ENV} is unset"))),
    };
    Ok((path, width))
}

fn open_db(args: &DbArgs) -> Result<(OrderTypeDb, Option<Range<u64>>)> {
    let (path, width) = resolve_db(args)?;
    let db = OrderTypeDb::open(&path, args.n, width)?;
    let range = args.range.as_deref().map(parse_range).transpose()?;
    Ok((db, range))
}

fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::domain(format!("thread pool: {e}")))?
            .install(f),
        None => f(),
    }
}

fn ratio_json(table: &RatioTable) -> Value {
    let ks: Vec<Value> = table
        .values()
        .map(|m| {
            let cells: Vec<Vec<Value>> = m
                .cells
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| c.as_ref().map_or(Value::Null, |v| json!(v.to_string())))
                        .collect()
                })
                .collect();
            json!({ "k": m.k, "cells": cells })
        })
        .collect();
    Value::Array(ks)
}

/// Text and JSON renderings of one command's result.
struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Result<Output> {
    Ok(Output {
        text: text.into(),
        json,
    })
}

fn points_of(path: &Path) -> Result<crate::geom::PointSet> {
    read_points(path).map_err(|e| match e {
        Error::Io(io) => Error::Io(std::io::Error::new(io.kind(), format!("{}: {io}", path.display()))),
        other => other,
    })
}

fn execute(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Transform { dir, poly } => {
            let (p, q) = match dir {
                Direction::T2m => {
                    let p = parse_poly(&poly, BasisTag::Y)?;
                    let q = apply_m(&p)?;
                    (p, q)
                }
                Direction::M2t => {
                    let p = parse_poly(&poly, BasisTag::X)?;
                    let q = apply_t(&p)?;
                    (p, q)
                }
            };
            out(
                q.to_string(),
                json!({ "input": poly_json(&p), "output": poly_json(&q) }),
            )
        }
        Command::Op {
            vee: is_vee, p1, p2, ..
        } => {
            let tag = if is_vee { BasisTag::Y } else { BasisTag::X };
            let (a, b) = (parse_poly(&p1, tag)?, parse_poly(&p2, tag)?);
            let r = if is_vee { vee(&a, &b)? } else { wedge(&a, &b)? };
            let op = if is_vee { "vee" } else { "wedge" };
            out(
                r.to_string(),
                json!({ "op": op, "inputs": [poly_json(&a), poly_json(&b)], "output": poly_json(&r) }),
            )
        }
        Command::Hat { t, poly, order, .. } => {
            let s = if t {
                hat_t(&parse_poly(&poly, BasisTag::Y)?, order)?
            } else {
                hat_m(&parse_poly(&poly, BasisTag::X)?, order)?
            };
            out(s.to_string(), laurent_json(&s))
        }
        Command::Jp { expr, tags } => {
            let e = parse_expr(&expr)?;
            let (u, l) = tags.pair();
            let p = joint_poly(&e, u, l)?;
            out(p.to_string(), json!({ "expr": e.to_string(), "poly": joint_json(&p) }))
        }
        Command::Count { expr: Some(expr), .. } => {
            let e = parse_expr(&expr)?;
            let c = count_triangulations(&e)?;
            out(c.to_string(), json!({ "expr": e.to_string(), "count": c.to_string() }))
        }
        Command::Count { points, .. } => {
            let path = points.ok_or_else(|| usage("count needs --expr or --points"))?;
            let c = count_all_triangulations(&points_of(&path)?)?;
            out(
                c.to_string(),
                json!({ "points": path.display().to_string(), "count": c.to_string() }),
            )
        }
        Command::Glue { edges } => {
            let exprs = split_top_level(&edges)
                .into_iter()
                .map(parse_expr)
                .collect::<Result<Vec<NearEdgeExpr>>>()?;
            let c = count_glued_polygon(&exprs)?;
            let names: Vec<String> = exprs.iter().map(ToString::to_string).collect();
            out(c.to_string(), json!({ "edges": names, "count": c.to_string() }))
        }
        Command::Growth { expr } => {
            let e = parse_expr(&expr)?;
            let g = growth_rate(&e)?;
            out(
                g.to_string(),
                json!({
                    "expr": e.to_string(),
                    "rate": g.rate_5dp(),
                    "rate_f64": g.rate,
                    "base_value": g.base_value.to_string(),
                    "segments": g.segments,
                    "conjectural": g.conjectural,
                    "marker": if g.conjectural { "CONJECTURE" } else { "THEOREM" },
                }),
            )
        }
        Command::Oracle { mode, points, floor } => {
            let pts = points_of(&points)?;
            match mode {
                OracleMode::Count => {
                    let c = count_all_triangulations(&pts)?;
                    out(c.to_string(), json!({ "count": c.to_string() }))
                }
                OracleMode::Jp => {
                    let p = brute_joint_poly(&pts)?;
                    out(p.to_string(), json!({ "poly": joint_json(&p) }))
                }
                OracleMode::Tl => {
                    let floor = match floor {
                        Some(f) => Polyline(parse_indices(&f)?),
                        None => crate::geom::lower_hull(&NearEdgeOracle::new(&pts)?.points().clone())?,
                    };
                    let t = fixed_floor_poly(&pts, &floor)?;
                    out(
                        t.to_string(),
                        json!({ "floor": floor.indices(), "poly": poly_json(&t) }),
                    )
                }
            }
        }
        Command::Scan {
            db,
            koch,
            top,
            checkpoint,
        } => {
            let (database, range) = open_db(&db)?;
            let cfg = ScanConfig {
                koch,
                top,
                range,
                workers: db.workers,
                checkpoint,
                skip_degenerate: db.skip_degenerate,
                ..ScanConfig::default()
            };
            let r = scan_pipeline(&database, &cfg)?;
            let lines: Vec<String> = r
                .entries
                .iter()
                .map(|e| {
                    if e.conjectural {
                        format!("{e} CONJECTURE")
                    } else {
                        e.to_string()
                    }
                })
                .collect();
            let entries: Vec<Value> = r
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "rate": e.rate_5dp(),
                        "index": e.index,
                        "apex": e.apex,
                        "base_value": e.base_value.to_string(),
                        "segments": e.segments,
                        "conjectural": e.conjectural,
                    })
                })
                .collect();
            out(
                lines.join("\n"),
                json!({ "entries": entries, "evaluations": r.evaluations, "skipped": r.skipped }),
            )
        }
        Command::Ratio { db } => {
            let (database, range) = open_db(&db)?;
            let table = with_workers(db.workers, || ratio_experiment(&database, range, db.skip_degenerate))?;
            let text: Vec<String> = table.values().map(ToString::to_string).collect();
            out(text.join("\n").trim_end().to_string(), ratio_json(&table))
        }
        Command::Fastcheck {
            deg,
            trials,
            seed,
            modulus,
        } => {
            let m = Modulus::new(modulus)?;
            let deg = if deg.is_empty() { vec![64, 512] } else { deg };
            let r = fastcheck(m, &deg, trials, seed)?;
            let mut text = format!(
                "modulus {m}\n{:>6} {:>6} {:>5} {:>6} {:>6} {:>12} {:>12} {:>12} {:>12} {:>12}",
                "deg", "trials", "ok", "vee", "wedge", "ns_mul", "ns_vee", "ns_vee_hat", "ns_wedge", "ns_wedge_hat"
            );
            let mut rows = Vec::new();
            for row in &r.rows {
                text += &format!(
                    "\n{:>6} {:>6} {:>5} {:>6} {:>6} {:>12} {:>12} {:>12} {:>12} {:>12}",
                    row.degree,
                    row.trials,
                    if row.passed() { "yes" } else { "NO" },
                    row.vee_agree,
                    row.wedge_agree,
                    row.ns_mul,
                    row.ns_vee_closed,
                    row.ns_vee_hat,
                    row.ns_wedge_closed,
                    row.ns_wedge_hat
                );
                rows.push(json!({
                    "degree": row.degree,
                    "trials": row.trials,
                    "passed": row.passed(),
                    "vee_agree": row.vee_agree,
                    "wedge_agree": row.wedge_agree,
                    "routes_agree": row.routes_agree,
                    "shift_involution": row.shift_involution,
                    "moebius_involution": row.moebius_involution,
                    "ns": {
                        "mul": row.ns_mul as u64,
                        "vee_closed": row.ns_vee_closed as u64,
                        "vee_hat": row.ns_vee_hat as u64,
                        "wedge_closed": row.ns_wedge_closed as u64,
                        "wedge_hat": row.ns_wedge_hat as u64,
                        "exact": row.ns_exact as u64,
                    },
                }));
            }
            if !r.passed() {
                return Err(Error::domain(format!("modular cross-check failed\n{text}")));
            }
            out(text, json!({ "modulus": m.value(), "rows": rows }))
        }
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `stdout` and diagnostics to `stderr`.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let written = if cli.json {
                writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json values serialize")
                )
            } else {
                writeln!(stdout, "{}", o.text)
            };
            if written.is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Parse { .. } => 2,
                _ => 1,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut o = Vec::new();
        let mut e = Vec::new();
        let mut full = vec!["tripoly"];
        full.extend(args);
        let code = run(full, &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn splits_edges() {
        assert_eq!(
            split_top_level("E, vee(E,E) ,pts[0 0; 1 1]"),
            vec!["E", "vee(E,E)", "pts[0 0; 1 1]"]
        );
    }

    #[test]
    fn basic_commands() {
        assert_eq!(call(&["transform", "--dir", "t2m", "--poly", "y^2"]).1.trim(), "x^2-x");
        assert_eq!(call(&["count", "--expr", "ccvx(4)"]).1.trim(), "5");
        assert_eq!(call(&["glue", "--edges", "cccv(2),cccv(2),cccv(2)"]).1.trim(), "4");
        assert!(call(&["growth", "--expr", "koch(E,5)"]).1.contains("9.02446"));
        assert_eq!(
            call(&["op", "--vee", "y^4+2y^3+5y^2", "y^3+4y^2+3y"]).1.trim(),
            "y^7+7*y^6+24*y^5+58*y^4+97*y^3+141*y^2+141*y"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["count", "--expr", "vee(E"]).0, 2);
        assert_eq!(call(&["transform", "--dir", "sideways", "--poly", "y"]).0, 2);
        assert_eq!(call(&["op", "--vee", "x^2", "x"]).0, 1);
        assert_eq!(call(&["glue", "--edges", "E,E"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }
}

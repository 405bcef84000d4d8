//! Growth scan and ratio table over a small synthetic order-type database.

use tripoly::experiments::{encode_records, ratio_experiment, scan_pipeline, CoordWidth, OrderTypeDb, ScanConfig};

fn main() -> tripoly::Result<()> {
    let sets = vec![
        vec![(0, 0), (6, 0), (7, 5), (2, 6), (3, 2)],
        vec![(0, 0), (8, 1), (4, 7), (3, 3), (5, 2)],
        vec![(0, 0), (9, 0), (9, 9), (0, 9), (4, 6)],
    ];
    let dir = std::env::temp_dir().join(format!("tripoly-db-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("otypes05.b08");
    std::fs::write(&path, encode_records(&sets, CoordWidth::U8)?)?;
    let db = OrderTypeDb::open(&path, 5, CoordWidth::U8)?;

    let scan = scan_pipeline(
        &db,
        &ScanConfig {
            koch: 2,
            top: 5,
            ..ScanConfig::default()
        },
    )?;
    println!("{} near-edges evaluated", scan.evaluations);
    for e in &scan.entries {
        println!("{e}");
    }
    for m in ratio_experiment(&db, None, false)?.values() {
        print!("{m}");
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

//! Growth rates of twin chains, order-type database ingestion, the ranked
//! scan over database near-edges and the coefficient-ratio experiment.

mod db;
mod growth;
mod ratio;
mod scan;

pub use db::{encode_records, near_edge_from_record, read_order_type_db, CoordWidth, OrderTypeDb, OrderTypeRecord};
pub use growth::{
    cmp_roots, expr_is_chain, format_root, growth_rate, growth_rate_with, heuristic_diagnostic, GrowthReport,
    HeuristicReport,
};
pub use ratio::{merge_tables, ratio_experiment, ratio_record, RatioMatrix, RatioTable};
pub use scan::{scan_pipeline, scan_record, ScanConfig, ScanEntry, ScanResult};

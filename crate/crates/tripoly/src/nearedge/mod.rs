//! Near-edge expressions, their joint triangulation polynomials, and the
//! counting formulas built on them.

mod core;
mod expr;

pub use self::core::{CoreDag, Node, NodeId};
pub use expr::{NearEdgeExpr, SegmentCount};
mod eval;

pub use eval::{
    chain_polys, count_glued_polygon, count_triangulations, hull_segments, joint_poly, ChainPolys, Evaluator,
};
mod parse;

pub use parse::{parse_expr, parse_expr_in};

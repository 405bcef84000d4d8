//! Growth rates of twin chains built from small near-edges.

use tripoly::experiments::{growth_rate, heuristic_diagnostic};
use tripoly::nearedge::parse_expr;

fn main() -> tripoly::Result<()> {
    for text in ["E", "ccvx(2)", "koch(E,2)", "koch(E,5)", "vee(E, wedge(E, E))"] {
        let expr = parse_expr(text)?;
        println!("{text}: {}", growth_rate(&expr)?);
    }
    println!("{}", heuristic_diagnostic(&parse_expr("koch(E,3)")?)?);
    Ok(())
}

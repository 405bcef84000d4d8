//! Parse near-edge expressions, count their triangulations and compare
//! against brute force on the realized point sets.

use tripoly::geom::{is_chain, realize, write_points};
use tripoly::nearedge::{count_glued_polygon, count_triangulations, joint_poly, parse_expr};
use tripoly::oracle::count_all_triangulations;
use tripoly::poly::BasisTag;

fn main() -> tripoly::Result<()> {
    for text in [
        "E",
        "ccvx(4)",
        "cccv(3)",
        "vee(E, wedge(E, E))",
        "flip(vee(ccvx(2), E))",
    ] {
        let expr = parse_expr(text)?;
        let pts = realize(&expr)?;
        println!(
            "{text}: {} points, chain {}, {} triangulations (brute force {})",
            pts.len(),
            is_chain(&pts)?,
            count_triangulations(&expr)?,
            count_all_triangulations(&pts)?
        );
    }

    let e = parse_expr("vee(E, wedge(E, E))")?;
    println!(
        "\njoint polynomial in (y, u): {}",
        joint_poly(&e, BasisTag::Y, BasisTag::U)?
    );
    println!("realized as:\n{}", write_points(&realize(&e)?));

    // A hexagon with a primitive edge on every side.
    let sides = vec![parse_expr("E")?; 6];
    println!("hexagon: {}", count_glued_polygon(&sides)?);
    let triangle = vec![parse_expr("cccv(2)")?; 3];
    println!("triangle of cccv(2): {}", count_glued_polygon(&triangle)?);
    Ok(())
}

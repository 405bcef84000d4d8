//! Exhaustive counts and fixed-floor polynomials for a small point set.

use tripoly::geom::{lower_hull, parse_points};
use tripoly::oracle::{brute_joint_poly, count_all_triangulations, fixed_floor_poly, valid_floors};

fn main() -> tripoly::Result<()> {
    let pts = parse_points("0 0\n2 3\n3 -1\n5 2\n6 0\n")?;
    println!("{} triangulations", count_all_triangulations(&pts)?);
    println!("joint polynomial: {}", brute_joint_poly(&pts)?);
    println!("lower hull floor: {}", fixed_floor_poly(&pts, &lower_hull(&pts)?)?);
    for floor in valid_floors(&pts)? {
        println!("floor {:?}: {}", floor.indices(), fixed_floor_poly(&pts, &floor)?);
    }
    Ok(())
}

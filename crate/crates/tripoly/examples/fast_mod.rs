//! Modular basis changes at large degree, checked against exact arithmetic.
//!
//! Usage: `cargo run --release --example fast_mod -- 64 512 4096`

use tripoly::fastmod::{fastcheck, vee_mod, ModPoly, Modulus, Route};
use tripoly::poly::BasisTag;

fn main() -> tripoly::Result<()> {
    let m = Modulus::DEFAULT;
    let t1 = ModPoly::from_i64s(BasisTag::Y, m, &[0, 0, 5, 2, 1]);
    let t4 = ModPoly::from_i64s(BasisTag::Y, m, &[0, 3, 4, 1]);
    println!("closed form: {}", vee_mod(&t1, &t4, Route::ClosedForm)?);
    println!("hat series:  {}", vee_mod(&t1, &t4, Route::HatSeries)?);

    let degrees: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let degrees = if degrees.is_empty() { vec![64, 256] } else { degrees };
    for row in fastcheck(m, &degrees, 2, 7)?.rows {
        println!(
            "deg {:>5}: agree {} | vee {:>10} ns (hat {:>10} ns) vs exact {:>12} ns",
            row.degree,
            row.passed(),
            row.ns_vee_closed,
            row.ns_vee_hat,
            row.ns_exact
        );
    }
    Ok(())
}

//! Basis changes, the two sums, and the hat series of their operands.

use tripoly::poly::{BasisTag, TaggedPoly};
use tripoly::transform::{apply_m, apply_t, check_hat_identity_vee, hat_t, vee, wedge};

fn main() -> tripoly::Result<()> {
    let t1 = TaggedPoly::parse("y^4+2y^3+5y^2", BasisTag::Y)?;
    let t4 = TaggedPoly::parse("y^3+4y^2+3y", BasisTag::Y)?;

    let m1 = apply_m(&t1)?;
    println!("M(t1) = {m1}");
    println!("T(M(t1)) = {}", apply_t(&m1)?);

    println!("t1 vee t4 = {}", vee(&t1, &t4)?);
    println!("M(t1) wedge M(t4) = {}", wedge(&m1, &apply_m(&t4)?)?);

    println!("hat t1 = {}", hat_t(&t1, 8)?);
    println!("hat identity holds: {}", check_hat_identity_vee(&t1, &t4, 12)?);
    Ok(())
}

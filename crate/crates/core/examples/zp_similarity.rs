//! Two unoriented matrices that are similar over Z_2 but not over Z_3.

use arbor::algebra::{charpoly, invariant_factors, Modulus};
use arbor::figures::builtin;
use arbor::theorems::zp_similarity;

fn main() -> arbor::Result<()> {
    let b1 = builtin("1a")?.oriented.abs();
    let b2 = builtin("1f")?.oriented.abs();
    println!("charpoly(B1) = {}", charpoly(&b1)?);
    println!("charpoly(B2) = {}", charpoly(&b2)?);
    for p in [2, 3, 5] {
        let m = Modulus::new(p)?;
        let factors = |b: &arbor::algebra::Matrix<i64>| -> arbor::Result<Vec<String>> {
            Ok(invariant_factors(&b.reduce_mod(m))?.iter().map(|f| f.to_string()).collect())
        };
        println!(
            "p = {p}: similar {}\n  B1 factors {:?}\n  B2 factors {:?}",
            zp_similarity(&b1, &b2, p)?,
            factors(&b1)?,
            factors(&b2)?
        );
    }
    Ok(())
}

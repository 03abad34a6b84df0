//! Exact dense linear algebra over Z, Q and Z_p.

pub mod charpoly;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod smith;

pub use charpoly::{charpoly, determinant};
pub use matrix::{companion, Matrix};
pub use poly::Polynomial;
pub use ring::{is_prime, Field, IntegerRing, Modulus, Ring, RingTag, Zp};
pub use smith::{invariant_factors, similar};

/// Reduction of an integer matrix into `Z_p`, checking that `p` is prime.
pub fn reduce_mod<R: IntegerRing>(m: &Matrix<R>, p: u64) -> crate::Result<Matrix<Zp>> {
    Ok(m.reduce_mod(Modulus::new(p)?))
}

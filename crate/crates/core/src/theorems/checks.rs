//! Claims that can be decided from a matrix alone.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::algebra::{charpoly, companion, invariant_factors, IntegerRing, Matrix, Modulus, Ring};
use crate::error::{Error, Result};

/// `I + A + A^2 + ... + A^n = 0`, equivalently `Σ_{k=1}^n Φ^k(w) = -w`.
pub fn geometric_sum_check<R: Ring>(a: &Matrix<R>) -> Result<bool> {
    let n = a.require_square()?;
    let mut power = Matrix::identity(a.ctx().clone(), n);
    let mut sum = power.clone();
    for _ in 0..n {
        power = power.mul(a)?;
        sum = sum.add(&power)?;
    }
    Ok(sum.is_zero())
}

/// Residues `{ kj mod (n+1) : 1 <= k < s }` with `s = (n+1)/gcd(j, n+1)`.
///
/// Also checks that they are pairwise distinct and coincide with the
/// multiples `{ kb : 1 <= k < s }` of `b = gcd(j, n+1)`; a violation is
/// reported as an error.
pub fn lemma3_residues(j: usize, n: usize) -> Result<BTreeSet<usize>> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            range: "n >= 2".into(),
        });
    }
    if j == 0 || j > n {
        return Err(Error::OutOfRange {
            what: "j",
            value: j,
            range: format!("1..={n}"),
        });
    }
    let modulus = n + 1;
    let b = j.gcd(&modulus);
    let s = modulus / b;
    let residues: Vec<usize> = (1..s).map(|k| k * j % modulus).collect();
    let set: BTreeSet<usize> = residues.iter().copied().collect();
    if set.len() != residues.len() {
        return Err(Error::ClaimViolated(format!(
            "residues of multiples of {j} mod {modulus} repeat"
        )));
    }
    let multiples: BTreeSet<usize> = (1..s).map(|k| k * b).collect();
    if set != multiples {
        return Err(Error::ClaimViolated(format!(
            "residues of multiples of {j} mod {modulus} are not the multiples of {b}"
        )));
    }
    Ok(set)
}

/// Every coefficient of `det(xI - B)`, leading one included, is odd.
pub fn odd_coefficients_check<R: IntegerRing>(b: &Matrix<R>) -> Result<bool> {
    Ok(charpoly(b)?.all_coefficients_odd())
}

/// In every row the nonzero entries are contiguous and all `1` or all `-1`.
pub fn petrie_check<R: IntegerRing>(m: &Matrix<R>) -> bool {
    (0..m.rows()).all(|i| {
        let row = m.row(i);
        let nz: Vec<usize> = (0..row.len()).filter(|&j| !row[j].is_zero()).collect();
        let Some((&first, &last)) = nz.first().zip(nz.last()) else {
            return true;
        };
        if last - first + 1 != nz.len() {
            return false;
        }
        let one = R::one(&());
        let minus = one.neg();
        nz.iter().all(|&j| row[j] == one) || nz.iter().all(|&j| row[j] == minus)
    })
}

/// Over Z_2, does `B` share its invariant factors with the companion matrix
/// of `1 + x + ... + x^n`?
pub fn z2_similarity_to_companion<R: IntegerRing>(b: &Matrix<R>) -> Result<bool> {
    let n = b.require_square()?;
    let z2 = Modulus::new(2)?;
    if n < 2 {
        return Ok(false);
    }
    let c = companion::<i64>((), n)?;
    Ok(invariant_factors(&b.reduce_mod(z2))? == invariant_factors(&c.reduce_mod(z2))?)
}

/// Similarity of two integer matrices after reduction into `Z_p`.
pub fn zp_similarity<R: IntegerRing>(b1: &Matrix<R>, b2: &Matrix<R>, p: u64) -> Result<bool> {
    let modulus = Modulus::new(p)?;
    let n = b1.require_square()?;
    let m = b2.require_square()?;
    if n != m {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m,
        });
    }
    Ok(invariant_factors(&b1.reduce_mod(modulus))?
        == invariant_factors(&b2.reduce_mod(modulus))?)
}

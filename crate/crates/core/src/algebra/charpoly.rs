//! Characteristic polynomials by Berkowitz's division-free recurrence.
//!
//! For the leading principal `r x r` block `A_r = [[A_{r-1}, S], [R, a]]`
//! the coefficient vector (highest degree first) satisfies
//! `p_r = T_r * p_{r-1}`, where `T_r` is the `(r+1) x r` lower-triangular
//! Toeplitz matrix whose first column is
//! `(1, -a, -R S, -R A_{r-1} S, ..., -R A_{r-1}^{r-2} S)`.
//! Only ring operations appear, so the same code serves Z, Q and Z_p.

use super::matrix::Matrix;
use super::poly::Polynomial;
use super::ring::Ring;
use crate::error::Result;

/// Monic `det(xI - m)`.
pub fn charpoly<R: Ring>(m: &Matrix<R>) -> Result<Polynomial<R>> {
    let n = m.require_square()?;
    let ctx = m.ctx();
    let one = R::one(ctx);
    // highest-degree-first coefficients of det(xI - A_r)
    let mut p: Vec<R> = vec![one.clone()];
    for r in 1..=n {
        let k = r - 1; // index of the new row/column
        let a = m.get(k, k);
        // column of the Toeplitz matrix
        let mut col = Vec::with_capacity(r + 1);
        col.push(one.clone());
        col.push(a.neg());
        if k > 0 {
            // s = S, then repeatedly s <- A_{r-1} s
            let mut s: Vec<R> = (0..k).map(|i| m.get(i, k).clone()).collect();
            for step in 0..k {
                let rs = (0..k).fold(R::zero(ctx), |acc, j| {
                    let x = m.get(k, j);
                    if x.is_zero() || s[j].is_zero() {
                        acc
                    } else {
                        acc.add(&x.mul(&s[j]))
                    }
                });
                col.push(rs.neg());
                if step + 1 < k {
                    s = (0..k)
                        .map(|i| {
                            (0..k).fold(R::zero(ctx), |acc, j| {
                                let x = m.get(i, j);
                                if x.is_zero() || s[j].is_zero() {
                                    acc
                                } else {
                                    acc.add(&x.mul(&s[j]))
                                }
                            })
                        })
                        .collect();
                }
            }
        }
        debug_assert_eq!(col.len(), r + 1);
        // next = T_r * p, T_r[i][j] = col[i - j] for i >= j
        let mut next = Vec::with_capacity(r + 1);
        for i in 0..=r {
            let mut acc = R::zero(ctx);
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                let t = &col[i - j];
                if !t.is_zero() && !pj.is_zero() {
                    acc = acc.add(&t.mul(pj));
                }
            }
            next.push(acc);
        }
        p = next;
    }
    p.reverse();
    Ok(Polynomial::new(ctx.clone(), p))
}

/// Determinant, read off the characteristic polynomial:
/// `det m = (-1)^n * p(0)`.
pub fn determinant<R: Ring>(m: &Matrix<R>) -> Result<R> {
    let n = m.require_square()?;
    let c0 = charpoly(m)?.coeff(0);
    Ok(if n % 2 == 0 { c0 } else { c0.neg() })
}

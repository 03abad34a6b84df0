//! Invariant factors of `xI - M` over `F[x]`, via Smith normal form.

use super::matrix::Matrix;
use super::poly::Polynomial;
use super::ring::Field;
use crate::error::Result;

/// Monic, nonconstant invariant factors `d_1 | d_2 | ... | d_k` of `xI - m`.
///
/// Two square matrices over a field are similar iff these lists agree; the
/// product of the list is the characteristic polynomial and the last entry
/// is the minimal polynomial.
pub fn invariant_factors<F: Field>(m: &Matrix<F>) -> Result<Vec<Polynomial<F>>> {
    let n = m.require_square()?;
    let ctx = m.ctx().clone();
    let mut a: Vec<Vec<Polynomial<F>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = m.get(i, j).neg();
                    if i == j {
                        Polynomial::new(ctx.clone(), vec![c, F::one(&ctx)])
                    } else {
                        Polynomial::new(ctx.clone(), vec![c])
                    }
                })
                .collect()
        })
        .collect();

    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            // pivot: nonzero entry of least degree in the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, e) in row.iter().enumerate().skip(t) {
                    if let Some(d) = e.degree() {
                        if best.map_or(true, |(_, _, bd)| d < bd) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                // trailing block is zero; cannot happen for xI - M
                break;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..n {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].div_rem(&a[t][t]);
                for j in t..n {
                    let sub = q.mul(&a[t][j]);
                    a[i][j] = a[i][j].sub(&sub);
                }
                debug_assert_eq!(a[i][t], r);
                if !r.is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].div_rem(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let sub = q.mul(&row[t]);
                    row[j] = row[j].sub(&sub);
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold any offending row into row t and retry
            let offending = (t + 1..n).find(|&i| (t + 1..n).any(|j| !a[t][t].divides(&a[i][j])));
            match offending {
                Some(i) => {
                    for j in t..n {
                        let v = a[t][j].add(&a[i][j]);
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].monic());
    }
    Ok(diag
        .into_iter()
        .filter(|d| d.degree().is_some_and(|deg| deg > 0))
        .collect())
}

/// Similarity over a field, decided by invariant factors.
pub fn similar<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<bool> {
    if a.rows() != b.rows() {
        return Err(crate::error::Error::DimensionMismatch {
            expected: a.rows(),
            got: b.rows(),
        });
    }
    Ok(invariant_factors(a)? == invariant_factors(b)?)
}

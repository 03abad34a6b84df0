use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ring::{Field, IntegerRing, Modulus, Ring, Zp};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    ctx: R::Ctx,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_vec(ctx: R::Ctx, rows: usize, cols: usize, data: Vec<R>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            ctx,
            data,
        })
    }

    pub fn from_fn(
        ctx: R::Ctx,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> R,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            ctx,
            data,
        }
    }

    /// Builds from nested rows of small integers.
    pub fn from_i64_rows(ctx: R::Ctx, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row.iter().map(|&v| R::from_i64(&ctx, v)));
        }
        Matrix::from_vec(ctx, r, c, data)
    }

    pub fn zeros(ctx: R::Ctx, rows: usize, cols: usize) -> Self {
        let z = R::zero(&ctx);
        Matrix {
            rows,
            cols,
            data: vec![z; rows * cols],
            ctx,
        }
    }

    pub fn identity(ctx: R::Ctx, n: usize) -> Self {
        let (z, o) = (R::zero(&ctx), R::one(&ctx));
        Matrix::from_fn(ctx, n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out: Matrix<R> = Matrix::zeros(self.ctx.clone(), self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, R::add)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, R::sub)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: rhs.rows * rhs.cols,
            });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx.clone(),
            data,
        })
    }

    pub fn neg(&self) -> Self {
        self.map(self.ctx.clone(), R::neg)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.ctx.clone(), self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    /// Row vector times matrix: `v · self`.
    pub fn vec_mul(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let mut out = vec![R::zero(&self.ctx); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.get(k, j);
                if !b.is_zero() {
                    *o = o.add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn map<S: Ring>(&self, ctx: S::Ctx, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Simultaneous row and column permutation: entry `(i, j)` of the result
    /// is entry `(perm[i], perm[j])` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        Matrix::from_fn(self.ctx.clone(), perm.len(), perm.len(), |i, j| {
            self.get(perm[i], perm[j]).clone()
        })
    }
}

impl<R: Field> Matrix<R> {
    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square()?;
        let mut a = self.clone();
        let mut inv = Matrix::identity(self.ctx.clone(), n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::Singular)?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p_inv = a.get(col, col).inv().expect("nonzero pivot");
            a.scale_row(col, &p_inv);
            inv.scale_row(col, &p_inv);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).neg();
                a.add_row_multiple(r, col, &factor);
                inv.add_row_multiple(r, col, &factor);
            }
        }
        Ok(inv)
    }

    /// Row rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(pivot) = (rank..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(pivot, rank);
            let p_inv = a.get(rank, col).inv().unwrap();
            for r in rank + 1..a.rows {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).mul(&p_inv).neg();
                a.add_row_multiple(r, rank, &factor);
            }
            rank += 1;
        }
        rank
    }
}

impl<R: Ring> Matrix<R> {
    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn scale_row(&mut self, r: usize, c: &R) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = self.data[idx].mul(c);
        }
    }

    /// `row[target] += factor * row[source]`
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &R) {
        for j in 0..self.cols {
            let s = self.get(source, j).mul(factor);
            let idx = target * self.cols + j;
            self.data[idx] = self.data[idx].add(&s);
        }
    }
}

impl<R: IntegerRing> Matrix<R> {
    pub fn reduce_mod(&self, p: Modulus) -> Matrix<Zp> {
        self.map(p, |c| Zp::new(c.residue(p.get()), p))
    }

    pub fn to_bigint(&self) -> Matrix<BigInt> {
        self.map((), |c| c.to_bigint())
    }

    pub fn to_rational(&self) -> Matrix<BigRational> {
        self.map((), |c| BigRational::from_integer(c.to_bigint()))
    }

    pub fn abs(&self) -> Self {
        self.map((), |c| c.abs_value())
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|c| i64::from_bigint(&c.to_bigint()))
                    .collect()
            })
            .collect()
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let w = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

/// Companion matrix of `1 + x + ... + x^n`: ones on the superdiagonal, last
/// row all `-1`.
pub fn companion<R: Ring>(ctx: R::Ctx, n: usize) -> Result<Matrix<R>> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    let (z, o, m) = (R::zero(&ctx), R::one(&ctx), R::from_i64(&ctx, -1));
    Ok(Matrix::from_fn(ctx, n, n, |i, j| {
        if i == n - 1 {
            m.clone()
        } else if j == i + 1 {
            o.clone()
        } else {
            z.clone()
        }
    }))
}

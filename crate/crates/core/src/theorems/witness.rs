//! The Krylov basis `{ Φ^k(J) : 0 <= k < n }` and its change-of-basis matrix.

use num_integer::Integer;

use crate::algebra::{companion, determinant, IntegerRing, Matrix};
use crate::dynamics::{oriented_matrix, VertexMap};
use crate::error::{Error, Result};
use crate::tree::{Orientation, SignedEdgeVector};

/// `Mf` stacks `Φ^k(J)` as row `k`, where `J` is the signed path from vertex
/// `start` to `f^j(start)`.
///
/// In row-vector convention `Mf · A = C · Mf`, with `C` the companion matrix
/// of `1 + x + ... + x^n`: shifting rows down one step is `Φ`, and the last
/// row closes up because `Σ_{k=0}^{n} Φ^k(J) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisWitness {
    pub start: usize,
    pub j: usize,
    pub jvec: SignedEdgeVector,
    pub mf: Matrix<i64>,
    pub companion: Matrix<i64>,
    pub det_mf: i64,
}

impl BasisWitness {
    /// Over Q: `Mf` is invertible and `Mf · A · Mf^{-1} = C`.
    pub fn check_rational_conjugation(&self, a: &Matrix<i64>) -> Result<()> {
        let mf = self.mf.to_rational();
        let inv = mf.inverse()?;
        let conj = mf.mul(&a.to_rational())?.mul(&inv)?;
        if conj != self.companion.to_rational() {
            return Err(Error::WitnessFailed(format!(
                "Mf A Mf^-1 != C for J = [{}, f^{}({})]",
                self.start, self.j, self.start
            )));
        }
        Ok(())
    }

    /// `W_f` is a basis over `Z_p` exactly when `p` does not divide `det Mf`.
    pub fn is_basis_mod(&self, p: u64) -> bool {
        self.det_mf.residue(p) != 0
    }

    pub fn abs_det(&self) -> u64 {
        self.det_mf.unsigned_abs()
    }
}

/// Builds and validates the witness for one instance and one `(start, j)`.
///
/// Fails with `NotCoprime` unless `gcd(j, n+1) = 1`; `WitnessFailed` means a
/// violated identity, which the theory says cannot happen.
pub fn basis_witness(
    f: &VertexMap,
    o: &Orientation,
    start: usize,
    j: usize,
) -> Result<BasisWitness> {
    let a = oriented_matrix(f, o)?.oriented;
    basis_witness_with_matrix(f, o, &a, start, j)
}

pub(crate) fn basis_witness_with_matrix(
    f: &VertexMap,
    o: &Orientation,
    a: &Matrix<i64>,
    start: usize,
    j: usize,
) -> Result<BasisWitness> {
    let t = f.tree();
    let n = t.edge_count();
    if j == 0 || j > n {
        return Err(Error::OutOfRange {
            what: "j",
            value: j,
            range: format!("1..={n}"),
        });
    }
    let g = j.gcd(&(n + 1));
    if g != 1 {
        return Err(Error::NotCoprime {
            j,
            modulus: n + 1,
            gcd: g,
        });
    }
    let jvec = t.signed_path_vector(o, start, f.iterate(start, j))?;
    let mut rows = Vec::with_capacity(n * n);
    let mut cur = jvec.0.clone();
    for k in 0..n {
        rows.extend_from_slice(&cur);
        if k + 1 < n {
            cur = a.vec_mul(&cur)?;
        }
    }
    let mf = Matrix::from_vec((), n, n, rows)?;
    let c = companion::<i64>((), n)?;
    let det_mf = determinant(&mf)?;
    if det_mf % 2 == 0 {
        return Err(Error::WitnessFailed(format!(
            "det Mf = {det_mf} is even for J = [{start}, f^{j}({start})]"
        )));
    }
    if mf.mul(a)? != c.mul(&mf)? {
        return Err(Error::WitnessFailed(format!(
            "Mf A != C Mf for J = [{start}, f^{j}({start})]"
        )));
    }
    Ok(BasisWitness {
        start,
        j,
        jvec,
        mf,
        companion: c,
        det_mf,
    })
}

/// All `(start, j)` pairs with `gcd(j, n+1) = 1`, start over every vertex.
pub fn coprime_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for start in 1..=n + 1 {
        for j in 1..=n {
            if j.gcd(&(n + 1)) == 1 {
                out.push((start, j));
            }
        }
    }
    out
}

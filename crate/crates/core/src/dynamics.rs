//! Cyclic vertex maps and their transition matrices.
//!
//! `Φ_f` acts on row vectors: the image of `w` is `w · A`, so row `i` of the
//! oriented matrix `A` holds the coordinates of the image of edge `E_i`,
//! i.e. the signed path from `f(tail)` to `f(head)`.

use std::sync::Arc;

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::tree::{Orientation, SignedEdgeVector, Tree};

/// A vertex permutation of a tree that is a single cycle through every
/// vertex. Only the vertex data is stored; the map on edge interiors is the
/// monotone extension and never needed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexMap {
    tree: Arc<Tree>,
    // image[u - 1] = f(u)
    image: Vec<usize>,
}

impl VertexMap {
    pub fn new(tree: Arc<Tree>, image: Vec<usize>) -> Result<Self> {
        let v = tree.vertex_count();
        if image.len() != v {
            return Err(Error::DimensionMismatch {
                expected: v,
                got: image.len(),
            });
        }
        let mut seen = vec![false; v + 1];
        for &x in &image {
            if x == 0 || x > v || seen[x] {
                return Err(Error::NotPermutation(image));
            }
            seen[x] = true;
        }
        let mut len = 1;
        let mut x = image[0];
        while x != 1 {
            x = image[x - 1];
            len += 1;
        }
        if len != v {
            return Err(Error::NotSingleCycle(image));
        }
        Ok(VertexMap { tree, image })
    }

    /// From cycle order `(c_1 c_2 ... c_v)`, meaning `f(c_k) = c_{k+1}`.
    pub fn from_cycle(tree: Arc<Tree>, cycle: &[usize]) -> Result<Self> {
        let v = tree.vertex_count();
        if cycle.len() != v {
            return Err(Error::NotSingleCycle(cycle.to_vec()));
        }
        let mut image = vec![0; v];
        for (k, &c) in cycle.iter().enumerate() {
            if c == 0 || c > v || image[c - 1] != 0 {
                return Err(Error::NotPermutation(cycle.to_vec()));
            }
            image[c - 1] = cycle[(k + 1) % v];
        }
        VertexMap::new(tree, image)
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn tree_arc(&self) -> &Arc<Tree> {
        &self.tree
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, u: usize) -> usize {
        self.image[u - 1]
    }

    /// `f^k(u)`
    pub fn iterate(&self, u: usize, k: usize) -> usize {
        let k = k % self.image.len();
        (0..k).fold(u, |x, _| self.apply(x))
    }

    /// `(1 f(1) f^2(1) ...)`
    pub fn cycle_order(&self) -> Vec<usize> {
        let mut out = vec![1];
        let mut x = self.apply(1);
        while x != 1 {
            out.push(x);
            x = self.apply(x);
        }
        out
    }

    /// The inverse permutation, again a single cycle on the same tree.
    pub fn inverse(&self) -> VertexMap {
        let mut inv = vec![0; self.image.len()];
        for (u, &x) in self.image.iter().enumerate() {
            inv[x - 1] = u + 1;
        }
        VertexMap {
            tree: Arc::clone(&self.tree),
            image: inv,
        }
    }

    /// Same map on the same tree with its edges listed in a new order.
    pub fn with_tree(&self, tree: Arc<Tree>) -> Result<Self> {
        VertexMap::new(tree, self.image.clone())
    }

    /// `"2,3,1"`
    pub fn image_string(&self) -> String {
        self.image
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// All single cycles on `v` vertices, as images, in lexicographic order of
/// their cycle order `(1 c_2 ... c_v)`. There are `(v-1)!` of them.
pub fn all_cycles(v: usize) -> Vec<Vec<usize>> {
    let mut rest: Vec<usize> = (2..=v).collect();
    let mut out = Vec::new();
    loop {
        let mut image = vec![0; v];
        let mut prev = 1;
        for &c in &rest {
            image[prev - 1] = c;
            prev = c;
        }
        image[prev - 1] = 1;
        out.push(image);
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Oriented matrix `A_n(f)` (entries in {-1, 0, 1}) and unoriented `B_n(f)`
/// (entries in {0, 1}) for one orientation.
#[derive(Clone, PartialEq, Debug)]
pub struct TransitionMatrices {
    pub oriented: Matrix<i64>,
    pub unoriented: Matrix<i64>,
    pub orientation: Orientation,
}

pub fn oriented_matrix(f: &VertexMap, o: &Orientation) -> Result<TransitionMatrices> {
    let t = f.tree();
    t.check_orientation(o)?;
    let n = t.edge_count();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        let (tail, head) = t.oriented_edge(o, i);
        let row = t.signed_path_vector(o, f.apply(tail), f.apply(head))?;
        data.extend(row.0);
    }
    let oriented = Matrix::from_vec((), n, n, data)?;
    let unoriented = oriented.abs();
    Ok(TransitionMatrices {
        oriented,
        unoriented,
        orientation: o.clone(),
    })
}

/// Unoriented matrix alone; it does not depend on the orientation.
pub fn unoriented_matrix(f: &VertexMap) -> Result<Matrix<i64>> {
    let n = f.tree().edge_count();
    Ok(oriented_matrix(f, &Orientation::canonical(n))?.unoriented)
}

/// Coordinates of `Φ_f(w)`, i.e. `w · A`.
pub fn phi_apply(m: &TransitionMatrices, w: &SignedEdgeVector) -> Result<SignedEdgeVector> {
    Ok(SignedEdgeVector(m.oriented.vec_mul(w.coords())?))
}

/// Checks `Φ_f([u, v]) = [f(u), f(v)]` for every ordered vertex pair.
pub fn lemma1_oracle(f: &VertexMap, o: &Orientation) -> Result<bool> {
    let m = oriented_matrix(f, o)?;
    Ok(lemma1_holds_for(f, o, &m.oriented))
}

/// Same check against a caller-supplied matrix (e.g. a perturbed one).
pub fn lemma1_holds_for(f: &VertexMap, o: &Orientation, a: &Matrix<i64>) -> bool {
    let t = f.tree();
    let v = t.vertex_count();
    for x in 1..=v {
        for y in 1..=v {
            let lhs = t.signed_path_vector(o, x, y).expect("valid vertices");
            let Ok(img) = a.vec_mul(lhs.coords()) else {
                return false;
            };
            let rhs = t
                .signed_path_vector(o, f.apply(x), f.apply(y))
                .expect("valid vertices");
            if img != rhs.0 {
                return false;
            }
        }
    }
    true
}

pub fn inverse_map(f: &VertexMap) -> VertexMap {
    f.inverse()
}

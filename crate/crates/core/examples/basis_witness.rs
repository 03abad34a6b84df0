//! The Z-basis witness: rows J, JA, ..., JA^(n-1) for the path J from a
//! vertex to its j-th iterate. Mf·A equals C·Mf and det Mf is odd.

use std::sync::Arc;

use arbor::dynamics::{oriented_matrix, VertexMap};
use arbor::theorems::{basis_witness, coprime_pairs};
use arbor::tree::{Orientation, Tree};

fn main() -> arbor::Result<()> {
    let tree = Arc::new(Tree::new(6, vec![(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)])?);
    let f = VertexMap::from_cycle(tree, &[1, 4, 3, 6, 2, 5])?;
    let o = Orientation::canonical(5);
    let a = oriented_matrix(&f, &o)?.oriented;

    let w = basis_witness(&f, &o, 1, 1)?;
    println!("Mf =\n{}", w.mf);
    println!("det Mf = {}", w.det_mf);
    w.check_rational_conjugation(&a)?;
    println!("Mf·A = C·Mf holds");

    let dets: Vec<i64> = coprime_pairs(5)
        .into_iter()
        .map(|(start, j)| basis_witness(&f, &o, start, j).map(|w| w.det_mf))
        .collect::<arbor::Result<_>>()?;
    println!("det Mf over all (start, j): {dets:?}");
    Ok(())
}

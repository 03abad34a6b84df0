//! Row-reduction detectors: on a path graph the basis matrix is Petrie, and
//! where the second detector applies, explicit row operations turn |A| into A.

use std::sync::Arc;

use arbor::dynamics::{oriented_matrix, VertexMap};
use arbor::theorems::{apply_row_ops, prop1_case1_check, prop1_case2_check, Prop1Outcome};
use arbor::tree::{Orientation, Tree};

fn main() -> arbor::Result<()> {
    let path = Arc::new(Tree::path(5)?);
    let f = VertexMap::from_cycle(path, &[1, 3, 5, 2, 4])?;
    let o = Orientation::canonical(4);
    println!("path, f = {}: first detector {}", f.image_string(), prop1_case1_check(&f, &o)?);

    let star = Arc::new(Tree::star(5)?);
    let g = VertexMap::from_cycle(star, &[1, 2, 3, 4, 5])?;
    let o = Orientation::canonical(4);
    match prop1_case2_check(&g, &o)? {
        Prop1Outcome::Derived(d) => {
            let m = oriented_matrix(&g, &o)?;
            println!("B =\n{}", m.unoriented);
            for op in &d.ops {
                println!("  {op:?}");
            }
            println!("R =\n{}", d.operator);
            assert_eq!(apply_row_ops(&m.unoriented, &d.ops), m.oriented);
            assert_eq!(d.operator.mul(&m.unoriented)?, m.oriented);
            println!("R·B = A");
        }
        Prop1Outcome::NotApplicable(reason) => println!("second detector not applicable: {reason}"),
    }
    Ok(())
}

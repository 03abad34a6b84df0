//! Build the transition matrices of one cyclic map and check every claim.
//!
//!     cargo run --example analyze_instance -- 1-2,2-3,2-4 "(1 3 2 4)"

use std::sync::Arc;

use arbor::dynamics::oriented_matrix;
use arbor::parse::{parse_map, parse_tree};
use arbor::theorems::{verify_instance, VerifyOptions};
use arbor::tree::Orientation;

fn main() -> arbor::Result<()> {
    let mut args = std::env::args().skip(1);
    let tree = parse_tree(&args.next().unwrap_or_else(|| "1-2,2-3,2-4".into()))?;
    let tree = Arc::new(tree);
    let f = parse_map(tree, &args.next().unwrap_or_else(|| "(1 3 2 4)".into()))?;
    let o = Orientation::canonical(f.tree().edge_count());

    let m = oriented_matrix(&f, &o)?;
    println!("A =\n{}", m.oriented);
    println!("B = |A| =\n{}", m.unoriented);

    let report = verify_instance(&f, &o, &VerifyOptions::full())?;
    println!("charpoly(A) = {}", report.oriented_charpoly.display);
    println!("charpoly(B) = {}", report.unoriented_charpoly.display);
    for (name, claim) in report.claims.iter() {
        println!("  {name:<32} {claim:?}");
    }
    println!("all pass: {}", report.all_pass);
    Ok(())
}

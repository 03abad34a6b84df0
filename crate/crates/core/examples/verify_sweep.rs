//! Sweep every tree and cyclic map on up to six vertices, all orientations,
//! and print the per-size tally.

use arbor::sweep::{run_verify, OrientationMode, SweepConfig};

fn main() -> arbor::Result<()> {
    let mut cfg = SweepConfig::new(2..=5, OrientationMode::All);
    cfg.workers = 4;
    let summary = run_verify(&cfg)?;
    for row in &summary.per_n {
        println!("n = {:>2}: {:>6} instances, {} failed", row.n, row.instances, row.failed);
    }
    println!("total {} instances, all pass: {}", summary.total_instances, summary.all_pass);
    Ok(())
}

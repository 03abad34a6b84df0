//! Recompute every bundled matrix fixture and compare against its caption.

use arbor::figures::{builtin, reproduce, FIGURE_IDS};

fn main() -> arbor::Result<()> {
    for id in FIGURE_IDS {
        let fx = builtin(id)?;
        let rep = reproduce(&fx)?;
        println!(
            "{id:>3}  n = {:>2}  charpoly(|A|) = {}  match: {}",
            fx.n, rep.unoriented_charpoly.display, rep.all_match
        );
    }
    Ok(())
}

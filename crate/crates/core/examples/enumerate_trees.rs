//! Count and list unlabeled trees, with their Prüfer codes.

use arbor::tree::{encode_prufer, enumerate_trees};

fn main() -> arbor::Result<()> {
    for v in 3..=9 {
        println!("{v} vertices: {} trees", enumerate_trees(v)?.len());
    }
    println!();
    for t in enumerate_trees(6)? {
        let kind = if t.is_path_graph() { "  (path)" } else { "" };
        println!("{:<24} prufer {:?}{kind}", t.edge_list_string(), encode_prufer(&t));
    }
    Ok(())
}

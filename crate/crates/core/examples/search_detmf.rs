//! Histogram of |det Mf| over every instance and coprime (start, j).

use arbor::sweep::{search_det_mf, DetMfConfig};

fn main() -> arbor::Result<()> {
    let mut cfg = DetMfConfig::new(2..=6);
    cfg.workers = 4;
    let report = search_det_mf(&cfg)?;
    for row in &report.per_n {
        let hist: Vec<String> =
            row.histogram.iter().map(|h| format!("|det| {} × {}", h.abs_det, h.count)).collect();
        println!("n = {:>2}: {} witnesses  {}", row.n, row.witnesses, hist.join(", "));
    }
    println!("all odd: {}, all unit: {}", report.all_odd, report.all_unit);
    Ok(())
}

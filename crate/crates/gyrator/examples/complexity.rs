//! Real-multiplication counts and timings of the transforms.

use gyrator::oracle::{complexity_order_check, count_chain_onset};
use gyrator::Result;

fn main() -> Result<()> {
    let report = complexity_order_check(&[64, 128, 256], Some(2))?;
    for r in &report.rows {
        let t = r.seconds.map_or("-".to_string(), |s| format!("{s:.4} s"));
        println!("N = {:>3} {:>6}: {:>14.0}  {t}", r.n, r.method, r.count);
    }
    for (n, holds) in &report.ordering {
        println!("N = {n}: count ordering holds {holds}");
    }
    println!("ordering holds from N = {:?}; {}", count_chain_onset(1024), report.caveat);
    Ok(())
}

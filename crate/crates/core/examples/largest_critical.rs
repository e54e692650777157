//! Exact largest critical set sizes for orders 1 to 4, and a heuristic lower
//! bound at order 5.
//!
//!     cargo run --release --example largest_critical

use critset::bounds::known_lcs;
use critset::criticality::{lcs_exhaustive, lcs_heuristic, DEFAULT_PORTFOLIO};
use critset::enumeration::OrderLimit;

fn main() -> critset::Result<()> {
    for n in 1..=4 {
        let rec = lcs_exhaustive(n, OrderLimit::Standard)?;
        println!("lcs({n}) = {} (known: {:?})", rec.value, known_lcs(n));
        if n == 4 {
            println!("{}\n{}", rec.witness_square, rec.witness_set);
        }
    }
    let rec = lcs_heuristic(5, 0, DEFAULT_PORTFOLIO)?;
    println!(
        "lcs(5) >= {} by greedy search (known: {:?})",
        rec.value,
        known_lcs(5)
    );
    Ok(())
}

//! Exact numbers of Latin squares by reduced-square enumeration.
//!
//!     cargo run --release --example count

use critset::enumeration::{count_all, iter_reduced, OrderLimit};

fn main() -> critset::Result<()> {
    for n in 1..=6 {
        let r = count_all(n, OrderLimit::Extended)?;
        println!("n = {n}: R = {}, L = {}", r.reduced_count, r.total_count);
    }
    println!("\nreduced squares of order 4:");
    for l in iter_reduced(4, OrderLimit::Standard)? {
        println!("{l}");
    }
    Ok(())
}

//! The back-circulant square and its upper-left triangle critical set.
//!
//!     cargo run --example triangle

use critset::bounds::nelder_bound;
use critset::constructions::{back_circulant, five_by_five_critical, nelder_triangle};
use critset::criticality::verify_critical;

fn main() -> critset::Result<()> {
    println!("{}", back_circulant(5)?);
    for n in 2..=8 {
        let t = nelder_triangle(n)?;
        let r = verify_critical(&t);
        println!(
            "order {n}: size {} (formula {}), critical: {}",
            t.size(),
            nelder_bound(n as u64),
            r.is_critical()
        );
    }
    let ex = five_by_five_critical();
    println!(
        "\norder 5 also has a critical set of size {} > {}:\n{ex}",
        ex.size(),
        nelder_bound(5)
    );
    Ok(())
}

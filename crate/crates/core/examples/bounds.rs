//! The counting chain at small orders, the crossover with the triangle
//! construction, and a slice of the bounds table.
//!
//!     cargo run --example bounds

use critset::bounds::{
    bounds_table, check_chain, crossover, stirling_check, svr_bound, theorem1_lower, KNOWN_LCS,
    KNOWN_LCS_LOWER,
};

fn main() -> critset::Result<()> {
    println!(" n  ln lower   ln L(n)   ln upper  holds");
    for &(n, lcs) in KNOWN_LCS.iter().take(5) {
        let c = check_chain(n, lcs)?;
        println!(
            "{n:>2} {:>9.4} {:>9.4} {:>10.4}  {}",
            c.lhs_log, c.mid_log, c.rhs_log, c.holds
        );
    }

    println!(
        "\nStirling substitute below n! for n = 1..300: {}",
        (1..=300).all(stirling_check)
    );
    let n = crossover();
    println!("asymptotic bound beats (n^2 - n)/2 from n = {n}");
    for row in bounds_table(n - 1, n)? {
        println!(
            "  n = {}: bound {:.4}, triangle {}",
            row.order,
            row.theorem1.unwrap(),
            row.nelder
        );
    }

    println!("\nknown lower bounds vs the asymptotic bound:");
    for &(n, v) in &KNOWN_LCS_LOWER {
        println!("  n = {n}: {v} vs {:.4}", theorem1_lower(n as u64)?);
    }
    for m in [3u32, 10, 20] {
        println!(
            "  n = 2^{m}: 4^m - 3^m = {} vs {:.4}",
            svr_bound(m),
            theorem1_lower(1 << m)?
        );
    }
    Ok(())
}

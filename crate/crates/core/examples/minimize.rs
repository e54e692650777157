//! Shrink "all but the first row and column" of random squares down to
//! critical sets; none of them touches row 1 or column 1.
//!
//!     cargo run --example minimize

use critset::constructions::{all_but_first_row_col, random_latin_square};
use critset::criticality::{minimize_uc, verify_critical, RemovalOrder};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> critset::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for n in 4..=7 {
        let l = random_latin_square(n, &mut rng)?;
        let start = all_but_first_row_col(&l);
        let row_major = minimize_uc(&start, RemovalOrder::RowMajor)?;
        let shuffled = minimize_uc(&start, RemovalOrder::Shuffled(42))?;
        assert!(verify_critical(&row_major).is_critical());
        println!(
            "order {n}: start size {}, critical sizes {} (row-major) and {} (shuffled)",
            start.size(),
            row_major.size(),
            shuffled.size()
        );
        if n == 4 {
            println!("{l}\n{row_major}");
        }
    }
    Ok(())
}

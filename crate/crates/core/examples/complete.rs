//! Count completions of a few partial squares and show forced-move closure.
//!
//!     cargo run --example complete

use critset::constructions::five_by_five_critical;
use critset::solver::{count_completions, propagate, unique_completion, Cap};
use critset::PartialLatinSquare;

fn main() -> critset::Result<()> {
    for n in 1..=5 {
        let r = count_completions(&PartialLatinSquare::empty(n)?, Cap::Unbounded);
        println!("empty order {n}: {} completions", r.count);
    }

    let c = five_by_five_critical();
    println!("\npartial square of size {}:\n{c}", c.size());
    let (closed, status) = propagate(&c);
    println!("after forced moves ({status:?}):\n{closed}");
    assert_eq!(closed, unique_completion(&c)?.to_partial());

    let loose = c.remove_entry(1, 1)?;
    let r = count_completions(&loose, Cap::at(2));
    println!(
        "without (1,1): {} completions (capped: {})",
        r.count, r.capped
    );
    for (i, w) in r.witnesses.iter().enumerate() {
        println!("witness {}:\n{w}", i + 1);
    }
    Ok(())
}

//! Check a partial square for criticality and inspect each entry.
//!
//!     cargo run --example verify [grid-file]

use critset::constructions::five_by_five_critical;
use critset::criticality::verify_critical;
use critset::PartialLatinSquare;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c: PartialLatinSquare = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?.parse()?,
        None => five_by_five_critical(),
    };
    let report = verify_critical(&c);
    println!("{c}");
    println!("uniquely completable: {}", report.uniquely_completable);
    println!("minimal:              {}", report.minimal);
    println!("critical:             {}", report.is_critical());
    for e in &report.entries {
        let note = if e.is_removable() {
            "removable"
        } else {
            "needed"
        };
        println!(
            "  {}: {} completions without it ({note})",
            e.entry, e.completions
        );
    }
    if let Some(e) = report.entries.iter().find(|e| e.alternative.is_some()) {
        println!(
            "\nanother square once {} is dropped:\n{}",
            e.entry,
            e.alternative.as_ref().unwrap()
        );
    }
    Ok(())
}

//! Exhaustively test the dichotomy over every subset of a finite universe:
//! any non-commuting S must have |S^2| >= 3|S| - 2. Prints the tally and
//! the first few extremal sets, i.e. those meeting the bound exactly.
//!
//! Run with: cargo run --example exhaustive_scan

use ordsemi::instances::FreeMonoid;
use ordsemi::search::{exhaustive_theorem_scan, ScanCaps};
use ordsemi::sets::UniverseSpec;
use ordsemi::{Result, Semigroup};

fn main() -> Result<()> {
    let fm = FreeMonoid::new(2)?;
    let universe = fm.universe(&UniverseSpec::Words { max_len: 3 }, 0)?;
    let report = exhaustive_theorem_scan(&fm, &universe, 2, 4, &ScanCaps::default(), 0)?;

    println!("universe: {} words, subset sizes {}..={}", report.universe_size, 2, 4);
    println!("subsets examined:    {}", report.subsets_examined);
    println!("commuting (skipped): {}", report.commuting_skipped);
    println!("non-commuting:       {}", report.noncommuting_checked);
    println!("violations:          {}", report.violations);
    println!("extremal sets:       {}", report.extremal_count);
    for hit in report.extremal_examples.iter().take(4) {
        println!(
            "    {:?}: |S^2| = {} = 3·{} - 2",
            hit.elements, hit.square_size, hit.size
        );
    }
    Ok(())
}

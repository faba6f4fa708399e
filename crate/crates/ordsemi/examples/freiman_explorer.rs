//! Hunt for commuting sets with very small squares. Whenever a pairwise
//! commuting set satisfies |S^2| <= 3|S| - 4, try to cover it by a
//! geometric progression a, ab, ab^2, ... of length |S^2| - |S| + 1.
//!
//! Run with: cargo run --example freiman_explorer

use ordsemi::instances::{FreeMonoid, NatAdd};
use ordsemi::search::{freiman_progression_explorer, ScanCaps};
use ordsemi::sets::UniverseSpec;
use ordsemi::{Result, Semigroup};

fn main() -> Result<()> {
    let nat = NatAdd;
    let universe = nat.universe(&UniverseSpec::Range { max: 9 }, 0)?;
    let report = freiman_progression_explorer(&nat, &universe, 2, 4, &ScanCaps::default(), 0)?;
    println!(
        "integers 1..=9, sizes 2..=4: {} subsets, {} in hypothesis, {} covered, {} uncovered",
        report.subsets_examined, report.in_hypothesis, report.covered, report.uncovered
    );
    for hit in report.covered_examples.iter().take(3) {
        println!(
            "    {:?} (|S^2| = {}) ⊆ {{{} + i·{}}}, length {}",
            hit.elements, hit.square_size, hit.base, hit.ratio, hit.progression_length
        );
    }

    // On words the hypothesis is rare: most subsets do not commute, and the
    // commuting ones are power sets of a common root.
    let fm = FreeMonoid::new(2)?;
    let universe = fm.universe(&UniverseSpec::Words { max_len: 2 }, 0)?;
    let report = freiman_progression_explorer(&fm, &universe, 2, 3, &ScanCaps::default(), 0)?;
    println!(
        "words <= 2, sizes 2..=3: {} subsets, {} skipped as noncommuting, {} in hypothesis, {} uncovered",
        report.subsets_examined, report.noncommuting_skipped, report.in_hypothesis, report.uncovered
    );
    for hit in &report.covered_examples {
        println!(
            "    {:?} covered by base {:?}, ratio {:?}",
            hit.elements, hit.base, hit.ratio
        );
    }
    Ok(())
}

//! Seeded randomized law checking across instances: order totality,
//! two-sided translation invariance, cancellativity, power growth,
//! interleaving chains, and periodicity forcing an identity. The same
//! seed always replays the same trials.
//!
//! Run with: cargo run --example law_suite

use ordsemi::instances::{FreeMonoid, UpperTriangular};
use ordsemi::search::{randomized_law_suite, SuiteOptions};
use ordsemi::Result;

fn print_suite(name: &str, report: &ordsemi::search::SuiteReport) {
    println!("{name}: {} trials, seed {}", report.trials, report.seed);
    for law in &report.laws {
        let status = if law.failures == 0 { "ok" } else { "FAILED" };
        let tag = if law.applicable { "" } else { " (informational)" };
        println!("    {:<34} {:>6} trials  {status}{tag}", law.law, law.trials);
    }
    for note in &report.notes {
        println!("    note: {note}");
    }
}

fn main() -> Result<()> {
    let fm = FreeMonoid::new(3)?;
    let report = randomized_law_suite(&fm, 500, 42, &SuiteOptions::default())?;
    print_suite("free monoid on 3 letters", &report);

    let u2 = UpperTriangular::new(2)?;
    let report = randomized_law_suite(&u2, 300, 42, &SuiteOptions::default())?;
    print_suite("2x2 upper triangular", &report);
    Ok(())
}

//! When ab < ba, the interleaved products a^n b, a^(n-1) b a, ..., b a^n
//! form a strictly increasing chain of n + 1 distinct elements of S^(n+1).
//! This is the engine behind the 3|S| - 2 growth bound.
//!
//! Run with: cargo run --example neumann_chain

use ordsemi::commute::{neumann_chain, power_commutation_scan};
use ordsemi::instances::FreeMonoid;
use ordsemi::{Result, Semigroup};

fn main() -> Result<()> {
    let fm = FreeMonoid::new(2)?;
    let a = fm.parse("a")?;
    let b = fm.parse("b")?;
    // shortlex: ab < ba, so the chain runs upward from a^n b.
    for depth in [1u32, 2, 4] {
        let chain = neumann_chain(&fm, &a, &b, depth)?;
        println!(
            "depth {depth}: {} (strictly increasing: {})",
            chain.chain.iter().map(|w| fm.render(w)).collect::<Vec<_>>().join(" < "),
            chain.strictly_increasing,
        );
    }

    // No power of a ever commutes past b: a^n b != b a^n for all n.
    let scan = power_commutation_scan(&fm, &a, &b, 10)?;
    println!(
        "power scan ({}): {} checks, {} failures",
        scan.law, scan.trials, scan.failures
    );
    Ok(())
}

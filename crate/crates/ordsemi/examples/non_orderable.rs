//! Two ways a semigroup can fail to carry a compatible linear order.
//!
//! The left-zero semigroup (xy = x) is not cancellative, so no order can
//! work; the law suite flags exactly the laws that break. And positivity
//! alone is not enough structure: there are distinct matrices with all
//! entries positive satisfying α² = αβ, which strict translation
//! invariance would forbid.
//!
//! Run with: cargo run --example non_orderable

use ordsemi::instances::{pagano_witness, LeftZero};
use ordsemi::laws::{check_cancellativity, LawCheckOptions};
use ordsemi::search::{randomized_law_suite, SuiteOptions};
use ordsemi::{Result, Semigroup};

fn main() -> Result<()> {
    let lz = LeftZero::new(vec!["p".into(), "q".into(), "r".into()])?;
    println!("left-zero semigroup on {{p, q, r}}; claims a linear order: {}", lz.linearly_ordered());

    let carrier = vec!["p".to_string(), "q".into(), "r".into()];
    let cancel = check_cancellativity(&lz, &carrier, &LawCheckOptions::default())?;
    println!(
        "cancellativity: {}/{} trials failed, first witness {:?}",
        cancel.failures, cancel.trials, cancel.witness
    );

    let suite = randomized_law_suite(&lz, 200, 7, &SuiteOptions::default())?;
    for law in suite.laws.iter().filter(|l| l.failures > 0) {
        println!("    broken: {} ({} of {} trials)", law.law, law.failures, law.trials);
    }

    // All entries strictly positive, α != β, yet α·α = α·β. Left
    // multiplication by α is not injective, so no strict order survives it.
    let w = pagano_witness(3)?;
    println!("α = {}", w.alpha.render());
    println!("β = {}", w.beta.render());
    println!("α² = {}", w.alpha_squared().render());
    println!("αβ = {}", w.alpha_times_beta().render());
    println!("α² = αβ: {}", w.alpha_squared() == w.alpha_times_beta());
    Ok(())
}

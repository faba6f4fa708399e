//! Multiply finite sets inside a semigroup and compare the result against
//! the superadditive lower bound `|S1 ... Sn| >= 1 + sum(|Si| - 1)`.
//!
//! Run with: cargo run --example product_sets

use ordsemi::instances::{FreeMonoid, NatAdd};
use ordsemi::products::{product_set, superadditivity_check, DEFAULT_PRODUCT_CAP};
use ordsemi::{FiniteSubset, Result, Semigroup};

fn words(fm: &FreeMonoid, texts: &[&str]) -> FiniteSubset<ordsemi::instances::Word> {
    FiniteSubset::new(fm, texts.iter().map(|t| fm.parse(t).unwrap()).collect())
}

fn main() -> Result<()> {
    let fm = FreeMonoid::new(2)?;
    let a = words(&fm, &["a", "b"]);
    let b = words(&fm, &["", "ab"]);

    let product = product_set(&fm, &[a.clone(), b.clone()], DEFAULT_PRODUCT_CAP)?;
    println!("{{a, b}} * {{ε, ab}} = {:?}", product.render_all(&fm));

    let check = superadditivity_check(&fm, &[a, b], DEFAULT_PRODUCT_CAP)?;
    println!(
        "size {} against lower bound {} -> holds: {}",
        check.actual, check.bound, check.holds
    );

    // Under addition of positive integers the bound is tight for intervals:
    // {1..s} + {1..t} = {2..s+t} has exactly s + t - 1 elements.
    let nat = NatAdd;
    let s = FiniteSubset::new(&nat, (1..=4).collect());
    let t = FiniteSubset::new(&nat, (1..=3).collect());
    let check = superadditivity_check(&nat, &[s, t], DEFAULT_PRODUCT_CAP)?;
    println!(
        "{{1..4}} + {{1..3}}: size {} = bound {} (sharp: {})",
        check.actual,
        check.bound,
        check.actual == check.bound
    );
    Ok(())
}

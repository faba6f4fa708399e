//! The central dichotomy: a finite subset of a linearly ordered semigroup
//! either commutes pairwise or its square has at least 3|S| - 2 elements.
//! Squares several sets of words and prints the verdict for each.
//!
//! Run with: cargo run --example small_doubling

use ordsemi::instances::FreeMonoid;
use ordsemi::products::{small_doubling_verdict, square};
use ordsemi::{powers, FiniteSubset, Result, Semigroup};

fn main() -> Result<()> {
    let fm = FreeMonoid::new(2)?;

    let sets: Vec<(&str, Vec<&str>)> = vec![
        ("noncommuting pair", vec!["a", "b"]),
        ("pair plus empty word", vec!["", "a", "b"]),
        ("powers of one word", vec!["ab", "abab", "ababab"]),
        ("mixed", vec!["a", "aa", "b"]),
    ];

    for (label, texts) in sets {
        let set = FiniteSubset::new(
            &fm,
            texts.iter().map(|t| fm.parse(t)).collect::<Result<Vec<_>>>()?,
        );
        let v = small_doubling_verdict(&fm, &set)?;
        println!(
            "{label}: |S| = {}, |S^2| = {}, commuting = {}, |S^2| <= 3|S|-3: {}, consistent = {}",
            v.size,
            v.square_size,
            v.pairwise_commuting,
            v.bound_3s_minus_3_satisfied,
            v.theorem_consistent,
        );
        if let Some((x, y)) = &v.noncommuting_witness {
            println!("    witness: {x:?} and {y:?} do not commute");
        }
    }

    // A geometric progression squares to the minimum possible size 2s - 1,
    // far below the 3s - 2 line that non-commuting sets must reach.
    let g = fm.parse("ab")?;
    for s in [2u32, 4, 8] {
        let set = FiniteSubset::new(&fm, powers(&fm, &g, s));
        let sq = square(&fm, &set)?;
        println!("powers of ab, s = {s}: |S^2| = {} (minimum 2s-1 = {})", sq.len(), 2 * s - 1);
    }
    Ok(())
}

//! Centralizers and normalizers of word sets, computed against a finite
//! universe. In cancellative commutative-or-free settings the two agree;
//! the report records any element where they split.
//!
//! Run with: cargo run --example centralizer_normalizer

use ordsemi::commute::{centralizer, check_normalizer_equals_centralizer, normalizer};
use ordsemi::instances::FreeMonoid;
use ordsemi::sets::UniverseSpec;
use ordsemi::{FiniteSubset, Result, Semigroup};

fn main() -> Result<()> {
    let fm = FreeMonoid::new(2)?;
    let universe = fm.universe(&UniverseSpec::Words { max_len: 3 }, 0)?;
    println!("universe: all {} words of length <= 3", universe.len());

    for texts in [vec!["ab"], vec!["a", "aa"], vec!["a", "b"]] {
        let set = FiniteSubset::new(
            &fm,
            texts.iter().map(|t| fm.parse(t)).collect::<Result<Vec<_>>>()?,
        );
        let cent = centralizer(&fm, &set, &universe)?;
        let norm = normalizer(&fm, &set, &universe)?;
        println!("S = {:?}", set.render_all(&fm));
        println!("    centralizer: {:?}", cent.render_all(&fm));
        println!("    normalizer:  {:?}", norm.render_all(&fm));

        let report = check_normalizer_equals_centralizer(&fm, &set, &universe)?;
        println!(
            "    agree on all {} universe elements: {}",
            report.trials,
            report.failures == 0
        );
    }
    Ok(())
}

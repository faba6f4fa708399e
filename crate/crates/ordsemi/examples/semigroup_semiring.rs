//! Finitely supported maps from words to non-negative rationals form a
//! semiring: pointwise addition, convolution product. Comparing two maps
//! at the shortlex-least point where they disagree yields a linear order
//! compatible with both operations.
//!
//! Run with: cargo run --example semigroup_semiring

use ordsemi::instances::semiring::SemigroupSemiring;
use ordsemi::instances::{FreeMonoid, NonNegRationals};
use ordsemi::rat::rational;
use ordsemi::{ordering_label, Result, Semigroup, Semiring};

fn main() -> Result<()> {
    let poly = SemigroupSemiring::new(NonNegRationals, FreeMonoid::new(2)?);

    let f = poly.parse(r#"[["a", "2"]]"#)?;
    let g = poly.parse(r#"[["a", "1"], ["b", "1"]]"#)?;
    println!("f = {}", poly.render(&f));
    println!("g = {}", poly.render(&g));
    // Both are supported at "a"; f holds 2 there, g holds 1, so f > g
    // no matter what g carries further out.
    println!("f vs g: {}", ordering_label(poly.compare(&f, &g)));

    let sum = poly.add(&f, &g);
    let prod = poly.op(&f, &g);
    println!("f + g = {}", poly.render(&sum));
    println!("f * g = {}", poly.render(&prod));

    // Convolution distributes over addition, exactly.
    let h = poly.from_terms(vec![
        (poly.base().parse("")?, rational(1, 3)),
        (poly.base().parse("ba")?, rational(5, 2)),
    ]);
    let lhs = poly.op(&h, &sum);
    let rhs = poly.add(&poly.op(&h, &f), &poly.op(&h, &g));
    assert_eq!(lhs, rhs);
    println!("h * (f + g) = h*f + h*g = {}", poly.render(&lhs));
    Ok(())
}

//! Instance abstraction: a carrier with a total binary operation and a total
//! order, both supplied by the instance value rather than by the element type.
//!
//! `compare` returns `Ordering::Equal` exactly on canonically equal elements,
//! so `==` on elements and `compare` never disagree. The spelling used in
//! reports is LT / EQ / GT for `Less` / `Equal` / `Greater`.

use std::cmp::Ordering;

use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::sets::{Universe, UniverseSpec};

pub trait Semigroup {
    type Elem: Clone + Eq + std::fmt::Debug;

    /// Identifier used in reports, e.g. `free_monoid(2)`.
    fn name(&self) -> String;

    /// The semigroup operation. Total on the carrier.
    fn op(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    /// Total-order comparator. `Equal` iff the elements are canonically equal.
    fn compare(&self, x: &Self::Elem, y: &Self::Elem) -> Ordering;

    /// Whether the instance claims strict order compatibility: for plain
    /// semigroups, `x < y` implies `xz < yz` and `zx < zy`; for semiring
    /// instances, the additive version plus the multiplicative one under
    /// `zero < z`. Claims are checked by the law suites, not assumed.
    fn linearly_ordered(&self) -> bool;

    /// Canonical text form. `parse` inverts it on every canonical rendering.
    fn render(&self, x: &Self::Elem) -> String;

    /// Parses the instance's element syntax, validating carrier membership.
    fn parse(&self, text: &str) -> Result<Self::Elem>;

    /// Materializes a finite sample of the carrier from a recipe.
    fn universe(&self, spec: &UniverseSpec, seed: u64) -> Result<Universe<Self::Elem>>;
}

/// Semiring mode: a second, additive operation with a neutral element that
/// annihilates under `op`. `op` plays the multiplication.
pub trait Semiring: Semigroup {
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
}

/// Seeded random elements. The generator is pinned to ChaCha8 so identical
/// seeds reproduce identical streams across platforms and releases.
pub trait Sample: Semigroup {
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
}

/// `a` to the `n`-th power under the instance operation, `n >= 1`.
pub fn power<I: Semigroup + ?Sized>(inst: &I, a: &I::Elem, n: u32) -> I::Elem {
    assert!(n >= 1, "power requires n >= 1");
    let mut acc = a.clone();
    for _ in 1..n {
        acc = inst.op(&acc, a);
    }
    acc
}

/// Successive powers `a^1 .. a^n` in order.
pub fn powers<I: Semigroup + ?Sized>(inst: &I, a: &I::Elem, n: u32) -> Vec<I::Elem> {
    assert!(n >= 1, "powers requires n >= 1");
    let mut out = Vec::with_capacity(n as usize);
    out.push(a.clone());
    for _ in 1..n {
        let next = inst.op(out.last().unwrap(), a);
        out.push(next);
    }
    out
}

/// Report spelling of a comparison result.
pub fn ordering_label(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

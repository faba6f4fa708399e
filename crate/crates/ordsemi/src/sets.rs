//! Finite element sets stored sorted under the owning instance's comparator.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{Sample, Semigroup};

/// A finite subset of one instance's carrier. Elements are kept sorted by the
/// instance comparator and deduplicated under canonical equality, so equality
/// of subsets is plain structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSubset<E> {
    elems: Vec<E>,
}

impl<E: Clone + Eq + std::fmt::Debug> FiniteSubset<E> {
    pub fn new<I>(inst: &I, mut elems: Vec<E>) -> Self
    where
        I: Semigroup<Elem = E> + ?Sized,
    {
        elems.sort_by(|a, b| inst.compare(a, b));
        elems.dedup();
        FiniteSubset { elems }
    }

    /// Wraps a vector already sorted and deduplicated under the comparator.
    pub(crate) fn from_sorted(elems: Vec<E>) -> Self {
        FiniteSubset { elems }
    }

    pub fn singleton(e: E) -> Self {
        FiniteSubset { elems: vec![e] }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, E> {
        self.elems.iter()
    }

    pub fn elements(&self) -> &[E] {
        &self.elems
    }

    pub fn contains<I>(&self, inst: &I, e: &E) -> bool
    where
        I: Semigroup<Elem = E> + ?Sized,
    {
        self.elems.binary_search_by(|x| inst.compare(x, e)).is_ok()
    }

    pub fn union<I>(&self, inst: &I, other: &Self) -> Self
    where
        I: Semigroup<Elem = E> + ?Sized,
    {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.elems.len() && j < other.elems.len() {
            match inst.compare(&self.elems[i], &other.elems[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.elems[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.elems[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.elems[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.elems[i..]);
        out.extend_from_slice(&other.elems[j..]);
        FiniteSubset { elems: out }
    }

    pub fn intersection<I>(&self, inst: &I, other: &Self) -> Self
    where
        I: Semigroup<Elem = E> + ?Sized,
    {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.elems.len() && j < other.elems.len() {
            match inst.compare(&self.elems[i], &other.elems[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.elems[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        FiniteSubset { elems: out }
    }

    pub fn is_subset_of<I>(&self, inst: &I, other: &Self) -> bool
    where
        I: Semigroup<Elem = E> + ?Sized,
    {
        self.elems.iter().all(|e| other.contains(inst, e))
    }

    pub fn render_all<I>(&self, inst: &I) -> Vec<String>
    where
        I: Semigroup<Elem = E> + ?Sized,
    {
        self.elems.iter().map(|e| inst.render(e)).collect()
    }
}

impl<'a, E> IntoIterator for &'a FiniteSubset<E> {
    type Item = &'a E;
    type IntoIter = std::slice::Iter<'a, E>;
    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

/// Recipe for materializing a universe; which kinds an instance accepts is up
/// to the instance (`Words` for word instances, `Range` for additive naturals,
/// `Sampled` wherever seeded sampling is available, `Carrier` for finite ones).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum UniverseSpec {
    /// Every word of length at most `max_len`, in order.
    Words { max_len: usize },
    /// The integers `1..=max`.
    Range { max: u64 },
    /// `count` distinct seeded-random elements.
    Sampled { count: usize },
    /// The whole carrier of a finite instance.
    Carrier,
}

impl UniverseSpec {
    pub fn recipe(&self) -> String {
        match self {
            UniverseSpec::Words { max_len } => format!("words(max_len={max_len})"),
            UniverseSpec::Range { max } => format!("range(1..={max})"),
            UniverseSpec::Sampled { count } => format!("sampled(count={count})"),
            UniverseSpec::Carrier => "carrier".to_string(),
        }
    }
}

/// A materialized search universe: a recipe string plus its elements, sorted
/// and deduplicated like a `FiniteSubset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe<E> {
    pub recipe: String,
    elems: Vec<E>,
}

impl<E: Clone + Eq + std::fmt::Debug> Universe<E> {
    pub fn from_elements<I>(inst: &I, recipe: impl Into<String>, elems: Vec<E>) -> Result<Self>
    where
        I: Semigroup<Elem = E> + ?Sized,
    {
        let set = FiniteSubset::new(inst, elems);
        if set.is_empty() {
            return Err(Error::Instance("empty universe".into()));
        }
        Ok(Universe { recipe: recipe.into(), elems: set.elems })
    }

    /// Draws until `count` distinct elements are collected (or the draw
    /// budget of `16 * count` attempts runs out, for tiny carriers).
    pub fn sampled<I>(inst: &I, count: usize, seed: u64) -> Result<Self>
    where
        I: Sample<Elem = E> + ?Sized,
    {
        use rand::SeedableRng;
        if count == 0 {
            return Err(Error::Instance("sampled universe needs count >= 1".into()));
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut seen: Vec<E> = Vec::with_capacity(count);
        let mut attempts = 0usize;
        while seen.len() < count && attempts < count.saturating_mul(16) {
            attempts += 1;
            let e = inst.sample(&mut rng);
            if !seen.contains(&e) {
                seen.push(e);
            }
        }
        Universe::from_elements(inst, format!("sampled(count={count},seed={seed})"), seen)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, E> {
        self.elems.iter()
    }

    pub fn as_subset(&self) -> FiniteSubset<E> {
        FiniteSubset { elems: self.elems.clone() }
    }
}

//! Finitely supported maps from a base semigroup into a coefficient
//! semiring, with pointwise addition and convolution product. Ordered by the
//! coefficient comparison at the least base point where two maps disagree.
//!
//! With the free monoid as base this is the semiring of noncommutative
//! polynomials; instances nest, so polynomial semirings arise by composition.

use std::cmp::Ordering;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::semigroup::{Sample, Semigroup, Semiring};
use crate::sets::{Universe, UniverseSpec};

/// A finitely supported map: pairs (base point, nonzero coefficient), keys
/// strictly increasing in the base order. The empty map is the zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSuppMap<W, C> {
    terms: Vec<(W, C)>,
}

impl<W, C> FinSuppMap<W, C> {
    pub fn zero_map() -> Self {
        FinSuppMap { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(W, C)] {
        &self.terms
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct SemigroupSemiring<K, A> {
    scalars: K,
    base: A,
}

impl<K: Semiring, A: Semigroup> SemigroupSemiring<K, A> {
    pub fn new(scalars: K, base: A) -> Self {
        SemigroupSemiring { scalars, base }
    }

    pub fn scalars(&self) -> &K {
        &self.scalars
    }

    pub fn base(&self) -> &A {
        &self.base
    }

    /// Sorts by base order, merges equal keys additively, drops zeros.
    pub fn from_terms(
        &self,
        terms: Vec<(A::Elem, K::Elem)>,
    ) -> FinSuppMap<A::Elem, K::Elem> {
        let mut terms = terms;
        terms.sort_by(|(x, _), (y, _)| self.base.compare(x, y));
        let zero = self.scalars.zero();
        let mut out: Vec<(A::Elem, K::Elem)> = Vec::with_capacity(terms.len());
        for (key, coeff) in terms {
            match out.last_mut() {
                Some((last, acc)) if *last == key => {
                    *acc = self.scalars.add(acc, &coeff);
                }
                _ => out.push((key, coeff)),
            }
        }
        out.retain(|(_, c)| *c != zero);
        FinSuppMap { terms: out }
    }

    pub fn monomial(&self, key: A::Elem, coeff: K::Elem) -> FinSuppMap<A::Elem, K::Elem> {
        self.from_terms(vec![(key, coeff)])
    }
}

impl<K: Semiring, A: Semigroup> Semigroup for SemigroupSemiring<K, A> {
    type Elem = FinSuppMap<A::Elem, K::Elem>;

    fn name(&self) -> String {
        format!("semigroup_semiring({}, {})", self.scalars.name(), self.base.name())
    }

    /// Convolution: coefficients of all factorizations of each base point
    /// are summed.
    fn op(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        let mut terms = Vec::with_capacity(f.terms.len() * g.terms.len());
        for (b, fb) in &f.terms {
            for (c, gc) in &g.terms {
                terms.push((self.base.op(b, c), self.scalars.op(fb, gc)));
            }
        }
        self.from_terms(terms)
    }

    /// Walks both supports in base order; the first point with differing
    /// coefficients (absent = zero) decides, by the scalar order.
    fn compare(&self, f: &Self::Elem, g: &Self::Elem) -> Ordering {
        let zero = self.scalars.zero();
        let (mut i, mut j) = (0, 0);
        loop {
            match (f.terms.get(i), g.terms.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, fc)), None) => return self.scalars.compare(fc, &zero),
                (None, Some((_, gc))) => return self.scalars.compare(&zero, gc),
                (Some((fk, fc)), Some((gk, gc))) => match self.base.compare(fk, gk) {
                    Ordering::Equal => match self.scalars.compare(fc, gc) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        decided => return decided,
                    },
                    Ordering::Less => return self.scalars.compare(fc, &zero),
                    Ordering::Greater => return self.scalars.compare(&zero, gc),
                },
            }
        }
    }

    fn linearly_ordered(&self) -> bool {
        self.scalars.linearly_ordered() && self.base.linearly_ordered()
    }

    fn render(&self, f: &Self::Elem) -> String {
        let pairs: Vec<(String, String)> = f
            .terms
            .iter()
            .map(|(k, c)| (self.base.render(k), self.scalars.render(c)))
            .collect();
        serde_json::to_string(&pairs).expect("string pairs serialize")
    }

    fn parse(&self, text: &str) -> Result<Self::Elem> {
        let value: Value = serde_json::from_str(text).map_err(|e| {
            Error::syntax(
                e.column().saturating_sub(1),
                format!("map must be a JSON array of [point, coefficient] pairs: {e}"),
            )
        })?;
        let pairs = value
            .as_array()
            .ok_or_else(|| Error::Value("expected an array of [point, coefficient] pairs".into()))?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (idx, pair) in pairs.iter().enumerate() {
            let entry = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Value(format!("pair {idx} must be [point, coefficient]")))?;
            let key_text = entry[0]
                .as_str()
                .ok_or_else(|| Error::Value(format!("pair {idx}: point must be a string")))?;
            let coeff_text = match &entry[1] {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.as_i64().is_some() => n.to_string(),
                other => {
                    return Err(Error::Value(format!(
                        "pair {idx}: coefficient must be an exact rational, got {other}"
                    )))
                }
            };
            terms.push((self.base.parse(key_text)?, self.scalars.parse(&coeff_text)?));
        }
        Ok(self.from_terms(terms))
    }

    /// Compositions cannot promise sampling for arbitrary scalar/base pairs;
    /// when both halves sample, build universes with `Universe::sampled`.
    fn universe(&self, spec: &UniverseSpec, _seed: u64) -> Result<Universe<Self::Elem>> {
        Err(Error::Config(format!(
            "universe {:?} is not available on {}; sample explicitly instead",
            spec.recipe(),
            self.name()
        )))
    }
}

impl<K: Semiring, A: Semigroup> Semiring for SemigroupSemiring<K, A> {
    fn add(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        let mut terms = Vec::with_capacity(f.terms.len() + g.terms.len());
        terms.extend(f.terms.iter().cloned());
        terms.extend(g.terms.iter().cloned());
        self.from_terms(terms)
    }

    fn zero(&self) -> Self::Elem {
        FinSuppMap::zero_map()
    }
}

impl<K, A> Sample for SemigroupSemiring<K, A>
where
    K: Semiring + Sample,
    A: Semigroup + Sample,
{
    /// Support of 1..=4 distinct base points, nonzero sampled coefficients.
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem {
        let want = rng.gen_range(1..=4usize);
        let zero = self.scalars.zero();
        let mut terms: Vec<(A::Elem, K::Elem)> = Vec::with_capacity(want);
        let mut attempts = 0;
        while terms.len() < want && attempts < 64 {
            attempts += 1;
            let key = self.base.sample(rng);
            if terms.iter().any(|(k, _)| *k == key) {
                continue;
            }
            let mut coeff = self.scalars.sample(rng);
            let mut tries = 0;
            while coeff == zero && tries < 16 {
                coeff = self.scalars.sample(rng);
                tries += 1;
            }
            if coeff != zero {
                terms.push((key, coeff));
            }
        }
        self.from_terms(terms)
    }
}

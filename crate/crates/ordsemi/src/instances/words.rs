//! Free monoid on a finite alphabet, ordered by shortlex: shorter words
//! first, ties broken lexicographically by symbol index. The empty word is
//! the identity and the least element.

use std::cmp::Ordering;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::semigroup::{Sample, Semigroup};
use crate::sets::{Universe, UniverseSpec};

/// A word as a sequence of symbol indices. Indices render as 'a', 'b', ...
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Shortlex. Independent of any alphabet bound: indices order themselves.
pub fn shortlex(x: &Word, y: &Word) -> Ordering {
    x.0.len().cmp(&y.0.len()).then_with(|| x.0.cmp(&y.0))
}

const MAX_ALPHABET: usize = 26;

#[derive(Debug, Clone)]
pub struct FreeMonoid {
    alphabet_size: usize,
}

impl FreeMonoid {
    /// `alphabet_size` between 1 and 26 (symbols render as lowercase letters).
    pub fn new(alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::Instance("alphabet size must be at least 1".into()));
        }
        if alphabet_size > MAX_ALPHABET {
            return Err(Error::Instance(format!(
                "alphabet size {alphabet_size} exceeds the rendering limit of {MAX_ALPHABET}"
            )));
        }
        Ok(FreeMonoid { alphabet_size })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// Convenience for tests and examples: parse or panic.
    pub fn word(&self, text: &str) -> Word {
        self.parse(text).expect("valid word literal")
    }

    /// All words of length <= `max_len`, in shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.alphabet_size);
            for w in &layer {
                for s in 0..self.alphabet_size as u8 {
                    let mut v = w.clone();
                    v.push(s);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned().map(Word));
            layer = next;
        }
        out
    }
}

impl Semigroup for FreeMonoid {
    type Elem = Word;

    fn name(&self) -> String {
        format!("free_monoid({})", self.alphabet_size)
    }

    fn op(&self, x: &Word, y: &Word) -> Word {
        let mut v = Vec::with_capacity(x.0.len() + y.0.len());
        v.extend_from_slice(&x.0);
        v.extend_from_slice(&y.0);
        Word(v)
    }

    fn compare(&self, x: &Word, y: &Word) -> Ordering {
        shortlex(x, y)
    }

    fn linearly_ordered(&self) -> bool {
        true
    }

    fn render(&self, x: &Word) -> String {
        x.0.iter().map(|&s| (b'a' + s) as char).collect()
    }

    fn parse(&self, text: &str) -> Result<Word> {
        let t = text.trim();
        if t.is_empty() || t == "\u{03b5}" {
            return Ok(Word::empty());
        }
        let mut v = Vec::with_capacity(t.len());
        for (pos, c) in t.char_indices() {
            if !c.is_ascii_lowercase() {
                return Err(Error::syntax(pos, format!("expected a letter, found {c:?}")));
            }
            let idx = (c as u8) - b'a';
            if idx as usize >= self.alphabet_size {
                return Err(Error::Value(format!(
                    "symbol {c:?} is outside the {}-letter alphabet",
                    self.alphabet_size
                )));
            }
            v.push(idx);
        }
        Ok(Word(v))
    }

    fn universe(&self, spec: &UniverseSpec, seed: u64) -> Result<Universe<Word>> {
        match spec {
            UniverseSpec::Words { max_len } => {
                Universe::from_elements(self, spec.recipe(), self.words_up_to(*max_len))
            }
            UniverseSpec::Sampled { count } => Universe::sampled(self, *count, seed),
            other => Err(Error::Config(format!(
                "universe {:?} is not available on {}",
                other.recipe(),
                self.name()
            ))),
        }
    }
}

impl Sample for FreeMonoid {
    /// Geometric-tapered length, at most 6: each extra symbol appears with
    /// probability 1/2. Symbols are uniform.
    fn sample(&self, rng: &mut ChaCha8Rng) -> Word {
        let mut v = Vec::new();
        while v.len() < 6 && rng.gen_bool(0.5) {
            v.push(rng.gen_range(0..self.alphabet_size as u8));
        }
        Word(v)
    }
}

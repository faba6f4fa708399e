//! Numeric instances: positive integers under addition (the abelian
//! baseline) and nonnegative rationals as a linearly ordered semiring.

use std::cmp::Ordering;

use num::rational::BigRational;
use num::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rat::{is_nonnegative, parse_rational, rational, render_rational};
use crate::semigroup::{Sample, Semigroup, Semiring};
use crate::sets::{Universe, UniverseSpec};

/// Positive integers with addition and the usual order.
#[derive(Debug, Clone)]
pub struct NatAdd;

impl Semigroup for NatAdd {
    type Elem = u64;

    fn name(&self) -> String {
        "nat_add".to_string()
    }

    fn op(&self, x: &u64, y: &u64) -> u64 {
        x.checked_add(*y).expect("sum exceeds u64")
    }

    fn compare(&self, x: &u64, y: &u64) -> Ordering {
        x.cmp(y)
    }

    fn linearly_ordered(&self) -> bool {
        true
    }

    fn render(&self, x: &u64) -> String {
        x.to_string()
    }

    fn parse(&self, text: &str) -> Result<u64> {
        let t = text.trim();
        let n: u64 = t
            .parse()
            .map_err(|_| Error::syntax(0, format!("not a positive integer: {t:?}")))?;
        if n == 0 {
            return Err(Error::Value("0 is not in the carrier; use integers >= 1".into()));
        }
        Ok(n)
    }

    fn universe(&self, spec: &UniverseSpec, seed: u64) -> Result<Universe<u64>> {
        match spec {
            UniverseSpec::Range { max } => {
                if *max == 0 {
                    return Err(Error::Config("range universe needs max >= 1".into()));
                }
                Universe::from_elements(self, spec.recipe(), (1..=*max).collect())
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

impl Sample for NatAdd {
    fn sample(&self, rng: &mut ChaCha8Rng) -> u64 {
        rng.gen_range(1..=9)
    }
}

/// Nonnegative rationals: `op` is multiplication, `add` addition, order the
/// usual one. A linearly ordered semiring (multiplication is strictly
/// monotone only above zero, which is exactly the semiring order axiom).
#[derive(Debug, Clone)]
pub struct NonNegRationals;

impl Semigroup for NonNegRationals {
    type Elem = BigRational;

    fn name(&self) -> String {
        "nonneg_rationals".to_string()
    }

    fn op(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }

    fn compare(&self, x: &BigRational, y: &BigRational) -> Ordering {
        x.cmp(y)
    }

    fn linearly_ordered(&self) -> bool {
        true
    }

    fn render(&self, x: &BigRational) -> String {
        render_rational(x)
    }

    fn parse(&self, text: &str) -> Result<BigRational> {
        let r = parse_rational(text)?;
        if !is_nonnegative(&r) {
            return Err(Error::Value(format!(
                "{} is negative; the carrier is the nonnegative rationals",
                render_rational(&r)
            )));
        }
        Ok(r)
    }

    fn universe(&self, spec: &UniverseSpec, seed: u64) -> Result<Universe<BigRational>> {
        match spec {
            UniverseSpec::Sampled { count } => Universe::sampled(self, *count, seed),
            other => Err(Error::Config(format!(
                "universe {:?} is not available on {}",
                other.recipe(),
                self.name()
            ))),
        }
    }
}

impl Semiring for NonNegRationals {
    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
}

impl Sample for NonNegRationals {
    /// Positive p/q with p, q uniform in 1..=9. Zero enters law checks via
    /// `zero()`, not via sampling.
    fn sample(&self, rng: &mut ChaCha8Rng) -> BigRational {
        rational(rng.gen_range(1..=9), rng.gen_range(1..=9))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::FiniteSubset;

    #[test]
    fn nat_add_basics() {
        let n = NatAdd;
        assert_eq!(n.op(&2, &3), 5);
        assert_eq!(n.compare(&2, &3), Ordering::Less);
        assert_eq!(n.parse("12").unwrap(), 12);
        assert!(n.parse("0").is_err());
        assert!(n.parse("-3").is_err());
        assert!(n.parse("x").is_err());
        let u = n.universe(&UniverseSpec::Range { max: 12 }, 0).unwrap();
        assert_eq!(u.elements(), (1..=12).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn nat_add_product_set_oracle() {
        // {1,2,3} + {1,2,3} enumerated independently.
        let n = NatAdd;
        let s = FiniteSubset::new(&n, vec![1, 2, 3]);
        let mut sums = std::collections::BTreeSet::new();
        for a in &s {
            for b in &s {
                sums.insert(a + b);
            }
        }
        assert_eq!(sums.into_iter().collect::<Vec<_>>(), vec![2, 3, 4, 5, 6]);
    }

    #[test]
    fn rational_semiring_basics() {
        let q = NonNegRationals;
        assert_eq!(q.op(&rational(2, 3), &rational(3, 4)), rational(1, 2));
        assert_eq!(q.add(&rational(1, 6), &rational(1, 3)), rational(1, 2));
        assert_eq!(q.compare(&q.zero(), &rational(1, 9)), Ordering::Less);
        assert!(q.parse("-1/2").is_err());
        assert_eq!(q.parse("4/6").unwrap(), rational(2, 3));
    }
}

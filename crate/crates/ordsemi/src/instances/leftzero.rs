//! Left-zero semigroup: `x * y = x` on a finite labeled carrier. An order
//! exists (any fixed one), and left translation even respects it, but right
//! translation cannot: `c*a = c = c*b`. The instance is therefore flagged as
//! not linearly ordered and doubles as the stock cancellativity failure.

use std::cmp::Ordering;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::semigroup::{Sample, Semigroup};
use crate::sets::{Universe, UniverseSpec};

#[derive(Debug, Clone)]
pub struct LeftZero {
    carrier: Vec<String>,
}

impl LeftZero {
    /// Labels in the given order; that order is the instance's fixed total
    /// order. Labels must be distinct and nonempty.
    pub fn new(carrier: Vec<String>) -> Result<Self> {
        if carrier.is_empty() {
            return Err(Error::Instance("carrier must be nonempty".into()));
        }
        for (i, label) in carrier.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::Instance(format!("label {i} is empty")));
            }
            if carrier[..i].contains(label) {
                return Err(Error::Instance(format!("duplicate label {label:?}")));
            }
        }
        Ok(LeftZero { carrier })
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    fn position(&self, x: &str) -> usize {
        self.carrier
            .iter()
            .position(|l| l == x)
            .expect("element belongs to the carrier")
    }
}

impl Semigroup for LeftZero {
    type Elem = String;

    fn name(&self) -> String {
        format!("left_zero({})", self.carrier.join(","))
    }

    fn op(&self, x: &String, _y: &String) -> String {
        x.clone()
    }

    fn compare(&self, x: &String, y: &String) -> Ordering {
        self.position(x).cmp(&self.position(y))
    }

    fn linearly_ordered(&self) -> bool {
        false
    }

    fn render(&self, x: &String) -> String {
        x.clone()
    }

    fn parse(&self, text: &str) -> Result<String> {
        let t = text.trim();
        if self.carrier.iter().any(|l| l == t) {
            Ok(t.to_string())
        } else {
            Err(Error::Value(format!(
                "{t:?} is not in the carrier {{{}}}",
                self.carrier.join(",")
            )))
        }
    }

    fn universe(&self, spec: &UniverseSpec, seed: u64) -> Result<Universe<String>> {
        match spec {
            UniverseSpec::Carrier => {
                Universe::from_elements(self, spec.recipe(), self.carrier.clone())
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

impl Sample for LeftZero {
    fn sample(&self, rng: &mut ChaCha8Rng) -> String {
        self.carrier[rng.gen_range(0..self.carrier.len())].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::{check_cancellativity, check_order_laws, LawCheckOptions, LawMode};

    fn pq() -> LeftZero {
        LeftZero::new(vec!["p".into(), "q".into()]).unwrap()
    }

    #[test]
    fn op_keeps_the_left_factor() {
        let lz = pq();
        let (p, q) = ("p".to_string(), "q".to_string());
        assert_eq!(lz.op(&p, &q), p);
        assert_eq!(lz.op(&q, &p), q);
        assert_eq!(lz.compare(&p, &q), Ordering::Less);
    }

    #[test]
    fn construction_rejects_bad_carriers() {
        assert!(LeftZero::new(vec![]).is_err());
        assert!(LeftZero::new(vec!["p".into(), "p".into()]).is_err());
        assert!(LeftZero::new(vec!["".into()]).is_err());
    }

    #[test]
    fn right_translation_fails_for_any_order() {
        let lz = pq();
        let sample: Vec<String> = lz.carrier().to_vec();
        let report =
            check_order_laws(&lz, &sample, LawMode::Translation, &LawCheckOptions::default())
                .unwrap();
        assert!(report.failures > 0);
        assert!(!report.applicable);
        // Left translation alone is fine: p < q gives pc = p < q = qc.
        // The combined law fails on the right side with witness (p, q, c).
        let w = report.witness.unwrap();
        assert_eq!(w, vec!["p", "q", "p"]);
    }

    #[test]
    fn cancellativity_fails_with_least_witness() {
        let lz = pq();
        let sample: Vec<String> = lz.carrier().to_vec();
        let report = check_cancellativity(&lz, &sample, &LawCheckOptions::default()).unwrap();
        assert_eq!(report.failures, 2);
        assert_eq!(
            report.witness.unwrap(),
            vec!["p", "p", "q", "left"],
            "p*p = p = p*q collapses distinct arguments"
        );
    }

    #[test]
    fn parse_checks_membership() {
        let lz = pq();
        assert_eq!(lz.parse("q").unwrap(), "q");
        assert!(lz.parse("r").is_err());
    }
}

//! Commutation machinery: centralizers and normalizers over a finite
//! universe, the translate bound for non-central elements, interleaving
//! chains, power-commutation scans, and periodicity records.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laws::LawReport;
use crate::products::BoundCheck;
use crate::semigroup::{powers, Semigroup};
use crate::sets::{FiniteSubset, Universe};

pub fn commutes<I: Semigroup>(inst: &I, x: &I::Elem, y: &I::Elem) -> bool {
    inst.op(x, y) == inst.op(y, x)
}

/// First non-commuting pair in sorted order, if any.
pub fn find_noncommuting_pair<'a, I: Semigroup>(
    inst: &I,
    elems: &'a [I::Elem],
) -> Option<(&'a I::Elem, &'a I::Elem)> {
    for (i, x) in elems.iter().enumerate() {
        for y in &elems[i + 1..] {
            if !commutes(inst, x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn pairwise_commuting<I: Semigroup>(inst: &I, elems: &[I::Elem]) -> bool {
    find_noncommuting_pair(inst, elems).is_none()
}

/// Elements of the universe commuting with every element of `s`.
pub fn centralizer<I: Semigroup>(
    inst: &I,
    s: &FiniteSubset<I::Elem>,
    universe: &Universe<I::Elem>,
) -> Result<FiniteSubset<I::Elem>> {
    if s.is_empty() {
        return Err(Error::EmptySet(0));
    }
    let picked = universe
        .iter()
        .filter(|u| s.iter().all(|x| commutes(inst, u, x)))
        .cloned()
        .collect();
    Ok(FiniteSubset::new(inst, picked))
}

/// Elements `u` of the universe with `uS = Su` as sets.
pub fn normalizer<I: Semigroup>(
    inst: &I,
    s: &FiniteSubset<I::Elem>,
    universe: &Universe<I::Elem>,
) -> Result<FiniteSubset<I::Elem>> {
    if s.is_empty() {
        return Err(Error::EmptySet(0));
    }
    let picked = universe
        .iter()
        .filter(|u| {
            let us = FiniteSubset::new(inst, s.iter().map(|x| inst.op(u, x)).collect());
            let su = FiniteSubset::new(inst, s.iter().map(|x| inst.op(x, u)).collect());
            us == su
        })
        .cloned()
        .collect();
    Ok(FiniteSubset::new(inst, picked))
}

/// On a linearly ordered instance the two sets agree; each universe element
/// is one trial, and any membership difference is a failure. On instances
/// not claiming a linear order the report is marked not applicable.
pub fn check_normalizer_equals_centralizer<I: Semigroup>(
    inst: &I,
    s: &FiniteSubset<I::Elem>,
    universe: &Universe<I::Elem>,
) -> Result<LawReport> {
    let cent = centralizer(inst, s, universe)?;
    let norm = normalizer(inst, s, universe)?;
    let mut report = LawReport::new("normalizer_equals_centralizer");
    report.applicable = inst.linearly_ordered();
    for u in universe.iter() {
        report.trials += 1;
        let in_c = cent.contains(inst, u);
        let in_n = norm.contains(inst, u);
        if in_c != in_n {
            let side = if in_n { "normalizer_only" } else { "centralizer_only" };
            report.fail(vec![inst.render(u), side.to_string()]);
        }
    }
    Ok(report)
}

/// For `y` not centralizing `s`: `|yS ∪ Sy| >= |S| + 1`.
pub fn ys_sy_bound<I: Semigroup>(
    inst: &I,
    s: &FiniteSubset<I::Elem>,
    y: &I::Elem,
) -> Result<BoundCheck> {
    if s.is_empty() {
        return Err(Error::EmptySet(0));
    }
    if s.iter().all(|x| commutes(inst, y, x)) {
        return Err(Error::Precondition(format!(
            "{} centralizes the set; the bound needs a non-central element",
            inst.render(y)
        )));
    }
    let ys = FiniteSubset::new(inst, s.iter().map(|x| inst.op(y, x)).collect());
    let sy = FiniteSubset::new(inst, s.iter().map(|x| inst.op(x, y)).collect());
    let actual = ys.union(inst, &sy).len();
    let bound = s.len() + 1;
    Ok(BoundCheck { bound, actual, holds: actual >= bound })
}

/// The interleaving chain `a^n b, a^(n-1) b a, ..., a b a^(n-1), b a^n`
/// (n + 1 elements) built from a pair with `ab < ba`.
#[derive(Debug, Clone)]
pub struct NeumannChain<E> {
    pub chain: Vec<E>,
    pub strictly_increasing: bool,
}

pub fn neumann_chain<I: Semigroup>(
    inst: &I,
    a: &I::Elem,
    b: &I::Elem,
    n: u32,
) -> Result<NeumannChain<I::Elem>> {
    if n < 1 {
        return Err(Error::Precondition("chain depth must be at least 1".into()));
    }
    let ab = inst.op(a, b);
    let ba = inst.op(b, a);
    if inst.compare(&ab, &ba) != Ordering::Less {
        return Err(Error::Precondition(format!(
            "need ab < ba, got {} vs {}",
            inst.render(&ab),
            inst.render(&ba)
        )));
    }
    let apow = powers(inst, a, n);
    let n = n as usize;
    let mut chain = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let elem = if i == 0 {
            inst.op(&apow[n - 1], b)
        } else if i == n {
            inst.op(b, &apow[n - 1])
        } else {
            inst.op(&inst.op(&apow[n - i - 1], b), &apow[i - 1])
        };
        chain.push(elem);
    }
    let strictly_increasing = chain
        .windows(2)
        .all(|w| inst.compare(&w[0], &w[1]) == Ordering::Less);
    Ok(NeumannChain { chain, strictly_increasing })
}

/// If `ab = ba`, every `a^n b` must equal `b a^n`; if `ab != ba`, none may.
/// One trial per exponent up to `max_n`.
pub fn power_commutation_scan<I: Semigroup>(
    inst: &I,
    a: &I::Elem,
    b: &I::Elem,
    max_n: u32,
) -> Result<LawReport> {
    if max_n < 1 {
        return Err(Error::Precondition("power depth must be at least 1".into()));
    }
    let commuting = commutes(inst, a, b);
    let mut report = LawReport::new(if commuting {
        "power_commutation_commuting"
    } else {
        "power_commutation_noncommuting"
    });
    let apow = powers(inst, a, max_n);
    for (idx, an) in apow.iter().enumerate() {
        report.trials += 1;
        let lhs = inst.op(an, b);
        let rhs = inst.op(b, an);
        if (lhs == rhs) != commuting {
            report.fail(vec![
                inst.render(a),
                inst.render(b),
                format!("n={}", idx + 1),
            ]);
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PeriodicityStatus {
    /// `a^index = a^(index+period)`, both minimal.
    Periodic { index: u32, period: u32 },
    /// All powers up to the bound are pairwise distinct.
    Aperiodic { bound: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicityRecord {
    pub element: String,
    #[serde(flatten)]
    pub status: PeriodicityStatus,
}

/// Scans `a^1 .. a^max_n` for the first repeated value. The first repeat in
/// increasing exponent order yields the minimal index and its minimal period.
pub fn periodicity<I: Semigroup>(
    inst: &I,
    a: &I::Elem,
    max_n: u32,
) -> Result<PeriodicityRecord> {
    if max_n < 2 {
        return Err(Error::Precondition("periodicity scan needs max_n >= 2".into()));
    }
    let pows = powers(inst, a, max_n);
    for m in 1..pows.len() {
        for n in 0..m {
            if pows[n] == pows[m] {
                return Ok(PeriodicityRecord {
                    element: inst.render(a),
                    status: PeriodicityStatus::Periodic {
                        index: (n + 1) as u32,
                        period: (m - n) as u32,
                    },
                });
            }
        }
    }
    Ok(PeriodicityRecord {
        element: inst.render(a),
        status: PeriodicityStatus::Aperiodic { bound: max_n },
    })
}

/// For idempotent `a`, checks that `a` acts as a two-sided identity on the
/// sample. In a cancellative semigroup an idempotent can only be an identity,
/// so failures witness cancellativity breaking down.
pub fn idempotent_identity_check<I: Semigroup>(
    inst: &I,
    a: &I::Elem,
    sample: &[I::Elem],
) -> Result<LawReport> {
    if !(inst.op(a, a) == *a) {
        return Err(Error::Precondition(format!(
            "{} is not idempotent",
            inst.render(a)
        )));
    }
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let sample = FiniteSubset::new(inst, sample.to_vec());
    let mut report = LawReport::new("idempotent_identity");
    for b in &sample {
        report.trials += 1;
        if inst.op(a, b) != *b {
            report.fail(vec![inst.render(b), "left".to_string()]);
        } else if inst.op(b, a) != *b {
            report.fail(vec![inst.render(b), "right".to_string()]);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::words::FreeMonoid;
    use crate::instances::LeftZero;
    use crate::sets::UniverseSpec;

    fn fm2() -> FreeMonoid {
        FreeMonoid::new(2).unwrap()
    }

    fn words3(fm: &FreeMonoid) -> Universe<crate::instances::Word> {
        fm.universe(&UniverseSpec::Words { max_len: 3 }, 0).unwrap()
    }

    #[test]
    fn centralizer_of_a_word() {
        let fm = fm2();
        let u = fm.universe(&UniverseSpec::Words { max_len: 2 }, 0).unwrap();
        let s = FiniteSubset::singleton(fm.word("ab"));
        let c = centralizer(&fm, &s, &u).unwrap();
        assert_eq!(c.render_all(&fm), vec!["", "ab"]);
    }

    #[test]
    fn centralizer_of_everything_is_the_identity() {
        let fm = fm2();
        let u = words3(&fm);
        let c = centralizer(&fm, &u.as_subset(), &u).unwrap();
        assert_eq!(c.render_all(&fm), vec![""]);
    }

    #[test]
    fn normalizer_matches_centralizer_on_words() {
        let fm = fm2();
        let u = fm.universe(&UniverseSpec::Words { max_len: 2 }, 0).unwrap();
        let s = FiniteSubset::singleton(fm.word("ab"));
        assert_eq!(
            normalizer(&fm, &s, &u).unwrap().render_all(&fm),
            vec!["", "ab"]
        );
        let s2 = FiniteSubset::new(&fm, vec![fm.word("a"), fm.word("b")]);
        assert_eq!(normalizer(&fm, &s2, &u).unwrap().render_all(&fm), vec![""]);
        let report = check_normalizer_equals_centralizer(&fm, &s2, &u).unwrap();
        assert_eq!(report.trials, 7);
        assert_eq!(report.failures, 0);
        assert!(report.applicable);
    }

    #[test]
    fn agreement_check_is_informational_off_linear_instances() {
        // Left-zero: uS = {u} and Su = S, so both memberships reduce to
        // S = {u}; the report runs but is labeled not applicable.
        let lz = LeftZero::new(vec!["p".into(), "q".into()]).unwrap();
        let u = lz.universe(&UniverseSpec::Carrier, 0).unwrap();
        let report = check_normalizer_equals_centralizer(&lz, &u.as_subset(), &u).unwrap();
        assert!(!report.applicable);
        assert_eq!(report.failures, 0);
        let s1 = FiniteSubset::singleton("p".to_string());
        let r1 = check_normalizer_equals_centralizer(&lz, &s1, &u).unwrap();
        assert_eq!(r1.failures, 0);
        assert_eq!(r1.trials, 2);
    }

    #[test]
    fn translate_union_bound_on_words() {
        let fm = fm2();
        let s = FiniteSubset::new(&fm, vec![fm.word("a"), fm.word("aa")]);
        let check = ys_sy_bound(&fm, &s, &fm.word("b")).unwrap();
        assert_eq!(check.bound, 3);
        assert_eq!(check.actual, 4);
        assert!(check.holds);
        let single = FiniteSubset::singleton(fm.word("a"));
        let check = ys_sy_bound(&fm, &single, &fm.word("b")).unwrap();
        assert_eq!((check.bound, check.actual), (2, 2));
        // Central y is rejected.
        assert!(ys_sy_bound(&fm, &s, &fm.word("a")).is_err());
    }

    #[test]
    fn chain_on_free_monoid() {
        let fm = fm2();
        let chain = neumann_chain(&fm, &fm.word("a"), &fm.word("b"), 2).unwrap();
        let rendered: Vec<String> = chain.chain.iter().map(|w| fm.render(w)).collect();
        assert_eq!(rendered, vec!["aab", "aba", "baa"]);
        assert!(chain.strictly_increasing);
        // ba > ab, so the precondition fails in the other orientation.
        assert!(neumann_chain(&fm, &fm.word("b"), &fm.word("a"), 2).is_err());
        assert!(neumann_chain(&fm, &fm.word("a"), &fm.word("a"), 2).is_err());
    }

    #[test]
    fn power_commutation_splits_on_commuting() {
        let fm = fm2();
        let r = power_commutation_scan(&fm, &fm.word("a"), &fm.word("b"), 8).unwrap();
        assert_eq!(r.law, "power_commutation_noncommuting");
        assert_eq!((r.trials, r.failures), (8, 0));
        let r = power_commutation_scan(&fm, &fm.word("ab"), &fm.word("abab"), 8).unwrap();
        assert_eq!(r.law, "power_commutation_commuting");
        assert_eq!((r.trials, r.failures), (8, 0));
    }

    #[test]
    fn periodicity_records() {
        let fm = fm2();
        let r = periodicity(&fm, &fm.word("ab"), 10).unwrap();
        assert_eq!(r.status, PeriodicityStatus::Aperiodic { bound: 10 });
        let r = periodicity(&fm, &fm.word(""), 10).unwrap();
        assert_eq!(r.status, PeriodicityStatus::Periodic { index: 1, period: 1 });
        let lz = LeftZero::new(vec!["p".into(), "q".into()]).unwrap();
        let r = periodicity(&lz, &"p".to_string(), 10).unwrap();
        assert_eq!(r.status, PeriodicityStatus::Periodic { index: 1, period: 1 });
        assert!(periodicity(&fm, &fm.word("a"), 1).is_err());
    }

    #[test]
    fn idempotent_identity() {
        let fm = fm2();
        let sample = fm.words_up_to(2);
        let r = idempotent_identity_check(&fm, &fm.word(""), &sample).unwrap();
        assert_eq!(r.failures, 0);
        assert_eq!(r.trials, 7);
        assert!(idempotent_identity_check(&fm, &fm.word("a"), &sample).is_err());
        let lz = LeftZero::new(vec!["p".into(), "q".into()]).unwrap();
        let r = idempotent_identity_check(&lz, &"p".to_string(), &["p".to_string(), "q".to_string()])
            .unwrap();
        assert_eq!(r.failures, 1);
        assert_eq!(r.witness.unwrap(), vec!["q", "left"]);
    }
}

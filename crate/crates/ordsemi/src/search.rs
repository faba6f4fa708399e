//! Exhaustive subset scans over a finite universe, and seeded randomized law
//! suites that probe an instance with fresh samples each trial.
//!
//! Scans are deterministic even when parallel: subsets are enumerated in
//! increasing size and lexicographic index order, evaluated in chunks, and
//! folded back in enumeration order, so a report depends only on the inputs.

use std::cmp::Ordering;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::commute::{
    commutes, neumann_chain, pairwise_commuting, periodicity, power_commutation_scan,
    PeriodicityStatus,
};
use crate::error::{Error, Result};
use crate::laws::{idempotent_power_trial, powers_trial, translation_trial, LawReport};
use crate::products::product_set;
use crate::semigroup::{Sample, Semigroup, Semiring};
use crate::sets::{FiniteSubset, Universe};

/// Work limits for a scan: `product` caps pairwise products formed per set
/// square, `enumeration` caps the total number of subsets visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanCaps {
    pub product: usize,
    pub enumeration: u64,
}

impl Default for ScanCaps {
    fn default() -> Self {
        ScanCaps { product: 1_000_000, enumeration: 1_000_000 }
    }
}

/// Example lists in reports are truncated here; the counters stay exact.
const EXAMPLE_CAP: usize = 12;

/// One recorded subset, rendered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetHit {
    pub elements: Vec<String>,
    pub size: usize,
    pub square_size: usize,
}

fn hit<I: Semigroup>(inst: &I, set: &FiniteSubset<I::Elem>, square_size: usize) -> SubsetHit {
    SubsetHit { elements: set.render_all(inst), size: set.len(), square_size }
}

/// `C(n, k)`, saturating far above any enumeration cap.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn check_enumeration_cap(n: usize, kmin: usize, kmax: usize, cap: u64) -> Result<()> {
    let total: u128 = (kmin..=kmax).map(|k| binomial(n, k)).sum();
    if total > cap as u128 {
        return Err(Error::EnumerationCap { count: total, cap });
    }
    Ok(())
}

/// Enumerates all index subsets of `0..n` with sizes `kmin..=kmax`, evaluates
/// them (in parallel when `jobs != 1`), and folds the outcomes back in
/// enumeration order. Returns the number of subsets evaluated.
fn scan_in_order<T, F, G>(
    n: usize,
    kmin: usize,
    kmax: usize,
    jobs: usize,
    eval: F,
    mut fold: G,
) -> Result<u64>
where
    T: Send,
    F: Fn(&[usize]) -> Result<T> + Sync,
    G: FnMut(T) -> Result<()>,
{
    if kmin < 1 {
        return Err(Error::Config("subset sizes start at 1".into()));
    }
    if kmax < kmin {
        return Err(Error::Config(format!("empty size range {kmin}..={kmax}")));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    const CHUNK: usize = 1024;
    let mut examined = 0u64;
    for k in kmin..=kmax {
        let mut combos = (0..n).combinations(k);
        loop {
            let chunk: Vec<Vec<usize>> = combos.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let outcomes: Vec<Result<T>> = pool.install(|| {
                use rayon::prelude::*;
                chunk.par_iter().map(|ix| eval(ix)).collect()
            });
            for outcome in outcomes {
                examined += 1;
                fold(outcome?)?;
            }
        }
    }
    Ok(examined)
}

/// Result of sweeping every subset for the square-size dichotomy: a subset
/// with a non-commuting pair must have `|S^2| >= 3|S| - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremScanReport {
    pub instance: String,
    pub universe: String,
    pub universe_size: usize,
    pub kmin: usize,
    pub kmax: usize,
    pub subsets_examined: u64,
    pub commuting_skipped: u64,
    pub noncommuting_checked: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violation_examples: Vec<SubsetHit>,
    pub extremal_count: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub extremal_examples: Vec<SubsetHit>,
    pub notes: Vec<String>,
}

enum TheoremOutcome {
    Commuting,
    Ordinary,
    Extremal(SubsetHit),
    Violation(SubsetHit),
}

pub fn exhaustive_theorem_scan<I>(
    inst: &I,
    universe: &Universe<I::Elem>,
    kmin: usize,
    kmax: usize,
    caps: &ScanCaps,
    jobs: usize,
) -> Result<TheoremScanReport>
where
    I: Semigroup + Sync,
    I::Elem: Send + Sync,
{
    check_enumeration_cap(universe.len(), kmin, kmax, caps.enumeration)?;
    let elems = universe.elements();
    let eval = |ix: &[usize]| -> Result<TheoremOutcome> {
        let subset: Vec<I::Elem> = ix.iter().map(|&i| elems[i].clone()).collect();
        if pairwise_commuting(inst, &subset) {
            return Ok(TheoremOutcome::Commuting);
        }
        let k = subset.len();
        let set = FiniteSubset::from_sorted(subset);
        let square = product_set(inst, &[set.clone(), set.clone()], caps.product)?.len();
        let threshold = 3 * k - 2;
        Ok(match square.cmp(&threshold) {
            Ordering::Less => TheoremOutcome::Violation(hit(inst, &set, square)),
            Ordering::Equal => TheoremOutcome::Extremal(hit(inst, &set, square)),
            Ordering::Greater => TheoremOutcome::Ordinary,
        })
    };

    let mut report = TheoremScanReport {
        instance: inst.name(),
        universe: universe.recipe.clone(),
        universe_size: universe.len(),
        kmin,
        kmax,
        subsets_examined: 0,
        commuting_skipped: 0,
        noncommuting_checked: 0,
        violations: 0,
        violation_examples: Vec::new(),
        extremal_count: 0,
        extremal_examples: Vec::new(),
        notes: vec![
            "violation: a subset with a non-commuting pair whose square has fewer than 3k-2 \
             elements (k = subset size)"
                .to_string(),
            "extremal: a non-commuting subset whose square has exactly 3k-2 elements".to_string(),
            "subsets with all pairs commuting are counted and skipped".to_string(),
        ],
    };
    report.subsets_examined = scan_in_order(
        universe.len(),
        kmin,
        kmax,
        jobs,
        eval,
        |outcome| {
            match outcome {
                TheoremOutcome::Commuting => report.commuting_skipped += 1,
                TheoremOutcome::Ordinary => report.noncommuting_checked += 1,
                TheoremOutcome::Extremal(h) => {
                    report.noncommuting_checked += 1;
                    report.extremal_count += 1;
                    if report.extremal_examples.len() < EXAMPLE_CAP {
                        report.extremal_examples.push(h);
                    }
                }
                TheoremOutcome::Violation(h) => {
                    report.noncommuting_checked += 1;
                    report.violations += 1;
                    if report.violation_examples.len() < EXAMPLE_CAP {
                        report.violation_examples.push(h);
                    }
                }
            }
            Ok(())
        },
    )?;
    Ok(report)
}

/// A covered subset together with the first covering progression found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProgressionHit {
    pub elements: Vec<String>,
    pub size: usize,
    pub square_size: usize,
    pub base: String,
    pub ratio: String,
    pub progression_length: usize,
}

/// Result of probing commuting subsets with small squares for coverage by a
/// short progression `{a, a*b, a*b^2, ...}` built from universe elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreimanScanReport {
    pub instance: String,
    pub universe: String,
    pub universe_size: usize,
    pub kmin: usize,
    pub kmax: usize,
    pub subsets_examined: u64,
    pub noncommuting_skipped: u64,
    pub doubling_above_threshold: u64,
    pub in_hypothesis: u64,
    pub covered: u64,
    pub uncovered: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub covered_examples: Vec<ProgressionHit>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub uncovered_examples: Vec<SubsetHit>,
    pub notes: Vec<String>,
}

enum FreimanOutcome {
    Noncommuting,
    AboveThreshold,
    Covered(ProgressionHit),
    Uncovered(SubsetHit),
}

/// First `(a, b)` in universe order with `ab = ba` whose progression
/// `a, a*b, ..., a*b^(len-1)` covers the set.
fn progression_cover<I: Semigroup>(
    inst: &I,
    universe: &Universe<I::Elem>,
    set: &FiniteSubset<I::Elem>,
    len: usize,
) -> Option<(I::Elem, I::Elem)> {
    for a in universe.iter() {
        for b in universe.iter() {
            if !commutes(inst, a, b) {
                continue;
            }
            let mut progression = Vec::with_capacity(len);
            let mut current = a.clone();
            progression.push(current.clone());
            for _ in 1..len {
                current = inst.op(&current, b);
                progression.push(current.clone());
            }
            let progression = FiniteSubset::new(inst, progression);
            if set.is_subset_of(inst, &progression) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

pub fn freiman_progression_explorer<I>(
    inst: &I,
    universe: &Universe<I::Elem>,
    kmin: usize,
    kmax: usize,
    caps: &ScanCaps,
    jobs: usize,
) -> Result<FreimanScanReport>
where
    I: Semigroup + Sync,
    I::Elem: Send + Sync,
{
    check_enumeration_cap(universe.len(), kmin, kmax, caps.enumeration)?;
    let elems = universe.elements();
    let eval = |ix: &[usize]| -> Result<FreimanOutcome> {
        let subset: Vec<I::Elem> = ix.iter().map(|&i| elems[i].clone()).collect();
        if !pairwise_commuting(inst, &subset) {
            return Ok(FreimanOutcome::Noncommuting);
        }
        let k = subset.len();
        let set = FiniteSubset::from_sorted(subset);
        let square = product_set(inst, &[set.clone(), set.clone()], caps.product)?.len();
        if square as i64 > 3 * k as i64 - 4 {
            return Ok(FreimanOutcome::AboveThreshold);
        }
        let length = square - k + 1;
        Ok(match progression_cover(inst, universe, &set, length) {
            Some((a, b)) => FreimanOutcome::Covered(ProgressionHit {
                elements: set.render_all(inst),
                size: k,
                square_size: square,
                base: inst.render(&a),
                ratio: inst.render(&b),
                progression_length: length,
            }),
            None => FreimanOutcome::Uncovered(hit(inst, &set, square)),
        })
    };

    let mut report = FreimanScanReport {
        instance: inst.name(),
        universe: universe.recipe.clone(),
        universe_size: universe.len(),
        kmin,
        kmax,
        subsets_examined: 0,
        noncommuting_skipped: 0,
        doubling_above_threshold: 0,
        in_hypothesis: 0,
        covered: 0,
        uncovered: 0,
        covered_examples: Vec::new(),
        uncovered_examples: Vec::new(),
        notes: vec![
            "hypothesis: the subset is pairwise-commuting and its square has at most 3k-4 \
             elements (k = subset size)"
                .to_string(),
            "cover test: the subset lies inside {a*b^i : 0 <= i <= |S^2| - |S|} for some \
             universe pair (a, b) with ab = ba; the first such pair in universe order is \
             reported"
                .to_string(),
            "sizes 1 and 2 never meet the hypothesis: the square of a commuting k-set has at \
             least 2k-1 elements, which exceeds 3k-4 when k < 3"
                .to_string(),
        ],
    };
    report.subsets_examined = scan_in_order(
        universe.len(),
        kmin,
        kmax,
        jobs,
        eval,
        |outcome| {
            match outcome {
                FreimanOutcome::Noncommuting => report.noncommuting_skipped += 1,
                FreimanOutcome::AboveThreshold => report.doubling_above_threshold += 1,
                FreimanOutcome::Covered(h) => {
                    report.in_hypothesis += 1;
                    report.covered += 1;
                    if report.covered_examples.len() < EXAMPLE_CAP {
                        report.covered_examples.push(h);
                    }
                }
                FreimanOutcome::Uncovered(h) => {
                    report.in_hypothesis += 1;
                    report.uncovered += 1;
                    if report.uncovered_examples.len() < EXAMPLE_CAP {
                        report.uncovered_examples.push(h);
                    }
                }
            }
            Ok(())
        },
    )?;
    Ok(report)
}

/// Depth limits for the randomized suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub power_depth: u32,
    pub chain_depth: u32,
    pub period_depth: u32,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { power_depth: 8, chain_depth: 8, period_depth: 10 }
    }
}

impl SuiteOptions {
    fn validate(&self) -> Result<()> {
        if self.power_depth < 1 || self.chain_depth < 1 {
            return Err(Error::Config("power and chain depths must be at least 1".into()));
        }
        if self.period_depth < 2 {
            return Err(Error::Config("period depth must be at least 2".into()));
        }
        Ok(())
    }
}

/// Aggregated outcome of a randomized suite. `laws` carries one report per
/// law; reports with `applicable: false` are informational for instances that
/// do not claim the property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub instance: String,
    pub linearly_ordered: bool,
    pub trials: u64,
    pub seed: u64,
    pub laws: Vec<LawReport>,
    pub periodic_elements: u64,
    pub notes: Vec<String>,
}

fn merge_into(agg: &mut LawReport, r: &LawReport) {
    agg.trials += r.trials;
    agg.failures += r.failures;
    if agg.witness.is_none() {
        agg.witness = r.witness.clone();
    }
}

/// Probes the instance with three fresh samples per trial: associativity,
/// comparator sanity, both order laws, cancellativity, interleaving chains on
/// non-commuting pairs, power commutation, and periodicity (a periodic element
/// of a strictly ordered cancellative instance can only be a two-sided
/// identity, reached at the first power).
pub fn randomized_law_suite<I: Sample>(
    inst: &I,
    trials: u64,
    seed: u64,
    opts: &SuiteOptions,
) -> Result<SuiteReport> {
    if trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    opts.validate()?;
    let ordered = inst.linearly_ordered();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut assoc = LawReport::new("associativity");
    let mut total = LawReport::new("total_order");
    let mut translation = LawReport::new("translation");
    translation.applicable = ordered;
    let mut pow_law = LawReport::new("powers");
    pow_law.applicable = ordered;
    let mut idem = LawReport::new("idempotent_power");
    idem.applicable = ordered;
    let mut cancel = LawReport::new("cancellativity");
    cancel.applicable = ordered;
    let mut chain = LawReport::new("interleaving_chain");
    chain.applicable = ordered;
    let mut pc_commuting = LawReport::new("power_commutation_commuting");
    let mut pc_noncommuting = LawReport::new("power_commutation_noncommuting");
    pc_noncommuting.applicable = ordered;
    let mut periodic_id = LawReport::new("periodic_forces_identity");
    periodic_id.applicable = ordered;
    let mut periodic_elements = 0u64;

    for _ in 0..trials {
        let a = inst.sample(&mut rng);
        let b = inst.sample(&mut rng);
        let c = inst.sample(&mut rng);

        assoc.trials += 1;
        if inst.op(&inst.op(&a, &b), &c) != inst.op(&a, &inst.op(&b, &c)) {
            assoc.fail(vec![inst.render(&a), inst.render(&b), inst.render(&c)]);
        }

        total.trials += 1;
        let ab_ord = inst.compare(&a, &b);
        if ab_ord != inst.compare(&b, &a).reverse() {
            total.fail(vec![inst.render(&a), inst.render(&b), "antisymmetry".to_string()]);
        } else if (ab_ord == Ordering::Equal) != (a == b) {
            total.fail(vec![inst.render(&a), inst.render(&b), "equality".to_string()]);
        }
        if ab_ord == Ordering::Less && inst.compare(&b, &c) == Ordering::Less {
            total.trials += 1;
            if inst.compare(&a, &c) != Ordering::Less {
                total.fail(vec![
                    inst.render(&a),
                    inst.render(&b),
                    inst.render(&c),
                    "transitivity".to_string(),
                ]);
            }
        }

        let pair = match ab_ord {
            Ordering::Less => Some((&a, &b)),
            Ordering::Greater => Some((&b, &a)),
            Ordering::Equal => None,
        };
        if let Some((x, y)) = pair {
            translation_trial(inst, x, y, &c, &mut translation);
            powers_trial(inst, x, y, opts.power_depth, &mut pow_law);
        }
        idempotent_power_trial(inst, &a, opts.power_depth, &mut idem);

        if b != c {
            cancel.trials += 1;
            if inst.op(&a, &b) == inst.op(&a, &c) {
                cancel.fail(vec![
                    inst.render(&a),
                    inst.render(&b),
                    inst.render(&c),
                    "left".to_string(),
                ]);
            } else if inst.op(&b, &a) == inst.op(&c, &a) {
                cancel.fail(vec![
                    inst.render(&a),
                    inst.render(&b),
                    inst.render(&c),
                    "right".to_string(),
                ]);
            }
        }

        let ab = inst.op(&a, &b);
        let ba = inst.op(&b, &a);
        if ab != ba {
            let (x, y) = if inst.compare(&ab, &ba) == Ordering::Less { (&a, &b) } else { (&b, &a) };
            chain.trials += 1;
            let ch = neumann_chain(inst, x, y, opts.chain_depth)?;
            if !ch.strictly_increasing {
                chain.fail(vec![inst.render(x), inst.render(y)]);
            }
        }

        let pc = power_commutation_scan(inst, &a, &b, opts.power_depth)?;
        if pc.law == "power_commutation_commuting" {
            merge_into(&mut pc_commuting, &pc);
        } else {
            merge_into(&mut pc_noncommuting, &pc);
        }

        let record = periodicity(inst, &a, opts.period_depth)?;
        if let PeriodicityStatus::Periodic { index, period } = record.status {
            periodic_elements += 1;
            periodic_id.trials += 1;
            let identity_ok = index == 1
                && period == 1
                && inst.op(&a, &b) == b
                && inst.op(&b, &a) == b
                && inst.op(&a, &c) == c
                && inst.op(&c, &a) == c;
            if !identity_ok {
                periodic_id.fail(vec![
                    inst.render(&a),
                    format!("index={index}"),
                    format!("period={period}"),
                ]);
            }
        }
    }

    let mut notes = Vec::new();
    if idem.trials == 0 {
        notes.push(
            "no sampled element satisfied a*a < a, so the idempotent-power check had no \
             instances this run"
                .to_string(),
        );
    }
    if periodic_id.trials == 0 {
        notes.push("no sampled element repeated a power within the depth bound".to_string());
    }

    Ok(SuiteReport {
        instance: inst.name(),
        linearly_ordered: ordered,
        trials,
        seed,
        laws: vec![
            assoc,
            total,
            translation,
            pow_law,
            idem,
            cancel,
            chain,
            pc_commuting,
            pc_noncommuting,
            periodic_id,
        ],
        periodic_elements,
        notes,
    })
}

/// Semiring battery: both operations' axioms, distributivity, strict additive
/// translation, and strict multiplicative monotonicity by factors above zero.
/// Samplers never produce the zero element; zero enters through `zero()`.
pub fn randomized_semiring_suite<K: Semiring + Sample>(
    inst: &K,
    trials: u64,
    seed: u64,
) -> Result<SuiteReport> {
    if trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    let ordered = inst.linearly_ordered();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = inst.zero();

    let mut mul_assoc = LawReport::new("mul_associativity");
    let mut total = LawReport::new("total_order");
    let mut add_assoc = LawReport::new("add_associativity");
    let mut add_comm = LawReport::new("add_commutativity");
    let mut zero_ident = LawReport::new("zero_add_identity");
    let mut annihilate = LawReport::new("zero_annihilates");
    let mut dist_l = LawReport::new("left_distributivity");
    let mut dist_r = LawReport::new("right_distributivity");
    let mut above_zero = LawReport::new("sampled_above_zero");
    let mut add_trans = LawReport::new("add_translation");
    add_trans.applicable = ordered;
    let mut mul_trans = LawReport::new("mul_translation_above_zero");
    mul_trans.applicable = ordered;

    for _ in 0..trials {
        let f = inst.sample(&mut rng);
        let g = inst.sample(&mut rng);
        let h = inst.sample(&mut rng);

        mul_assoc.trials += 1;
        if inst.op(&inst.op(&f, &g), &h) != inst.op(&f, &inst.op(&g, &h)) {
            mul_assoc.fail(vec![inst.render(&f), inst.render(&g), inst.render(&h)]);
        }

        total.trials += 1;
        let fg_ord = inst.compare(&f, &g);
        if fg_ord != inst.compare(&g, &f).reverse() {
            total.fail(vec![inst.render(&f), inst.render(&g), "antisymmetry".to_string()]);
        } else if (fg_ord == Ordering::Equal) != (f == g) {
            total.fail(vec![inst.render(&f), inst.render(&g), "equality".to_string()]);
        }

        add_assoc.trials += 1;
        if inst.add(&inst.add(&f, &g), &h) != inst.add(&f, &inst.add(&g, &h)) {
            add_assoc.fail(vec![inst.render(&f), inst.render(&g), inst.render(&h)]);
        }
        add_comm.trials += 1;
        if inst.add(&f, &g) != inst.add(&g, &f) {
            add_comm.fail(vec![inst.render(&f), inst.render(&g)]);
        }
        zero_ident.trials += 1;
        if inst.add(&f, &zero) != f || inst.add(&zero, &f) != f {
            zero_ident.fail(vec![inst.render(&f)]);
        }
        annihilate.trials += 1;
        if inst.op(&f, &zero) != zero || inst.op(&zero, &f) != zero {
            annihilate.fail(vec![inst.render(&f)]);
        }
        dist_l.trials += 1;
        if inst.op(&f, &inst.add(&g, &h)) != inst.add(&inst.op(&f, &g), &inst.op(&f, &h)) {
            dist_l.fail(vec![inst.render(&f), inst.render(&g), inst.render(&h)]);
        }
        dist_r.trials += 1;
        if inst.op(&inst.add(&f, &g), &h) != inst.add(&inst.op(&f, &h), &inst.op(&g, &h)) {
            dist_r.fail(vec![inst.render(&f), inst.render(&g), inst.render(&h)]);
        }
        above_zero.trials += 1;
        if inst.compare(&zero, &f) != Ordering::Less {
            above_zero.fail(vec![inst.render(&f)]);
        }

        if fg_ord == Ordering::Less {
            add_trans.trials += 1;
            if inst.compare(&inst.add(&f, &h), &inst.add(&g, &h)) != Ordering::Less {
                add_trans.fail(vec![inst.render(&f), inst.render(&g), inst.render(&h)]);
            }
            if inst.compare(&zero, &h) == Ordering::Less {
                mul_trans.trials += 1;
                let right = inst.compare(&inst.op(&f, &h), &inst.op(&g, &h)) == Ordering::Less;
                let left = inst.compare(&inst.op(&h, &f), &inst.op(&h, &g)) == Ordering::Less;
                if !(right && left) {
                    mul_trans.fail(vec![inst.render(&f), inst.render(&g), inst.render(&h)]);
                }
            }
        }
    }

    Ok(SuiteReport {
        instance: inst.name(),
        linearly_ordered: ordered,
        trials,
        seed,
        laws: vec![
            mul_assoc, total, add_assoc, add_comm, zero_ident, annihilate, dist_l, dist_r,
            above_zero, add_trans, mul_trans,
        ],
        periodic_elements: 0,
        notes: vec![
            "samplers never produce the zero element; zero enters through the additive \
             identity in the checks"
                .to_string(),
            "multiplicative power and periodicity scans are not part of the semiring battery"
                .to_string(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::semiring::SemigroupSemiring;
    use crate::instances::words::FreeMonoid;
    use crate::instances::{LeftZero, NatAdd, NonNegRationals, UpperTriangular};
    use crate::sets::UniverseSpec;

    fn fm2() -> FreeMonoid {
        FreeMonoid::new(2).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 2), 21);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(50, 25), 126_410_606_437_752);
    }

    #[test]
    fn theorem_scan_words_len2() {
        let fm = fm2();
        let u = fm.universe(&UniverseSpec::Words { max_len: 2 }, 0).unwrap();
        let report =
            exhaustive_theorem_scan(&fm, &u, 2, 3, &ScanCaps::default(), 1).unwrap();
        assert_eq!(report.universe_size, 7);
        assert_eq!(report.subsets_examined, 56);
        assert_eq!(report.violations, 0);
        assert!(report.violation_examples.is_empty());
        // Any two non-commuting words have all four pairwise products
        // distinct, so every non-commuting pair is an extremal hit.
        assert_eq!(
            report.extremal_examples[0],
            SubsetHit { elements: vec!["a".into(), "b".into()], size: 2, square_size: 4 }
        );
        assert!(report.extremal_count >= 14);
        assert_eq!(
            report.subsets_examined,
            report.commuting_skipped + report.noncommuting_checked
        );
    }

    #[test]
    fn theorem_scan_is_deterministic_across_thread_counts() {
        let fm = fm2();
        let u = fm.universe(&UniverseSpec::Words { max_len: 2 }, 0).unwrap();
        let r1 = exhaustive_theorem_scan(&fm, &u, 2, 3, &ScanCaps::default(), 1).unwrap();
        let r4 = exhaustive_theorem_scan(&fm, &u, 2, 3, &ScanCaps::default(), 4).unwrap();
        assert_eq!(
            serde_json::to_string(&r1).unwrap(),
            serde_json::to_string(&r4).unwrap()
        );
    }

    #[test]
    fn enumeration_cap_blocks_oversized_scans() {
        let fm = fm2();
        let u = fm.universe(&UniverseSpec::Words { max_len: 2 }, 0).unwrap();
        let caps = ScanCaps { product: 1_000_000, enumeration: 10 };
        match exhaustive_theorem_scan(&fm, &u, 2, 3, &caps, 1) {
            Err(Error::EnumerationCap { count, cap }) => {
                assert_eq!(count, 56);
                assert_eq!(cap, 10);
            }
            other => panic!("expected enumeration cap error, got {other:?}"),
        }
    }

    #[test]
    fn size_range_validation() {
        let fm = fm2();
        let u = fm.universe(&UniverseSpec::Words { max_len: 1 }, 0).unwrap();
        assert!(matches!(
            exhaustive_theorem_scan(&fm, &u, 0, 2, &ScanCaps::default(), 1),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            exhaustive_theorem_scan(&fm, &u, 3, 2, &ScanCaps::default(), 1),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn freiman_on_additive_naturals() {
        let n = NatAdd;
        let u = n.universe(&UniverseSpec::Range { max: 6 }, 0).unwrap();
        let report =
            freiman_progression_explorer(&n, &u, 2, 3, &ScanCaps::default(), 1).unwrap();
        assert_eq!(report.subsets_examined, 35);
        assert_eq!(report.noncommuting_skipped, 0);
        // k=2: every sumset has 3 > 3*2-4 elements. k=3: exactly the six
        // arithmetic progressions inside 1..=6 land in the hypothesis.
        assert_eq!(report.doubling_above_threshold, 29);
        assert_eq!(report.in_hypothesis, 6);
        assert_eq!(report.covered, 6);
        assert_eq!(report.uncovered, 0);
        assert_eq!(
            report.covered_examples[0],
            ProgressionHit {
                elements: vec!["1".into(), "2".into(), "3".into()],
                size: 3,
                square_size: 5,
                base: "1".into(),
                ratio: "1".into(),
                progression_length: 3,
            }
        );
    }

    #[test]
    fn freiman_on_words_skips_noncommuting() {
        let fm = fm2();
        let u = fm.universe(&UniverseSpec::Words { max_len: 2 }, 0).unwrap();
        let report =
            freiman_progression_explorer(&fm, &u, 2, 3, &ScanCaps::default(), 1).unwrap();
        assert_eq!(report.subsets_examined, 56);
        assert_eq!(report.noncommuting_skipped, 46);
        assert_eq!(report.doubling_above_threshold, 8);
        // {ε, a, aa} and {ε, b, bb} are the only commuting triples, and both
        // sit inside a progression with base ε.
        assert_eq!(report.in_hypothesis, 2);
        assert_eq!(report.covered, 2);
        assert_eq!(report.uncovered, 0);
        assert_eq!(report.covered_examples[0].base, "");
        assert_eq!(report.covered_examples[0].ratio, "a");
        assert_eq!(
            report.covered_examples[0].elements,
            vec!["".to_string(), "a".to_string(), "aa".to_string()]
        );
    }

    #[test]
    fn suite_passes_on_free_monoid() {
        let fm = fm2();
        let report = randomized_law_suite(&fm, 120, 7, &SuiteOptions::default()).unwrap();
        assert!(report.linearly_ordered);
        for law in &report.laws {
            assert_eq!(law.failures, 0, "law {} failed: {:?}", law.law, law.witness);
        }
        // The empty word shows up in samples and is the unique periodic element.
        let periodic = report.laws.iter().find(|l| l.law == "periodic_forces_identity").unwrap();
        assert!(periodic.trials > 0);
        assert_eq!(report.periodic_elements, periodic.trials);
    }

    #[test]
    fn suite_is_deterministic() {
        let fm = fm2();
        let r1 = randomized_law_suite(&fm, 60, 11, &SuiteOptions::default()).unwrap();
        let r2 = randomized_law_suite(&fm, 60, 11, &SuiteOptions::default()).unwrap();
        assert_eq!(serde_json::to_string(&r1).unwrap(), serde_json::to_string(&r2).unwrap());
    }

    #[test]
    fn suite_passes_on_triangular_matrices() {
        let inst = UpperTriangular::new(2).unwrap();
        let report = randomized_law_suite(&inst, 60, 5, &SuiteOptions::default()).unwrap();
        for law in &report.laws {
            assert_eq!(law.failures, 0, "law {} failed: {:?}", law.law, law.witness);
        }
    }

    #[test]
    fn suite_reports_left_zero_defects_as_informational() {
        let lz = LeftZero::new(vec!["p".into(), "q".into()]).unwrap();
        let report = randomized_law_suite(&lz, 80, 3, &SuiteOptions::default()).unwrap();
        assert!(!report.linearly_ordered);
        let translation = report.laws.iter().find(|l| l.law == "translation").unwrap();
        assert!(translation.failures > 0);
        assert!(!translation.applicable);
        let cancel = report.laws.iter().find(|l| l.law == "cancellativity").unwrap();
        assert!(cancel.failures > 0);
        assert!(!cancel.applicable);
        // Associativity genuinely holds and stays applicable.
        let assoc = report.laws.iter().find(|l| l.law == "associativity").unwrap();
        assert_eq!(assoc.failures, 0);
        assert!(assoc.applicable);
    }

    #[test]
    fn suite_rejects_bad_options() {
        let fm = fm2();
        assert!(randomized_law_suite(&fm, 0, 1, &SuiteOptions::default()).is_err());
        let bad = SuiteOptions { power_depth: 0, ..SuiteOptions::default() };
        assert!(randomized_law_suite(&fm, 5, 1, &bad).is_err());
        let bad = SuiteOptions { period_depth: 1, ..SuiteOptions::default() };
        assert!(randomized_law_suite(&fm, 5, 1, &bad).is_err());
    }

    #[test]
    fn semiring_suite_passes_on_rationals_and_polynomials() {
        let q = NonNegRationals;
        let report = randomized_semiring_suite(&q, 200, 3).unwrap();
        for law in &report.laws {
            assert_eq!(law.failures, 0, "law {} failed: {:?}", law.law, law.witness);
        }
        let mul = report.laws.iter().find(|l| l.law == "mul_translation_above_zero").unwrap();
        assert!(mul.trials > 0);

        let poly = SemigroupSemiring::new(NonNegRationals, fm2());
        let report = randomized_semiring_suite(&poly, 80, 9).unwrap();
        for law in &report.laws {
            assert_eq!(law.failures, 0, "law {} failed: {:?}", law.law, law.witness);
        }
    }
}

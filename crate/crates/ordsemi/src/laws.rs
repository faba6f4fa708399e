//! Sample-based law checkers. Samples at or below the exhaustive threshold
//! are swept completely in sorted order, so the reported witness is the least
//! failing tuple; larger samples are probed with seeded random draws.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{Semigroup, Semiring};

/// Which order law family `check_order_laws` exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawMode {
    /// `a < b` implies `ac < bc` and `ca < cb`.
    Translation,
    /// `a < b` implies `a^n < b^n` for `2 <= n <= depth`.
    Powers,
    /// `a*a < a` implies `a^n < a^m` for `m < n <= depth`.
    IdempotentPower,
}

impl LawMode {
    fn law_name(self) -> &'static str {
        match self {
            LawMode::Translation => "translation",
            LawMode::Powers => "powers",
            LawMode::IdempotentPower => "idempotent_power",
        }
    }
}

#[derive(Debug, Clone)]
pub struct LawCheckOptions {
    /// Samples up to this size are checked exhaustively.
    pub exhaustive_threshold: usize,
    /// Number of random probes above the threshold.
    pub random_trials: u64,
    /// Seed for the random probes.
    pub seed: u64,
    /// Power depth for `Powers` / `IdempotentPower`.
    pub power_depth: u32,
}

impl Default for LawCheckOptions {
    fn default() -> Self {
        LawCheckOptions { exhaustive_threshold: 20, random_trials: 2000, seed: 1, power_depth: 8 }
    }
}

/// Outcome of one law check. `witness` holds the first failing tuple,
/// rendered; it is present exactly when `failures > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub trials: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// False when the instance does not claim the property being checked
    /// (running the check is still allowed; the outcome is informational).
    pub applicable: bool,
}

impl LawReport {
    pub fn new(law: impl Into<String>) -> Self {
        LawReport { law: law.into(), trials: 0, failures: 0, witness: None, applicable: true }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub(crate) fn fail(&mut self, witness: Vec<String>) {
        self.failures += 1;
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
    }
}

fn sorted_sample<I: Semigroup>(inst: &I, sample: &[I::Elem]) -> Result<Vec<I::Elem>> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut v = sample.to_vec();
    v.sort_by(|a, b| inst.compare(a, b));
    v.dedup();
    Ok(v)
}

/// Checks one order-law family over the sample. Trials count hypothesis
/// instances: `(a<b, c)` triples for `Translation`, strict pairs for
/// `Powers`, elements with `a*a < a` for `IdempotentPower`.
pub fn check_order_laws<I: Semigroup>(
    inst: &I,
    sample: &[I::Elem],
    mode: LawMode,
    opts: &LawCheckOptions,
) -> Result<LawReport> {
    let sample = sorted_sample(inst, sample)?;
    let mut report = LawReport::new(mode.law_name());
    report.applicable = inst.linearly_ordered();

    if sample.len() <= opts.exhaustive_threshold {
        match mode {
            LawMode::Translation => {
                for a in &sample {
                    for b in &sample {
                        if inst.compare(a, b) != Ordering::Less {
                            continue;
                        }
                        for c in &sample {
                            translation_trial(inst, a, b, c, &mut report);
                        }
                    }
                }
            }
            LawMode::Powers => {
                for a in &sample {
                    for b in &sample {
                        if inst.compare(a, b) == Ordering::Less {
                            powers_trial(inst, a, b, opts.power_depth, &mut report);
                        }
                    }
                }
            }
            LawMode::IdempotentPower => {
                for a in &sample {
                    idempotent_power_trial(inst, a, opts.power_depth, &mut report);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.random_trials {
            match mode {
                LawMode::Translation => {
                    let (a, b) = match draw_strict_pair(inst, &sample, &mut rng) {
                        Some(p) => p,
                        None => continue,
                    };
                    let c = &sample[rng.gen_range(0..sample.len())];
                    translation_trial(inst, a, b, c, &mut report);
                }
                LawMode::Powers => {
                    if let Some((a, b)) = draw_strict_pair(inst, &sample, &mut rng) {
                        powers_trial(inst, a, b, opts.power_depth, &mut report);
                    }
                }
                LawMode::IdempotentPower => {
                    let a = &sample[rng.gen_range(0..sample.len())];
                    idempotent_power_trial(inst, a, opts.power_depth, &mut report);
                }
            }
        }
    }
    Ok(report)
}

fn draw_strict_pair<'a, I: Semigroup>(
    inst: &I,
    sample: &'a [I::Elem],
    rng: &mut ChaCha8Rng,
) -> Option<(&'a I::Elem, &'a I::Elem)> {
    if sample.len() < 2 {
        return None;
    }
    let i = rng.gen_range(0..sample.len());
    let mut j = rng.gen_range(0..sample.len() - 1);
    if j >= i {
        j += 1;
    }
    let (x, y) = (&sample[i], &sample[j]);
    match inst.compare(x, y) {
        Ordering::Less => Some((x, y)),
        Ordering::Greater => Some((y, x)),
        Ordering::Equal => None,
    }
}

pub(crate) fn translation_trial<I: Semigroup>(
    inst: &I,
    a: &I::Elem,
    b: &I::Elem,
    c: &I::Elem,
    report: &mut LawReport,
) {
    report.trials += 1;
    let right_ok = inst.compare(&inst.op(a, c), &inst.op(b, c)) == Ordering::Less;
    let left_ok = inst.compare(&inst.op(c, a), &inst.op(c, b)) == Ordering::Less;
    if !(right_ok && left_ok) {
        report.fail(vec![inst.render(a), inst.render(b), inst.render(c)]);
    }
}

pub(crate) fn powers_trial<I: Semigroup>(
    inst: &I,
    a: &I::Elem,
    b: &I::Elem,
    depth: u32,
    report: &mut LawReport,
) {
    report.trials += 1;
    let mut ap = a.clone();
    let mut bp = b.clone();
    for n in 2..=depth {
        ap = inst.op(&ap, a);
        bp = inst.op(&bp, b);
        if inst.compare(&ap, &bp) != Ordering::Less {
            report.fail(vec![inst.render(a), inst.render(b), format!("n={n}")]);
            return;
        }
    }
}

pub(crate) fn idempotent_power_trial<I: Semigroup>(
    inst: &I,
    a: &I::Elem,
    depth: u32,
    report: &mut LawReport,
) {
    let aa = inst.op(a, a);
    if inst.compare(&aa, a) != Ordering::Less {
        return;
    }
    report.trials += 1;
    let pows = crate::semigroup::powers(inst, a, depth);
    for n in 2..=depth as usize {
        for m in 1..n {
            if inst.compare(&pows[n - 1], &pows[m - 1]) != Ordering::Less {
                report.fail(vec![inst.render(a), format!("m={m}"), format!("n={n}")]);
                return;
            }
        }
    }
}

/// Checks two-sided cancellativity. One trial per `(a, {x, y})` with `x != y`;
/// the witness is `(a, x, y)` plus the failing side.
pub fn check_cancellativity<I: Semigroup>(
    inst: &I,
    sample: &[I::Elem],
    opts: &LawCheckOptions,
) -> Result<LawReport> {
    let sample = sorted_sample(inst, sample)?;
    let mut report = LawReport::new("cancellativity");

    let trial = |a: &I::Elem, x: &I::Elem, y: &I::Elem, report: &mut LawReport| {
        report.trials += 1;
        if inst.op(a, x) == inst.op(a, y) {
            report.fail(vec![
                inst.render(a),
                inst.render(x),
                inst.render(y),
                "left".to_string(),
            ]);
        } else if inst.op(x, a) == inst.op(y, a) {
            report.fail(vec![
                inst.render(a),
                inst.render(x),
                inst.render(y),
                "right".to_string(),
            ]);
        }
    };

    if sample.len() <= opts.exhaustive_threshold {
        for a in &sample {
            for (xi, x) in sample.iter().enumerate() {
                for y in &sample[xi + 1..] {
                    trial(a, x, y, &mut report);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.random_trials {
            let a = &sample[rng.gen_range(0..sample.len())];
            let i = rng.gen_range(0..sample.len());
            let mut j = rng.gen_range(0..sample.len() - 1);
            if j >= i {
                j += 1;
            }
            trial(a, &sample[i.min(j)], &sample[i.max(j)], &mut report);
        }
    }
    Ok(report)
}

/// One trial per ordered triple: `(ab)c == a(bc)`.
pub fn check_associativity<I: Semigroup>(
    inst: &I,
    sample: &[I::Elem],
    opts: &LawCheckOptions,
) -> Result<LawReport> {
    let sample = sorted_sample(inst, sample)?;
    let mut report = LawReport::new("associativity");

    let trial = |a: &I::Elem, b: &I::Elem, c: &I::Elem, report: &mut LawReport| {
        report.trials += 1;
        if inst.op(&inst.op(a, b), c) != inst.op(a, &inst.op(b, c)) {
            report.fail(vec![inst.render(a), inst.render(b), inst.render(c)]);
        }
    };

    if sample.len() <= opts.exhaustive_threshold {
        for a in &sample {
            for b in &sample {
                for c in &sample {
                    trial(a, b, c, &mut report);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.random_trials {
            let a = &sample[rng.gen_range(0..sample.len())];
            let b = &sample[rng.gen_range(0..sample.len())];
            let c = &sample[rng.gen_range(0..sample.len())];
            trial(a, b, c, &mut report);
        }
    }
    Ok(report)
}

/// Comparator sanity: antisymmetry, `Equal` exactly on canonical equality,
/// and strict transitivity. Trials count pairs plus strict chains.
pub fn check_total_order<I: Semigroup>(
    inst: &I,
    sample: &[I::Elem],
    opts: &LawCheckOptions,
) -> Result<LawReport> {
    let sample = sorted_sample(inst, sample)?;
    let mut report = LawReport::new("total_order");

    let pair_trial = |a: &I::Elem, b: &I::Elem, report: &mut LawReport| {
        report.trials += 1;
        let ab = inst.compare(a, b);
        if ab != inst.compare(b, a).reverse() {
            report.fail(vec![inst.render(a), inst.render(b), "antisymmetry".to_string()]);
        } else if (ab == Ordering::Equal) != (a == b) {
            report.fail(vec![inst.render(a), inst.render(b), "equality".to_string()]);
        }
    };
    let chain_trial = |a: &I::Elem, b: &I::Elem, c: &I::Elem, report: &mut LawReport| {
        if inst.compare(a, b) == Ordering::Less && inst.compare(b, c) == Ordering::Less {
            report.trials += 1;
            if inst.compare(a, c) != Ordering::Less {
                report.fail(vec![
                    inst.render(a),
                    inst.render(b),
                    inst.render(c),
                    "transitivity".to_string(),
                ]);
            }
        }
    };

    if sample.len() <= opts.exhaustive_threshold {
        for a in &sample {
            for b in &sample {
                pair_trial(a, b, &mut report);
                for c in &sample {
                    chain_trial(a, b, c, &mut report);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.random_trials {
            let a = &sample[rng.gen_range(0..sample.len())];
            let b = &sample[rng.gen_range(0..sample.len())];
            let c = &sample[rng.gen_range(0..sample.len())];
            pair_trial(a, b, &mut report);
            chain_trial(a, b, c, &mut report);
        }
    }
    Ok(report)
}

/// Semiring axioms plus the two order axioms: the additive order is strictly
/// translation-invariant, and multiplication is strictly monotone on both
/// sides by elements above zero. Returns one report per law.
pub fn check_semiring_laws<K: Semiring>(
    inst: &K,
    sample: &[K::Elem],
    opts: &LawCheckOptions,
) -> Result<Vec<LawReport>> {
    let sample = sorted_sample(inst, sample)?;
    let zero = inst.zero();

    let mut add_assoc = LawReport::new("add_associativity");
    let mut add_comm = LawReport::new("add_commutativity");
    let mut zero_ident = LawReport::new("zero_add_identity");
    let mut annihilate = LawReport::new("zero_annihilates");
    let mut dist_l = LawReport::new("left_distributivity");
    let mut dist_r = LawReport::new("right_distributivity");
    let mut add_trans = LawReport::new("add_translation");
    let mut mul_trans = LawReport::new("mul_translation_above_zero");

    let unary = |a: &K::Elem, zero_ident: &mut LawReport, annihilate: &mut LawReport| {
        zero_ident.trials += 1;
        if inst.add(a, &zero) != *a || inst.add(&zero, a) != *a {
            zero_ident.fail(vec![inst.render(a)]);
        }
        annihilate.trials += 1;
        if inst.op(a, &zero) != zero || inst.op(&zero, a) != zero {
            annihilate.fail(vec![inst.render(a)]);
        }
    };

    let triple = |a: &K::Elem,
                      b: &K::Elem,
                      c: &K::Elem,
                      add_assoc: &mut LawReport,
                      add_comm: &mut LawReport,
                      dist_l: &mut LawReport,
                      dist_r: &mut LawReport,
                      add_trans: &mut LawReport,
                      mul_trans: &mut LawReport| {
        add_assoc.trials += 1;
        if inst.add(&inst.add(a, b), c) != inst.add(a, &inst.add(b, c)) {
            add_assoc.fail(vec![inst.render(a), inst.render(b), inst.render(c)]);
        }
        add_comm.trials += 1;
        if inst.add(a, b) != inst.add(b, a) {
            add_comm.fail(vec![inst.render(a), inst.render(b)]);
        }
        dist_l.trials += 1;
        if inst.op(a, &inst.add(b, c)) != inst.add(&inst.op(a, b), &inst.op(a, c)) {
            dist_l.fail(vec![inst.render(a), inst.render(b), inst.render(c)]);
        }
        dist_r.trials += 1;
        if inst.op(&inst.add(a, b), c) != inst.add(&inst.op(a, c), &inst.op(b, c)) {
            dist_r.fail(vec![inst.render(a), inst.render(b), inst.render(c)]);
        }
        if inst.compare(a, b) == Ordering::Less {
            add_trans.trials += 1;
            if inst.compare(&inst.add(a, c), &inst.add(b, c)) != Ordering::Less {
                add_trans.fail(vec![inst.render(a), inst.render(b), inst.render(c)]);
            }
            if inst.compare(&zero, c) == Ordering::Less {
                mul_trans.trials += 1;
                let right = inst.compare(&inst.op(a, c), &inst.op(b, c)) == Ordering::Less;
                let left = inst.compare(&inst.op(c, a), &inst.op(c, b)) == Ordering::Less;
                if !(right && left) {
                    mul_trans.fail(vec![inst.render(a), inst.render(b), inst.render(c)]);
                }
            }
        }
    };

    if sample.len() <= opts.exhaustive_threshold {
        for a in &sample {
            unary(a, &mut zero_ident, &mut annihilate);
            for b in &sample {
                for c in &sample {
                    triple(
                        a, b, c,
                        &mut add_assoc, &mut add_comm, &mut dist_l, &mut dist_r,
                        &mut add_trans, &mut mul_trans,
                    );
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.random_trials {
            let a = &sample[rng.gen_range(0..sample.len())];
            let b = &sample[rng.gen_range(0..sample.len())];
            let c = &sample[rng.gen_range(0..sample.len())];
            unary(a, &mut zero_ident, &mut annihilate);
            triple(
                a, b, c,
                &mut add_assoc, &mut add_comm, &mut dist_l, &mut dist_r,
                &mut add_trans, &mut mul_trans,
            );
        }
    }

    Ok(vec![add_assoc, add_comm, zero_ident, annihilate, dist_l, dist_r, add_trans, mul_trans])
}

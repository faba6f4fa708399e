//! Product sets and their growth: the superadditive lower bound, its
//! sharpness on power progressions, the translate disjointness and union
//! bounds around a non-central element, and the small-doubling verdict.

use serde::Serialize;

use crate::commute::{commutes, find_noncommuting_pair};
use crate::error::{Error, Result};
use crate::semigroup::{powers, Semigroup};
use crate::sets::FiniteSubset;

/// Cap on pairwise products formed per fold stage.
pub const DEFAULT_PRODUCT_CAP: usize = 1_000_000;

/// `S1 * S2 * ... * Sn`, folded left to right. At each stage the number of
/// pairwise products formed is checked against `cap`.
pub fn product_set<I: Semigroup>(
    inst: &I,
    sets: &[FiniteSubset<I::Elem>],
    cap: usize,
) -> Result<FiniteSubset<I::Elem>> {
    if sets.is_empty() {
        return Err(Error::Value("product of an empty list of sets".into()));
    }
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            return Err(Error::EmptySet(i));
        }
    }
    let mut acc = sets[0].clone();
    for next in &sets[1..] {
        let raw = acc.len().saturating_mul(next.len());
        if raw > cap {
            return Err(Error::ProductCap { size: raw, cap });
        }
        let mut products = Vec::with_capacity(raw);
        for x in &acc {
            for y in next {
                products.push(inst.op(x, y));
            }
        }
        acc = FiniteSubset::new(inst, products);
    }
    Ok(acc)
}

/// `S * S` with the default cap.
pub fn square<I: Semigroup>(
    inst: &I,
    s: &FiniteSubset<I::Elem>,
) -> Result<FiniteSubset<I::Elem>> {
    product_set(inst, &[s.clone(), s.clone()], DEFAULT_PRODUCT_CAP)
}

/// A lower bound against an observed cardinality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub bound: usize,
    pub actual: usize,
    pub holds: bool,
}

/// `|S1 ... Sn| >= 1 - n + sum |Si|` on linearly ordered instances. A false
/// result on an instance claiming linear order is a counterexample report,
/// not an internal error.
pub fn superadditivity_check<I: Semigroup>(
    inst: &I,
    sets: &[FiniteSubset<I::Elem>],
    cap: usize,
) -> Result<BoundCheck> {
    let product = product_set(inst, sets, cap)?;
    let bound = 1 + sets.iter().map(|s| s.len() - 1).sum::<usize>();
    let actual = product.len();
    Ok(BoundCheck { bound, actual, holds: actual >= bound })
}

/// Power progressions `{a, a^2, ..., a^s}` meet the superadditive bound with
/// equality. The product is computed and the equality verified exactly.
#[derive(Debug, Clone)]
pub struct SharpnessWitness<E> {
    pub factors: Vec<FiniteSubset<E>>,
    pub product: FiniteSubset<E>,
    pub expected_size: usize,
}

pub fn sharpness_witness<I: Semigroup>(
    inst: &I,
    a: &I::Elem,
    sizes: &[usize],
) -> Result<SharpnessWitness<I::Elem>> {
    if sizes.is_empty() {
        return Err(Error::Value("need at least one factor size".into()));
    }
    if let Some(pos) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::Precondition(format!(
            "factor size at position {pos} is 0; sizes must be at least 1"
        )));
    }
    let factors: Vec<FiniteSubset<I::Elem>> = sizes
        .iter()
        .map(|&s| FiniteSubset::new(inst, powers(inst, a, s as u32)))
        .collect();
    let expected_size = 1 + sizes.iter().map(|s| s - 1).sum::<usize>();
    let product = product_set(inst, &factors, DEFAULT_PRODUCT_CAP)?;
    if factors.iter().zip(sizes).any(|(f, &s)| f.len() != s) {
        return Err(Error::Postcondition(
            "powers of the generator collide; the instance is not torsion-free".into(),
        ));
    }
    if product.len() != expected_size {
        return Err(Error::Postcondition(format!(
            "progression product has {} elements, expected exactly {expected_size}",
            product.len()
        )));
    }
    Ok(SharpnessWitness { factors, product, expected_size })
}

fn require_hypotheses<I: Semigroup>(
    inst: &I,
    s: &FiniteSubset<I::Elem>,
    y: &I::Elem,
) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptySet(0));
    }
    if let Some((x, z)) = find_noncommuting_pair(inst, s.elements()) {
        return Err(Error::Precondition(format!(
            "the set is not pairwise-commuting: {} and {} do not commute",
            inst.render(x),
            inst.render(z)
        )));
    }
    if s.iter().all(|x| commutes(inst, y, x)) {
        return Err(Error::Precondition(format!(
            "{} centralizes the set; the hypotheses need a non-central element",
            inst.render(y)
        )));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct DisjointnessCheck<E> {
    pub disjoint: bool,
    pub intersection: FiniteSubset<E>,
}

/// For pairwise-commuting `S` and non-central `y` in a cancellative setting,
/// `S^2` and `yS ∪ Sy` cannot meet. Hypotheses are checked, not assumed.
pub fn disjointness_check<I: Semigroup>(
    inst: &I,
    s: &FiniteSubset<I::Elem>,
    y: &I::Elem,
) -> Result<DisjointnessCheck<I::Elem>> {
    require_hypotheses(inst, s, y)?;
    let sq = square(inst, s)?;
    let translates = y_translates(inst, s, y);
    let intersection = sq.intersection(inst, &translates);
    Ok(DisjointnessCheck { disjoint: intersection.is_empty(), intersection })
}

/// Same hypotheses; checks `|S^2 ∪ yS ∪ Sy| >= 3|S|`.
pub fn union_bound_check<I: Semigroup>(
    inst: &I,
    s: &FiniteSubset<I::Elem>,
    y: &I::Elem,
) -> Result<BoundCheck> {
    require_hypotheses(inst, s, y)?;
    let sq = square(inst, s)?;
    let actual = sq.union(inst, &y_translates(inst, s, y)).len();
    let bound = 3 * s.len();
    Ok(BoundCheck { bound, actual, holds: actual >= bound })
}

fn y_translates<I: Semigroup>(
    inst: &I,
    s: &FiniteSubset<I::Elem>,
    y: &I::Elem,
) -> FiniteSubset<I::Elem> {
    let ys = FiniteSubset::new(inst, s.iter().map(|x| inst.op(y, x)).collect());
    let sy = FiniteSubset::new(inst, s.iter().map(|x| inst.op(x, y)).collect());
    ys.union(inst, &sy)
}

/// The observed square size against the `3|S| - 3` threshold. On a linearly
/// ordered instance, a set at or below the threshold must be
/// pairwise-commuting; `theorem_consistent` records exactly that implication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoublingVerdict {
    pub size: usize,
    pub square_size: usize,
    pub pairwise_commuting: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub noncommuting_witness: Option<(String, String)>,
    pub bound_3s_minus_3_satisfied: bool,
    pub theorem_consistent: bool,
}

pub fn small_doubling_verdict<I: Semigroup>(
    inst: &I,
    s: &FiniteSubset<I::Elem>,
) -> Result<DoublingVerdict> {
    if s.is_empty() {
        return Err(Error::EmptySet(0));
    }
    let square_size = square(inst, s)?.len();
    let witness = find_noncommuting_pair(inst, s.elements())
        .map(|(x, y)| (inst.render(x), inst.render(y)));
    let pairwise_commuting = witness.is_none();
    let bound_3s_minus_3_satisfied = square_size <= 3 * s.len() - 3;
    Ok(DoublingVerdict {
        size: s.len(),
        square_size,
        pairwise_commuting,
        noncommuting_witness: witness,
        bound_3s_minus_3_satisfied,
        theorem_consistent: !(bound_3s_minus_3_satisfied && !pairwise_commuting),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::words::FreeMonoid;
    use crate::instances::NatAdd;

    fn fm2() -> FreeMonoid {
        FreeMonoid::new(2).unwrap()
    }

    /// Brute-force oracle independent of the sorted-merge machinery.
    fn product_oracle(fm: &FreeMonoid, sets: &[Vec<&str>]) -> Vec<String> {
        let mut acc: std::collections::BTreeSet<(usize, String)> = sets[0]
            .iter()
            .map(|s| (s.len(), s.to_string()))
            .collect();
        for next in &sets[1..] {
            let mut step = std::collections::BTreeSet::new();
            for (_, x) in &acc {
                for y in next {
                    let w = format!("{x}{y}");
                    step.insert((w.len(), w));
                }
            }
            acc = step;
        }
        let _ = fm;
        acc.into_iter().map(|(_, w)| w).collect()
    }

    #[test]
    fn product_of_word_sets() {
        let fm = fm2();
        let s = FiniteSubset::new(&fm, vec![fm.word("a"), fm.word("b")]);
        let sq = square(&fm, &s).unwrap();
        assert_eq!(sq.render_all(&fm), vec!["aa", "ab", "ba", "bb"]);
        assert_eq!(
            sq.render_all(&fm),
            product_oracle(&fm, &[vec!["a", "b"], vec!["a", "b"]])
        );
    }

    #[test]
    fn nat_add_products_and_bounds() {
        let n = NatAdd;
        let s1 = FiniteSubset::new(&n, vec![1, 2]);
        let s2 = FiniteSubset::new(&n, vec![1, 2, 3]);
        let p = product_set(&n, &[s1.clone(), s2.clone()], DEFAULT_PRODUCT_CAP).unwrap();
        assert_eq!(p.elements(), &[2, 3, 4, 5]);
        let check = superadditivity_check(&n, &[s1, s2], DEFAULT_PRODUCT_CAP).unwrap();
        assert_eq!((check.bound, check.actual, check.holds), (4, 4, true));
    }

    #[test]
    fn word_superadditivity_strict() {
        let fm = fm2();
        let s = FiniteSubset::new(&fm, vec![fm.word("a"), fm.word("b")]);
        let check = superadditivity_check(&fm, &[s.clone(), s], DEFAULT_PRODUCT_CAP).unwrap();
        assert_eq!((check.bound, check.actual, check.holds), (3, 4, true));
    }

    #[test]
    fn product_error_paths() {
        let fm = fm2();
        let s = FiniteSubset::new(&fm, vec![fm.word("a"), fm.word("b")]);
        assert!(matches!(
            product_set(&fm, &[], DEFAULT_PRODUCT_CAP),
            Err(Error::Value(_))
        ));
        assert!(matches!(
            product_set(&fm, &[s.clone(), FiniteSubset::new(&fm, vec![])], 10),
            Err(Error::EmptySet(1))
        ));
        assert!(matches!(
            product_set(&fm, &[s.clone(), s.clone(), s], 3),
            Err(Error::ProductCap { .. })
        ));
    }

    #[test]
    fn sharpness_on_powers() {
        let fm = fm2();
        let w = sharpness_witness(&fm, &fm.word("a"), &[3, 3]).unwrap();
        assert_eq!(w.expected_size, 5);
        assert_eq!(
            w.product.render_all(&fm),
            vec!["aa", "aaa", "aaaa", "aaaaa", "aaaaaa"]
        );
        let w = sharpness_witness(&fm, &fm.word("ab"), &[2, 2, 2]).unwrap();
        assert_eq!(w.expected_size, 4);
        assert_eq!(w.product.len(), 4);
        assert!(sharpness_witness(&fm, &fm.word("a"), &[2, 0]).is_err());
        // The empty word is torsion, so the progression collapses.
        assert!(matches!(
            sharpness_witness(&fm, &fm.word(""), &[2, 2]),
            Err(Error::Postcondition(_))
        ));
    }

    #[test]
    fn translate_disjointness() {
        let fm = fm2();
        let s = FiniteSubset::new(&fm, vec![fm.word("a"), fm.word("aa")]);
        let d = disjointness_check(&fm, &s, &fm.word("b")).unwrap();
        assert!(d.disjoint);
        assert!(d.intersection.is_empty());
        let s2 = FiniteSubset::new(&fm, vec![fm.word("ab"), fm.word("abab")]);
        let d = disjointness_check(&fm, &s2, &fm.word("a")).unwrap();
        assert!(d.disjoint);
        // Hypothesis failures are errors, not findings.
        let bad = FiniteSubset::new(&fm, vec![fm.word("a"), fm.word("b")]);
        assert!(matches!(
            disjointness_check(&fm, &bad, &fm.word("b")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            disjointness_check(&fm, &s, &fm.word("aa")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn translate_union_bound() {
        let fm = fm2();
        let s = FiniteSubset::new(&fm, vec![fm.word("a"), fm.word("aa")]);
        let check = union_bound_check(&fm, &s, &fm.word("b")).unwrap();
        assert_eq!((check.bound, check.actual, check.holds), (6, 7, true));
        let single = FiniteSubset::singleton(fm.word("a"));
        let check = union_bound_check(&fm, &single, &fm.word("b")).unwrap();
        assert_eq!((check.bound, check.actual, check.holds), (3, 3, true));
    }

    #[test]
    fn verdicts() {
        let fm = fm2();
        let s = FiniteSubset::new(&fm, vec![fm.word("a"), fm.word("b")]);
        let v = small_doubling_verdict(&fm, &s).unwrap();
        assert_eq!((v.size, v.square_size), (2, 4));
        assert!(!v.pairwise_commuting);
        assert!(!v.bound_3s_minus_3_satisfied);
        assert!(v.theorem_consistent);
        assert_eq!(v.noncommuting_witness, Some(("a".into(), "b".into())));

        let n = NatAdd;
        let s = FiniteSubset::new(&n, vec![1, 2, 3, 4]);
        let v = small_doubling_verdict(&n, &s).unwrap();
        assert_eq!((v.size, v.square_size), (4, 7));
        assert!(v.pairwise_commuting);
        assert!(v.bound_3s_minus_3_satisfied);
        assert!(v.theorem_consistent);

        let singleton = FiniteSubset::singleton(fm.word("a"));
        let v = small_doubling_verdict(&fm, &singleton).unwrap();
        assert_eq!((v.size, v.square_size), (1, 1));
        assert!(!v.bound_3s_minus_3_satisfied, "3*1-3 = 0 < 1");
        assert!(v.theorem_consistent);
    }
}

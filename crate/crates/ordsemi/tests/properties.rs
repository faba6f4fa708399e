//! Randomized structural properties (proptest) plus one exhaustive check
//! over a small word universe.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ordsemi::instances::semiring::SemigroupSemiring;
use ordsemi::instances::words::{FreeMonoid, Word};
use ordsemi::instances::{NonNegRationals, UpperTriangular};
use ordsemi::products::{product_set, DEFAULT_PRODUCT_CAP};
use ordsemi::rat::{parse_rational, rational, render_rational};
use ordsemi::sets::UniverseSpec;
use ordsemi::{FiniteSubset, Sample, Semigroup, Semiring};

fn fm2() -> FreeMonoid {
    FreeMonoid::new(2).unwrap()
}

fn word_text() -> impl Strategy<Value = String> {
    prop::collection::vec(0u8..2, 0..8)
        .prop_map(|letters| letters.iter().map(|&l| (b'a' + l) as char).collect())
}

fn word() -> impl Strategy<Value = Word> {
    word_text().prop_map(|t| fm2().parse(&t).unwrap())
}

proptest! {
    #[test]
    fn words_round_trip_through_render(text in word_text()) {
        let fm = fm2();
        let w = fm.parse(&text).unwrap();
        prop_assert_eq!(fm.render(&w), text);
    }

    #[test]
    fn shortlex_is_antisymmetric_and_reflexive(x in word(), y in word()) {
        let fm = fm2();
        prop_assert_eq!(fm.compare(&x, &y), fm.compare(&y, &x).reverse());
        prop_assert_eq!(fm.compare(&x, &y) == Ordering::Equal, x == y);
        prop_assert_eq!(fm.compare(&x, &x), Ordering::Equal);
    }

    #[test]
    fn shortlex_orders_by_length_first(x in word(), y in word()) {
        let fm = fm2();
        if fm.render(&x).len() < fm.render(&y).len() {
            prop_assert_eq!(fm.compare(&x, &y), Ordering::Less);
        }
    }

    #[test]
    fn concatenation_preserves_shortlex_on_both_sides(x in word(), y in word(), z in word()) {
        let fm = fm2();
        let expected = fm.compare(&x, &y);
        prop_assert_eq!(fm.compare(&fm.op(&x, &z), &fm.op(&y, &z)), expected);
        prop_assert_eq!(fm.compare(&fm.op(&z, &x), &fm.op(&z, &y)), expected);
    }

    #[test]
    fn shortlex_is_transitive(x in word(), y in word(), z in word()) {
        let fm = fm2();
        let mut sorted = vec![x, y, z];
        sorted.sort_by(|a, b| fm.compare(a, b));
        prop_assert_ne!(fm.compare(&sorted[0], &sorted[1]), Ordering::Greater);
        prop_assert_ne!(fm.compare(&sorted[1], &sorted[2]), Ordering::Greater);
        prop_assert_ne!(fm.compare(&sorted[0], &sorted[2]), Ordering::Greater);
    }

    #[test]
    fn rationals_round_trip_through_render(p in -9999i64..10_000, q in 1i64..1000) {
        let r = rational(p, q);
        prop_assert_eq!(parse_rational(&render_rational(&r)).unwrap(), r);
    }

    #[test]
    fn product_sets_match_a_naive_oracle(
        xs in prop::collection::vec(word_text(), 1..5),
        ys in prop::collection::vec(word_text(), 1..5),
    ) {
        let fm = fm2();
        let a = FiniteSubset::new(&fm, xs.iter().map(|t| fm.parse(t).unwrap()).collect());
        let b = FiniteSubset::new(&fm, ys.iter().map(|t| fm.parse(t).unwrap()).collect());
        let product = product_set(&fm, &[a.clone(), b.clone()], DEFAULT_PRODUCT_CAP).unwrap();
        let fm_ref = &fm;
        let oracle: BTreeSet<String> = a
            .iter()
            .flat_map(|x| {
                b.iter().map(move |y| format!("{}{}", fm_ref.render(x), fm_ref.render(y)))
            })
            .collect();
        let got: BTreeSet<String> = product.render_all(&fm).into_iter().collect();
        prop_assert_eq!(got, oracle);
    }

    #[test]
    fn transposing_swaps_the_triangular_orders(
        a in prop::collection::vec((1i64..50, 1i64..9), 3),
        b in prop::collection::vec((1i64..50, 1i64..9), 3),
    ) {
        let upper = UpperTriangular::new(2).unwrap();
        let lower = ordsemi::instances::LowerTriangular::new(2).unwrap();
        let fmt = |v: &[(i64, i64)], transposed: bool| {
            let r = |i: usize| render_rational(&rational(v[i].0, v[i].1));
            if transposed {
                format!("[[\"{}\",\"0\"],[\"{}\",\"{}\"]]", r(0), r(1), r(2))
            } else {
                format!("[[\"{}\",\"{}\"],[\"0\",\"{}\"]]", r(0), r(1), r(2))
            }
        };
        let ua = upper.parse(&fmt(&a, false)).unwrap();
        let ub = upper.parse(&fmt(&b, false)).unwrap();
        let la = lower.parse(&fmt(&a, true)).unwrap();
        let lb = lower.parse(&fmt(&b, true)).unwrap();
        prop_assert_eq!(upper.compare(&ua, &ub), lower.compare(&la, &lb));
    }

    #[test]
    fn sampled_semiring_elements_satisfy_ring_like_identities(seed in any::<u64>()) {
        let poly = SemigroupSemiring::new(NonNegRationals, fm2());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = poly.sample(&mut rng);
        let g = poly.sample(&mut rng);
        let h = poly.sample(&mut rng);
        prop_assert_eq!(poly.add(&poly.add(&f, &g), &h), poly.add(&f, &poly.add(&g, &h)));
        prop_assert_eq!(poly.add(&f, &g), poly.add(&g, &f));
        prop_assert_eq!(
            poly.op(&f, &poly.add(&g, &h)),
            poly.add(&poly.op(&f, &g), &poly.op(&f, &h))
        );
        prop_assert_eq!(
            poly.op(&poly.add(&f, &g), &h),
            poly.add(&poly.op(&f, &h), &poly.op(&g, &h))
        );
        prop_assert_eq!(poly.add(&f, &poly.zero()), f.clone());
        prop_assert!(poly.op(&f, &poly.zero()).is_zero());
    }
}

/// Exhaustive over all words of length <= 2: whenever x, y, z all commute
/// with b and xy equals az or za, the pair (a, b) commutes too. Elements
/// commuting with b share its primitive root, so such factorizations pull
/// a into the centralizer of b.
#[test]
fn central_factorizations_force_commutation() {
    let fm = fm2();
    let universe = fm.universe(&UniverseSpec::Words { max_len: 2 }, 0).unwrap();
    let words = universe.elements();
    assert_eq!(words.len(), 7);
    let commutes = |u: &Word, v: &Word| fm.op(u, v) == fm.op(v, u);
    let mut checked = 0u64;
    for a in words {
        for b in words {
            if commutes(a, b) {
                continue;
            }
            for x in words.iter().filter(|x| commutes(x, b)) {
                for y in words.iter().filter(|y| commutes(y, b)) {
                    let xy = fm.op(x, y);
                    for z in words.iter().filter(|z| commutes(z, b)) {
                        checked += 1;
                        assert_ne!(xy, fm.op(a, z), "xy = az with x,y,z central to b");
                        assert_ne!(xy, fm.op(z, a), "xy = za with x,y,z central to b");
                    }
                }
            }
        }
    }
    // 26 non-commuting ordered pairs; the centralizer of b within the
    // universe has 3 elements when b is a letter power and 2 otherwise.
    assert_eq!(checked, 512);
}

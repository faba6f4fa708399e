//! Linearly ordered semigroups at desk scale: order constructions on words,
//! triangular matrices, and coefficient maps; product-set growth bounds;
//! centralizers and normalizers; and exhaustive or seeded-random searches for
//! counterexamples to the square-size dichotomy.
//!
//! The central check: a finite subset `S` of a strictly ordered semigroup
//! either commutes pairwise or satisfies `|S^2| >= 3|S| - 2`.
//!
//! ```
//! use ordsemi::instances::FreeMonoid;
//! use ordsemi::products::small_doubling_verdict;
//! use ordsemi::{FiniteSubset, Semigroup};
//!
//! let fm = FreeMonoid::new(2)?;
//! let s = FiniteSubset::new(&fm, vec![fm.parse("a")?, fm.parse("b")?]);
//! let verdict = small_doubling_verdict(&fm, &s)?;
//! assert!(!verdict.pairwise_commuting);
//! assert_eq!(verdict.square_size, 4); // exactly 3|S| - 2, the minimum
//! assert!(verdict.theorem_consistent);
//! # Ok::<(), ordsemi::Error>(())
//! ```
//!
//! Orders are supplied by instance values, not element types, so one element
//! type can carry different orders (upper vs. lower triangular matrices):
//!
//! ```
//! use std::cmp::Ordering;
//! use ordsemi::instances::UpperTriangular;
//! use ordsemi::Semigroup;
//!
//! let u2 = UpperTriangular::new(2)?;
//! let x = u2.parse("[[1,7],[0,2]]")?;
//! let y = u2.parse("[[1,3],[0,5]]")?;
//! // The diagonal is scanned before the off-diagonal, so 2 < 5 decides.
//! assert_eq!(u2.compare(&x, &y), Ordering::Less);
//! # Ok::<(), ordsemi::Error>(())
//! ```

pub mod cli;
pub mod commute;
pub mod error;
pub mod instances;
pub mod laws;
pub mod products;
pub mod rat;
pub mod search;
pub mod semigroup;
pub mod sets;

pub use error::{Error, Result};
pub use semigroup::{ordering_label, power, powers, Sample, Semigroup, Semiring};
pub use sets::{FiniteSubset, Universe, UniverseSpec};

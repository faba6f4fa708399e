//! The shipped instances.

pub mod leftzero;
pub mod matrices;
pub mod numbers;
pub mod pagano;
pub mod semiring;
pub mod words;

pub use leftzero::LeftZero;
pub use matrices::{
    index_pair_compare, xi_positions, IndexPair, LowerTriangular, Shape, TriMatrix,
    UpperTriangular,
};
pub use numbers::{NatAdd, NonNegRationals};
pub use pagano::{pagano_witness, DenseMat, PaganoWitness};
pub use semiring::{FinSuppMap, SemigroupSemiring};
pub use words::{shortlex, FreeMonoid, Word};

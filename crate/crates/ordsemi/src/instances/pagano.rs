//! Cancellativity failure for all-positive square matrices: with alpha the
//! all-ones matrix and beta any positive matrix whose columns each sum to n,
//! alpha * alpha = alpha * beta while alpha != beta. So entrywise-positive
//! matrices under product admit no linear order, and the triangular carve-out
//! is not an accident. The witness here fixes beta deterministically:
//! (n+1)/2 on the diagonal, 1/2 elsewhere.

use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::instances::matrices::{mat_mul, render_matrix_rows};
use crate::rat::{rational, render_rational};

/// A square matrix with strictly positive rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMat {
    n: usize,
    entries: Vec<BigRational>,
}

impl DenseMat {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Value("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Value(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            entries.extend(row);
        }
        for (idx, e) in entries.iter().enumerate() {
            if !e.is_positive() {
                return Err(Error::Value(format!(
                    "entry ({}, {}) must be positive, got {}",
                    idx / n + 1,
                    idx % n + 1,
                    render_rational(e)
                )));
            }
        }
        Ok(DenseMat { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.n + col]
    }

    pub fn mul(&self, other: &DenseMat) -> DenseMat {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        DenseMat { n: self.n, entries: mat_mul(self.n, &self.entries, &other.entries) }
    }

    pub fn rows_rendered(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| render_rational(self.get(i, j))).collect())
            .collect()
    }

    pub fn render(&self) -> String {
        render_matrix_rows(&self.rows_rendered())
    }
}

/// The two matrices of the witness, with the identity
/// `alpha * alpha == alpha * beta` already verified exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaganoWitness {
    pub n: usize,
    pub alpha: DenseMat,
    pub beta: DenseMat,
}

impl PaganoWitness {
    pub fn alpha_squared(&self) -> DenseMat {
        self.alpha.mul(&self.alpha)
    }

    pub fn alpha_times_beta(&self) -> DenseMat {
        self.alpha.mul(&self.beta)
    }
}

/// Builds the witness for dimension `n >= 2` and checks it exactly:
/// beta's columns each sum to n, beta != alpha, and alpha^2 = alpha*beta.
pub fn pagano_witness(n: usize) -> Result<PaganoWitness> {
    if n < 2 {
        return Err(Error::Instance(format!(
            "the construction needs dimension >= 2, got {n}"
        )));
    }
    let one = BigRational::one();
    let alpha = DenseMat {
        n,
        entries: vec![one; n * n],
    };
    let diag = rational(n as i64 + 1, 2);
    let off = rational(1, 2);
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(if i == j { diag.clone() } else { off.clone() });
        }
    }
    let beta = DenseMat { n, entries };

    let expected_sum = BigRational::from_integer(num::BigInt::from(n));
    for j in 0..n {
        let mut sum = BigRational::zero();
        for i in 0..n {
            sum += beta.get(i, j);
        }
        if sum != expected_sum {
            return Err(Error::Postcondition(format!(
                "column {} of beta sums to {}, expected {n}",
                j + 1,
                render_rational(&sum)
            )));
        }
    }
    if alpha == beta {
        return Err(Error::Postcondition("beta must differ from alpha".into()));
    }
    let witness = PaganoWitness { n, alpha, beta };
    if witness.alpha_squared() != witness.alpha_times_beta() {
        return Err(Error::Postcondition(
            "alpha^2 and alpha*beta disagree; the witness construction is broken".into(),
        ));
    }
    Ok(witness)
}

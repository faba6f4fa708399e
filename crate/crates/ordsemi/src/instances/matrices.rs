//! Triangular matrices with positive rational entries on the triangle and
//! exact zeros elsewhere, ordered by a zig-zag scan of the triangle.
//!
//! Scan positions are the pairs (i, j), i <= j, well-ordered by diagonal
//! distance j - i first and column j second; two matrices compare by the
//! entry at their first scan position that differs. Upper matrices read the
//! position directly, lower matrices read its transpose, which makes the
//! lower order the exact mirror of the upper one.

use std::cmp::Ordering;

use num::rational::BigRational;
use num::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::rat::{parse_rational, rational, render_rational};
use crate::semigroup::{Sample, Semigroup};
use crate::sets::{Universe, UniverseSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Upper,
    Lower,
}

impl Shape {
    /// Whether (row, col) lies on this shape's positive triangle (0-based).
    fn on_triangle(self, row: usize, col: usize) -> bool {
        match self {
            Shape::Upper => row <= col,
            Shape::Lower => row >= col,
        }
    }
}

/// One scan position on the triangle, 1-based, `row <= col`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexPair {
    pub row: usize,
    pub col: usize,
}

/// All scan positions for dimension `n` in scan order.
pub fn xi_positions(n: usize) -> Vec<IndexPair> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for dist in 0..n {
        for col in (dist + 1)..=n {
            out.push(IndexPair { row: col - dist, col });
        }
    }
    out
}

/// Compares two scan positions for dimension `n`: diagonal distance first,
/// then column. Errors on indices outside `1 <= row <= col <= n`.
pub fn index_pair_compare(n: usize, p: IndexPair, q: IndexPair) -> Result<Ordering> {
    for pair in [p, q] {
        if pair.row < 1 || pair.row > pair.col || pair.col > n {
            return Err(Error::Value(format!(
                "index pair ({}, {}) is outside the triangle for dimension {n}",
                pair.row, pair.col
            )));
        }
    }
    Ok((p.col - p.row, p.col).cmp(&(q.col - q.row, q.col)))
}

/// A triangular matrix: dimension, shape, and row-major exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriMatrix {
    n: usize,
    shape: Shape,
    entries: Vec<BigRational>,
}

impl TriMatrix {
    /// Validates the shape: strictly positive entries on the triangle
    /// (diagonal included), exact zeros off it.
    pub fn new(shape: Shape, rows: Vec<Vec<BigRational>>) -> Result<Self> {
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
        let m = TriMatrix { n, shape, entries };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.get(i, j);
                if self.shape.on_triangle(i, j) {
                    if !e.is_positive() {
                        return Err(Error::Value(format!(
                            "entry ({}, {}) must be positive, got {}",
                            i + 1,
                            j + 1,
                            render_rational(e)
                        )));
                    }
                } else if !e.is_zero() {
                    return Err(Error::Value(format!(
                        "entry ({}, {}) lies off the triangle and must be 0, got {}",
                        i + 1,
                        j + 1,
                        render_rational(e)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// 0-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.n + col]
    }

    pub fn transpose(&self) -> TriMatrix {
        let shape = match self.shape {
            Shape::Upper => Shape::Lower,
            Shape::Lower => Shape::Upper,
        };
        let mut entries = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                entries.push(self.get(j, i).clone());
            }
        }
        TriMatrix { n: self.n, shape, entries }
    }

    pub fn rows_rendered(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| render_rational(self.get(i, j))).collect())
            .collect()
    }
}

/// Row-major exact matrix product.
pub(crate) fn mat_mul(n: usize, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let term = aik * &b[k * n + j];
                out[i * n + j] += term;
            }
        }
    }
    out
}

/// Parses a row-major nested array, entries as `"p/q"` strings or integers.
pub(crate) fn parse_matrix_rows(text: &str, n: usize) -> Result<Vec<Vec<BigRational>>> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        Error::syntax(e.column().saturating_sub(1), format!("matrix must be a JSON array: {e}"))
    })?;
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Value("matrix must be an array of rows".into()))?;
    if rows.len() != n {
        return Err(Error::Value(format!("expected {n} rows, got {}", rows.len())));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| Error::Value(format!("row {} must be an array", i + 1)))?;
        if cells.len() != n {
            return Err(Error::Value(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                cells.len()
            )));
        }
        let mut row_out = Vec::with_capacity(n);
        for (j, cell) in cells.iter().enumerate() {
            row_out.push(parse_cell(cell, i, j)?);
        }
        out.push(row_out);
    }
    Ok(out)
}

fn parse_cell(cell: &Value, i: usize, j: usize) -> Result<BigRational> {
    match cell {
        Value::String(s) => parse_rational(s),
        Value::Number(num) => {
            if let Some(v) = num.as_i64() {
                Ok(rational(v, 1))
            } else {
                Err(Error::Value(format!(
                    "entry ({}, {}): only exact rationals are supported, write \"p/q\"",
                    i + 1,
                    j + 1
                )))
            }
        }
        other => Err(Error::Value(format!(
            "entry ({}, {}): expected a rational, got {other}",
            i + 1,
            j + 1
        ))),
    }
}

pub(crate) fn render_matrix_rows(rows: &[Vec<String>]) -> String {
    serde_json::to_string(rows).expect("string matrix serializes")
}

macro_rules! triangular_instance {
    ($name:ident, $shape:expr, $label:literal) => {
        #[derive(Debug, Clone)]
        pub struct $name {
            n: usize,
            /// Scan positions, 0-based, in scan order.
            xi: Vec<(usize, usize)>,
        }

        impl $name {
            pub fn new(n: usize) -> Result<Self> {
                if n == 0 {
                    return Err(Error::Instance("dimension must be at least 1".into()));
                }
                let xi = xi_positions(n)
                    .into_iter()
                    .map(|p| (p.row - 1, p.col - 1))
                    .collect();
                Ok($name { n, xi })
            }

            pub fn n(&self) -> usize {
                self.n
            }

            /// Convenience for tests and examples: parse or panic.
            pub fn mat(&self, text: &str) -> TriMatrix {
                self.parse(text).expect("valid matrix literal")
            }
        }

        impl Semigroup for $name {
            type Elem = TriMatrix;

            fn name(&self) -> String {
                format!(concat!($label, "({})"), self.n)
            }

            fn op(&self, x: &TriMatrix, y: &TriMatrix) -> TriMatrix {
                assert_eq!(x.n, self.n, "matrix dimension mismatch");
                assert_eq!(y.n, self.n, "matrix dimension mismatch");
                assert!(
                    x.shape == $shape && y.shape == $shape,
                    "matrix shape mismatch"
                );
                let entries = mat_mul(self.n, &x.entries, &y.entries);
                let m = TriMatrix { n: self.n, shape: $shape, entries };
                m.validate().expect("triangular matrices are closed under product");
                m
            }

            fn compare(&self, x: &TriMatrix, y: &TriMatrix) -> Ordering {
                assert_eq!(x.n, self.n, "matrix dimension mismatch");
                assert_eq!(y.n, self.n, "matrix dimension mismatch");
                for &(i, j) in &self.xi {
                    // Lower matrices read the transposed position.
                    let (r, c) = match $shape {
                        Shape::Upper => (i, j),
                        Shape::Lower => (j, i),
                    };
                    match x.get(r, c).cmp(y.get(r, c)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }

            fn linearly_ordered(&self) -> bool {
                true
            }

            fn render(&self, x: &TriMatrix) -> String {
                render_matrix_rows(&x.rows_rendered())
            }

            fn parse(&self, text: &str) -> Result<TriMatrix> {
                TriMatrix::new($shape, parse_matrix_rows(text, self.n)?)
            }

            fn universe(&self, spec: &UniverseSpec, seed: u64) -> Result<Universe<TriMatrix>> {
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

        impl Sample for $name {
            /// Triangle entries are p/q with p, q uniform in 1..=9.
            fn sample(&self, rng: &mut ChaCha8Rng) -> TriMatrix {
                let mut entries = Vec::with_capacity(self.n * self.n);
                for i in 0..self.n {
                    for j in 0..self.n {
                        if $shape.on_triangle(i, j) {
                            let p = rng.gen_range(1..=9i64);
                            let q = rng.gen_range(1..=9i64);
                            entries.push(rational(p, q));
                        } else {
                            entries.push(BigRational::zero());
                        }
                    }
                }
                TriMatrix { n: self.n, shape: $shape, entries }
            }
        }
    };
}

triangular_instance!(UpperTriangular, Shape::Upper, "upper_triangular");
triangular_instance!(LowerTriangular, Shape::Lower, "lower_triangular");

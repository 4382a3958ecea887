//! Dense integer matrices with arbitrary-precision entries.
//!
//! All Coker/Ker computations in this workspace reduce to exact integer
//! linear algebra, so entries are `BigInt` throughout — no floating point
//! and no silent overflow.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A rectangular matrix over the integers, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of machine integers (test/fixture helper).
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged row data");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows
                .iter()
                .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
                .collect(),
        }
    }

    /// Builds a diagonal matrix from the given entries.
    pub fn diagonal(diag: &[i64]) -> Self {
        let mut m = IntMatrix::zero(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, BigInt::from(d));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    /// Matrix product `self · rhs`.
    ///
    /// Panics on shape mismatch; shape errors here are always programming
    /// errors, not data errors.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Row vector (1×cols) times this matrix, returning a plain vector.
    pub fn row_vec_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "row-vector product shape mismatch");
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let add = vi * self.get(i, j);
                out[j] += add;
            }
        }
        out
    }

    /// Stacks `self` on top of `other` (both must have equal column count).
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut m = IntMatrix::zero(self.rows + other.rows, self.cols);
        m.entries[..self.entries.len()].clone_from_slice(&self.entries);
        m.entries[self.entries.len()..].clone_from_slice(&other.entries);
        m
    }

    /// Extracts row `r` as an owned vector.
    pub fn row(&self, r: usize) -> Vec<BigInt> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    /// Builds a matrix from a list of equal-length `BigInt` rows.
    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMatrix {
        let r = rows.len();
        assert!(rows.iter().all(|row| row.len() == cols), "ragged row data");
        IntMatrix {
            rows: r,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// True if every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Determinant by Bareiss elimination (exact). Square matrices only.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                // Find a row below with a nonzero pivot and swap it up.
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            let tmp = a.get(k, j).clone();
                            a.set(k, j, a.get(i, j).clone());
                            a.set(i, j, tmp);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j);
                    a.set(i, j, num / &prev);
                }
            }
            for i in k + 1..n {
                a.set(i, k, BigInt::zero());
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1).clone()
    }

    /// True if the matrix is square with determinant ±1.
    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

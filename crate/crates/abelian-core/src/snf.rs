//! Smith normal form over the integers with full transform tracking.
//!
//! For a matrix `M` we produce unimodular `U`, `V` and a diagonal `S` with
//! `M = U·S·V`, the diagonal nonnegative and forming a divisibility chain
//! d₁ | d₂ | … . Inverses of both transforms are tracked alongside, which
//! turns lattice membership and kernel computations into direct reads of the
//! decomposition.

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// The result of a Smith normal form computation: `original = u·s·v` with
/// `u`, `v` unimodular, plus their tracked inverses.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    u: IntMatrix,
    s: IntMatrix,
    v: IntMatrix,
    u_inv: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfDecomposition {
    pub fn u(&self) -> &IntMatrix {
        &self.u
    }
    pub fn s(&self) -> &IntMatrix {
        &self.s
    }
    pub fn v(&self) -> &IntMatrix {
        &self.v
    }
    pub fn u_inv(&self) -> &IntMatrix {
        &self.u_inv
    }
    pub fn v_inv(&self) -> &IntMatrix {
        &self.v_inv
    }

    /// Diagonal entries of `S` (length = min(rows, cols)).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s.get(i, i).clone()).collect()
    }
}

/// Working state for the reduction; every elementary operation updates the
/// transforms so that `original = u·s·v` and `u·u_inv = v·v_inv = I` hold
/// throughout.
struct Reducer {
    s: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    u_inv: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn new(m: &IntMatrix) -> Self {
        Reducer {
            s: m.clone(),
            u: IntMatrix::identity(m.rows()),
            v: IntMatrix::identity(m.cols()),
            u_inv: IntMatrix::identity(m.rows()),
            v_inv: IntMatrix::identity(m.cols()),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.s.cols() {
            let tmp = self.s.get(i, c).clone();
            self.s.set(i, c, self.s.get(j, c).clone());
            self.s.set(j, c, tmp);
        }
        for r in 0..self.u.rows() {
            let tmp = self.u.get(r, i).clone();
            self.u.set(r, i, self.u.get(r, j).clone());
            self.u.set(r, j, tmp);
        }
        for c in 0..self.u_inv.cols() {
            let tmp = self.u_inv.get(i, c).clone();
            self.u_inv.set(i, c, self.u_inv.get(j, c).clone());
            self.u_inv.set(j, c, tmp);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.s.rows() {
            let tmp = self.s.get(r, i).clone();
            self.s.set(r, i, self.s.get(r, j).clone());
            self.s.set(r, j, tmp);
        }
        for c in 0..self.v.cols() {
            let tmp = self.v.get(i, c).clone();
            self.v.set(i, c, self.v.get(j, c).clone());
            self.v.set(j, c, tmp);
        }
        for r in 0..self.v_inv.rows() {
            let tmp = self.v_inv.get(r, i).clone();
            self.v_inv.set(r, i, self.v_inv.get(r, j).clone());
            self.v_inv.set(r, j, tmp);
        }
    }

    /// row i += q · row j (in `s`); transforms updated accordingly.
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.s.cols() {
            let val = self.s.get(i, c) + q * self.s.get(j, c);
            self.s.set(i, c, val);
        }
        // u ← u·E⁻¹ : column j loses q · column i.
        for r in 0..self.u.rows() {
            let val = self.u.get(r, j) - q * self.u.get(r, i);
            self.u.set(r, j, val);
        }
        // u_inv ← E·u_inv : row i gains q · row j.
        for c in 0..self.u_inv.cols() {
            let val = self.u_inv.get(i, c) + q * self.u_inv.get(j, c);
            self.u_inv.set(i, c, val);
        }
    }

    /// col i += q · col j (in `s`); transforms updated accordingly.
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.s.rows() {
            let val = self.s.get(r, i) + q * self.s.get(r, j);
            self.s.set(r, i, val);
        }
        // v ← F⁻¹·v : row j loses q · row i.
        for c in 0..self.v.cols() {
            let val = self.v.get(j, c) - q * self.v.get(i, c);
            self.v.set(j, c, val);
        }
        // v_inv ← v_inv·F : column i gains q · column j.
        for r in 0..self.v_inv.rows() {
            let val = self.v_inv.get(r, i) + q * self.v_inv.get(r, j);
            self.v_inv.set(r, i, val);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.s.cols() {
            let val = -self.s.get(i, c);
            self.s.set(i, c, val);
        }
        for r in 0..self.u.rows() {
            let val = -self.u.get(r, i);
            self.u.set(r, i, val);
        }
        for c in 0..self.u_inv.cols() {
            let val = -self.u_inv.get(i, c);
            self.u_inv.set(i, c, val);
        }
    }

    /// Locates a nonzero entry of minimal absolute value in the trailing
    /// submatrix starting at (t, t); ties broken by position for determinism.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let e = self.s.get(i, j);
                if e.is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if e.abs() < self.s.get(bi, bj).abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }
}

/// Computes the Smith normal form of `m`: returns (U, S, V) with
/// `m = U·S·V`, U and V unimodular, S diagonal nonnegative with
/// d₁ | d₂ | … along the diagonal.
pub fn smith_normal_form(m: &IntMatrix) -> SnfDecomposition {
    let mut red = Reducer::new(m);
    let rank_bound = m.rows().min(m.cols());
    for t in 0..rank_bound {
        'pivot: loop {
            let Some((pi, pj)) = red.min_pivot(t) else {
                break 'pivot; // trailing submatrix is zero
            };
            red.swap_rows(t, pi);
            red.swap_cols(t, pj);

            // Clear the pivot column.
            let mut clean = true;
            for i in t + 1..red.s.rows() {
                if !red.s.get(i, t).is_zero() {
                    let q = red.s.get(i, t) / red.s.get(t, t);
                    red.add_row(i, t, &(-q));
                    if !red.s.get(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            // Clear the pivot row.
            for j in t + 1..red.s.cols() {
                if !red.s.get(t, j).is_zero() {
                    let q = red.s.get(t, j) / red.s.get(t, t);
                    red.add_col(j, t, &(-q));
                    if !red.s.get(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot; // smaller remainders exist; re-pick pivot
            }

            // Enforce divisibility into the trailing submatrix.
            let pivot = red.s.get(t, t).clone();
            let mut offender = None;
            'scan: for i in t + 1..red.s.rows() {
                for j in t + 1..red.s.cols() {
                    if !(red.s.get(i, j) % &pivot).is_zero() {
                        offender = Some(j);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(j) => {
                    // Fold the offending column into the pivot column and
                    // restart; the next pass strictly shrinks the pivot.
                    red.add_col(t, j, &BigInt::from(1));
                }
                None => break 'pivot,
            }
        }
        if red.s.get(t, t).is_negative() {
            red.negate_row(t);
        }
    }
    SnfDecomposition {
        u: red.u,
        s: red.s,
        v: red.v,
        u_inv: red.u_inv,
        v_inv: red.v_inv,
    }
}

/// Basis of the left kernel lattice { z : z·M = 0 } ⊂ ℤ^rows.
pub fn left_kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let min = m.rows().min(m.cols());
    let mut basis = Vec::new();
    for j in 0..m.rows() {
        let diag_nonzero = j < min && !snf.s.get(j, j).is_zero();
        if !diag_nonzero {
            basis.push(snf.u_inv.row(j));
        }
    }
    basis
}

/// Solves `c·M = x` over ℤ, returning one solution if any exists.
pub fn solve_left(m: &IntMatrix, x: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(x.len(), m.cols(), "target vector length mismatch");
    let snf = smith_normal_form(m);
    let y = snf.v_inv.row_vec_mul(x);
    let min = m.rows().min(m.cols());
    let mut w = vec![BigInt::zero(); m.rows()];
    for j in 0..m.cols() {
        let diag = if j < min {
            snf.s.get(j, j).clone()
        } else {
            BigInt::zero()
        };
        if diag.is_zero() {
            if !y[j].is_zero() {
                return None;
            }
        } else {
            let (q, r) = y[j].div_rem(&diag);
            if !r.is_zero() {
                return None;
            }
            w[j] = q;
        }
    }
    // c = w·u⁻¹
    Some(snf.u_inv.row_vec_mul(&w))
}

/// True if `x` lies in the lattice spanned by the rows of `M`.
pub fn row_lattice_contains(m: &IntMatrix, x: &[BigInt]) -> bool {
    solve_left(m, x).is_some()
}

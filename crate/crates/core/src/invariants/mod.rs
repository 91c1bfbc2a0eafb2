//! Exact polynomial invariants of braids and their closures.

mod knots;

use std::fmt;

use num_traits::Signed;
use rayon::prelude::*;

use crate::braid::{closure_component_count, writhe, BraidWord};
use crate::error::{BraidError, Result};
use crate::poly::{LaurentPoly1, LaurentPoly2};

pub use knots::{identify_knot, knot_table, KnotId, KnotTableEntry, KnotType};

/// Square matrix over `Z[t, t^{-1}]`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly1>,
}

impl PolyMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![LaurentPoly1::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = LaurentPoly1::one();
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly1 {
        &self.entries[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, value: LaurentPoly1) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut entries = vec![LaurentPoly1::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        entries[i * d + j] = &entries[i * d + j] + &(a * b);
                    }
                }
            }
        }
        Self { dim: d, entries }
    }

    /// Right multiplication by the image of `σ_i^{±1}`, as column operations.
    fn apply_generator(&mut self, i: usize, inverse: bool) {
        let d = self.dim;
        // 0-based column of e_i
        let c = i - 1;
        let t = LaurentPoly1::monomial(1, 1);
        let t_inv = LaurentPoly1::monomial(1, -1);
        for row in 0..d {
            let mid = self.get(row, c).clone();
            if !inverse {
                // e_{i-1} -> e_{i-1} + t e_i, e_i -> -t e_i, e_{i+1} -> e_i + e_{i+1}
                if c >= 1 {
                    let v = self.get(row, c - 1) + &(&t * &mid);
                    self.set(row, c - 1, v);
                }
                if c + 1 < d {
                    let v = self.get(row, c + 1) + &mid;
                    self.set(row, c + 1, v);
                }
                self.set(row, c, -(&t * &mid));
            } else {
                // e_{i-1} -> e_{i-1} + e_i, e_i -> -t^{-1} e_i, e_{i+1} -> t^{-1} e_i + e_{i+1}
                if c >= 1 {
                    let v = self.get(row, c - 1) + &mid;
                    self.set(row, c - 1, v);
                }
                if c + 1 < d {
                    let v = self.get(row, c + 1) + &(&t_inv * &mid);
                    self.set(row, c + 1, v);
                }
                self.set(row, c, -(&t_inv * &mid));
            }
        }
    }

    /// Coefficients `[1, c_1, ..., c_d]` of `det(x I − M) = Σ c_k x^{d−k}`,
    /// by Berkowitz's division-free algorithm.
    pub fn char_poly_coefficients(&self) -> Vec<LaurentPoly1> {
        let mut coeffs = vec![LaurentPoly1::one()];
        for r in 0..self.dim {
            // leading r×r block M, column C above and row R left of the pivot
            let pivot = self.get(r, r);
            let mut toeplitz = Vec::with_capacity(r + 2);
            toeplitz.push(LaurentPoly1::one());
            toeplitz.push(-pivot);
            let mut column: Vec<LaurentPoly1> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let rc = (0..r).fold(LaurentPoly1::zero(), |acc, j| {
                    &acc + &(self.get(r, j) * &column[j])
                });
                toeplitz.push(-rc);
                column = (0..r)
                    .map(|i| {
                        (0..r).fold(LaurentPoly1::zero(), |acc, j| {
                            &acc + &(self.get(i, j) * &column[j])
                        })
                    })
                    .collect();
            }
            let next: Vec<LaurentPoly1> = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(LaurentPoly1::zero(), |acc, j| {
                        &acc + &(&toeplitz[i - j] * &coeffs[j])
                    })
                })
                .collect();
            coeffs = next;
        }
        coeffs
    }

    pub fn determinant(&self) -> LaurentPoly1 {
        let last = self.char_poly_coefficients().pop().unwrap();
        if self.dim % 2 == 1 {
            -last
        } else {
            last
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "PolyMatrix{rows:?}")
    }
}

/// The reduced Burau matrix of `w`, an `(n−1)×(n−1)` matrix over `Z[t^{±1}]`.
///
/// `σ_i` acts on the basis `e_1..e_{n−1}` by `e_{i−1} ↦ e_{i−1} + t e_i`,
/// `e_i ↦ −t e_i`, `e_{i+1} ↦ e_i + e_{i+1}`; images are matrix columns and the
/// word is multiplied left to right.
pub fn reduced_burau(w: &BraidWord) -> PolyMatrix {
    let dim = w.strands() - 1;
    let mut m = PolyMatrix::identity(dim);
    for &l in w.letters() {
        m.apply_generator(l.unsigned_abs() as usize, l < 0);
    }
    m
}

/// Burau matrix of a long word by balanced parallel reduction.
pub fn reduced_burau_parallel(w: &BraidWord) -> PolyMatrix {
    const CHUNK: usize = 64;
    let n = w.strands();
    w.letters()
        .par_chunks(CHUNK)
        .map(|chunk| reduced_burau(&BraidWord::new(n, chunk.to_vec()).expect("sub-word")))
        .reduce(|| PolyMatrix::identity(n - 1), |a, b| a.mul(&b))
}

/// Characteristic polynomial of the reduced Burau matrix `B`, taken as
/// `det(I − x B)` and normalized up to units `±t^a x^b`.
///
/// This is the Alexander polynomial of the closure together with the braid
/// axis, a conjugacy invariant.
pub fn burau_char_poly(w: &BraidWord) -> LaurentPoly2 {
    let coeffs = reduced_burau(w).char_poly_coefficients();
    // det(I - xB) = Σ c_k x^k where det(xI - B) = Σ c_k x^{d-k}
    LaurentPoly2::from_x_coefficients(&coeffs).normalized()
}

/// Alexander polynomial of the closure of `w`, which must be a knot, in the
/// symmetric normalization with `Δ(1) = 1`.
pub fn alexander_of_closure(w: &BraidWord) -> Result<LaurentPoly1> {
    let components = closure_component_count(w);
    if components != 1 {
        return Err(BraidError::NotAKnot { components });
    }
    let n = w.strands() as i64;
    // det(I - B) is det(I - xB) at x = 1
    let det = reduced_burau(w)
        .char_poly_coefficients()
        .iter()
        .fold(LaurentPoly1::zero(), |acc, c| &acc + c);
    let numerator = &det * &LaurentPoly1::from_i64s(0, &[1, -1]);
    let mut cyclic = vec![0i64; n as usize + 1];
    cyclic[0] = 1;
    cyclic[n as usize] = -1;
    let alexander = numerator
        .div_exact(&LaurentPoly1::from_i64s(0, &cyclic))
        .expect("(1 - t^n) divides det(I - B)(1 - t) for a knot closure");
    Ok(symmetrize(&alexander))
}

/// Shifts to a window symmetric about `t^0` and fixes the sign so `Δ(1) > 0`.
pub(crate) fn symmetrize(p: &LaurentPoly1) -> LaurentPoly1 {
    if p.is_zero() {
        return p.clone();
    }
    let span = p.high_exp() - p.low_exp();
    let shifted = p.shift(-p.low_exp() - span / 2);
    if shifted.eval_one().is_negative() {
        -shifted
    } else {
        shifted
    }
}

/// Seifert genus of the closure of a positive braid whose closure is a
/// non-split knot: `crossings = (n − 1) + 2g`.
pub fn genus_of_positive_closure(w: &BraidWord) -> Result<u32> {
    if !w.is_positive() {
        return Err(BraidError::NotPositive);
    }
    let n = w.strands();
    let mut present = vec![false; n];
    for &l in w.letters() {
        present[l as usize] = true;
    }
    if let Some(missing) = (1..n).find(|&i| !present[i]) {
        return Err(BraidError::SplitClosure { missing });
    }
    let components = closure_component_count(w);
    if components != 1 {
        return Err(BraidError::NotAKnot { components });
    }
    Ok(((writhe(w) - n as i64 + 1) / 2) as u32)
}

/// `det(reduced_burau(w))`, which is `(−t)^{writhe}`.
pub fn burau_determinant(w: &BraidWord) -> LaurentPoly1 {
    reduced_burau(w).determinant()
}

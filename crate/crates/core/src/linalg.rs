//! Dense exact linear algebra over a field: RREF, rank, nullspace, determinant.

use num_traits::{One, Zero};

use crate::scalar::{GaussianRational, Rational};

/// Exact field arithmetic needed by Gaussian elimination.
pub trait Field: Clone + PartialEq + Zero + One {
    fn f_add(&self, o: &Self) -> Self;
    fn f_sub(&self, o: &Self) -> Self;
    fn f_mul(&self, o: &Self) -> Self;
    /// Panics on division by zero.
    fn f_div(&self, o: &Self) -> Self;
}

impl Field for Rational {
    fn f_add(&self, o: &Self) -> Self {
        self + o
    }
    fn f_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn f_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn f_div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Field for GaussianRational {
    fn f_add(&self, o: &Self) -> Self {
        self + o
    }
    fn f_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn f_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn f_div(&self, o: &Self) -> Self {
        self / o
    }
}

/// Row-major dense matrix.
pub type Matrix<F> = Vec<Vec<F>>;

/// Reduces `m` in place to reduced row echelon form and returns the pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = F::one().f_div(&m[r][c]);
        if !inv.is_one() {
            for x in m[r][c..].iter_mut() {
                *x = x.f_mul(&inv);
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x = x.f_sub(&f.f_mul(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{x : m x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(m: &Matrix<F>, cols: usize) -> Vec<Vec<F>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                let x = &a[r][f];
                if !x.is_zero() {
                    v[pc] = F::zero().f_sub(x);
                }
            }
            v
        })
        .collect()
}

/// Determinant by fraction-based elimination; `m` must be square.
pub fn det<F: Field>(m: &Matrix<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut d = F::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if piv != c {
            a.swap(piv, c);
            d = F::zero().f_sub(&d);
        }
        d = d.f_mul(&a[c][c]);
        let inv = F::one().f_div(&a[c][c]);
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].f_mul(&inv);
            for k in c..n {
                let t = f.f_mul(&a[c][k]);
                a[i][k] = a[i][k].f_sub(&t);
            }
        }
    }
    d
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let k = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..k).fold(F::zero(), |acc, t| acc.f_add(&row[t].f_mul(&b[t][j])))
                })
                .collect()
        })
        .collect()
}

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect()
}

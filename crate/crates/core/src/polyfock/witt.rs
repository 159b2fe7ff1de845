use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Ambient, SparsePoly};
use crate::error::{Error, Result};
use crate::scalar::{rat, GaussianRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WittKind {
    /// `w'_{α,j} = z_{α,j} + i z_{α',j}`.
    Prime,
    /// `w''_{α,j} = z_{α,j} − i z_{α',j}`.
    DoublePrime,
}

fn check_alpha(alpha: usize, amb: Ambient) -> Result<()> {
    if alpha == 0 || alpha > amb.p0() {
        return Err(Error::IndexOutOfRange(format!(
            "Witt index {alpha} outside 1..={}",
            amb.p0()
        )));
    }
    Ok(())
}

/// The Witt coordinate with partner index `α' = 2p₀ − α + 1`.
pub fn witt_w(kind: WittKind, alpha: usize, j: usize, amb: Ambient) -> Result<SparsePoly> {
    check_alpha(alpha, amb)?;
    let partner = 2 * amb.p0() - alpha + 1;
    let sign = match kind {
        WittKind::Prime => GaussianRational::i(),
        WittKind::DoublePrime => -GaussianRational::i(),
    };
    let a = SparsePoly::var(amb, alpha, j)?;
    let b = SparsePoly::var(amb, partner, j)?.scale(&sign);
    Ok(&a + &b)
}

/// The extra coordinate `t_j = z_{p,j}` present when `p` is odd.
pub fn witt_t(j: usize, amb: Ambient) -> Result<SparsePoly> {
    if amb.p.is_multiple_of(2) {
        return Err(Error::Precondition(format!("t_j needs odd p, got p={}", amb.p)));
    }
    SparsePoly::var(amb, amb.p, j)
}

/// The `p₀ × n` matrix `W''` with entries `w''_{α,j}`.
pub fn w_matrix(amb: Ambient) -> Result<Vec<Vec<SparsePoly>>> {
    (1..=amb.p0())
        .map(|a| {
            (1..=amb.n)
                .map(|j| witt_w(WittKind::DoublePrime, a, j, amb))
                .collect()
        })
        .collect()
}

/// Determinant of a square matrix of polynomials by Laplace expansion along rows,
/// memoized on the set of remaining columns and skipping zero entries.
pub fn poly_det(m: &[Vec<SparsePoly>], amb: Ambient) -> Result<SparsePoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition("determinant of a non-square matrix".into()));
    }
    if n > 63 {
        return Err(Error::Unsupported(format!("{n}x{n} polynomial determinant")));
    }
    fn go(
        m: &[Vec<SparsePoly>],
        amb: Ambient,
        cols: u64,
        memo: &mut HashMap<u64, SparsePoly>,
    ) -> SparsePoly {
        if cols == 0 {
            return SparsePoly::one(amb);
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let row = m.len() - cols.count_ones() as usize;
        let mut acc = SparsePoly::zero(amb);
        let mut sign_neg = false;
        for c in 0..m.len() {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = &m[row][c];
            if !entry.is_zero() {
                let minor = go(m, amb, cols & !(1 << c), memo);
                if !minor.is_zero() {
                    let t = entry * &minor;
                    acc = if sign_neg { &acc - &t } else { &acc + &t };
                }
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    Ok(go(m, amb, full, &mut HashMap::new()))
}

/// `Δ_k`, the leading principal `k × k` minor of `W''`.
pub fn minor_delta(k: usize, amb: Ambient) -> Result<SparsePoly> {
    if k == 0 || k > amb.p0() || k > amb.n {
        return Err(Error::IndexOutOfRange(format!(
            "minor order {k} outside 1..={}",
            amb.p0().min(amb.n)
        )));
    }
    let w = w_matrix(amb)?;
    let block: Vec<Vec<SparsePoly>> = w[..k].iter().map(|r| r[..k].to_vec()).collect();
    poly_det(&block, amb)
}

/// Flat coordinates of the tuple `(u''_1, …, u''_n)` with `u''_j = ½(v_j + i v_{j'})`,
/// the point where `W''` is the identity.
pub fn dual_witt_point(amb: Ambient) -> Result<Vec<GaussianRational>> {
    if amb.n > amb.p0() {
        return Err(Error::Precondition(format!(
            "n={} exceeds the Witt index {}",
            amb.n,
            amb.p0()
        )));
    }
    let mut x = vec![GaussianRational::zero(); amb.nvars()];
    let half = rat(1, 2);
    for j in 1..=amb.n {
        let partner = 2 * amb.p0() - j + 1;
        x[amb.var(j, j)?] = GaussianRational::from_rational(half.clone());
        x[amb.var(partner, j)?] = GaussianRational::new(Zero::zero(), half.clone());
    }
    Ok(x)
}

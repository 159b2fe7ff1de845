use std::collections::HashMap;

use num_traits::Zero;

use super::{Ambient, Monomial, SparsePoly};
use crate::error::{Error, Result};
use crate::linalg::{rank, Matrix};
use crate::scalar::Rational;

/// Largest homogeneous component the dense nullspace routine accepts by default.
pub const DEFAULT_NULLSPACE_CAP: usize = 2000;

/// The monomials of degree `ell` in the positive variables, in increasing order.
pub fn positive_monomials(amb: Ambient, ell: u32) -> Vec<Monomial> {
    let npos = amb.p * amb.n;
    let nv = amb.nvars();
    let mut out = Vec::new();
    fn go(v: usize, npos: usize, rest: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v + 1 == npos {
            exps[v] = rest;
            out.push(Monomial::from_exps(exps.clone()));
            exps[v] = 0;
            return;
        }
        for e in 0..=rest {
            exps[v] = e;
            go(v + 1, npos, rest - e, exps, out);
        }
        exps[v] = 0;
    }
    if npos == 0 {
        if ell == 0 {
            out.push(Monomial::one(nv));
        }
        return out;
    }
    // Flat indices of positive variables are exactly 0..p·n.
    go(0, npos, ell, &mut vec![0; nv], &mut out);
    out.sort();
    out
}

/// Dimension of the joint kernel of all `Δ_ij` on the degree-`ell` positive polynomials,
/// by exact rank of the stacked Laplacian matrices.
pub fn harmonic_space_dim(amb: Ambient, ell: u32, cap: usize) -> Result<usize> {
    let source = positive_monomials(amb, ell);
    if source.len() > cap {
        return Err(Error::CapExceeded {
            dim: source.len(),
            cap,
        });
    }
    if ell < 2 {
        return Ok(source.len());
    }
    let target: HashMap<Monomial, usize> = positive_monomials(amb, ell - 2)
        .into_iter()
        .enumerate()
        .map(|(k, m)| (m, k))
        .collect();
    let n = amb.n;
    let blocks: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    let mut mat: Matrix<Rational> =
        vec![vec![Rational::zero(); source.len()]; blocks.len() * target.len()];
    for (col, m) in source.iter().enumerate() {
        let poly = SparsePoly::from_terms(amb, [(m.clone(), 1.into())])?;
        for (b, &(i, j)) in blocks.iter().enumerate() {
            for (tm, c) in poly.laplacian(i, j)?.terms() {
                debug_assert!(c.is_real());
                mat[b * target.len() + target[tm]][col] = c.re.clone();
            }
        }
    }
    Ok(source.len() - rank(&mat))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        let cap = DEFAULT_NULLSPACE_CAP;
        assert_eq!(harmonic_space_dim(Ambient::new(3, 0, 2), 0, cap).unwrap(), 1);
        assert_eq!(harmonic_space_dim(Ambient::new(3, 1, 2), 1, cap).unwrap(), 6);
        assert_eq!(harmonic_space_dim(Ambient::new(3, 0, 1), 2, cap).unwrap(), 5);
        assert_eq!(harmonic_space_dim(Ambient::new(4, 0, 2), 2, cap).unwrap(), 33);
        // Spherical harmonics in three variables: 2ℓ+1.
        assert_eq!(harmonic_space_dim(Ambient::new(3, 0, 1), 4, cap).unwrap(), 9);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            harmonic_space_dim(Ambient::new(4, 0, 2), 4, 10),
            Err(Error::CapExceeded { dim: 330, cap: 10 })
        );
    }

    #[test]
    fn monomial_count() {
        assert_eq!(positive_monomials(Ambient::new(4, 2, 2), 4).len(), 330);
        assert_eq!(positive_monomials(Ambient::new(0, 2, 1), 0).len(), 1);
        assert!(positive_monomials(Ambient::new(0, 2, 1), 1).is_empty());
    }
}

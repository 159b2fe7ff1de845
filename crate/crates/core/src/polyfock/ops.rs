use serde::{Deserialize, Serialize};

use super::{SparsePoly, VarIndex};
use crate::error::{Error, Result};
use crate::scalar::{rat, GaussianRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyOp {
    Add,
    Mul,
}

pub fn poly_arith(a: &SparsePoly, b: &SparsePoly, op: PolyOp) -> Result<SparsePoly> {
    match op {
        PolyOp::Add => a.checked_add(b),
        PolyOp::Mul => a.checked_mul(b),
    }
}

/// Oscillator generators on flat variable indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpKind {
    /// Multiplication by `z_i z_j`.
    Raise(usize, usize),
    /// `∂²/∂z_i∂z_j`.
    Lower(usize, usize),
    /// `½(z_i ∂_j + ∂_j z_i) = z_i ∂_j + ½δ_ij`.
    Mixed(usize, usize),
}

impl SparsePoly {
    pub(crate) fn partial_flat(&self, v: usize) -> SparsePoly {
        let mut r = SparsePoly::zero(self.ambient);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.bump(v, -1);
            r.add_term(m2, c * &GaussianRational::from_int(e as i64));
        }
        r
    }

    pub(crate) fn mul_var_flat(&self, v: usize) -> SparsePoly {
        SparsePoly {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m2 = m.clone();
                    m2.bump(v, 1);
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    /// `∂/∂z_{v.alpha, v.j}`.
    pub fn partial(&self, v: VarIndex) -> Result<SparsePoly> {
        let flat = self.ambient.var(v.alpha, v.j)?;
        Ok(self.partial_flat(flat))
    }

    /// `Δ_ij = Σ_{α≤p} ∂²/∂z_{α,i}∂z_{α,j}` on polynomials in the positive variables.
    pub fn laplacian(&self, i: usize, j: usize) -> Result<SparsePoly> {
        let amb = self.ambient;
        if !self.is_positive() {
            return Err(Error::NegativeVariables);
        }
        amb.var(1, i)?;
        amb.var(1, j)?;
        let mut r = SparsePoly::zero(amb);
        for alpha in 1..=amb.p {
            let d = self
                .partial_flat(amb.var(alpha, i)?)
                .partial_flat(amb.var(alpha, j)?);
            for (m, c) in d.terms {
                r.add_term(m, c);
            }
        }
        Ok(r)
    }

    /// Whether every `Δ_ij` (`i ≤ j`) kills the polynomial.
    pub fn is_pluriharmonic(&self) -> Result<bool> {
        let n = self.ambient.n;
        for i in 1..=n {
            for j in i..=n {
                if !self.laplacian(i, j)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn sp_generator(poly: &SparsePoly, kind: SpKind) -> Result<SparsePoly> {
    let nv = poly.ambient().nvars();
    let check = |i: usize, j: usize| -> Result<()> {
        if i >= nv || j >= nv {
            return Err(Error::IndexOutOfRange(format!(
                "flat variables ({i},{j}) outside 0..{nv}"
            )));
        }
        Ok(())
    };
    Ok(match kind {
        SpKind::Raise(i, j) => {
            check(i, j)?;
            poly.mul_var_flat(i).mul_var_flat(j)
        }
        SpKind::Lower(i, j) => {
            check(i, j)?;
            poly.partial_flat(i).partial_flat(j)
        }
        SpKind::Mixed(i, j) => {
            check(i, j)?;
            let mut r = poly.partial_flat(j).mul_var_flat(i);
            if i == j {
                let half = GaussianRational::from_rational(rat(1, 2));
                for (m, c) in poly.terms() {
                    r.add_term(m.clone(), c * &half);
                }
            }
            r
        }
    })
}

/// `[Lower(i,j), Raise(k,l)] f` evaluated through the closed form
/// `δ_jk M(l,i) + δ_jl M(k,i) + δ_ik M(l,j) + δ_il M(k,j)` with `M` the mixed generator.
pub fn lower_raise_commutator(
    poly: &SparsePoly,
    (i, j): (usize, usize),
    (k, l): (usize, usize),
) -> Result<SparsePoly> {
    let mut r = SparsePoly::zero(poly.ambient());
    let terms = [(j, k, l, i), (j, l, k, i), (i, k, l, j), (i, l, k, j)];
    for (a, b, x, y) in terms {
        if a == b {
            r = r.checked_add(&sp_generator(poly, SpKind::Mixed(x, y))?)?;
        }
    }
    Ok(r)
}

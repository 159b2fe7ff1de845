use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::SparsePoly;
use crate::error::{Error, Result};
use crate::linalg::det;
use crate::scalar::GaussianRational;

/// A half-integer exponent stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Twist {
    pub twice: i64,
}

impl Twist {
    pub fn integer(k: i64) -> Self {
        Twist { twice: 2 * k }
    }

    /// `(p − q)/2`, the twist of the oscillator action.
    pub fn weil(p: usize, q: usize) -> Self {
        Twist {
            twice: p as i64 - q as i64,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.twice % 2 == 0
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// `sqrt(det)^pending · poly`: the result of a twisted action whose half-integral
/// part could not be evaluated to a scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPoly {
    pub poly: SparsePoly,
    pub det: GaussianRational,
    /// True when a factor `det^{1/2}` is still owed.
    pub pending_half: bool,
}

impl TwistedPoly {
    /// The plain polynomial; fails while a square root is still owed.
    pub fn into_poly(self) -> Result<SparsePoly> {
        if self.pending_half {
            return Err(Error::NoSquareRoot(format!("det(g) = {}", self.det)));
        }
        Ok(self.poly)
    }
}

/// `det(g)^twist · P(Z g)` where `z_{α,j} ↦ Σ_k g_{k,j} z_{α,k}`.
///
/// For a half-integral twist, `root` designates `det(g)^{1/2}`; it must square to
/// `det(g)`. Without it the half power is returned as pending metadata.
pub fn gl_act(
    g: &[Vec<GaussianRational>],
    poly: &SparsePoly,
    twist: Twist,
    root: Option<&GaussianRational>,
) -> Result<TwistedPoly> {
    let amb = poly.ambient();
    let n = amb.n;
    if g.len() != n || g.iter().any(|r| r.len() != n) {
        return Err(Error::LengthMismatch(g.len(), n));
    }
    let d = det(&g.to_vec());
    if d.is_zero() {
        return Err(Error::Singular);
    }

    let images: Vec<SparsePoly> = (0..amb.nvars())
        .map(|v| {
            let vi = amb.var_index(v);
            let mut img = SparsePoly::zero(amb);
            for k in 1..=n {
                let c = &g[k - 1][vi.j - 1];
                if !c.is_zero() {
                    let zk = SparsePoly::flat_var(amb, amb.var(vi.alpha, k).expect("in range"));
                    img = &img + &zk.scale(c);
                }
            }
            img
        })
        .collect();

    let mut powers: HashMap<(usize, u32), SparsePoly> = HashMap::new();
    let mut out = SparsePoly::zero(amb);
    for (m, c) in poly.terms() {
        let mut t = SparsePoly::constant(amb, c.clone());
        for (v, e) in m.support() {
            let pw = powers
                .entry((v, e))
                .or_insert_with(|| images[v].pow(e))
                .clone();
            t = &t * &pw;
        }
        out = &out + &t;
    }

    let whole = twist.twice.div_euclid(2);
    let half = twist.twice.rem_euclid(2) == 1;
    let factor = d.powi(whole).expect("det is nonzero");
    out = out.scale(&factor);
    let mut pending_half = half;
    if half {
        if let Some(r) = root {
            if r.pow(2) != d {
                return Err(Error::BadSquareRoot);
            }
            out = out.scale(r);
            pending_half = false;
        }
    }
    Ok(TwistedPoly {
        poly: out,
        det: d,
        pending_half,
    })
}

//! Sparse polynomials over `Q(i)` in the Fock-model variables `z_{α,j}`.

mod gl;
mod harmonic;
mod io;
mod ops;
mod witt;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

pub use gl::{gl_act, Twist, TwistedPoly};
pub use harmonic::{harmonic_space_dim, positive_monomials, DEFAULT_NULLSPACE_CAP};
pub use ops::{lower_raise_commutator, poly_arith, sp_generator, PolyOp, SpKind};
pub use witt::{dual_witt_point, minor_delta, poly_det, w_matrix, witt_t, witt_w, WittKind};

/// Signature `(p, q)` of `V` and the number `n` of copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ambient {
    pub p: usize,
    pub q: usize,
    pub n: usize,
}

impl Ambient {
    pub fn new(p: usize, q: usize, n: usize) -> Self {
        Ambient { p, q, n }
    }

    pub fn m(&self) -> usize {
        self.p + self.q
    }

    /// Witt index `⌊p/2⌋` of the positive part.
    pub fn p0(&self) -> usize {
        self.p / 2
    }

    pub fn nvars(&self) -> usize {
        self.m() * self.n
    }

    /// Flat index of `z_{α,j}`; 1-based inputs.
    pub fn var(&self, alpha: usize, j: usize) -> Result<usize> {
        if alpha == 0 || alpha > self.m() || j == 0 || j > self.n {
            return Err(Error::IndexOutOfRange(format!(
                "z[{alpha},{j}] outside 1..={} x 1..={}",
                self.m(),
                self.n
            )));
        }
        Ok((alpha - 1) * self.n + (j - 1))
    }

    pub fn var_index(&self, flat: usize) -> VarIndex {
        VarIndex {
            alpha: flat / self.n + 1,
            j: flat % self.n + 1,
        }
    }

    pub fn is_positive_var(&self, flat: usize) -> bool {
        flat / self.n < self.p
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p,q,n)=({},{},{})", self.p, self.q, self.n)
    }
}

/// The variable `z_{alpha,j}`; `alpha ≤ p` marks a positive variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VarIndex {
    pub alpha: usize,
    pub j: usize,
}

/// Dense exponent vector over the flat variable list.
///
/// Ordered by total degree, then lexicographically on the exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[v] = 1;
        m.degree = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.exps[v]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + o.degree,
        }
    }

    /// Support as `(flat variable, exponent)` pairs in increasing variable order.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (v, e))
    }

    pub(crate) fn bump(&mut self, v: usize, delta: i32) {
        self.exps[v] = (self.exps[v] as i32 + delta) as u32;
        self.degree = (self.degree as i32 + delta) as u32;
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree.cmp(&o.degree).then_with(|| self.exps.cmp(&o.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// A polynomial with exact `Q(i)` coefficients. No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    ambient: Ambient,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl SparsePoly {
    pub fn zero(ambient: Ambient) -> Self {
        SparsePoly {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ambient: Ambient, c: GaussianRational) -> Self {
        let mut p = SparsePoly::zero(ambient);
        p.add_term(Monomial::one(ambient.nvars()), c);
        p
    }

    pub fn one(ambient: Ambient) -> Self {
        SparsePoly::constant(ambient, GaussianRational::one())
    }

    /// `z_{alpha,j}`.
    pub fn var(ambient: Ambient, alpha: usize, j: usize) -> Result<Self> {
        let v = ambient.var(alpha, j)?;
        Ok(SparsePoly::flat_var(ambient, v))
    }

    pub(crate) fn flat_var(ambient: Ambient, v: usize) -> Self {
        let mut p = SparsePoly::zero(ambient);
        p.add_term(Monomial::var(ambient.nvars(), v), GaussianRational::one());
        p
    }

    pub fn from_terms(
        ambient: Ambient,
        terms: impl IntoIterator<Item = (Monomial, GaussianRational)>,
    ) -> Result<Self> {
        let mut p = SparsePoly::zero(ambient);
        for (m, c) in terms {
            if m.exps.len() != ambient.nvars() {
                return Err(Error::LengthMismatch(m.exps.len(), ambient.nvars()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, GaussianRational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(a), Some(b)) => a.degree == b.degree,
            _ => true,
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> SparsePoly {
        SparsePoly {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when only variables with `alpha ≤ p` occur.
    pub fn is_positive(&self) -> bool {
        let amb = self.ambient;
        self.terms
            .keys()
            .all(|m| m.support().all(|(v, _)| amb.is_positive_var(v)))
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, o: &SparsePoly) -> Result<()> {
        if self.ambient != o.ambient {
            return Err(Error::AmbientMismatch(self.ambient, o.ambient));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &SparsePoly) -> Result<SparsePoly> {
        self.check(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &SparsePoly) -> Result<SparsePoly> {
        self.check(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c);
        }
        Ok(r)
    }

    pub fn checked_mul(&self, o: &SparsePoly) -> Result<SparsePoly> {
        self.check(o)?;
        let mut r = SparsePoly::zero(self.ambient);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &GaussianRational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.ambient);
        }
        SparsePoly {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut acc = SparsePoly::one(self.ambient);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a point given by one value per flat variable.
    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.ambient.nvars() {
            return Err(Error::LengthMismatch(point.len(), self.ambient.nvars()));
        }
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.support() {
                t *= &point[v].pow(e);
            }
            acc += &t;
        }
        Ok(acc)
    }
}

impl std::ops::Add for &SparsePoly {
    type Output = SparsePoly;
    /// Panics on ambient mismatch; use [`SparsePoly::checked_add`] for a fallible form.
    fn add(self, o: &SparsePoly) -> SparsePoly {
        self.checked_add(o).expect("ambient mismatch")
    }
}

impl std::ops::Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, o: &SparsePoly) -> SparsePoly {
        self.checked_sub(o).expect("ambient mismatch")
    }
}

impl std::ops::Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, o: &SparsePoly) -> SparsePoly {
        self.checked_mul(o).expect("ambient mismatch")
    }
}

impl std::ops::Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-GaussianRational::one())
    }
}

//! Values of the Kudla–Millson and Funke–Millson cocycles on the Vogan–Zuckerman vector
//! and on the highest weight vector of `S_λ(ℂⁿ) ⊗ S_{[λ]}(V₊)`.
//!
//! Normalization: `u'_j = v_j − i v_{j'}` and `u''_j = ½(v_j + i v_{j'})`, so that
//! `W''(u''_1, …, u''_n) = I` and every closed form below holds with constant 1.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exterior::{u_prime, vz_vector, MultiVector};
use crate::linalg::{det, Matrix};
use crate::partitions::Partition;
use crate::polyfock::{minor_delta, poly_det, Ambient, SparsePoly, Twist};
use crate::scalar::GaussianRational;

/// `λ = Σ a_i ϖ_i`; the partition form is `λ_k = Σ_{i≥k} a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FundamentalWeightVector {
    pub a: Vec<u32>,
}

impl FundamentalWeightVector {
    pub fn new(a: Vec<u32>) -> Self {
        FundamentalWeightVector { a }
    }

    pub fn zero(n: usize) -> Self {
        FundamentalWeightVector { a: vec![0; n] }
    }

    pub fn from_partition(lam: &Partition) -> Self {
        let parts = lam.parts();
        let a = (0..parts.len())
            .map(|k| (parts[k] - parts.get(k + 1).copied().unwrap_or(0)) as u32)
            .collect();
        FundamentalWeightVector { a }
    }

    pub fn to_partition(&self) -> Partition {
        let parts: Vec<usize> = (0..self.a.len())
            .map(|k| self.a[k..].iter().map(|&x| x as usize).sum())
            .collect();
        Partition::new(parts).expect("suffix sums are weakly decreasing")
    }

    /// Total degree `|λ| = Σ k·a_k`.
    pub fn size(&self) -> usize {
        self.a.iter().enumerate().map(|(k, &x)| (k + 1) * x as usize).sum()
    }

    /// Index of the last nonzero entry, 1-based; 0 for the zero weight.
    pub fn depth(&self) -> usize {
        self.a.iter().rposition(|&x| x != 0).map_or(0, |k| k + 1)
    }
}

fn check_rank(amb: Ambient) -> Result<()> {
    if amb.n > amb.p0() {
        return Err(Error::Precondition(format!(
            "n={} exceeds the Witt index ⌊p/2⌋={}",
            amb.n,
            amb.p0()
        )));
    }
    Ok(())
}

fn check_weight(a: &FundamentalWeightVector, amb: Ambient) -> Result<()> {
    check_rank(amb)?;
    if a.depth() > amb.n {
        return Err(Error::Precondition(format!(
            "weight {:?} has nonzero entries beyond n={}",
            a.a, amb.n
        )));
    }
    Ok(())
}

/// `(x̃_1 ∧ … ∧ x̃_n, mv)` with `x̃ = (x ⊗ v_{p+1}*) ∧ … ∧ (x ⊗ v_{p+q}*)`.
///
/// On a basis set `{ω_{α_k,μ_k}}` this is the determinant whose row `(i, j)` holds
/// `x_i[α_k]·[μ_k = p+j]`; rows run over `i` outer, `j` inner.
pub fn km_pair(xs: &[Vec<GaussianRational>], mv: &MultiVector) -> Result<GaussianRational> {
    let (p, q) = mv.signature();
    let n = xs.len();
    if let Some(x) = xs.iter().find(|x| x.len() != p) {
        return Err(Error::LengthMismatch(x.len(), p));
    }
    let mut acc = GaussianRational::zero();
    for (set, c) in mv.terms() {
        if set.len() != n * q {
            return Err(Error::DegreeMismatch {
                expected: n * q,
                got: set.len(),
            });
        }
        let m: Matrix<GaussianRational> = (0..n)
            .flat_map(|i| (1..=q).map(move |j| (i, j)))
            .map(|(i, j)| {
                set.iter()
                    .map(|b| {
                        if b.mu == p + j {
                            xs[i][b.alpha - 1].clone()
                        } else {
                            GaussianRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        acc += &(c * &det(&m));
    }
    Ok(acc)
}

/// `km_pair` with `x_i` replaced by the variables `(z_{1,i}, …, z_{p,i})`.
pub fn km_pair_symbolic(mv: &MultiVector, amb: Ambient) -> Result<SparsePoly> {
    let (p, q) = mv.signature();
    if (p, q) != (amb.p, amb.q) {
        return Err(Error::ExteriorAmbientMismatch(p, q, amb.p, amb.q));
    }
    let n = amb.n;
    let mut acc = SparsePoly::zero(amb);
    for (set, c) in mv.terms() {
        if set.len() != n * q {
            return Err(Error::DegreeMismatch {
                expected: n * q,
                got: set.len(),
            });
        }
        let mut m: Vec<Vec<SparsePoly>> = Vec::with_capacity(n * q);
        for i in 1..=n {
            for j in 1..=q {
                let row = set
                    .iter()
                    .map(|b| {
                        if b.mu == p + j {
                            SparsePoly::var(amb, b.alpha, i)
                        } else {
                            Ok(SparsePoly::zero(amb))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                m.push(row);
            }
        }
        acc = &acc + &poly_det(&m, amb)?.scale(c);
    }
    Ok(acc)
}

/// `x ↦ φ_{nq}(e(𝔮))(x)`, computed by pairing against the expanded `e(𝔮)`.
pub fn km_value_on_vz(amb: Ambient) -> Result<SparsePoly> {
    check_rank(amb)?;
    km_pair_symbolic(&vz_vector(amb.n, amb.p, amb.q)?, amb)
}

/// The monomial `z_{β_1,i_1} ⋯ z_{β_ℓ,i_ℓ}`.
pub fn fm_zero(i: &[usize], beta: &[usize], amb: Ambient) -> Result<SparsePoly> {
    if i.len() != beta.len() {
        return Err(Error::LengthMismatch(i.len(), beta.len()));
    }
    let mut exps = vec![0u32; amb.nvars()];
    for (&j, &b) in i.iter().zip(beta) {
        if b == 0 || b > amb.p {
            return Err(Error::IndexOutOfRange(format!(
                "positive index {b} outside 1..={}",
                amb.p
            )));
        }
        exps[amb.var(b, j)?] += 1;
    }
    SparsePoly::from_terms(
        amb,
        [(crate::polyfock::Monomial::from_exps(exps), GaussianRational::one())],
    )
}

/// An element of `T^ℓ(ℂⁿ) ⊗ T^ℓ(V₊)` in the standard bases, stored sparsely as
/// `(e-slot indices, v-slot indices) → coefficient`, all indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTensor {
    n: usize,
    p: usize,
    terms: BTreeMap<(Vec<usize>, Vec<usize>), GaussianRational>,
}

fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, bool)> {
    use itertools::Itertools;
    (0..k)
        .permutations(k)
        .map(|perm| {
            let mut odd = false;
            for a in 0..k {
                for b in a + 1..k {
                    if perm[a] > perm[b] {
                        odd = !odd;
                    }
                }
            }
            (perm, odd)
        })
        .collect()
}

impl PairTensor {
    /// The unit of the tensor algebra (`ℓ = 0`).
    pub fn unit(n: usize, p: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((vec![], vec![]), GaussianRational::one());
        PairTensor { n, p, terms }
    }

    pub fn terms(&self) -> &BTreeMap<(Vec<usize>, Vec<usize>), GaussianRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Tensor order `ℓ`; `None` for zero.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().next().map(|(e, _)| e.len())
    }

    fn add_term(&mut self, key: (Vec<usize>, Vec<usize>), c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The factor `[e_1 ∧ … ∧ e_k] ⊗ [u'_1 ∧ … ∧ u'_k]`, the second wedge normalized by `1/k!`.
    pub fn wedge_factor(k: usize, n: usize, p: usize) -> Result<Self> {
        if k > n || k > p / 2 {
            return Err(Error::Precondition(format!(
                "wedge factor of order {k} needs k ≤ n={n} and k ≤ ⌊p/2⌋={}",
                p / 2
            )));
        }
        let us = (1..=k).map(|j| u_prime(p, j)).collect::<Result<Vec<_>>>()?;
        let perms = permutations_with_sign(k);
        let mut fact = GaussianRational::one();
        for t in 2..=k {
            fact *= &GaussianRational::from_int(t as i64);
        }
        let norm = fact.inv().expect("k! is nonzero");

        // Expand the V-side wedge into coordinates.
        let mut vside: BTreeMap<Vec<usize>, GaussianRational> = BTreeMap::new();
        for (tau, odd) in &perms {
            let mut partial: Vec<(Vec<usize>, GaussianRational)> =
                vec![(vec![], if *odd { -norm.clone() } else { norm.clone() })];
            for &t in tau {
                let mut next = Vec::new();
                for (idx, c) in &partial {
                    for (a, x) in us[t].iter().enumerate() {
                        if !x.is_zero() {
                            let mut idx = idx.clone();
                            idx.push(a + 1);
                            next.push((idx, c * x));
                        }
                    }
                }
                partial = next;
            }
            for (idx, c) in partial {
                *vside.entry(idx).or_insert_with(GaussianRational::zero) += &c;
            }
        }

        let mut out = PairTensor {
            n,
            p,
            terms: BTreeMap::new(),
        };
        for (sigma, odd) in &perms {
            let e: Vec<usize> = sigma.iter().map(|s| s + 1).collect();
            for (v, c) in &vside {
                let c = if *odd { -c.clone() } else { c.clone() };
                out.add_term((e.clone(), v.clone()), c);
            }
        }
        Ok(out)
    }

    /// `(e ⊗ v) ⊗ (e' ⊗ v') ↦ (e e') ⊗ (v v')`.
    pub fn tensor(&self, o: &PairTensor) -> Result<PairTensor> {
        if (self.n, self.p) != (o.n, o.p) {
            return Err(Error::Precondition("tensor factors over different spaces".into()));
        }
        let mut out = PairTensor {
            n: self.n,
            p: self.p,
            terms: BTreeMap::new(),
        };
        for ((e1, v1), c1) in &self.terms {
            for ((e2, v2), c2) in &o.terms {
                let e = e1.iter().chain(e2).copied().collect();
                let v = v1.iter().chain(v2).copied().collect();
                out.add_term((e, v), c1 * c2);
            }
        }
        Ok(out)
    }

    /// The explicit highest weight vector `e_λ ⊗ v*_{[λ]}` for `λ = Σ a_k ϖ_k`.
    pub fn highest_weight(a: &FundamentalWeightVector, n: usize, p: usize) -> Result<Self> {
        let mut acc = PairTensor::unit(n, p);
        for (k, &mult) in a.a.iter().enumerate() {
            if mult == 0 {
                continue;
            }
            let f = PairTensor::wedge_factor(k + 1, n, p)?;
            for _ in 0..mult {
                acc = acc.tensor(&f)?;
            }
        }
        Ok(acc)
    }

    /// Action of `g ∈ 𝔤𝔩(n)` on the e-slots: `e_b ↦ Σ_a g[a][b] e_a`.
    pub fn act_gl(&self, g: &Matrix<GaussianRational>) -> PairTensor {
        let mut out = PairTensor {
            n: self.n,
            p: self.p,
            terms: BTreeMap::new(),
        };
        for ((e, v), c) in &self.terms {
            for slot in 0..e.len() {
                for a in 1..=self.n {
                    let x = &g[a - 1][e[slot] - 1];
                    if !x.is_zero() {
                        let mut e2 = e.clone();
                        e2[slot] = a;
                        out.add_term((e2, v.clone()), c * x);
                    }
                }
            }
        }
        out
    }

    /// Action of `A ∈ 𝔤𝔩(p)` on the v-slots: `v_α ↦ Σ_β A[β][α] v_β`.
    pub fn act_v(&self, a: &Matrix<GaussianRational>) -> PairTensor {
        let mut out = PairTensor {
            n: self.n,
            p: self.p,
            terms: BTreeMap::new(),
        };
        for ((e, v), c) in &self.terms {
            for slot in 0..v.len() {
                for b in 1..=self.p {
                    let x = &a[b - 1][v[slot] - 1];
                    if !x.is_zero() {
                        let mut v2 = v.clone();
                        v2[slot] = b;
                        out.add_term((e.clone(), v2), c * x);
                    }
                }
            }
        }
        out
    }

    /// Contraction of v-slots `s < t` with the invariant form `(v_α, v_β) = δ_αβ`.
    pub fn contract_v(&self, s: usize, t: usize) -> Result<PairTensor> {
        let mut out = PairTensor {
            n: self.n,
            p: self.p,
            terms: BTreeMap::new(),
        };
        for ((e, v), c) in &self.terms {
            if s >= t || t >= v.len() {
                return Err(Error::IndexOutOfRange(format!("contraction slots ({s},{t})")));
            }
            if v[s] == v[t] {
                let v2: Vec<usize> = v
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != s && k != t)
                    .map(|(_, &x)| x)
                    .collect();
                out.add_term((e.clone(), v2), c.clone());
            }
        }
        Ok(out)
    }

    /// `Σ c · fm_zero(e, v)` over the terms.
    pub fn apply_fm_zero(&self, amb: Ambient) -> Result<SparsePoly> {
        if (amb.n, amb.p) != (self.n, self.p) {
            return Err(Error::Precondition("tensor does not live over this ambient".into()));
        }
        let mut acc = SparsePoly::zero(amb);
        for ((e, v), c) in &self.terms {
            acc = &acc + &fm_zero(e, v, amb)?.scale(c);
        }
        Ok(acc)
    }
}

/// `φ_{0,[λ]}(e_λ ⊗ v*_{[λ]})`, evaluated factor by factor on the explicit highest weight
/// tensor and multiplied together.
pub fn fm_highest_weight_value(a: &FundamentalWeightVector, amb: Ambient) -> Result<SparsePoly> {
    check_weight(a, amb)?;
    let mut acc = SparsePoly::one(amb);
    for (k, &mult) in a.a.iter().enumerate() {
        if mult == 0 {
            continue;
        }
        let f = PairTensor::wedge_factor(k + 1, amb.n, amb.p)?.apply_fm_zero(amb)?;
        acc = &acc * &f.pow(mult);
    }
    Ok(acc)
}

/// `φ_{nq,[λ]}(e_λ ⊗ e(𝔮) ⊗ v*_{[λ]})`.
pub fn full_cocycle_value(a: &FundamentalWeightVector, amb: Ambient) -> Result<SparsePoly> {
    check_weight(a, amb)?;
    let km = km_value_on_vz(amb)?;
    Ok(&km * &fm_highest_weight_value(a, amb)?)
}

/// `Δ_1^{a_1} ⋯ Δ_{n−1}^{a_{n−1}} Δ_n^{a_n + extra}`.
pub fn closed_form(a: &FundamentalWeightVector, extra: u32, amb: Ambient) -> Result<SparsePoly> {
    check_weight(a, amb)?;
    let mut acc = SparsePoly::one(amb);
    for k in 1..=amb.n {
        let e = a.a.get(k - 1).copied().unwrap_or(0) + if k == amb.n { extra } else { 0 };
        if e > 0 {
            acc = &acc * &minor_delta(k, amb)?.pow(e);
        }
    }
    Ok(acc)
}

/// The coefficient system a cocycle takes values in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientSystem {
    Trivial,
    /// `T^ℓ(V)`.
    Tensor(usize),
    /// `S_{[λ]}(V)`.
    Harmonic(Partition),
}

/// Polynomial values of a cocycle on distinguished multivectors, with the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleValue {
    pub ambient: Ambient,
    pub coefficients: CoefficientSystem,
    pub assignment: Vec<(MultiVector, SparsePoly)>,
    pub expected_degree: u32,
    pub closed_form: SparsePoly,
}

impl CocycleValue {
    /// Every value is positive, homogeneous of the expected degree and equal to the closed form.
    pub fn matches_closed_form(&self) -> bool {
        self.assignment.iter().all(|(_, v)| {
            v.is_positive()
                && v.is_homogeneous()
                && v.degree() == Some(self.expected_degree)
                && *v == self.closed_form
        })
    }

    pub fn is_pluriharmonic(&self) -> Result<bool> {
        for (_, v) in &self.assignment {
            if !v.is_pluriharmonic()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Result<Value> {
        let values: Vec<Value> = self
            .assignment
            .iter()
            .map(|(mv, v)| {
                json!({
                    "multivector_degree": mv.degree(),
                    "value": v.to_string(),
                    "value_json": v.to_json(),
                })
            })
            .collect();
        Ok(json!({
            "ambient": self.ambient,
            "coefficients": self.coefficients,
            "expected_degree": self.expected_degree,
            "values": values,
            "closed_form": self.closed_form.to_string(),
            "matches_closed_form": self.matches_closed_form(),
            "pluriharmonic": self.is_pluriharmonic()?,
        }))
    }
}

/// The full cocycle value on `e(𝔮)` with coefficients `S_{[λ]}(V)`, paired with its closed form.
pub fn evaluate_cocycle(a: &FundamentalWeightVector, amb: Ambient) -> Result<CocycleValue> {
    let value = full_cocycle_value(a, amb)?;
    let lam = a.to_partition();
    let coefficients = if lam.is_empty() {
        CoefficientSystem::Trivial
    } else {
        CoefficientSystem::Harmonic(lam.clone())
    };
    Ok(CocycleValue {
        ambient: amb,
        coefficients,
        assignment: vec![(vz_vector(amb.n, amb.p, amb.q)?, value)],
        expected_degree: (amb.n * amb.q + lam.size()) as u32,
        closed_form: closed_form(a, amb.q as u32, amb)?,
    })
}

/// Highest weight of the lowest `K`-type carrying the cocycle class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTypeWeight {
    /// Weight for `SO(p)` in the `ε`-basis, length `⌊p/2⌋`.
    pub so_p: Vec<i64>,
    /// Weight for `SO(q)`, length `⌊q/2⌋`.
    pub so_q: Vec<i64>,
    /// Determinant twist of the `GL(n)` side, always `m/2`.
    pub twist: Twist,
}

/// `(q + λ_1, …, q + λ_n, 0, …) ⊠ 0`, with the `GL(n)` twist `q + (p − q)/2 = m/2`.
pub fn vz_ktype_weight(amb: Ambient, lam: &Partition) -> Result<KTypeWeight> {
    check_rank(amb)?;
    if lam.length() > amb.n {
        return Err(Error::Precondition(format!(
            "λ={lam} has more than n={} parts",
            amb.n
        )));
    }
    let mut so_p = vec![0i64; amb.p0()];
    for (k, slot) in so_p.iter_mut().enumerate().take(amb.n) {
        *slot = (amb.q + lam.part(k)) as i64;
    }
    Ok(KTypeWeight {
        so_p,
        so_q: vec![0; amb.q / 2],
        twist: Twist {
            twice: amb.m() as i64,
        },
    })
}

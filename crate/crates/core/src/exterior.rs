//! Exterior algebra on `𝔭 ≅ V₊ ⊗ V₋*` with basis `ω_{α,μ}`, `1 ≤ α ≤ p < μ ≤ p+q`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank, Matrix};
use crate::scalar::{int_to_json, json_to_int, GaussianRational};

/// The basis one-form `ω_{alpha,mu}`. Ordered by `(alpha, mu)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PBasisIndex {
    pub alpha: usize,
    pub mu: usize,
}

/// An element of `⋀𝔭`. Each basis set is stored sorted, sign absorbed in the coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiVector {
    p: usize,
    q: usize,
    terms: BTreeMap<Vec<PBasisIndex>, GaussianRational>,
}

/// Sign of sorting the concatenation `a ++ b` of two sorted sets, or `None` if they meet.
fn merge_sign(a: &[PBasisIndex], b: &[PBasisIndex]) -> Option<(Vec<PBasisIndex>, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut odd = false;
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i < a.len() && a[i] == b[j] {
            return None;
        } else {
            // b[j] jumps over the remaining a[i..].
            if (a.len() - i) % 2 == 1 {
                odd = !odd;
            }
            out.push(b[j]);
            j += 1;
        }
    }
    Some((out, odd))
}

impl MultiVector {
    pub fn zero(p: usize, q: usize) -> Self {
        MultiVector {
            p,
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(p: usize, q: usize, c: GaussianRational) -> Self {
        let mut v = MultiVector::zero(p, q);
        v.add_term(Vec::new(), c);
        v
    }

    pub fn one(p: usize, q: usize) -> Self {
        MultiVector::scalar(p, q, GaussianRational::one())
    }

    /// `ω_{alpha,mu}`.
    pub fn basis(p: usize, q: usize, alpha: usize, mu: usize) -> Result<Self> {
        if alpha == 0 || alpha > p || mu <= p || mu > p + q {
            return Err(Error::IndexOutOfRange(format!(
                "ω[{alpha},{mu}] needs 1 ≤ α ≤ {p} < μ ≤ {}",
                p + q
            )));
        }
        let mut v = MultiVector::zero(p, q);
        v.add_term(vec![PBasisIndex { alpha, mu }], GaussianRational::one());
        Ok(v)
    }

    /// Builds from arbitrary (unsorted) index lists, canonicalizing signs.
    pub fn from_terms(
        p: usize,
        q: usize,
        terms: impl IntoIterator<Item = (Vec<PBasisIndex>, GaussianRational)>,
    ) -> Result<Self> {
        let mut v = MultiVector::zero(p, q);
        for (idx, c) in terms {
            let mut acc = MultiVector::scalar(p, q, c);
            for b in idx {
                acc = acc.wedge(&MultiVector::basis(p, q, b.alpha, b.mu)?)?;
            }
            v = &v + &acc;
        }
        Ok(v)
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn terms(&self) -> &BTreeMap<Vec<PBasisIndex>, GaussianRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree when homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Vec::len);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn homogeneous_component(&self, d: usize) -> MultiVector {
        MultiVector {
            p: self.p,
            q: self.q,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.len() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn coefficient(&self, idx: &[PBasisIndex]) -> GaussianRational {
        self.terms.get(idx).cloned().unwrap_or_else(GaussianRational::zero)
    }

    fn add_term(&mut self, k: Vec<PBasisIndex>, c: GaussianRational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, o: &MultiVector) -> Result<()> {
        if (self.p, self.q) != (o.p, o.q) {
            return Err(Error::ExteriorAmbientMismatch(self.p, self.q, o.p, o.q));
        }
        Ok(())
    }

    pub fn wedge(&self, o: &MultiVector) -> Result<MultiVector> {
        self.check(o)?;
        let mut r = MultiVector::zero(self.p, self.q);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if let Some((k, odd)) = merge_sign(a, b) {
                    let c = ca * cb;
                    r.add_term(k, if odd { -c } else { c });
                }
            }
        }
        Ok(r)
    }

    pub fn checked_add(&self, o: &MultiVector) -> Result<MultiVector> {
        self.check(o)?;
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(k.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn scale(&self, c: &GaussianRational) -> MultiVector {
        let mut r = MultiVector::zero(self.p, self.q);
        for (k, x) in &self.terms {
            r.add_term(k.clone(), x * c);
        }
        r
    }

    /// `self ∧ … ∧ self` (`k` factors).
    pub fn wedge_power(&self, k: u32) -> MultiVector {
        let mut acc = MultiVector::one(self.p, self.q);
        for _ in 0..k {
            acc = acc.wedge(self).expect("same ambient");
        }
        acc
    }

    /// The bilinear pairing for which the sorted basis sets are orthonormal.
    pub fn pairing(&self, o: &MultiVector) -> Result<GaussianRational> {
        self.check(o)?;
        let mut acc = GaussianRational::zero();
        for (k, c) in &self.terms {
            if let Some(d) = o.terms.get(k) {
                acc += &(c * d);
            }
        }
        Ok(acc)
    }

    /// Extends a map on basis one-forms to a derivation of `⋀𝔭`.
    pub fn derivation(&self, f: impl Fn(PBasisIndex) -> MultiVector) -> Result<MultiVector> {
        let mut r = MultiVector::zero(self.p, self.q);
        for (k, c) in &self.terms {
            for pos in 0..k.len() {
                let mut acc = MultiVector::scalar(self.p, self.q, c.clone());
                for (t, b) in k.iter().enumerate() {
                    let factor = if t == pos {
                        f(*b)
                    } else {
                        MultiVector::basis(self.p, self.q, b.alpha, b.mu)?
                    };
                    acc = acc.wedge(&factor)?;
                }
                r = &r + &acc;
            }
        }
        Ok(r)
    }

    /// Action of `A ∈ 𝔤𝔩(p)` on the `V₊` factor: `ω_{α,μ} ↦ Σ_β A[β][α] ω_{β,μ}`.
    pub fn act_positive(&self, a: &Matrix<GaussianRational>) -> Result<MultiVector> {
        let (p, q) = (self.p, self.q);
        self.derivation(|b| {
            let mut v = MultiVector::zero(p, q);
            for beta in 1..=p {
                let c = &a[beta - 1][b.alpha - 1];
                if !c.is_zero() {
                    v.add_term(vec![PBasisIndex { alpha: beta, mu: b.mu }], c.clone());
                }
            }
            v
        })
    }

    /// Action of `B ∈ 𝔤𝔩(q)` on the dual factor `V₋*`: `ω_{α,μ} ↦ −Σ_ν B[μ][ν] ω_{α,ν}`
    /// (indices shifted by `p`).
    pub fn act_negative(&self, b: &Matrix<GaussianRational>) -> Result<MultiVector> {
        let (p, q) = (self.p, self.q);
        self.derivation(|x| {
            let mut v = MultiVector::zero(p, q);
            for nu in p + 1..=p + q {
                let c = &b[x.mu - p - 1][nu - p - 1];
                if !c.is_zero() {
                    v.add_term(vec![PBasisIndex { alpha: x.alpha, mu: nu }], -c);
                }
            }
            v
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| {
                    let idx: Vec<[usize; 2]> = k.iter().map(|b| [b.alpha, b.mu]).collect();
                    let parts: Vec<Value> = c.to_parts().iter().map(int_to_json).collect();
                    json!([idx, parts])
                })
                .collect(),
        )
    }

    pub fn from_json(p: usize, q: usize, v: &Value) -> Result<MultiVector> {
        let bad = |why: &str| Error::Parse(format!("multivector JSON: {why}"));
        let arr = v.as_array().ok_or_else(|| bad("expected a list"))?;
        let mut terms = Vec::with_capacity(arr.len());
        for t in arr {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term is not a pair"))?;
            let idx: Vec<[usize; 2]> =
                serde_json::from_value(pair[0].clone()).map_err(|e| bad(&e.to_string()))?;
            let raw = pair[1].as_array().filter(|a| a.len() == 4).ok_or_else(|| bad("coefficient needs 4 integers"))?;
            let ints = raw.iter().map(json_to_int).collect::<Result<Vec<_>>>()?;
            let c = GaussianRational::from_parts(&ints.try_into().expect("length checked"))?;
            terms.push((
                idx.into_iter().map(|[alpha, mu]| PBasisIndex { alpha, mu }).collect(),
                c,
            ));
        }
        MultiVector::from_terms(p, q, terms)
    }
}

impl std::ops::Add for &MultiVector {
    type Output = MultiVector;
    fn add(self, o: &MultiVector) -> MultiVector {
        self.checked_add(o).expect("ambient mismatch")
    }
}

impl std::ops::Sub for &MultiVector {
    type Output = MultiVector;
    fn sub(self, o: &MultiVector) -> MultiVector {
        self.checked_add(&o.scale(&-GaussianRational::one()))
            .expect("ambient mismatch")
    }
}

impl fmt::Display for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let body = self
            .terms
            .iter()
            .map(|(k, c)| {
                let w = k.iter().map(|b| format!("w[{},{}]", b.alpha, b.mu)).join("^");
                if w.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{w}")
                }
            })
            .join(" + ");
        write!(f, "{body}")
    }
}

/// The one-form `x ⊗ v_μ*` for `x ∈ V₊` given by coordinates `x[0..p]`.
pub fn one_form(p: usize, q: usize, x: &[GaussianRational], mu: usize) -> Result<MultiVector> {
    if x.len() != p {
        return Err(Error::LengthMismatch(x.len(), p));
    }
    let mut v = MultiVector::zero(p, q);
    for (a, c) in x.iter().enumerate() {
        v = &v + &MultiVector::basis(p, q, a + 1, mu)?.scale(c);
    }
    Ok(v)
}

/// `Ω_{μ,ν} = Σ_α ω_{α,μ} ∧ ω_{α,ν}`.
pub fn curvature_form(mu: usize, nu: usize, p: usize, q: usize) -> Result<MultiVector> {
    for x in [mu, nu] {
        if x <= p || x > p + q {
            return Err(Error::IndexOutOfRange(format!("Ω index {x} outside {}..={}", p + 1, p + q)));
        }
    }
    let mut r = MultiVector::zero(p, q);
    for a in 1..=p {
        let t = MultiVector::basis(p, q, a, mu)?.wedge(&MultiVector::basis(p, q, a, nu)?)?;
        r = &r + &t;
    }
    Ok(r)
}

fn perm_is_odd(perm: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// `e_q = Σ_{σ∈S_q} sgn σ · Ω_{p+σ(1),p+σ(2)} ∧ … ∧ Ω_{p+σ(q−1),p+σ(q)}`, zero for odd `q`.
pub fn euler_form(p: usize, q: usize) -> Result<MultiVector> {
    if q % 2 == 1 {
        return Ok(MultiVector::zero(p, q));
    }
    let mut omega = vec![vec![MultiVector::zero(p, q); q]; q];
    for (a, row) in omega.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            *slot = curvature_form(p + a + 1, p + b + 1, p, q)?;
        }
    }
    let mut r = MultiVector::zero(p, q);
    for perm in (0..q).permutations(q) {
        let mut acc = MultiVector::one(p, q);
        for pair in perm.chunks(2) {
            acc = acc.wedge(&omega[pair[0]][pair[1]])?;
            if acc.is_zero() {
                break;
            }
        }
        r = if perm_is_odd(&perm) { &r - &acc } else { &r + &acc };
    }
    Ok(r)
}

/// Coordinates of `u'_j = v_j − i v_{j'}` in `V₊`, with `j' = 2⌊p/2⌋ − j + 1`.
pub fn u_prime(p: usize, j: usize) -> Result<Vec<GaussianRational>> {
    let p0 = p / 2;
    if j == 0 || j > p0 {
        return Err(Error::IndexOutOfRange(format!("u'_{j} needs 1 ≤ j ≤ {p0}")));
    }
    let mut x = vec![GaussianRational::zero(); p];
    x[j - 1] = GaussianRational::one();
    x[2 * p0 - j] = -GaussianRational::i();
    Ok(x)
}

/// Coordinates of the dual vector `u''_j = ½(v_j + i v_{j'})`, so `(u''_j, u'_k) = δ_jk`.
pub fn u_double_prime(p: usize, j: usize) -> Result<Vec<GaussianRational>> {
    let half = GaussianRational::from_rational(crate::scalar::rat(1, 2));
    Ok(u_prime(p, j)?.iter().map(|c| c.conj() * half.clone()).collect())
}

/// `x̃ = (x ⊗ v_{p+1}*) ∧ … ∧ (x ⊗ v_{p+q}*)`.
pub fn tilde(p: usize, q: usize, x: &[GaussianRational]) -> Result<MultiVector> {
    let mut acc = MultiVector::one(p, q);
    for mu in p + 1..=p + q {
        acc = acc.wedge(&one_form(p, q, x, mu)?)?;
    }
    Ok(acc)
}

/// The Vogan–Zuckerman vector `e(𝔮) = ũ'_1 ∧ … ∧ ũ'_n`, of degree `nq`.
pub fn vz_vector(n: usize, p: usize, q: usize) -> Result<MultiVector> {
    if n > p / 2 {
        return Err(Error::Precondition(format!("n={n} exceeds ⌊p/2⌋={}", p / 2)));
    }
    let mut acc = MultiVector::one(p, q);
    for j in 1..=n {
        acc = acc.wedge(&tilde(p, q, &u_prime(p, j)?)?)?;
    }
    Ok(acc)
}

/// Standard basis `E_ab − E_ba` of `𝔰𝔬(k)`.
pub fn so_basis(k: usize) -> Vec<Matrix<GaussianRational>> {
    let mut out = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let mut m = vec![vec![GaussianRational::zero(); k]; k];
            m[a][b] = GaussianRational::one();
            m[b][a] = -GaussianRational::one();
            out.push(m);
        }
    }
    out
}

/// Standard basis `E_ab` (`a ≠ b`) and `E_aa − E_{a+1,a+1}` of `𝔰𝔩(k)`.
pub fn sl_basis(k: usize) -> Vec<Matrix<GaussianRational>> {
    let mut out = Vec::new();
    let zero = || vec![vec![GaussianRational::zero(); k]; k];
    for a in 0..k {
        for b in 0..k {
            if a != b {
                let mut m = zero();
                m[a][b] = GaussianRational::one();
                out.push(m);
            }
        }
        if a + 1 < k {
            let mut m = zero();
            m[a][a] = GaussianRational::one();
            m[a + 1][a + 1] = -GaussianRational::one();
            out.push(m);
        }
    }
    out
}

/// All sorted basis sets of degree `d`.
pub fn basis_sets(p: usize, q: usize, d: usize) -> Vec<Vec<PBasisIndex>> {
    let all: Vec<PBasisIndex> = (1..=p)
        .flat_map(|alpha| (p + 1..=p + q).map(move |mu| PBasisIndex { alpha, mu }))
        .collect();
    all.into_iter().combinations(d).collect()
}

fn coords(v: &MultiVector, basis: &[Vec<PBasisIndex>]) -> Vec<GaussianRational> {
    basis.iter().map(|k| v.coefficient(k)).collect()
}

fn k_action(v: &MultiVector) -> Result<Vec<MultiVector>> {
    let (p, q) = v.signature();
    let mut out = Vec::new();
    for a in so_basis(p) {
        out.push(v.act_positive(&a)?);
    }
    for b in so_basis(q) {
        out.push(v.act_negative(&b)?);
    }
    Ok(out)
}

/// Basis of the `𝔰𝔬(p) × 𝔰𝔬(q)`-invariants in `⋀^d 𝔭`.
pub fn k_invariants(p: usize, q: usize, d: usize) -> Result<Vec<MultiVector>> {
    let basis = basis_sets(p, q, d);
    let mut rows: Matrix<GaussianRational> = Vec::new();
    let images: Vec<Vec<MultiVector>> = basis
        .iter()
        .map(|k| k_action(&MultiVector::from_terms(p, q, [(k.clone(), GaussianRational::one())])?))
        .collect::<Result<_>>()?;
    let ngen = images.first().map_or(0, Vec::len);
    for g in 0..ngen {
        let cols: Vec<Vec<GaussianRational>> =
            images.iter().map(|im| coords(&im[g], &basis)).collect();
        for r in 0..basis.len() {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
        }
    }
    let ns = if rows.is_empty() {
        (0..basis.len())
            .map(|i| (0..basis.len()).map(|j| if i == j { GaussianRational::one() } else { GaussianRational::zero() }).collect())
            .collect()
    } else {
        nullspace(&rows, basis.len())
    };
    ns.into_iter()
        .map(|v| MultiVector::from_terms(p, q, basis.iter().cloned().zip(v)))
        .collect()
}

/// A spanning set of the `U(𝔨)`-module generated by `v`, closed under the `𝔨` action.
pub fn k_span(v: &MultiVector) -> Result<Vec<MultiVector>> {
    let (p, q) = v.signature();
    let d = v.degree().unwrap_or(0);
    let basis = basis_sets(p, q, d);
    let mut span = vec![v.clone()];
    let mut frontier = vec![v.clone()];
    let mut r = rank(&span.iter().map(|w| coords(w, &basis)).collect());
    while let Some(w) = frontier.pop() {
        for img in k_action(&w)? {
            let mut trial = span.clone();
            trial.push(img.clone());
            let r2 = rank(&trial.iter().map(|w| coords(w, &basis)).collect());
            if r2 > r {
                r = r2;
                span = trial;
                frontier.push(img);
            }
        }
    }
    Ok(span)
}

/// For every degree, the invariants `c` with `c ∧ e(𝔮) = 0` are exactly those killing the
/// whole `𝔨`-span of `e(𝔮)`. Returns `true` when both kernels agree in all degrees.
pub fn kernel_criterion_holds(n: usize, p: usize, q: usize) -> Result<bool> {
    let e = vz_vector(n, p, q)?;
    let span = k_span(&e)?;
    let top = e.degree().unwrap_or(0);
    for d in 0..=p * q - top {
        let inv = k_invariants(p, q, d)?;
        if inv.is_empty() {
            continue;
        }
        let target = basis_sets(p, q, d + top);
        // Columns indexed by invariants, rows by target coordinates.
        let map = |w: &MultiVector| -> Result<Matrix<GaussianRational>> {
            let cols: Vec<Vec<GaussianRational>> = inv
                .iter()
                .map(|c| Ok(coords(&c.wedge(w)?, &target)))
                .collect::<Result<_>>()?;
            Ok((0..target.len())
                .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                .collect())
        };
        let a = map(&e)?;
        let mut b = Vec::new();
        for w in &span {
            b.extend(map(w)?);
        }
        let mut ab = a.clone();
        ab.extend(b.iter().cloned());
        let ra = rank(&a);
        if ra != rank(&b) || ra != rank(&ab) {
            return Ok(false);
        }
    }
    Ok(true)
}

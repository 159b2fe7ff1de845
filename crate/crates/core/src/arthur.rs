//! Archimedean Arthur parameters for `SO(p,q)`: validation, infinitesimal characters,
//! exponents, Adams–Johnson shapes and the hypothesis predicates.
//!
//! A parameter is a formal sum of factors `η ⊠ R_a` with `η` a character datum of
//! `GL(d)`, `d ∈ {1,2}`, and `R_a` the `a`-dimensional representation of `SL₂`. The
//! dual group has rank `ℓ = ⌊m/2⌋` and dimension `N = 2ℓ`, so `Σ d·a = N`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rat, rational_str, GaussianRational, Rational};
use crate::vz::LeviDatum;

/// A character of `W_ℝ` (or a discrete series of `GL(2,ℝ)`) restricted to `ℂ*`,
/// recorded through the exponent `P` of `z ↦ z^P z̄^Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CharDatum {
    /// Trivial (`sign = false`) or sign character; `P = 0`, self-inverse.
    Quadratic { sign: bool },
    /// Unitary character with `P = w/2 + i·t`; its inverse is `(−w, −t)`.
    Unitary {
        w: i64,
        #[serde(with = "rational_str")]
        t: Rational,
    },
    /// The discrete series `δ(k)` of `GL(2,ℝ)`, `k ≥ 2`; `P = ±(k−1)/2`.
    Discrete { k: u32 },
}

impl CharDatum {
    pub fn trivial() -> Self {
        CharDatum::Quadratic { sign: false }
    }

    pub fn unitary(w: i64) -> Self {
        CharDatum::Unitary { w, t: Rational::zero() }
    }

    pub fn inverse(&self) -> CharDatum {
        match self {
            CharDatum::Unitary { w, t } => CharDatum::Unitary { w: -w, t: -t.clone() },
            other => other.clone(),
        }
    }

    pub fn is_quadratic(&self) -> bool {
        matches!(self, CharDatum::Quadratic { .. })
    }

    /// The `GL` rank this datum lives on.
    pub fn gl_rank(&self) -> usize {
        match self {
            CharDatum::Discrete { .. } => 2,
            _ => 1,
        }
    }

    /// The exponents `P` of the characters of `ℂ*` it restricts to.
    pub fn torus_exponents(&self) -> Vec<GaussianRational> {
        match self {
            CharDatum::Quadratic { .. } => vec![GaussianRational::zero()],
            CharDatum::Unitary { w, t } => vec![GaussianRational::new(rat(*w, 2), t.clone())],
            CharDatum::Discrete { k } => {
                let h = GaussianRational::from_rational(rat(*k as i64 - 1, 2));
                vec![h.clone(), -h]
            }
        }
    }
}

impl fmt::Display for CharDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharDatum::Quadratic { sign: false } => write!(f, "1"),
            CharDatum::Quadratic { sign: true } => write!(f, "sgn"),
            CharDatum::Unitary { w, t } if t.is_zero() => write!(f, "mu({w})"),
            CharDatum::Unitary { w, t } => write!(f, "mu({w},{})", crate::scalar::fmt_rational(t)),
            CharDatum::Discrete { k } => write!(f, "delta({k})"),
        }
    }
}

/// One summand `char ⊠ R_a` on `GL(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArthurFactor {
    #[serde(rename = "char")]
    pub chr: CharDatum,
    pub d: usize,
    pub a: usize,
}

impl ArthurFactor {
    pub fn new(chr: CharDatum, a: usize) -> Self {
        let d = chr.gl_rank();
        ArthurFactor { chr, d, a }
    }

    /// `{P + j/2 : j = a−1, a−3, …, 1−a}` for each torus exponent `P` of the character.
    fn strings(&self) -> Vec<GaussianRational> {
        let mut out = Vec::with_capacity(self.d * self.a);
        for p in self.chr.torus_exponents() {
            for k in 0..self.a {
                let shift = rat(self.a as i64 - 1 - 2 * k as i64, 2);
                out.push(&p + &GaussianRational::from_rational(shift));
            }
        }
        out
    }
}

impl fmt::Display for ArthurFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}xR{}", self.chr, self.a)
    }
}

/// `Ψ = ⊞ η_j ⊠ R_{a_j}` for `SO(V)` with `dim V = m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArchArthurParameter {
    pub factors: Vec<ArthurFactor>,
    pub m: usize,
}

impl ArchArthurParameter {
    pub fn new(factors: Vec<ArthurFactor>, m: usize) -> Self {
        ArchArthurParameter { factors, m }
    }

    /// `N = 2⌊m/2⌋`.
    pub fn big_n(&self) -> usize {
        2 * (self.m / 2)
    }

    pub fn rank(&self) -> usize {
        self.m / 2
    }

    /// `Σ d·a`.
    pub fn dimension(&self) -> usize {
        self.factors.iter().map(|f| f.d * f.a).sum()
    }

    /// Every violated condition, or `Ok` for a valid parameter.
    pub fn validate(&self) -> Result<()> {
        let mut errs = Vec::new();
        for f in &self.factors {
            if f.a == 0 {
                errs.push(format!("{f}: SL2 dimension must be ≥ 1"));
            }
            if f.d != f.chr.gl_rank() {
                errs.push(format!("{f}: d={} but the character lives on GL({})", f.d, f.chr.gl_rank()));
            }
            if let CharDatum::Discrete { k } = f.chr {
                if k < 2 {
                    errs.push(format!("{f}: discrete series needs k ≥ 2"));
                }
            }
            if f.chr.is_quadratic() && (f.a + 1) % 2 != self.m % 2 {
                errs.push(format!("{f}: quadratic factor needs a ≡ m−1 (mod 2)"));
            }
        }
        if self.dimension() != self.big_n() {
            errs.push(format!(
                "Σ d·a = {} but N = 2⌊m/2⌋ = {}",
                self.dimension(),
                self.big_n()
            ));
        }
        let mut seen: BTreeMap<&ArthurFactor, usize> = BTreeMap::new();
        for f in &self.factors {
            *seen.entry(f).or_default() += 1;
        }
        for (f, c) in &seen {
            if *c > 1 {
                errs.push(format!("{f} repeated {c} times"));
            }
        }
        let dual: Vec<ArthurFactor> = self
            .factors
            .iter()
            .map(|f| ArthurFactor { chr: f.chr.inverse(), ..f.clone() })
            .collect();
        if !same_multiset(&self.factors, &dual) {
            errs.push("not self-dual under character inversion".into());
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(Error::MalformedParameter(errs))
        }
    }

    /// The parameter with every character inverted.
    pub fn dual(&self) -> ArchArthurParameter {
        ArchArthurParameter {
            factors: self
                .factors
                .iter()
                .map(|f| ArthurFactor { chr: f.chr.inverse(), ..f.clone() })
                .collect(),
            m: self.m,
        }
    }

    /// Equality as multisets of factors.
    pub fn same_as(&self, o: &ArchArthurParameter) -> bool {
        self.m == o.m && same_multiset(&self.factors, &o.factors)
    }
}

fn same_multiset(a: &[ArthurFactor], b: &[ArthurFactor]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort();
    y.sort();
    x == y
}

impl fmt::Display for ArchArthurParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{} (m={})", parts.join(" + "), self.m)
    }
}

/// `(P_1, …, P_ℓ)` modulo signed permutations: each entry normalized to the sign with
/// positive real part (or nonnegative imaginary part on the imaginary axis), sorted by
/// real part then imaginary part, both descending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfChar {
    pub entries: Vec<GaussianRational>,
}

fn sign_normalize(z: &GaussianRational) -> GaussianRational {
    if z.re.is_negative() || (z.re.is_zero() && z.im.is_negative()) {
        -z.clone()
    } else {
        z.clone()
    }
}

fn desc(a: &GaussianRational, b: &GaussianRational) -> Ordering {
    b.re.cmp(&a.re).then_with(|| b.im.cmp(&a.im))
}

impl InfChar {
    /// Canonical form of an arbitrary list of torus exponents.
    pub fn canonical(entries: Vec<GaussianRational>) -> InfChar {
        let mut e: Vec<GaussianRational> = entries.iter().map(sign_normalize).collect();
        e.sort_by(desc);
        InfChar { entries: e }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for InfChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `ν_Ψ`: the `N` exponents of `φ_Ψ` come in pairs `±P_j`; keep one of each pair.
///
/// A lone unpaired zero (odd `N`, as for a single odd factor) is kept once.
pub fn infinitesimal_character(psi: &ArchArthurParameter) -> Result<InfChar> {
    for f in &psi.factors {
        if f.a == 0 || f.d != f.chr.gl_rank() {
            return Err(Error::MalformedParameter(vec![format!("{f} is not a valid factor")]));
        }
    }
    let mut counts: Vec<(GaussianRational, usize)> = Vec::new();
    for f in &psi.factors {
        for x in f.strings() {
            let x = sign_normalize(&x);
            match counts.iter_mut().find(|(y, _)| *y == x) {
                Some((_, c)) => *c += 1,
                None => counts.push((x, 1)),
            }
        }
    }
    let mut entries = Vec::new();
    for (x, c) in counts {
        let keep = if x.is_zero() { c.div_ceil(2) } else { c / 2 };
        if !x.is_zero() && c % 2 == 1 {
            return Err(Error::MalformedParameter(vec![format!(
                "exponent {x} has no partner {}",
                -x.clone()
            )]));
        }
        entries.extend(std::iter::repeat_n(x, keep));
    }
    Ok(InfChar::canonical(entries))
}

pub fn is_regular(ic: &InfChar) -> bool {
    ic.entries.windows(2).all(|w| w[0] != w[1])
}

/// How to read the doubled strings contributed by a unitary pair `μ ⊠ R ⊕ μ⁻¹ ⊠ R`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairMultiplicity {
    /// Each member of the pair contributes its string: multiplicity two.
    #[default]
    Two,
    /// The pair contributes its string once.
    One,
}

/// `Exp(π)` for the `L`-parameter `φ_Ψ`: every factor `η ⊠ R_a` on `GL(d)` contributes
/// `d` copies of `{a−1, a−3, …, 1−a}`, sorted descending.
pub fn exponents(psi: &ArchArthurParameter, mult: PairMultiplicity) -> Result<Vec<i64>> {
    psi.validate()?;
    let mut out = Vec::new();
    let mut skipped: Vec<&ArthurFactor> = Vec::new();
    for f in &psi.factors {
        if mult == PairMultiplicity::One {
            if let CharDatum::Unitary { .. } = f.chr {
                let partner = ArthurFactor { chr: f.chr.inverse(), ..f.clone() };
                if partner != *f {
                    // Count each pair once: skip the second member.
                    if let Some(k) = skipped.iter().position(|g| **g == partner) {
                        skipped.remove(k);
                        continue;
                    }
                    skipped.push(f);
                }
            }
        }
        for _ in 0..f.d {
            out.extend((0..f.a).map(|k| f.a as i64 - 1 - 2 * k as i64));
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Characters used to build an Adams–Johnson parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AjCharacters {
    /// `μ_j` per unitary block; empty means the default choice making `ν_Ψ = ρ`.
    #[serde(default)]
    pub unitary: Vec<CharDatum>,
    /// `χ` on the `R_{m_0−1}` factor.
    pub chi: CharDatum,
    /// `χ'` on the extra `R_1` when `m_0` is even.
    pub chi_prime: CharDatum,
}

impl Default for AjCharacters {
    fn default() -> Self {
        AjCharacters {
            unitary: vec![],
            chi: CharDatum::Quadratic { sign: false },
            chi_prime: CharDatum::Quadratic { sign: true },
        }
    }
}

/// `(μ_1 ⊠ R_{m_1} ⊕ μ_1⁻¹ ⊠ R_{m_1}) ⊕ … ⊕ Ψ_0` with `Ψ_0 = χ ⊠ R_{m_0−1}`, plus
/// `χ' ⊠ R_1` when `m_0` is even.
///
/// Default `μ_j = z^{P_j}`: a cursor starts at `(m−2)/2` and block `j` takes the string
/// of length `m_j` below it, so `P_j = top − (m_j−1)/2`.
pub fn aj_parameter(levi: &LeviDatum, chars: &AjCharacters) -> Result<ArchArthurParameter> {
    let (p, q) = levi.signature();
    levi.validate(p, q)?;
    let (p0, q0) = levi.so_block;
    if p0 * q0 == 0 {
        return Err(Error::Precondition(format!(
            "Adams–Johnson shape needs p0·q0 ≠ 0, got SO({p0},{q0})"
        )));
    }
    let dims = levi.block_dims();
    if !chars.unitary.is_empty() && chars.unitary.len() != dims.len() {
        return Err(Error::LengthMismatch(chars.unitary.len(), dims.len()));
    }
    let m = p + q;
    let mut factors = Vec::new();
    // Twice the cursor, to stay integral.
    let mut top2 = m as i64 - 2;
    for (j, &mj) in dims.iter().enumerate() {
        let mu = match chars.unitary.get(j) {
            Some(c) => c.clone(),
            None => CharDatum::unitary(top2 - (mj as i64 - 1)),
        };
        factors.push(ArthurFactor::new(mu.clone(), mj));
        factors.push(ArthurFactor::new(mu.inverse(), mj));
        top2 -= 2 * mj as i64;
    }
    let m0 = levi.m0();
    factors.push(ArthurFactor::new(chars.chi.clone(), m0 - 1));
    if m0.is_multiple_of(2) {
        factors.push(ArthurFactor::new(chars.chi_prime.clone(), 1));
    }
    let psi = ArchArthurParameter::new(factors, m);
    psi.validate()?;
    Ok(psi)
}

/// `ρ = (m/2 − 1, m/2 − 2, …, m/2 − ℓ)` of `SO(m)`.
pub fn rho(m: usize) -> InfChar {
    InfChar::canonical(
        (1..=m / 2)
            .map(|i| GaussianRational::from_rational(rat(m as i64 - 2 * i as i64, 2)))
            .collect(),
    )
}

/// Contains `η ⊠ R_a` with `η` quadratic and `3a > m − 1`.
pub fn highly_non_tempered(psi: &ArchArthurParameter) -> bool {
    psi.factors
        .iter()
        .any(|f| f.chr.is_quadratic() && 3 * f.a + 1 > psi.m)
}

/// `2n < m − ⌊m/2⌋ − 1`.
pub fn thm_intro4_bound(n: usize, m: usize) -> bool {
    2 * n + m / 2 + 1 < m
}

/// `n < ½⌊p/2⌋`.
pub fn thm_intro1_bound(n: usize, p: usize) -> bool {
    2 * n < p / 2
}

/// `n < ½⌊(p+1)/2⌋`.
pub fn thm_intro3_bound(n: usize, p: usize) -> bool {
    2 * n < p.div_ceil(2)
}

/// Contains some `R_a` with `a ≥ m − 2r − 1`.
pub fn sl2_lower_bound_met(psi: &ArchArthurParameter, r: usize) -> bool {
    let bound = psi.m as i64 - 2 * r as i64 - 1;
    psi.factors.iter().any(|f| f.a as i64 >= bound)
}

/// The basic rank assumption `2n < ⌊(m−1)/2⌋`.
pub fn rank_assumption(n: usize, m: usize) -> bool {
    m >= 1 && 2 * n < (m - 1) / 2
}

/// The three consequences of the rank assumption, with `ℓ = ⌊m/2⌋`:
/// `n < ℓ − 1` for even `m`, `n < ℓ` for odd `m`, and `n ≤ ⌊p/2⌋`.
pub fn rank_consequences(n: usize, p: usize, q: usize) -> [bool; 3] {
    let m = p + q;
    let l = m / 2;
    [
        m % 2 == 1 || n + 1 < l,
        m.is_multiple_of(2) || n < l,
        n <= p / 2,
    ]
}

/// If `Ψ` has a quadratic `η ⊠ R_a` with `3a > m − 1` and a regular infinitesimal
/// character, every other factor has `b < a`. Vacuously true otherwise.
pub fn lemma_ll_holds(psi: &ArchArthurParameter) -> Result<bool> {
    let ic = infinitesimal_character(psi)?;
    if !is_regular(&ic) {
        return Ok(true);
    }
    for (k, f) in psi.factors.iter().enumerate() {
        if f.chr.is_quadratic() && 3 * f.a + 1 > psi.m {
            let others_smaller = psi
                .factors
                .iter()
                .enumerate()
                .all(|(j, g)| j == k || g.a < f.a);
            if !others_smaller {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every valid parameter for `SO(m)` with real characters (`t = 0`) and a regular
/// infinitesimal character, with discrete series `δ(k)`, `k ≤ N + 1`, and unitary pairs
/// `μ(±w)`, `1 ≤ w ≤ N`.
pub fn regular_parameters(m: usize) -> Vec<ArchArthurParameter> {
    let n = 2 * (m / 2);
    // (factors, dimension); each item is one factor or a θ-pair of unitary factors.
    let mut items: Vec<(Vec<ArthurFactor>, usize)> = Vec::new();
    for a in 1..=n {
        if (a + 1) % 2 == m % 2 {
            for sign in [false, true] {
                items.push((vec![ArthurFactor::new(CharDatum::Quadratic { sign }, a)], a));
            }
        }
        if 2 * a <= n {
            for k in 2..=n as u32 + 1 {
                items.push((vec![ArthurFactor::new(CharDatum::Discrete { k }, a)], 2 * a));
            }
            for w in 1..=n as i64 {
                let pair = vec![
                    ArthurFactor::new(CharDatum::unitary(w), a),
                    ArthurFactor::new(CharDatum::unitary(-w), a),
                ];
                items.push((pair, 2 * a));
            }
        }
    }
    // Doubled real parts of the strings, folded to absolute values.
    let doubled: Vec<Vec<i64>> = items
        .iter()
        .map(|(fs, _)| {
            fs.iter()
                .flat_map(|f| f.strings())
                .map(|z| {
                    let x = (z.re * rat(2, 1)).to_integer();
                    x.to_i64().expect("small weights").abs()
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        start: usize,
        left: usize,
        items: &[(Vec<ArthurFactor>, usize)],
        doubled: &[Vec<i64>],
        counts: &mut BTreeMap<i64, usize>,
        chosen: &mut Vec<usize>,
        m: usize,
        out: &mut Vec<ArchArthurParameter>,
    ) {
        if left == 0 {
            let factors = chosen.iter().flat_map(|&i| items[i].0.clone()).collect();
            out.push(ArchArthurParameter::new(factors, m));
            return;
        }
        for i in start..items.len() {
            if items[i].1 > left {
                continue;
            }
            // Each absolute value may occur at most twice: once as x and once as −x.
            let mut local: BTreeMap<i64, usize> = BTreeMap::new();
            let ok = doubled[i].iter().all(|x| {
                let c = local.entry(*x).or_default();
                *c += 1;
                counts.get(x).copied().unwrap_or(0) + *c <= 2
            });
            if !ok {
                continue;
            }
            for x in &doubled[i] {
                *counts.entry(*x).or_default() += 1;
            }
            chosen.push(i);
            go(i + 1, left - items[i].1, items, doubled, counts, chosen, m, out);
            chosen.pop();
            for x in &doubled[i] {
                *counts.get_mut(x).expect("inserted") -= 1;
            }
        }
    }
    go(0, n, &items, &doubled, &mut BTreeMap::new(), &mut Vec::new(), m, &mut out);
    out.retain(|psi| {
        psi.validate().is_ok()
            && infinitesimal_character(psi).is_ok_and(|ic| is_regular(&ic))
    });
    out
}

/// Inputs for [`predicates`]; each flag is reported only when its inputs are present.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateQuery {
    #[serde(default)]
    pub psi: Option<ArchArthurParameter>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub p: Option<usize>,
    #[serde(default)]
    pub q: Option<usize>,
    #[serde(default)]
    pub r: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub highly_non_tempered: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular_infinitesimal_character: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thm_intro4_bound: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thm_intro1_bound: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thm_intro3_bound: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sl2_lower_bound_met: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_assumption: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_consequences: Option<[bool; 3]>,
}

pub fn predicates(query: &PredicateQuery) -> Result<PredicateReport> {
    let m = match (query.p, query.q, &query.psi) {
        (Some(p), Some(q), _) => Some(p + q),
        (_, _, Some(psi)) => Some(psi.m),
        _ => None,
    };
    if let (Some(m), Some(psi)) = (m, &query.psi) {
        if psi.m != m {
            return Err(Error::Precondition(format!("parameter has m={} but p+q={m}", psi.m)));
        }
    }
    let mut r = PredicateReport {
        m,
        ..Default::default()
    };
    if let Some(psi) = &query.psi {
        r.highly_non_tempered = Some(highly_non_tempered(psi));
        r.regular_infinitesimal_character = Some(is_regular(&infinitesimal_character(psi)?));
        if let Some(rr) = query.r {
            r.sl2_lower_bound_met = Some(sl2_lower_bound_met(psi, rr));
        }
    }
    if let Some(n) = query.n {
        if let Some(m) = m {
            r.thm_intro4_bound = Some(thm_intro4_bound(n, m));
            r.rank_assumption = Some(rank_assumption(n, m));
        }
        if let Some(p) = query.p {
            r.thm_intro1_bound = Some(thm_intro1_bound(n, p));
            r.thm_intro3_bound = Some(thm_intro3_bound(n, p));
            if let Some(q) = query.q {
                r.rank_consequences = Some(rank_consequences(n, p, q));
            }
        }
    }
    Ok(r)
}

/// `(m−2r−2, m−2r−4, …, 2r+2−m)`, the nonzero-capable part of the exponents for
/// `SO(p−2r, q) × U(1)^r`, followed by the zeros coming from the `R_1` factors.
pub fn standard_levi_exponents(m: usize, r: usize) -> Vec<i64> {
    let m0 = m - 2 * r;
    let mut out: Vec<i64> = (0..m0 - 1).map(|k| m0 as i64 - 2 - 2 * k as i64).collect();
    let zeros = 2 * r + usize::from(m0.is_multiple_of(2));
    out.extend(std::iter::repeat_n(0, zeros));
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

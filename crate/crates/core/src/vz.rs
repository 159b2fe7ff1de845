//! θ-stable Levi data for `SO(p,q)`: the count `R = dim(𝔲 ∩ 𝔭)`, `2ρ(𝔲 ∩ 𝔭)`,
//! the low-degree classification and the worked cohomology tables.
//!
//! Torus weights: `V₊` has weights `±e_i` (`i ≤ ⌊p/2⌋`) plus `0` for odd `p`, and `V₋`
//! has `±f_j` (`j ≤ ⌊q/2⌋`) plus `0` for odd `q`. The weights of `𝔭 = V₊ ⊗ V₋*` are the
//! sums `w + w'`. A unitary block `U(a,b)` owns `a` of the `e`-coordinates and `b` of the
//! `f`-coordinates; the defining element `X` is constant and positive on each block,
//! with distinct values across blocks, and zero on the `SO` block.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `U(p_1,q_1) × … × U(p_r,q_r) × SO(p_0,q_0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LeviDatum {
    #[serde(rename = "u_blocks")]
    pub unitary_blocks: Vec<(usize, usize)>,
    pub so_block: (usize, usize),
}

/// Shapes allowed by the low-degree classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeviShape {
    /// `U(1)ⁿ × SO(p − 2n, q)`, with `R = nq`.
    CompactTimesSoP { n: usize },
    /// `U(1)ⁿ × SO(p, q − 2n)` built from `U(0,1)` blocks, with `R = np`.
    CompactTimesSoQ { n: usize },
    Other,
}

impl LeviDatum {
    pub fn new(unitary_blocks: Vec<(usize, usize)>, so_block: (usize, usize)) -> Self {
        LeviDatum {
            unitary_blocks,
            so_block,
        }
    }

    /// `U(1)ⁿ × SO(p − 2n, q)`.
    pub fn standard(n: usize, p: usize, q: usize) -> Result<Self> {
        if 2 * n > p {
            return Err(Error::InvalidLevi(format!("2n={} exceeds p={p}", 2 * n)));
        }
        Ok(LeviDatum::new(vec![(1, 0); n], (p - 2 * n, q)))
    }

    /// `U(0,1)ⁿ × SO(p, q − 2n)`.
    pub fn standard_negative(n: usize, p: usize, q: usize) -> Result<Self> {
        if 2 * n > q {
            return Err(Error::InvalidLevi(format!("2n={} exceeds q={q}", 2 * n)));
        }
        Ok(LeviDatum::new(vec![(0, 1); n], (p, q - 2 * n)))
    }

    /// The signature `(p, q)` the datum lives in.
    pub fn signature(&self) -> (usize, usize) {
        let a: usize = self.unitary_blocks.iter().map(|b| b.0).sum();
        let b: usize = self.unitary_blocks.iter().map(|b| b.1).sum();
        (self.so_block.0 + 2 * a, self.so_block.1 + 2 * b)
    }

    pub fn validate(&self, p: usize, q: usize) -> Result<()> {
        if let Some(b) = self.unitary_blocks.iter().find(|b| b.0 + b.1 == 0) {
            return Err(Error::InvalidLevi(format!("empty unitary block {b:?}")));
        }
        let sig = self.signature();
        if sig != (p, q) {
            return Err(Error::InvalidLevi(format!(
                "blocks give signature {sig:?}, expected ({p},{q})"
            )));
        }
        Ok(())
    }

    /// `m_j = p_j + q_j` for each unitary block.
    pub fn block_dims(&self) -> Vec<usize> {
        self.unitary_blocks.iter().map(|b| b.0 + b.1).collect()
    }

    /// `m_0 = p_0 + q_0`.
    pub fn m0(&self) -> usize {
        self.so_block.0 + self.so_block.1
    }

    /// Replaces each compact block `U(k,0)` or `U(0,k)` by `k` copies of `U(1)` and sorts
    /// the blocks in decreasing order. Preserves `R`.
    pub fn normalize(&self) -> LeviDatum {
        let mut blocks = Vec::new();
        for &(a, b) in &self.unitary_blocks {
            match (a, b) {
                (k, 0) => blocks.extend(std::iter::repeat_n((1, 0), k)),
                (0, k) => blocks.extend(std::iter::repeat_n((0, 1), k)),
                blk => blocks.push(blk),
            }
        }
        blocks.sort_unstable_by(|x, y| y.cmp(x));
        LeviDatum::new(blocks, self.so_block)
    }

    pub fn shape(&self) -> LeviShape {
        let n = self.unitary_blocks.len();
        if self.unitary_blocks.iter().all(|&b| b == (1, 0)) {
            LeviShape::CompactTimesSoP { n }
        } else if self.unitary_blocks.iter().all(|&b| b == (0, 1)) {
            LeviShape::CompactTimesSoQ { n }
        } else {
            LeviShape::Other
        }
    }

    /// The `X`-eigenvalues on the `e`- and `f`-coordinates: block `j` of `r` gets `r − j + 1`.
    fn x_values(&self) -> (Vec<i64>, Vec<i64>) {
        let (p, q) = self.signature();
        let mut xe = vec![0i64; p / 2];
        let mut xf = vec![0i64; q / 2];
        let r = self.unitary_blocks.len();
        let (mut ie, mut jf) = (0, 0);
        for (j, &(a, b)) in self.unitary_blocks.iter().enumerate() {
            let val = (r - j) as i64;
            for slot in &mut xe[ie..ie + a] {
                *slot = val;
            }
            for slot in &mut xf[jf..jf + b] {
                *slot = val;
            }
            ie += a;
            jf += b;
        }
        (xe, xf)
    }

    /// Noncompact roots `w + w'` with positive `X`-eigenvalue, as (e-part, f-part) vectors.
    fn u_cap_p_weights(&self) -> Vec<(Vec<i64>, Vec<i64>)> {
        let (p, q) = self.signature();
        let (xe, xf) = self.x_values();
        let plus = torus_weights(p, &xe);
        let minus = torus_weights(q, &xf);
        let mut out = Vec::new();
        for (w, xw) in &plus {
            for (w2, xw2) in &minus {
                if xw + xw2 > 0 {
                    out.push((w.clone(), w2.clone()));
                }
            }
        }
        out
    }
}

/// Weights of the standard representation of `SO(k)` with their `X`-values.
fn torus_weights(k: usize, x: &[i64]) -> Vec<(Vec<i64>, i64)> {
    let r = k / 2;
    let mut out = Vec::with_capacity(k);
    for i in 0..r {
        for s in [1, -1] {
            let mut w = vec![0; r];
            w[i] = s;
            out.push((w, s * x[i]));
        }
    }
    if k % 2 == 1 {
        out.push((vec![0; r], 0));
    }
    out
}

impl fmt::Display for LeviDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(a, b) in &self.unitary_blocks {
            write!(f, "U({a},{b}) x ")?;
        }
        write!(f, "SO({},{})", self.so_block.0, self.so_block.1)
    }
}

/// `R = dim(𝔲 ∩ 𝔭)` by counting noncompact roots with positive `X`-eigenvalue.
pub fn dim_u_cap_p(levi: &LeviDatum, p: usize, q: usize) -> Result<usize> {
    levi.validate(p, q)?;
    Ok(levi.u_cap_p_weights().len())
}

/// `2ρ(𝔲 ∩ 𝔭)` as `(SO(p) part, SO(q) part)` in the `ε`-bases.
pub fn two_rho_u_cap_p(levi: &LeviDatum, p: usize, q: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    levi.validate(p, q)?;
    let mut e = vec![0i64; p / 2];
    let mut f = vec![0i64; q / 2];
    for (w, w2) in levi.u_cap_p_weights() {
        for (s, x) in e.iter_mut().zip(&w) {
            *s += x;
        }
        for (s, x) in f.iter_mut().zip(&w2) {
            *s += x;
        }
    }
    Ok((e, f))
}

/// All normalized Levi data of signature `(p, q)`, without repeats.
pub fn all_levis(p: usize, q: usize) -> Vec<LeviDatum> {
    let mut kinds = vec![(1, 0), (0, 1)];
    for a in 1..=p / 2 {
        for b in 1..=q / 2 {
            kinds.push((a, b));
        }
    }
    kinds.sort_unstable_by(|x, y| y.cmp(x));
    let mut out = Vec::new();
    fn go(
        kinds: &[(usize, usize)],
        start: usize,
        rest: (usize, usize),
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<LeviDatum>,
    ) {
        out.push(LeviDatum::new(cur.clone(), rest));
        for k in start..kinds.len() {
            let (a, b) = kinds[k];
            if 2 * a <= rest.0 && 2 * b <= rest.1 {
                cur.push((a, b));
                go(kinds, k, (rest.0 - 2 * a, rest.1 - 2 * b), cur, out);
                cur.pop();
            }
        }
    }
    go(&kinds, 0, (p, q), &mut Vec::new(), &mut out);
    out
}

/// Normalized Levi data with `dim(𝔲 ∩ 𝔭) = R`, for `R` below both `p + q − 3` and `pq/4`.
pub fn low_degree_levis(r: usize, p: usize, q: usize) -> Result<Vec<LeviDatum>> {
    if 4 * r >= p * q || r + 3 >= p + q {
        return Err(Error::Precondition(format!(
            "R={r} must satisfy R < p+q−3 = {} and 4R < pq = {}",
            (p + q) as i64 - 3,
            p * q
        )));
    }
    Ok(all_levis(p, q)
        .into_iter()
        .filter(|l| l.u_cap_p_weights().len() == r)
        .collect())
}

/// A dominant integral weight `λ_1 ≥ … ≥ λ_{ℓ−1} ≥ |λ_ℓ|` of `SO(m)`, `ℓ = ⌊m/2⌋`,
/// with `λ_ℓ ≥ 0` when `m` is odd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestWeight {
    pub entries: Vec<i64>,
    pub m: usize,
}

impl HighestWeight {
    pub fn new(entries: Vec<i64>, m: usize) -> Result<Self> {
        let l = m / 2;
        if entries.len() != l {
            return Err(Error::LengthMismatch(entries.len(), l));
        }
        if !Self::is_dominant(&entries, m) {
            return Err(Error::Precondition(format!(
                "{entries:?} is not dominant for SO({m})"
            )));
        }
        Ok(HighestWeight { entries, m })
    }

    pub fn is_dominant(entries: &[i64], m: usize) -> bool {
        let l = entries.len();
        if l == 0 {
            return true;
        }
        let head_ok = entries[..l - 1].windows(2).all(|w| w[0] >= w[1]);
        let last = entries[l - 1];
        let tail_ok = l < 2 || entries[l - 2] >= last.abs();
        head_ok && tail_ok && (m.is_multiple_of(2) || last >= 0)
    }

    pub fn zero(m: usize) -> Self {
        HighestWeight {
            entries: vec![0; m / 2],
            m,
        }
    }

    /// `(1, 0, …, 0)`, the standard representation.
    pub fn standard(m: usize) -> Self {
        let mut w = Self::zero(m);
        if let Some(x) = w.entries.first_mut() {
            *x = 1;
        }
        w
    }
}

/// The three families with worked cohomology tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum CohomologyFamily {
    /// `SO(n,1)`, trivial coefficients, the module `π_k` with `0 ≤ k ≤ ⌊(n+1)/2⌋`;
    /// `k = n/2` (even `n`) stands for either of `π^±`.
    HyperbolicTrivial { n: usize, k: usize },
    /// `SO(n,1)`, coefficients in the standard representation.
    HyperbolicStandard { n: usize },
    /// `SO(n,2)`, trivial coefficients, the module `A_{r,r}` with `4r < n`.
    SoN2Trivial { n: usize, r: usize },
}

/// Degree → dimension of `H^•(𝔤, K; V_π ⊗ E)`, indexed `0..=dim 𝔭`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub r: usize,
    pub levi: LeviDatum,
    pub coefficients: HighestWeight,
    pub dims: Vec<usize>,
}

impl CohomologyTable {
    pub fn nonzero_degrees(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&k| self.dims[k] > 0).collect()
    }
}

impl CohomologyFamily {
    pub fn signature(&self) -> (usize, usize) {
        match *self {
            CohomologyFamily::HyperbolicTrivial { n, .. } => (n, 1),
            CohomologyFamily::HyperbolicStandard { n } => (n, 1),
            CohomologyFamily::SoN2Trivial { n, .. } => (n, 2),
        }
    }
}

/// The table of one of the worked families.
pub fn cohomology_degrees(family: CohomologyFamily) -> Result<CohomologyTable> {
    let (p, q) = family.signature();
    let m = p + q;
    let mut dims = vec![0usize; p * q + 1];
    let (levi, coefficients) = match family {
        CohomologyFamily::HyperbolicTrivial { n, k } => {
            let l = n.div_ceil(2);
            let top = if n % 2 == 0 { l } else { l - 1 };
            if n < 2 || k > top {
                return Err(Error::Unsupported(format!(
                    "SO({n},1) trivial coefficients needs n ≥ 2 and k ≤ {top}, got k={k}"
                )));
            }
            dims[k] = 1;
            dims[n - k] = 1;
            (LeviDatum::standard(k, p, q)?, HighestWeight::zero(m))
        }
        CohomologyFamily::HyperbolicStandard { n } => {
            if n < 2 {
                return Err(Error::Unsupported(format!("SO({n},1) needs n ≥ 2")));
            }
            // The compact dual of SO(n−2,1) is the sphere of dimension n−2.
            dims[1] = 1;
            dims[n - 1] = 1;
            (LeviDatum::standard(1, p, q)?, HighestWeight::standard(m))
        }
        CohomologyFamily::SoN2Trivial { n, r } => {
            if 4 * r >= n {
                return Err(Error::Unsupported(format!("A_(r,r) needs 4r < n, got r={r}, n={n}")));
            }
            for k in 0..=n - 2 * r {
                dims[2 * r + 2 * k] = 1;
            }
            (LeviDatum::standard(r, p, q)?, HighestWeight::zero(m))
        }
    };
    let r = dim_u_cap_p(&levi, p, q)?;
    Ok(CohomologyTable {
        r,
        levi,
        coefficients,
        dims,
    })
}

//! Torus characters of `GL(p)` Schur modules and their `SO(p)` decomposition.
//!
//! The maximal torus of `SO(p)` acts on the pairs `(x_{2i−1}, x_{2i})` through
//! `t_i, t_i^{−1}`, and trivially on the last coordinate when `p` is odd.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::Partition;

/// Weight multiset of `S_mu(C^p)`: content of every semistandard tableau of shape `mu`
/// with entries in `1..=p`.
pub fn gl_weights(mu: &Partition, p: usize) -> BTreeMap<Vec<i64>, u64> {
    let mut out = BTreeMap::new();
    if mu.length() > p {
        return out;
    }
    let cells: Vec<(usize, usize)> = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut fill: Vec<Vec<usize>> = mu.parts().iter().map(|&l| vec![0; l]).collect();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        fill: &mut Vec<Vec<usize>>,
        p: usize,
        out: &mut BTreeMap<Vec<i64>, u64>,
    ) {
        if k == cells.len() {
            let mut w = vec![0i64; p];
            for row in fill.iter() {
                for &x in row {
                    w[x - 1] += 1;
                }
            }
            *out.entry(w).or_default() += 1;
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { fill[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { fill[r - 1][c] + 1 } else { 1 };
        for x in lo_row.max(lo_col)..=p {
            fill[r][c] = x;
            go(k + 1, cells, fill, p, out);
        }
        fill[r][c] = 0;
    }
    go(0, &cells, &mut fill, p, &mut out);
    out
}

/// Restriction of a `GL(p)` weight multiset to the `SO(p)` torus.
pub fn restrict_to_so_torus(weights: &BTreeMap<Vec<i64>, u64>, p: usize) -> BTreeMap<Vec<i64>, u64> {
    let rank = p / 2;
    let mut out = BTreeMap::new();
    for (w, &c) in weights {
        let t: Vec<i64> = (0..rank).map(|i| w[2 * i] - w[2 * i + 1]).collect();
        *out.entry(t).or_default() += c;
    }
    out
}

/// Signed permutations of `rank` coordinates, restricted to an even number of sign
/// changes for type D, each with its determinant.
fn weyl_group(rank: usize, type_d: bool) -> Vec<(Vec<usize>, Vec<i64>, i64)> {
    let mut out = Vec::new();
    for perm in (0..rank).permutations(rank) {
        let mut inv = 0;
        for i in 0..rank {
            for j in i + 1..rank {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        for mask in 0u32..(1 << rank) {
            let flips = mask.count_ones();
            if type_d && flips % 2 == 1 {
                continue;
            }
            let signs: Vec<i64> = (0..rank).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            let det = if (inv + flips) % 2 == 0 { 1 } else { -1 };
            out.push((perm.clone(), signs, det));
        }
    }
    out
}

/// Multiplicities of the harmonic modules `S_[nu]` in `S_mu(C^p)` restricted to `SO(p)`,
/// by the alternating sum `m_ν = Σ_w det(w)·mult(ν + ρ − wρ)`.
///
/// For even `p`, `ν` and its image under the last sign change are merged; they occur
/// with equal multiplicity since the restriction is `O(p)`-stable. Meaningful for
/// `length(mu) ≤ ⌊p/2⌋`, where each `S_[nu]` restricts irreducibly.
pub fn so_decomposition(mu: &Partition, p: usize) -> BTreeMap<Partition, u64> {
    let rank = p / 2;
    let odd = p % 2 == 1;
    let chr = restrict_to_so_torus(&gl_weights(mu, p), p);
    // Doubled weights keep type B half-integers integral.
    let rho2: Vec<i64> = (0..rank)
        .map(|i| 2 * (rank - 1 - i) as i64 + i64::from(odd))
        .collect();
    let group = weyl_group(rank, !odd);
    let mut out = BTreeMap::new();
    for nu in chr.keys() {
        let dominant = nu.windows(2).all(|w| w[0] >= w[1]) && nu.last().is_none_or(|&x| x >= 0);
        if !dominant {
            continue;
        }
        let mut m: i64 = 0;
        for (perm, signs, det) in &group {
            let key: Vec<i64> = (0..rank)
                .map(|i| {
                    let w_rho = signs[i] * rho2[perm[i]];
                    (2 * nu[i] + rho2[i] - w_rho) / 2
                })
                .collect();
            if let Some(&c) = chr.get(&key) {
                m += det * c as i64;
            }
        }
        debug_assert!(m >= 0);
        if m > 0 {
            let parts: Vec<usize> = nu.iter().map(|&x| x as usize).collect();
            out.insert(Partition::new(parts).expect("dominant"), m as u64);
        }
    }
    out
}

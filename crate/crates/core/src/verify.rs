//! Named identity suites run by `fockcalc verify`.
//!
//! Each suite checks one family of exact identities over a fixed finite grid and
//! reports how many cases it examined.

use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arthur::{
    aj_parameter, exponents, highly_non_tempered, infinitesimal_character, is_regular,
    lemma_ll_holds, regular_parameters, rho, standard_levi_exponents, thm_intro1_bound,
    thm_intro4_bound, AjCharacters, ArchArthurParameter, ArthurFactor, CharDatum,
    PairMultiplicity,
};
use crate::cocycles::{closed_form, full_cocycle_value, km_value_on_vz, FundamentalWeightVector};
use crate::error::Result;
use crate::exterior::euler_form;
use crate::partitions::characters::so_decomposition;
use crate::partitions::{
    binomial, cauchy_decompose, littlewood_so_multiplicity, o_harmonic_dim, schur_dim, Partition,
};
use crate::polyfock::{harmonic_space_dim, minor_delta, Ambient, SparsePoly};
use crate::vz::{dim_u_cap_p, low_degree_levis, LeviDatum, LeviShape};

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    /// First failing case, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    pub millis: u128,
}

type Check = Result<std::result::Result<usize, String>>;

/// Suite names in execution order.
pub const SUITES: [&str; 10] = [
    "harmonic-value",
    "cocycle-closed-form",
    "pluriharmonic",
    "cauchy",
    "littlewood",
    "rectangular-branching",
    "kv-dimension",
    "euler",
    "root-count",
    "arthur",
];

pub fn run_suite(name: &str, nullspace_cap: usize) -> Option<SuiteReport> {
    let name = *SUITES.iter().find(|s| **s == name)?;
    let start = Instant::now();
    let outcome = match name {
        "harmonic-value" => harmonic_value(),
        "cocycle-closed-form" => cocycle_closed_form(),
        "pluriharmonic" => pluriharmonic(),
        "cauchy" => cauchy(),
        "littlewood" => littlewood(),
        "rectangular-branching" => rectangular_branching(),
        "kv-dimension" => kv_dimension(nullspace_cap),
        "euler" => euler(),
        "root-count" => root_count(),
        "arthur" => arthur(),
        _ => unreachable!("name taken from SUITES"),
    };
    let (passed, cases, failure) = match outcome {
        Ok(Ok(cases)) => (true, cases, None),
        Ok(Err(why)) => (false, 0, Some(why)),
        Err(e) => (false, 0, Some(format!("error: {e}"))),
    };
    Some(SuiteReport {
        name,
        passed,
        cases,
        failure,
        millis: start.elapsed().as_millis(),
    })
}

pub fn run_all(nullspace_cap: usize) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s, nullspace_cap).expect("known suite"))
        .collect()
}

pub const HARMONIC_VALUE_GRID: [(usize, usize, usize); 6] =
    [(2, 1, 1), (2, 2, 1), (3, 1, 1), (4, 1, 2), (4, 2, 2), (6, 1, 3)];

fn harmonic_value() -> Check {
    for (p, q, n) in HARMONIC_VALUE_GRID {
        let amb = Ambient::new(p, q, n);
        if km_value_on_vz(amb)? != minor_delta(n, amb)?.pow(q as u32) {
            return Ok(Err(format!("(p,q,n)=({p},{q},{n})")));
        }
    }
    Ok(Ok(HARMONIC_VALUE_GRID.len()))
}

/// `(ambient, a)` with `Σa ≤ 3`, `n ≤ 2`, `p ≤ 6`, `q ≤ 2` and `n ≤ ⌊p/2⌋`.
pub fn cocycle_grid() -> Vec<(Ambient, FundamentalWeightVector)> {
    let mut out = Vec::new();
    for n in 1..=2 {
        for p in 2 * n..=6 {
            for q in 1..=2 {
                for total in 0..=3u32 {
                    for a in weight_vectors(n, total) {
                        out.push((Ambient::new(p, q, n), FundamentalWeightVector::new(a)));
                    }
                }
            }
        }
    }
    out
}

fn weight_vectors(n: usize, total: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            weight_vectors(n - 1, total - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn cocycle_closed_form() -> Check {
    let grid = cocycle_grid();
    for (amb, a) in &grid {
        if full_cocycle_value(a, *amb)? != closed_form(a, amb.q as u32, *amb)? {
            return Ok(Err(format!("ambient {amb:?}, a={:?}", a.a)));
        }
    }
    Ok(Ok(grid.len()))
}

fn pluriharmonic() -> Check {
    let mut polys: Vec<(String, SparsePoly)> = Vec::new();
    for (p, q, n) in HARMONIC_VALUE_GRID {
        let amb = Ambient::new(p, q, n);
        polys.push((format!("km ({p},{q},{n})"), km_value_on_vz(amb)?));
    }
    for (amb, a) in cocycle_grid() {
        polys.push((format!("{amb:?} a={:?}", a.a), full_cocycle_value(&a, amb)?));
    }
    for (label, f) in &polys {
        if !f.is_pluriharmonic()? {
            return Ok(Err(label.clone()));
        }
    }
    Ok(Ok(polys.len()))
}

fn cauchy() -> Check {
    let mut cases = 0;
    for p in 1..=16 {
        for q in 1..=16 / p {
            for r in 0..=p * q {
                let total: BigUint = cauchy_decompose(p, q, r)
                    .iter()
                    .map(|(mu, conj)| schur_dim(mu, p) * schur_dim(conj, q))
                    .sum();
                if total != binomial(p * q, r) {
                    return Ok(Err(format!("p={p} q={q} R={r}")));
                }
                cases += 1;
            }
        }
    }
    Ok(Ok(cases))
}

fn littlewood() -> Check {
    let mut cases = 0;
    for p in 3..=5 {
        for size in 0..=5 {
            for mu in Partition::all_of(size, p / 2, size) {
                let chars = so_decomposition(&mu, p);
                for nu in (0..=size).flat_map(Partition::all) {
                    if nu.length() > p / 2 {
                        continue;
                    }
                    let expected = chars.get(&nu).copied().unwrap_or(0);
                    if littlewood_so_multiplicity(&mu, &nu) != expected {
                        return Ok(Err(format!("p={p} mu={mu} nu={nu}")));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(Ok(cases))
}

fn rectangular_branching() -> Check {
    let mut cases = 0;
    for q in 1..=4 {
        for n in 1..=3 {
            for r in 0..=n {
                let got = littlewood_so_multiplicity(
                    &Partition::rectangle(n, q),
                    &Partition::rectangle(r, q),
                );
                let expected = if r == n || q % 2 == 0 { 1 } else { 0 };
                if got != expected {
                    return Ok(Err(format!("n={n} q={q} r={r}: {got}")));
                }
                cases += 1;
            }
        }
    }
    Ok(Ok(cases))
}

fn kv_dimension(cap: usize) -> Check {
    let mut cases = 0;
    for n in 1..=2 {
        for p in 1..=4 {
            for ell in 0..=4u32 {
                let amb = Ambient::new(p, 0, n);
                let lhs = harmonic_space_dim(amb, ell, cap)?;
                let rhs: BigUint = Partition::all_of(ell as usize, n, ell as usize)
                    .iter()
                    .map(|lam| schur_dim(lam, n) * o_harmonic_dim(lam, p))
                    .sum();
                if BigUint::from(lhs) != rhs {
                    return Ok(Err(format!("n={n} p={p} ell={ell}: {lhs} vs {rhs}")));
                }
                cases += 1;
            }
        }
    }
    Ok(Ok(cases))
}

fn euler() -> Check {
    let mut cases = 0;
    for p in 1..=3 {
        for q in (1..=5).step_by(2) {
            if !euler_form(p, q)?.is_zero() {
                return Ok(Err(format!("e_{q} ≠ 0 at p={p}")));
            }
            cases += 1;
        }
    }
    if euler_form(2, 2)?.is_zero() {
        return Ok(Err("e_2 = 0 at (2,2)".into()));
    }
    cases += 1;
    for p in 1..=3 {
        for q in (2..=3).step_by(2) {
            let e = euler_form(p, q)?;
            for k in 1..=p {
                if e.wedge_power(k as u32).is_zero() {
                    return Ok(Err(format!("e_{q}^{k} = 0 at p={p}")));
                }
                cases += 1;
            }
        }
    }
    Ok(Ok(cases))
}

fn root_count() -> Check {
    let mut cases = 0;
    for m in 1..=10 {
        for p in 0..=m {
            let q = m - p;
            for n in 0..=p / 2 {
                let levi = LeviDatum::standard(n, p, q)?;
                if dim_u_cap_p(&levi, p, q)? != n * q {
                    return Ok(Err(format!("n={n} p={p} q={q}")));
                }
                cases += 1;
            }
        }
    }
    for m in 2..=8 {
        for p in 1..m {
            let q = m - p;
            for r in 0..m {
                if 4 * r >= p * q || r + 3 >= m {
                    continue;
                }
                for levi in low_degree_levis(r, p, q)? {
                    let ok = match levi.shape() {
                        LeviShape::CompactTimesSoP { n } => r == n * q,
                        LeviShape::CompactTimesSoQ { n } => r == n * p,
                        LeviShape::Other => false,
                    };
                    if !ok {
                        return Ok(Err(format!("R={r} p={p} q={q}: {levi}")));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(Ok(cases))
}

fn arthur() -> Check {
    let mut cases = 0;
    for m in 3..=12 {
        for p in 1..m {
            let q = m - p;
            for r in 0..=3 {
                if 2 * r >= p {
                    continue;
                }
                let levi = LeviDatum::standard(r, p, q)?;
                let psi = aj_parameter(&levi, &AjCharacters::default())?;
                if exponents(&psi, PairMultiplicity::Two)? != standard_levi_exponents(m, r) {
                    return Ok(Err(format!("exponents m={m} p={p} r={r}")));
                }
                if infinitesimal_character(&psi)? != rho(m) {
                    return Ok(Err(format!("infinitesimal character m={m} p={p} r={r}")));
                }
                cases += 1;
            }
        }
    }
    // Two quadratic strings of equal parity share every entry of the shorter one except a
    // lone 0, so they repeat an entry unless the shorter string is `R_1`.
    for m in 3..=12 {
        let n = 2 * (m / 2);
        for a in (1..n).filter(|a| (a + 1) % 2 == m % 2) {
            let b = n - a;
            if b == 0 || (b + 1) % 2 != m % 2 {
                continue;
            }
            let psi = ArchArthurParameter::new(
                vec![
                    ArthurFactor::new(CharDatum::Quadratic { sign: false }, a),
                    ArthurFactor::new(CharDatum::Quadratic { sign: true }, b),
                ],
                m,
            );
            let regular = is_regular(&infinitesimal_character(&psi)?);
            if regular != (a.min(b) == 1) {
                return Ok(Err(format!("pair a={a} b={b} m={m}: regular={regular}")));
            }
            if a.min(b) * 3 + 1 > m && regular {
                return Ok(Err(format!("highly non-tempered pair a={a} b={b} m={m} is regular")));
            }
            cases += 1;
        }
    }
    for m in 3..=10 {
        for psi in regular_parameters(m) {
            if !lemma_ll_holds(&psi)? {
                return Ok(Err(format!("shape logic fails for {psi}")));
            }
            cases += 1;
        }
    }
    // Hand-computed truth tables: least `a` with `3a > m − 1` for m = 3..=12, largest `n`
    // with `2n < m − ⌊m/2⌋ − 1` for m = 3..=12 and with `n < ½⌊p/2⌋` for p = 2..=12.
    const LEAST_A: [usize; 10] = [1, 2, 2, 2, 3, 3, 3, 4, 4, 4];
    const INTRO4_MAX_N: [usize; 10] = [0, 0, 0, 0, 1, 1, 1, 1, 2, 2];
    const INTRO1_MAX_N: [usize; 11] = [0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2];
    for (k, m) in (3..=12usize).enumerate() {
        let least_a = (1..=m).find(|&a| {
            let psi = ArchArthurParameter::new(
                vec![ArthurFactor::new(CharDatum::Quadratic { sign: false }, a)],
                m,
            );
            highly_non_tempered(&psi)
        });
        if least_a != Some(LEAST_A[k]) {
            return Ok(Err(format!("3a > m−1 threshold at m={m}")));
        }
        for n in 0..m {
            if thm_intro4_bound(n, m) != (n <= INTRO4_MAX_N[k]) {
                return Ok(Err(format!("2n < m−⌊m/2⌋−1 at n={n} m={m}")));
            }
            cases += 1;
        }
    }
    for (k, p) in (2..=12usize).enumerate() {
        for n in 0..p {
            if thm_intro1_bound(n, p) != (n <= INTRO1_MAX_N[k]) {
                return Ok(Err(format!("n < ½⌊p/2⌋ at n={n} p={p}")));
            }
            cases += 1;
        }
    }
    Ok(Ok(cases))
}

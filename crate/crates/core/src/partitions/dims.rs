use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Partition;
use crate::error::{Error, Result};

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of the Schur functor `S_lam(C^n)` by the hook-content formula.
pub fn schur_dim(lam: &Partition, n: usize) -> BigUint {
    if lam.length() > n {
        return BigUint::zero();
    }
    let conj = lam.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (r, &len) in lam.parts().iter().enumerate() {
        for c in 0..len {
            // n + content is positive since r < n.
            num *= n + c - r;
            den *= (len - c - 1) + (conj.part(c) - r - 1) + 1;
        }
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    q
}

/// Dimension of the irreducible SO(m) representation of highest weight `lam`
/// (Weyl dimension formula, types B and D).
pub fn so_irrep_dim(lam: &Partition, m: usize) -> Result<BigUint> {
    let rank = m / 2;
    if lam.length() > rank {
        return Err(Error::Precondition(format!(
            "highest weight {lam} has more than {rank} parts for SO({m})"
        )));
    }
    // Work with doubled weights so the type B half-integers stay integral.
    let odd = m % 2 == 1;
    let rho2: Vec<i64> = (0..rank)
        .map(|i| {
            let r = (rank - i - 1) as i64;
            if odd {
                2 * r + 1
            } else {
                2 * r
            }
        })
        .collect();
    let l2: Vec<i64> = (0..rank).map(|i| 2 * lam.part(i) as i64 + rho2[i]).collect();
    let mut ratio = BigRational::one();
    let frac = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    for i in 0..rank {
        for j in i + 1..rank {
            ratio *= frac(l2[i] - l2[j], rho2[i] - rho2[j]);
            ratio *= frac(l2[i] + l2[j], rho2[i] + rho2[j]);
        }
        if odd {
            ratio *= frac(l2[i], rho2[i]);
        }
    }
    debug_assert!(ratio.is_integer());
    Ok(ratio.to_integer().to_biguint().expect("dimension is positive"))
}

/// Dimension of the harmonic Schur functor `S_[lam](C^m)`, irreducible for O(m).
///
/// Equals the SO(m) dimension except when `m` is even and `lam` has exactly `m/2`
/// parts, where the O(m) module splits into two SO(m) modules of equal dimension.
pub fn so_harmonic_dim(lam: &Partition, m: usize) -> Result<BigUint> {
    let d = so_irrep_dim(lam, m)?;
    if m.is_multiple_of(2) && m > 0 && lam.length() == m / 2 {
        Ok(d * 2u32)
    } else {
        Ok(d)
    }
}

/// Dimension of the O(m) module `S_[lam](C^m)` for any `lam`; zero unless the first two
/// columns have total length at most `m`.
///
/// A first column longer than `m/2` is replaced by `m` minus its length (tensoring with
/// `det`), which leaves the dimension unchanged.
pub fn o_harmonic_dim(lam: &Partition, m: usize) -> BigUint {
    let conj = lam.conjugate();
    let (c1, c2) = (conj.part(0), conj.part(1));
    if c1 + c2 > m {
        return BigUint::zero();
    }
    let lam = if 2 * c1 > m {
        let mut cols = conj.parts().to_vec();
        cols[0] = m - c1;
        Partition::new(cols).expect("c2 ≤ m − c1").conjugate()
    } else {
        lam.clone()
    };
    so_harmonic_dim(&lam, m).expect("at most m/2 rows")
}

/// The pairs `(mu, mu*)` with `mu ⊢ r` fitting in a `p × q` box, in reverse
/// lexicographic order of `mu`.
pub fn cauchy_decompose(p: usize, q: usize, r: usize) -> Vec<(Partition, Partition)> {
    Partition::all_of(r, p, q)
        .into_iter()
        .map(|mu| {
            let conj = mu.conjugate();
            (mu, conj)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn to_u64(x: &BigUint) -> u64 {
        x.to_u64().unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_dim(&p(&[1]), 7), 7u32.into());
        assert_eq!(schur_dim(&p(&[1, 1]), 3), 3u32.into());
        assert_eq!(schur_dim(&p(&[2, 1]), 3), 8u32.into());
        assert_eq!(schur_dim(&p(&[1, 1, 1, 1]), 3), 0u32.into());
        assert_eq!(schur_dim(&p(&[]), 0), 1u32.into());
    }

    #[test]
    fn orthogonal_examples() {
        for m in 2..9 {
            assert_eq!(to_u64(&so_harmonic_dim(&p(&[1]), m).unwrap()), m as u64);
            assert_eq!(
                to_u64(&so_harmonic_dim(&p(&[2]), m).unwrap()),
                (m * (m + 1) / 2 - 1) as u64
            );
        }
        for m in 4..9 {
            assert_eq!(
                to_u64(&so_harmonic_dim(&p(&[1, 1]), m).unwrap()),
                (m * (m - 1) / 2) as u64
            );
        }
        assert_eq!(to_u64(&so_irrep_dim(&p(&[1, 1]), 4).unwrap()), 3);
        assert_eq!(to_u64(&so_irrep_dim(&p(&[1, 1]), 5).unwrap()), 10);
        assert_eq!(to_u64(&so_irrep_dim(&p(&[1, 1, 1]), 7).unwrap()), 35);
        assert!(so_harmonic_dim(&p(&[1, 1]), 3).is_err());
    }

    #[test]
    fn orthogonal_outside_stable_range() {
        assert_eq!(to_u64(&o_harmonic_dim(&p(&[1, 1]), 2)), 1);
        assert_eq!(to_u64(&o_harmonic_dim(&p(&[1, 1, 1]), 2)), 0);
        assert_eq!(to_u64(&o_harmonic_dim(&p(&[2, 1]), 2)), 0);
        assert_eq!(to_u64(&o_harmonic_dim(&p(&[1, 1, 1]), 3)), 1);
        assert_eq!(to_u64(&o_harmonic_dim(&p(&[2, 1, 1]), 4)), 9);
        for m in 1..8 {
            for lam in Partition::all(4) {
                if lam.length() <= m / 2 {
                    assert_eq!(o_harmonic_dim(&lam, m), so_harmonic_dim(&lam, m).unwrap());
                }
            }
        }
    }

    #[test]
    fn cauchy_small() {
        let d = cauchy_decompose(2, 2, 2);
        assert_eq!(d, vec![(p(&[2]), p(&[1, 1])), (p(&[1, 1]), p(&[2]))]);
        assert!(cauchy_decompose(1, 1, 2).is_empty());
        assert_eq!(cauchy_decompose(3, 4, 1), vec![(p(&[1]), p(&[1]))]);
    }
}

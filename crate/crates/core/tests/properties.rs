//! Randomized invariants.

use fockcalc::arthur::{
    infinitesimal_character, ArchArthurParameter, ArthurFactor, CharDatum, InfChar,
};
use fockcalc::exterior::MultiVector;
use fockcalc::partitions::{
    binomial, cauchy_decompose, lr_coefficient, schur_dim, Partition,
};
use fockcalc::polyfock::{minor_delta, Ambient, SparsePoly};
use fockcalc::scalar::rat;
use fockcalc::GaussianRational;
use num_bigint::BigUint;
use proptest::prelude::*;

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.retain(|&x| x > 0);
        Partition::new(v).unwrap()
    })
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-5i64..=5, 1i64..=4, -5i64..=5, 1i64..=4)
        .prop_map(|(a, b, c, d)| GaussianRational::new(rat(a, b), rat(c, d)))
}

fn poly(amb: Ambient) -> impl Strategy<Value = SparsePoly> {
    let nv = amb.nvars();
    prop::collection::vec((prop::collection::vec(0u32..3, nv), gaussian()), 0..6).prop_map(
        move |terms| {
            terms.into_iter().fold(SparsePoly::zero(amb), |acc, (exps, c)| {
                let mut t = SparsePoly::constant(amb, c);
                for (v, &e) in exps.iter().enumerate() {
                    let idx = amb.var_index(v);
                    t = &t * &SparsePoly::var(amb, idx.alpha, idx.j).unwrap().pow(e);
                }
                &acc + &t
            })
        },
    )
}

/// Valid orthogonal parameters: unitary pairs `μ(w) ⊕ μ(−w)` followed by quadratic
/// strings of parity `m − 1` that fill the remaining dimension.
fn parameter() -> impl Strategy<Value = ArchArthurParameter> {
    (3usize..=10, prop::collection::vec((1i64..6, 1usize..4), 0..3)).prop_map(|(m, pairs)| {
        let big_n = 2 * (m / 2);
        let mut factors = Vec::new();
        let mut used = 0;
        for (i, (w, a)) in pairs.into_iter().enumerate() {
            let w = w + 10 * i as i64;
            if used + 2 * a > big_n {
                break;
            }
            factors.push(ArthurFactor::new(CharDatum::unitary(w), a));
            factors.push(ArthurFactor::new(CharDatum::unitary(-w), a));
            used += 2 * a;
        }
        let rest = big_n - used;
        // The rest is even; even m splits it into two odd strings.
        if rest > 0 {
            if m % 2 == 1 {
                factors.push(ArthurFactor::new(CharDatum::trivial(), rest));
            } else if rest >= 2 {
                factors.push(ArthurFactor::new(CharDatum::trivial(), rest - 1));
                factors.push(ArthurFactor::new(CharDatum::Quadratic { sign: true }, 1));
            }
        }
        ArchArthurParameter::new(factors, m)
    })
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(lam in partition(6, 6)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn lr_is_symmetric(mu in partition(3, 3), nu in partition(3, 3), extra in partition(2, 2)) {
        let size = mu.size() + nu.size();
        for lam in Partition::all(size) {
            prop_assert_eq!(lr_coefficient(&lam, &mu, &nu), lr_coefficient(&lam, &nu, &mu));
        }
        prop_assert_eq!(lr_coefficient(&extra, &extra, &Partition::empty()), 1);
    }

    #[test]
    fn lr_counts_product_dimension(mu in partition(2, 3), nu in partition(2, 3), n in 1usize..4) {
        let size = mu.size() + nu.size();
        let total: BigUint = Partition::all(size)
            .iter()
            .map(|lam| schur_dim(lam, n) * BigUint::from(lr_coefficient(lam, &mu, &nu)))
            .sum();
        prop_assert_eq!(total, schur_dim(&mu, n) * schur_dim(&nu, n));
    }

    #[test]
    fn cauchy_identity(p in 1usize..6, q in 1usize..6, r in 0usize..10) {
        let total: BigUint = cauchy_decompose(p, q, r)
            .iter()
            .map(|(mu, conj)| schur_dim(mu, p) * schur_dim(conj, q))
            .sum();
        prop_assert_eq!(total, binomial(p * q, r));
    }

    #[test]
    fn polynomial_text_and_json_round_trip(f in poly(Ambient::new(2, 1, 2))) {
        let amb = f.ambient();
        prop_assert_eq!(SparsePoly::parse(amb, &f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(SparsePoly::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn ring_laws(f in poly(Ambient::new(2, 0, 1)), g in poly(Ambient::new(2, 0, 1)), h in poly(Ambient::new(2, 0, 1))) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn witt_products_are_pluriharmonic(e1 in 0u32..4, e2 in 0u32..3, c in gaussian()) {
        let amb = Ambient::new(4, 0, 2);
        let f = &minor_delta(1, amb).unwrap().pow(e1) * &minor_delta(2, amb).unwrap().pow(e2);
        prop_assert!(f.scale(&c).is_pluriharmonic().unwrap());
    }

    #[test]
    fn wedge_anticommutes(a in 1usize..4, mu in 4usize..6, b in 1usize..4, nu in 4usize..6) {
        let x = MultiVector::basis(3, 2, a, mu).unwrap();
        let y = MultiVector::basis(3, 2, b, nu).unwrap();
        let minus = GaussianRational::gi(-1, 0);
        prop_assert_eq!(x.wedge(&y).unwrap(), y.wedge(&x).unwrap().scale(&minus));
    }

    #[test]
    fn generated_parameters_validate(psi in parameter()) {
        prop_assert!(psi.validate().is_ok(), "{}", psi);
        prop_assert_eq!(psi.dimension(), psi.big_n());
    }

    #[test]
    fn dual_fixes_valid_parameters(psi in parameter()) {
        prop_assert!(psi.dual().same_as(&psi));
    }

    #[test]
    fn quadratic_parity_is_enforced(m in 3usize..12, a in 1usize..12) {
        let big_n = 2 * (m / 2);
        prop_assume!(a < big_n);
        let filler = big_n - a;
        let psi = ArchArthurParameter::new(
            vec![
                ArthurFactor::new(CharDatum::trivial(), a),
                ArthurFactor::new(CharDatum::Quadratic { sign: true }, filler),
            ],
            m,
        );
        let parity_ok = (a + 1) % 2 == m % 2 && (filler + 1) % 2 == m % 2;
        prop_assert_eq!(psi.validate().is_ok(), parity_ok);
    }

    #[test]
    fn canonical_form_is_idempotent(entries in prop::collection::vec(gaussian(), 0..6)) {
        let once = InfChar::canonical(entries);
        let twice = InfChar::canonical(once.entries.clone());
        prop_assert_eq!(&twice, &once);
        let negated = InfChar::canonical(once.entries.iter().map(|z| -z.clone()).collect());
        prop_assert_eq!(negated, once);
    }

    #[test]
    fn infchar_length_is_rank(psi in parameter()) {
        let ic = infinitesimal_character(&psi).unwrap();
        prop_assert_eq!(ic.len(), psi.rank());
    }
}

//! Elementary symmetric polynomials, the star-product closed form, and a
//! sampling-based symmetry falsifier.

use alloc::vec::Vec;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AlgebraError, StarParams};

/// All of `e_1, …, e_n` at once, as the coefficients of `∏(1 + x_i·X)`.
pub fn elem_sym_all(xs: &[i64]) -> Vec<BigInt> {
    let n = xs.len();
    let mut e = alloc::vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for (i, &x) in xs.iter().enumerate() {
        for j in (1..=i + 1).rev() {
            let add = &e[j - 1] * x;
            e[j] += add;
        }
    }
    e.remove(0);
    e
}

/// The `j`-th elementary symmetric polynomial of the entries, `1 ≤ j ≤ n`.
/// There is no `e_0` convention: out-of-range indices are an error.
pub fn elem_sym(j: usize, xs: &[i64]) -> Result<BigInt, AlgebraError> {
    if xs.is_empty() {
        return Err(AlgebraError::EmptySequence);
    }
    if j == 0 || j > xs.len() {
        return Err(AlgebraError::IndexOutOfRange { j, n: xs.len() });
    }
    Ok(elem_sym_all(xs).swap_remove(j - 1))
}

/// The symmetric-polynomial closed form of the star fold:
///
/// ```text
/// Σ_{j=1}^{n} l^{j−1} k^{n−j} e_j(x₁,…,xₙ) + (kⁿ − k)/l
/// ```
///
/// which equals `x₁ ⊛ … ⊛ xₙ` exactly. Arbitrary precision; the `kⁿ` growth
/// makes fixed width pointless here.
pub fn star_poly(p: &StarParams, xs: &[i64]) -> Result<BigInt, AlgebraError> {
    if xs.is_empty() {
        return Err(AlgebraError::EmptySequence);
    }
    let n = xs.len();
    let l = BigInt::from(p.l());
    let k = BigInt::from(p.k());
    let e = elem_sym_all(xs);
    let mut acc = BigInt::zero();
    for (j, ej) in e.iter().enumerate() {
        // l^j * k^(n-1-j) * e_{j+1}
        acc += l.pow(j as u32) * k.pow((n - 1 - j) as u32) * ej;
    }
    // (k^n - k)/l is an integer: l | k(k-1) and (k-1) | (k^(n-1) - 1)
    acc += (k.pow(n as u32) - &k) / &l;
    Ok(acc)
}

/// Outcome of a symmetry check, with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCheck {
    pub symmetric: bool,
    pub arity: usize,
    pub samples: u32,
    pub bound: i64,
    pub seed: u64,
    pub counterexample: Option<SymmetryCounterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCounterexample {
    pub tuple: Vec<i64>,
    pub permuted: Vec<i64>,
}

/// Tests whether `eval` is invariant under permutation of its arguments on
/// seeded sample tuples within `±bound`. All `n!` permutations are tried for
/// `n ≤ 5`, otherwise a seeded sample of 120 permutations per tuple.
///
/// This is a falsifier, not a prover: `symmetric = true` means no violation
/// was found at this seed and sample size.
pub fn check_symmetric<T, F>(
    arity: usize,
    mut eval: F,
    samples: u32,
    bound: i64,
    seed: u64,
) -> SymmetryCheck
where
    T: PartialEq,
    F: FnMut(&[i64]) -> T,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = bound.max(1);
    let exhaustive: Option<Vec<Vec<usize>>> =
        (arity <= 5).then(|| (0..arity).permutations(arity).collect());
    let mut counterexample = None;

    'outer: for _ in 0..samples {
        let tuple: Vec<i64> = (0..arity).map(|_| rng.gen_range(-bound..=bound)).collect();
        let reference = eval(&tuple);
        let mut try_perm = |perm: &[usize]| -> Option<SymmetryCounterexample> {
            let permuted: Vec<i64> = perm.iter().map(|&i| tuple[i]).collect();
            (eval(&permuted) != reference).then(|| SymmetryCounterexample {
                tuple: tuple.clone(),
                permuted,
            })
        };
        match &exhaustive {
            Some(perms) => {
                for perm in perms {
                    if let Some(cx) = try_perm(perm) {
                        counterexample = Some(cx);
                        break 'outer;
                    }
                }
            }
            None => {
                for _ in 0..120 {
                    let mut perm: Vec<usize> = (0..arity).collect();
                    // Fisher-Yates from the same stream
                    for i in (1..arity).rev() {
                        let j = rng.gen_range(0..=i);
                        perm.swap(i, j);
                    }
                    if let Some(cx) = try_perm(&perm) {
                        counterexample = Some(cx);
                        break 'outer;
                    }
                }
            }
        }
    }

    SymmetryCheck {
        symmetric: counterexample.is_none(),
        arity,
        samples,
        bound,
        seed,
        counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn elem_sym_examples() {
        // oracle: (X+1)(X+2)(X+3) = X^3 + 6X^2 + 11X + 6
        assert_eq!(elem_sym(1, &[1, 2, 3]).unwrap(), BigInt::from(6));
        assert_eq!(elem_sym(2, &[1, 2, 3]).unwrap(), BigInt::from(11));
        assert_eq!(elem_sym(3, &[1, 2, 3]).unwrap(), BigInt::from(6));
        assert_eq!(elem_sym(1, &[42]).unwrap(), BigInt::from(42));
        assert_eq!(elem_sym(0, &[1, 2]), Err(AlgebraError::IndexOutOfRange { j: 0, n: 2 }));
        assert_eq!(elem_sym(3, &[1, 2]), Err(AlgebraError::IndexOutOfRange { j: 3, n: 2 }));
        assert_eq!(elem_sym(1, &[]), Err(AlgebraError::EmptySequence));
    }

    /// Brute-force oracle: sum over all size-j index subsets of products.
    fn elem_sym_brute(j: usize, xs: &[i64]) -> BigInt {
        (0..xs.len())
            .combinations(j)
            .map(|combo| combo.iter().map(|&i| BigInt::from(xs[i])).product::<BigInt>())
            .sum()
    }

    #[test]
    fn star_poly_examples() {
        let p = StarParams::new(1, 1).unwrap();
        assert_eq!(star_poly(&p, &[2, 3]).unwrap(), BigInt::from(11));
        let q = StarParams::new(2, 3).unwrap();
        // 3*e1 + 2*e2 + (9-3)/2 = 15 + 8 + 3 = 26
        assert_eq!(star_poly(&q, &[1, 4]).unwrap(), BigInt::from(26));
        // n = 1 collapses to e_1
        assert_eq!(star_poly(&q, &[-7]).unwrap(), BigInt::from(-7));
    }

    #[test]
    fn symmetry_examples() {
        let sym = check_symmetric(2, |v| v[0] + v[1] + v[0] * v[1], 200, 50, 7);
        assert!(sym.symmetric);
        let asym = check_symmetric(2, |v| v[0] - v[1], 200, 50, 7);
        assert!(!asym.symmetric);
        let cx = asym.counterexample.unwrap();
        assert_ne!(cx.tuple[0] - cx.tuple[1], cx.permuted[0] - cx.permuted[1]);

        let q = StarParams::new(2, 3).unwrap();
        let g = check_symmetric(3, |v| star_poly(&q, v).unwrap(), 100, 30, 11);
        assert!(g.symmetric);
    }

    #[test]
    fn large_arity_uses_sampled_permutations() {
        let r = check_symmetric(7, |v| v.iter().sum::<i64>(), 5, 10, 3);
        assert!(r.symmetric);
        let r = check_symmetric(7, |v| v[0] * 2 - v[6], 5, 10, 3);
        assert!(!r.symmetric);
    }

    proptest! {
        #[test]
        fn expansion_matches_subset_sums(xs in proptest::collection::vec(-30i64..=30, 1..7), j in 1usize..7) {
            prop_assume!(j <= xs.len());
            prop_assert_eq!(elem_sym(j, &xs).unwrap(), elem_sym_brute(j, &xs));
        }

        #[test]
        fn permutation_invariance_exhaustive(xs in proptest::collection::vec(-20i64..=20, 1..6)) {
            let reference: Vec<BigInt> = elem_sym_all(&xs);
            for perm in xs.iter().copied().permutations(xs.len()) {
                prop_assert_eq!(&elem_sym_all(&perm), &reference);
            }
        }

        #[test]
        fn closed_form_matches_fold(l in 1i64..=3, kd in -4i64..=4, xs in proptest::collection::vec(-1_000_000i64..=1_000_000, 1..9)) {
            // choose k = l*kd + 1 so l | (k-1) and params are always valid
            let p = StarParams::new(l, l * kd + 1).unwrap();
            let big: Vec<BigInt> = xs.iter().map(|&x| BigInt::from(x)).collect();
            prop_assert_eq!(star_poly(&p, &xs).unwrap(), p.star_fold_big(&big).unwrap());
        }
    }
}

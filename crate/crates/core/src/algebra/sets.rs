//! Finite sum and product sets over strictly increasing index subsets.

use alloc::collections::BTreeSet;

use itertools::Itertools;

use super::{AffineShift, AlgebraError};

fn check_depth(n: usize, depth: usize) -> Result<(), AlgebraError> {
    if n == 0 {
        Err(AlgebraError::EmptySequence)
    } else if depth == 0 || depth > n {
        Err(AlgebraError::DepthOutOfRange { depth, n })
    } else {
        Ok(())
    }
}

/// All `⊙_t`-products `x_{i₁} ⊙_t … ⊙_t x_{iₘ}` over nonempty strictly
/// increasing index subsets with `m ≤ max_depth`. Each fold equals
/// `∏(x_i − t) + t`; with `t = 0` this is the classical finite-products set.
pub fn odot_products(
    t: AffineShift,
    xs: &[i64],
    max_depth: usize,
) -> Result<BTreeSet<i64>, AlgebraError> {
    check_depth(xs.len(), max_depth)?;
    let mut out = BTreeSet::new();
    for size in 1..=max_depth {
        for combo in (0..xs.len()).combinations(size) {
            let mut acc = xs[combo[0]];
            for &i in &combo[1..] {
                acc = t.odot(acc, xs[i])?;
            }
            out.insert(acc);
        }
    }
    Ok(out)
}

/// All `⊕_s`-sums over nonempty strictly increasing index subsets with size
/// `≤ max_depth`, i.e. `Σ_{i∈α} x_i − (|α|−1)·s`. With `s = 0` this is the
/// classical finite-sums set.
pub fn oplus_sums(
    s: AffineShift,
    xs: &[i64],
    max_depth: usize,
) -> Result<BTreeSet<i64>, AlgebraError> {
    check_depth(xs.len(), max_depth)?;
    let mut out = BTreeSet::new();
    for size in 1..=max_depth {
        for combo in (0..xs.len()).combinations(size) {
            let mut acc = xs[combo[0]];
            for &i in &combo[1..] {
                acc = s.oplus(acc, xs[i])?;
            }
            out.insert(acc);
        }
    }
    Ok(out)
}

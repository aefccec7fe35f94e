//! The seeded identity suite behind `algebra verify`.
//!
//! For star parameters `(l, k)` it checks, over seeded samples:
//! the defining product identity `l·(a⊛b) + k = (la+k)(lb+k)` (recomputed
//! independently in 128-bit arithmetic), commutativity, associativity, the
//! identity law when `l | (k−1)`, and agreement of the symmetric-polynomial
//! closed form with the exact big-integer fold for up to eight variables.
//! Exact equality throughout; any mismatch is a failure with a
//! counterexample.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ringshift_core::algebra::{star_poly, StarParams};

#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub l: i64,
    pub k: i64,
    pub samples: u32,
    pub bound: i64,
    pub seed: u64,
    pub fold_samples: u32,
    pub checks: Vec<IdentityCheck>,
}

impl VerifyOutcome {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

pub fn verify_params(
    l: i64,
    k: i64,
    samples: u32,
    bound: i64,
    seed: u64,
) -> Result<VerifyOutcome, String> {
    let p = StarParams::new(l, k).map_err(|e| e.to_string())?;
    let bound = bound.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut product = IdentityCheck { name: "product_identity", passed: true, detail: None };
    let mut comm = IdentityCheck { name: "commutativity", passed: true, detail: None };
    let mut assoc = IdentityCheck { name: "associativity", passed: true, detail: None };
    let mut identity = IdentityCheck { name: "identity_law", passed: true, detail: None };
    if !p.has_identity() {
        identity.detail = Some("skipped: l does not divide k-1".to_string());
    }

    for _ in 0..samples {
        let a = rng.gen_range(-bound..=bound);
        let b = rng.gen_range(-bound..=bound);
        let c = rng.gen_range(-bound..=bound);
        if product.passed {
            match p.star(a, b) {
                Ok(s) => {
                    let lhs = l as i128 * s as i128 + k as i128;
                    let rhs = (l as i128 * a as i128 + k as i128)
                        * (l as i128 * b as i128 + k as i128);
                    if lhs != rhs {
                        product.passed = false;
                        product.detail = Some(format!("a={a} b={b}: {lhs} != {rhs}"));
                    }
                }
                Err(e) => {
                    product.passed = false;
                    product.detail = Some(format!("a={a} b={b}: {e}"));
                }
            }
        }
        if comm.passed && p.star(a, b) != p.star(b, a) {
            comm.passed = false;
            comm.detail = Some(format!("a={a} b={b}"));
        }
        if assoc.passed {
            let left = p.star(a, b).and_then(|ab| p.star(ab, c));
            let right = p.star(b, c).and_then(|bc| p.star(a, bc));
            match (left, right) {
                (Ok(x), Ok(y)) if x == y => {}
                (l_, r_) => {
                    assoc.passed = false;
                    assoc.detail = Some(format!("a={a} b={b} c={c}: {l_:?} vs {r_:?}"));
                }
            }
        }
        if identity.passed {
            if let Some(e) = p.identity() {
                if p.star(a, e) != Ok(a) {
                    identity.passed = false;
                    identity.detail = Some(format!("a={a} e={e}"));
                }
            }
        }
    }

    // closed form vs exact fold, mixed lengths up to 8
    let fold_samples = (samples / 500).clamp(64, 2000);
    let mut fold = IdentityCheck { name: "fold_closed_form", passed: true, detail: None };
    for _ in 0..fold_samples {
        let n = rng.gen_range(1..=8usize);
        let xs: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
        let big: Vec<BigInt> = xs.iter().map(|&x| BigInt::from(x)).collect();
        let closed = star_poly(&p, &xs).map_err(|e| e.to_string())?;
        let folded = p.star_fold_big(&big).map_err(|e| e.to_string())?;
        if closed != folded {
            fold.passed = false;
            fold.detail = Some(format!("xs={xs:?}: {closed} != {folded}"));
            break;
        }
    }

    checks.push(product);
    checks.push(comm);
    checks.push(assoc);
    checks.push(identity);
    checks.push(fold);
    Ok(VerifyOutcome { l, k, samples, bound, seed, fold_samples, checks })
}

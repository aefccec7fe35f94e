//! The star product on ℤ and its shifted-ring relatives.
//!
//! For parameters `(l, k)` with `l ≠ 0` and `l | k(k−1)`, the star product is
//! the unique operation with
//!
//! ```text
//! (l·a + k)(l·b + k) = l·(a ⊛ b) + k
//! ```
//!
//! i.e. `a ⊛ b = l·a·b + k·(a+b) + (k²−k)/l`. It is commutative and
//! associative; when `l | (k−1)` it has the identity element `(1−k)/l`
//! (a commutative monoid — inverses do not exist in general, e.g. `(1,0)`
//! is plain multiplication).
//!
//! For a shift `t`, `a ⊕_t b = a + b − t` and `a ⊙_t b = a ⊛_{1,−t} b`
//! make `(ℤ, ⊕_t, ⊙_t)` a ring isomorphic to `(ℤ, +, ·)` via `x ↦ x + t`.
//!
//! Fixed-width entry points use checked 64-bit arithmetic and report
//! overflow as an error; the `_big` variants are exact at any size.

mod poly;
mod sets;
mod sym;

pub use poly::IntPolynomial;
pub use sets::{odot_products, oplus_sums};
pub use sym::{check_symmetric, elem_sym, elem_sym_all, star_poly, SymmetryCheck, SymmetryCounterexample};

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

// ERRORS
// ================================================================================================

/// Errors from the exact-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// `l = 0`, or `l` does not divide `k(k−1)` (the product would leave ℤ).
    InvalidStarParams { l: i64, k: i64 },
    /// A fixed-width (64-bit) computation left the representable range.
    Overflow,
    /// An operation that folds over a sequence was given an empty one.
    EmptySequence,
    /// `elem_sym` index outside `1..=n`.
    IndexOutOfRange { j: usize, n: usize },
    /// Subset depth outside `1..=n`.
    DepthOutOfRange { depth: usize, n: usize },
    /// A sequence declared distinct contains a repeated value.
    DuplicateValue(i64),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::InvalidStarParams { l, k } => {
                write!(f, "invalid star parameters (l={l}, k={k}): need l != 0 and l | k(k-1)")
            }
            AlgebraError::Overflow => write!(f, "arithmetic overflow in fixed-width (64-bit) mode"),
            AlgebraError::EmptySequence => write!(f, "sequence must be nonempty"),
            AlgebraError::IndexOutOfRange { j, n } => {
                write!(f, "symmetric-polynomial index {j} out of range 1..={n}")
            }
            AlgebraError::DepthOutOfRange { depth, n } => {
                write!(f, "subset depth {depth} out of range 1..={n}")
            }
            AlgebraError::DuplicateValue(v) => {
                write!(f, "sequence declared distinct but {v} repeats")
            }
        }
    }
}

impl core::error::Error for AlgebraError {}

pub(crate) fn narrow(v: i128) -> Result<i64, AlgebraError> {
    i64::try_from(v).map_err(|_| AlgebraError::Overflow)
}

// STAR PARAMETERS
// ================================================================================================

/// Parameters `(l, k)` of the star product, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarParams {
    l: i64,
    k: i64,
    /// `(k²−k)/l`, exact by the closure condition.
    offset: i64,
}

impl StarParams {
    /// Validates `l ≠ 0` and `l | k(k−1)`; fails with `Overflow` if the
    /// constant `(k²−k)/l` does not fit in 64 bits.
    pub fn new(l: i64, k: i64) -> Result<Self, AlgebraError> {
        if l == 0 {
            return Err(AlgebraError::InvalidStarParams { l, k });
        }
        let kk = (k as i128) * (k as i128 - 1);
        if kk % (l as i128) != 0 {
            return Err(AlgebraError::InvalidStarParams { l, k });
        }
        let offset = narrow(kk / (l as i128))?;
        Ok(StarParams { l, k, offset })
    }

    /// The operation `⊙_t = ⊛_{1,−t}`.
    pub fn odot(t: i64) -> Result<Self, AlgebraError> {
        StarParams::new(1, t.checked_neg().ok_or(AlgebraError::Overflow)?)
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// The additive constant `(k²−k)/l` of the product formula.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// True when `l | (k−1)`, i.e. when the identity element is an integer.
    pub fn has_identity(&self) -> bool {
        (self.k as i128 - 1).rem_euclid(self.l as i128) == 0
    }

    /// The identity element `(1−k)/l`, when it exists.
    pub fn identity(&self) -> Option<i64> {
        if self.has_identity() {
            Some(((1 - self.k as i128) / self.l as i128) as i64)
        } else {
            None
        }
    }

    /// `a ⊛ b` in checked 64-bit arithmetic.
    pub fn star(&self, a: i64, b: i64) -> Result<i64, AlgebraError> {
        let (l, k) = (self.l as i128, self.k as i128);
        let (a, b) = (a as i128, b as i128);
        let prod = l.checked_mul(a).and_then(|p| p.checked_mul(b)).ok_or(AlgebraError::Overflow)?;
        let v = prod
            .checked_add(k * (a + b))
            .and_then(|p| p.checked_add(self.offset as i128))
            .ok_or(AlgebraError::Overflow)?;
        narrow(v)
    }

    /// `x_1 ⊛ x_2 ⊛ … ⊛ x_n`; association order is irrelevant.
    pub fn star_fold(&self, xs: &[i64]) -> Result<i64, AlgebraError> {
        let (&first, rest) = xs.split_first().ok_or(AlgebraError::EmptySequence)?;
        rest.iter().try_fold(first, |acc, &x| self.star(acc, x))
    }

    /// Exact star product, never overflows.
    pub fn star_big(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let l = BigInt::from(self.l);
        let k = BigInt::from(self.k);
        &l * a * b + k * (a + b) + BigInt::from(self.offset)
    }

    /// Exact fold of [`StarParams::star_big`].
    pub fn star_fold_big(&self, xs: &[BigInt]) -> Result<BigInt, AlgebraError> {
        let (first, rest) = xs.split_first().ok_or(AlgebraError::EmptySequence)?;
        Ok(rest.iter().fold(first.clone(), |acc, x| self.star_big(&acc, x)))
    }
}

// AFFINE SHIFT
// ================================================================================================

/// The shift `t` parameterizing `⊕_t` and `⊙_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AffineShift(pub i64);

impl AffineShift {
    pub fn t(&self) -> i64 {
        self.0
    }

    /// `a ⊕_t b = a + b − t`.
    pub fn oplus(&self, a: i64, b: i64) -> Result<i64, AlgebraError> {
        narrow(a as i128 + b as i128 - self.0 as i128)
    }

    /// Identity of `(ℤ, ⊕_t)`.
    pub fn oplus_identity(&self) -> i64 {
        self.0
    }

    /// Inverse of `a` in `(ℤ, ⊕_t)`: `2t − a`.
    pub fn oplus_inverse(&self, a: i64) -> Result<i64, AlgebraError> {
        narrow(2 * self.0 as i128 - a as i128)
    }

    /// `a ⊙_t b = (a−t)(b−t) + t = a ⊛_{1,−t} b`.
    pub fn odot(&self, a: i64, b: i64) -> Result<i64, AlgebraError> {
        let t = self.0 as i128;
        let v = (a as i128 - t)
            .checked_mul(b as i128 - t)
            .and_then(|p| p.checked_add(t))
            .ok_or(AlgebraError::Overflow)?;
        narrow(v)
    }

    /// Identity of `(ℤ, ⊙_t)`: `t + 1`.
    pub fn odot_identity(&self) -> Result<i64, AlgebraError> {
        self.0.checked_add(1).ok_or(AlgebraError::Overflow)
    }

    /// The ring isomorphism `h(x) = x + t` from `(ℤ,+,·)` to `(ℤ,⊕_t,⊙_t)`.
    pub fn forward(&self, x: i64) -> Result<i64, AlgebraError> {
        x.checked_add(self.0).ok_or(AlgebraError::Overflow)
    }

    /// The inverse isomorphism `x ↦ x − t`.
    pub fn back(&self, x: i64) -> Result<i64, AlgebraError> {
        x.checked_sub(self.0).ok_or(AlgebraError::Overflow)
    }
}

// INDEXED SEQUENCE
// ================================================================================================

/// A finite ordered integer sequence; generation over it always uses strictly
/// increasing index subsets (values may repeat unless declared distinct).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedSequence {
    values: Vec<i64>,
    distinct: bool,
}

impl IndexedSequence {
    pub fn new(values: Vec<i64>) -> Self {
        IndexedSequence { values, distinct: false }
    }

    /// Declares the sequence injective, rejecting repeated values.
    pub fn distinct(values: Vec<i64>) -> Result<Self, AlgebraError> {
        let mut seen = alloc::collections::BTreeSet::new();
        for &v in &values {
            if !seen.insert(v) {
                return Err(AlgebraError::DuplicateValue(v));
            }
        }
        Ok(IndexedSequence { values, distinct: true })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn is_distinct(&self) -> bool {
        self.distinct
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

// TESTS
// ================================================================================================

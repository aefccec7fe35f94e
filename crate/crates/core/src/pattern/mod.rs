//! The closed catalog of monochromatic configurations and partition-regular
//! equations, their enumeration inside finite windows, and matching against
//! colorings.

mod brute;
mod enumerate;
mod matcher;
mod name;
mod validate;

pub use brute::{enumerate_brute, find_monochromatic_brute};
pub use enumerate::enumerate_solutions;
pub use matcher::{find_mixed, find_monochromatic, find_quad, longest_ap};
pub use validate::validate_solution;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::algebra::{AffineShift, AlgebraError, IntPolynomial, StarParams};
use crate::domain::{DomainError, Window};

// ERRORS
// ================================================================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternError {
    /// The pattern fails its structural invariants.
    Invalid(String),
    /// Canonical-name grammar error.
    Parse(String),
    /// A fixed-width computation left 64-bit range; the string names the
    /// offending bound.
    Overflow(String),
    /// Depth parameter outside its supported range.
    DepthOutOfRange { depth: usize, max: usize },
    Algebra(AlgebraError),
    Domain(DomainError),
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::Invalid(s) => write!(f, "invalid pattern: {s}"),
            PatternError::Parse(s) => write!(f, "cannot parse pattern name: {s}"),
            PatternError::Overflow(s) => write!(f, "64-bit overflow while enumerating: {s}"),
            PatternError::DepthOutOfRange { depth, max } => {
                write!(f, "depth {depth} out of range 1..={max}")
            }
            PatternError::Algebra(e) => write!(f, "{e}"),
            PatternError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for PatternError {}

impl From<AlgebraError> for PatternError {
    fn from(e: AlgebraError) -> Self {
        PatternError::Algebra(e)
    }
}

impl From<DomainError> for PatternError {
    fn from(e: DomainError) -> Self {
        PatternError::Domain(e)
    }
}

// PATTERN CATALOG
// ================================================================================================

/// The binary operation of a Schur-style triple `{x, y, x∘y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleOp {
    Add,
    Mul,
    Star(StarParams),
}

/// Left-hand side of a glue equation; the shared value is eliminated against
/// the star fold on the right.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlueLhs {
    /// `x + P(y−x)`, with `x ≠ y` unless overridden.
    PolyOffset { poly: IntPolynomial },
    /// `(a + b)/2`; tuples with `a + b` odd are skipped, not errors.
    Mean,
    /// `u_i − P_i(y−x)` all equal to the shared value, `i = 1..m`.
    System { polys: Vec<IntPolynomial> },
}

/// A glue equation `G(…) = w₁ ⊛ … ⊛ w_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlueSpec {
    pub lhs: GlueLhs,
    pub star: StarParams,
    /// Number of star-fold variables on the right (1..=4, default 2).
    pub rhs_arity: usize,
    /// Lifts the `x ≠ y` requirement on the polynomial sides.
    pub allow_equal_xy: bool,
}

/// The catalog of pattern families. Every variant has a canonical textual
/// name (see crate docs / `canonical_name`); `Mixed` and `QuadSeq` are
/// matched against colorings directly rather than enumerated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternSpec {
    /// Arithmetic progressions of a fixed length (`len ≥ 2`, `d ≥ 1`).
    Ap { len: u32 },
    /// `{a} ∪ {a + p(d) : p ∈ polys}` for some `d ≠ 0`, `|d| ≤` window width.
    PolyVdw { polys: Vec<IntPolynomial> },
    /// `{x, y, x∘y}`; `x = y` is allowed unless `distinct` is set.
    SchurTriple { op: TripleOp, distinct: bool },
    /// `{x, x+y, x·y}` for some `y ≠ 0`.
    MoreiraTriple,
    /// `{x, x+y+xy, x·y}` for some `y ≠ 0`.
    BlmTriple,
    /// The full `⊙_t`-product set of a strictly increasing sequence of the
    /// given length.
    Products { shift: AffineShift, depth: usize },
    Glue(GlueSpec),
    /// Family members mixed with `⊙_t`-product structure.
    Mixed { family: Box<PatternSpec>, shift: AffineShift, depth: usize },
    /// Four sequences whose sum/product structure sets are jointly
    /// monochromatic.
    QuadSeq { shift: AffineShift, depth: usize },
}

pub(crate) const MAX_AP_LEN: u32 = 64;
pub(crate) const MAX_FAMILY_POLYS: usize = 8;
pub(crate) const MAX_PRODUCT_DEPTH: usize = 3;
pub(crate) const MAX_RHS_ARITY: usize = 4;
pub(crate) const MAX_SYSTEM_EQS: usize = 4;

impl PatternSpec {
    /// Structural validation; enumeration and matching call this first.
    pub fn validate(&self) -> Result<(), PatternError> {
        match self {
            PatternSpec::Ap { len } => {
                if *len < 2 || *len > MAX_AP_LEN {
                    return Err(PatternError::Invalid(alloc::format!(
                        "ap length {len} outside 2..={MAX_AP_LEN}"
                    )));
                }
            }
            PatternSpec::PolyVdw { polys } => {
                if polys.is_empty() || polys.len() > MAX_FAMILY_POLYS {
                    return Err(PatternError::Invalid(alloc::format!(
                        "polyvdw family size {} outside 1..={MAX_FAMILY_POLYS}",
                        polys.len()
                    )));
                }
            }
            PatternSpec::SchurTriple { .. } | PatternSpec::MoreiraTriple | PatternSpec::BlmTriple => {}
            PatternSpec::Products { depth, .. } => {
                if *depth == 0 || *depth > MAX_PRODUCT_DEPTH {
                    return Err(PatternError::DepthOutOfRange {
                        depth: *depth,
                        max: MAX_PRODUCT_DEPTH,
                    });
                }
            }
            PatternSpec::Glue(g) => {
                if g.rhs_arity == 0 || g.rhs_arity > MAX_RHS_ARITY {
                    return Err(PatternError::Invalid(alloc::format!(
                        "glue right-hand arity {} outside 1..={MAX_RHS_ARITY}",
                        g.rhs_arity
                    )));
                }
                if !g.star.has_identity() {
                    return Err(PatternError::Invalid(alloc::format!(
                        "glue requires l | (k-1); got l={}, k={}",
                        g.star.l(),
                        g.star.k()
                    )));
                }
                if let GlueLhs::System { polys } = &g.lhs {
                    if polys.is_empty() || polys.len() > MAX_SYSTEM_EQS {
                        return Err(PatternError::Invalid(alloc::format!(
                            "glue system size {} outside 1..={MAX_SYSTEM_EQS}",
                            polys.len()
                        )));
                    }
                }
            }
            PatternSpec::Mixed { family, depth, .. } => {
                if *depth == 0 || *depth > 2 {
                    return Err(PatternError::DepthOutOfRange { depth: *depth, max: 2 });
                }
                family.validate()?;
                if !family.is_enumerable() {
                    return Err(PatternError::Invalid(String::from(
                        "mixed family must be an enumerable pattern",
                    )));
                }
            }
            PatternSpec::QuadSeq { depth, .. } => {
                if *depth == 0 || *depth > 2 {
                    return Err(PatternError::DepthOutOfRange { depth: *depth, max: 2 });
                }
            }
        }
        Ok(())
    }

    /// True for variants with a solution-tuple enumeration (everything except
    /// `Mixed` and `QuadSeq`, which are coloring-driven searches).
    pub fn is_enumerable(&self) -> bool {
        !matches!(self, PatternSpec::Mixed { .. } | PatternSpec::QuadSeq { .. })
    }
}

// SOLUTIONS AND WITNESSES
// ================================================================================================

/// A variable assignment satisfying a pattern's defining equations, plus the
/// sorted distinct integers it occupies (the ones that must share a color).
/// Auxiliary existentials (`d`, the `y` of the product triples) appear in the
/// assignment but not necessarily among the occupied integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionTuple {
    assignment: Vec<(&'static str, i64)>,
    occupied: Vec<i64>,
}

impl SolutionTuple {
    pub fn new(assignment: Vec<(&'static str, i64)>, mut occupied: Vec<i64>) -> Self {
        occupied.sort_unstable();
        occupied.dedup();
        SolutionTuple { assignment, occupied }
    }

    pub fn assignment(&self) -> &[(&'static str, i64)] {
        &self.assignment
    }

    pub fn occupied(&self) -> &[i64] {
        &self.occupied
    }

    pub fn value(&self, var: &str) -> Option<i64> {
        self.assignment.iter().find(|(n, _)| *n == var).map(|(_, v)| *v)
    }
}

impl PartialOrd for SolutionTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SolutionTuple {
    /// Lexicographic on occupied integers, then on assignment values.
    fn cmp(&self, other: &Self) -> Ordering {
        self.occupied.cmp(&other.occupied).then_with(|| {
            let lhs = self.assignment.iter().map(|(_, v)| *v);
            let rhs = other.assignment.iter().map(|(_, v)| *v);
            lhs.cmp(rhs)
        })
    }
}

/// Proof that a coloring contains a monochromatic instance of a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Canonical pattern name.
    pub pattern: String,
    pub color: u8,
    pub window: Window,
    pub tuple: SolutionTuple,
    /// Named structure sets for the mixed / four-sequence searches.
    pub parts: Vec<(&'static str, Vec<i64>)>,
}

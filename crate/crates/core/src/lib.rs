//! Exact integer algebra for shifted products on ℤ, together with the
//! combinatorial machinery built on top of it: enumeration and matching of
//! monochromatic patterns, finite-window largeness detectors
//! (thick / syndetic / piecewise syndetic) in additive, multiplicative, and
//! star structures, and an exhaustive avoidability search over r-colorings
//! with DIMACS CNF export.
//!
//! The crate is `no_std` (with `alloc`) and fully deterministic: every
//! operation is a pure function of its inputs, all sampling is driven by
//! explicit seeds, and search results are independent of how work is
//! partitioned across workers.
//!
//! ```
//! use ringshift_core::algebra::StarParams;
//! use ringshift_core::domain::Domain;
//! use ringshift_core::pattern::PatternSpec;
//! use ringshift_core::search::{rado_number, DomainKind, RadoOutcome};
//!
//! // (2*2+3)(2*3+3) = 63 = 2*30+3
//! let p = StarParams::new(2, 3).unwrap();
//! assert_eq!(p.star(2, 3).unwrap(), 30);
//!
//! // the least n at which every 2-coloring of [1, n] contains a
//! // monochromatic additive Schur triple {x, y, x+y}
//! let schur = PatternSpec::parse("schur:add").unwrap();
//! match rado_number(&schur, 2, 30, DomainKind::Positive).unwrap() {
//!     RadoOutcome::Found { n_star, .. } => assert_eq!(n_star, 5),
//!     other => panic!("{other:?}"),
//! }
//! # let _ = Domain::positive(5).unwrap();
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod cnf;
pub mod domain;
pub mod largeness;
pub mod pattern;
pub mod search;

pub use algebra::{AffineShift, AlgebraError, IndexedSequence, IntPolynomial, StarParams};
pub use domain::{Coloring, Domain, DomainError, Window};
pub use pattern::{PatternError, PatternSpec, SolutionTuple, Witness};
pub use search::{RadoOutcome, SearchError, SearchOutcome, SearchStats};

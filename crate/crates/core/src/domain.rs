//! Finite integer windows, search domains, and colorings over them.

use alloc::vec::Vec;
use core::fmt;

// ERRORS
// ================================================================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainError {
    /// `lo > hi`.
    EmptyWindow { lo: i64, hi: i64 },
    /// Window too wide to index in memory.
    WindowTooWide { lo: i64, hi: i64 },
    /// Color table length does not match the domain size.
    LengthMismatch { expected: usize, got: usize },
    /// A color index is `≥ r`.
    ColorOutOfRange { color: u8, r: u32 },
    /// `r` outside `1..=256`.
    BadColorCount { r: u32 },
    /// Shifting or resizing left the representable range.
    Overflow,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainError::EmptyWindow { lo, hi } => write!(f, "empty window [{lo},{hi}]"),
            DomainError::WindowTooWide { lo, hi } => write!(f, "window [{lo},{hi}] too wide"),
            DomainError::LengthMismatch { expected, got } => {
                write!(f, "color table has {got} entries, domain has {expected}")
            }
            DomainError::ColorOutOfRange { color, r } => {
                write!(f, "color {color} out of range for r={r}")
            }
            DomainError::BadColorCount { r } => write!(f, "color count r={r} outside 1..=256"),
            DomainError::Overflow => write!(f, "window arithmetic overflow"),
        }
    }
}

impl core::error::Error for DomainError {}

// WINDOW
// ================================================================================================

/// A contiguous integer interval `[lo, hi]`, `lo ≤ hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Window {
    lo: i64,
    hi: i64,
}

/// Windows are indexed in memory; cap the width well below `usize` range.
const MAX_WIDTH: i64 = 1 << 28;

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self, DomainError> {
        if lo > hi {
            return Err(DomainError::EmptyWindow { lo, hi });
        }
        let width = (hi as i128) - (lo as i128) + 1;
        if width > MAX_WIDTH as i128 {
            return Err(DomainError::WindowTooWide { lo, hi });
        }
        Ok(Window { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    /// The window translated by `c`.
    pub fn shifted(&self, c: i64) -> Result<Self, DomainError> {
        let lo = self.lo.checked_add(c).ok_or(DomainError::Overflow)?;
        let hi = self.hi.checked_add(c).ok_or(DomainError::Overflow)?;
        Window::new(lo, hi)
    }

    /// Intersection, if nonempty.
    pub fn intersect(&self, other: &Window) -> Option<Window> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Window { lo, hi })
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

// DOMAIN
// ================================================================================================

/// The set of integers a pattern ranges over and a coloring assigns.
///
/// `Interval` is an arbitrary window. `NonzeroSymmetric(n)` is `[−n,n]∖{0}`,
/// ordered by magnitude then sign (`1, −1, 2, −2, …`) so that the domain for
/// `n` is a prefix of the domain for `n+1`; zero is excluded to avoid
/// degenerate multiplicative and star tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Domain {
    Interval(Window),
    NonzeroSymmetric(i64),
}

impl Domain {
    /// The default search domain `[1, n]`.
    pub fn positive(n: i64) -> Result<Self, DomainError> {
        Ok(Domain::Interval(Window::new(1, n)?))
    }

    pub fn symmetric(n: i64) -> Result<Self, DomainError> {
        if n < 1 {
            return Err(DomainError::EmptyWindow { lo: -n, hi: n });
        }
        // validates width
        Window::new(-n, n)?;
        Ok(Domain::NonzeroSymmetric(n))
    }

    /// Smallest window containing the domain.
    pub fn window(&self) -> Window {
        match self {
            Domain::Interval(w) => *w,
            Domain::NonzeroSymmetric(n) => Window { lo: -n, hi: *n },
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Domain::Interval(w) => w.width(),
            Domain::NonzeroSymmetric(n) => 2 * (*n as usize),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: i64) -> bool {
        match self {
            Domain::Interval(w) => w.contains(x),
            Domain::NonzeroSymmetric(n) => x != 0 && x.abs() <= *n,
        }
    }

    /// Position of `x` in assignment order.
    pub fn position(&self, x: i64) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        Some(match self {
            Domain::Interval(w) => (x - w.lo) as usize,
            Domain::NonzeroSymmetric(_) => {
                let mag = x.unsigned_abs() as usize;
                if x > 0 {
                    2 * (mag - 1)
                } else {
                    2 * (mag - 1) + 1
                }
            }
        })
    }

    /// Value at `pos` in assignment order.
    pub fn value_at(&self, pos: usize) -> i64 {
        match self {
            Domain::Interval(w) => w.lo + pos as i64,
            Domain::NonzeroSymmetric(_) => {
                let mag = (pos / 2 + 1) as i64;
                if pos.is_multiple_of(2) {
                    mag
                } else {
                    -mag
                }
            }
        }
    }

    /// Iterates values in ascending numeric order.
    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        let w = self.window();
        let skip_zero = matches!(self, Domain::NonzeroSymmetric(_));
        w.iter().filter(move |&x| !(skip_zero && x == 0))
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Interval(w) => write!(f, "{w}"),
            Domain::NonzeroSymmetric(n) => write!(f, "[-{n},{n}]\\{{0}}"),
        }
    }
}

// COLORING
// ================================================================================================

/// A total `r`-coloring of a domain. Color indices live in `0..r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    domain: Domain,
    r: u32,
    /// Indexed by domain position.
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(domain: Domain, r: u32, colors: Vec<u8>) -> Result<Self, DomainError> {
        if r == 0 || r > 256 {
            return Err(DomainError::BadColorCount { r });
        }
        if colors.len() != domain.len() {
            return Err(DomainError::LengthMismatch { expected: domain.len(), got: colors.len() });
        }
        if let Some(&c) = colors.iter().find(|&&c| c as u32 >= r) {
            return Err(DomainError::ColorOutOfRange { color: c, r });
        }
        Ok(Coloring { domain, r, colors })
    }

    /// The all-`color` coloring.
    pub fn uniform(domain: Domain, r: u32, color: u8) -> Result<Self, DomainError> {
        let len = domain.len();
        Coloring::new(domain, r, alloc::vec![color; len])
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color_of(&self, x: i64) -> Option<u8> {
        self.domain.position(x).map(|p| self.colors[p])
    }

    /// All integers of one color, ascending.
    pub fn class(&self, color: u8) -> Vec<i64> {
        self.domain.iter().filter(|&x| self.color_of(x) == Some(color)).collect()
    }

    /// True when every listed integer is in the domain and has color `c`.
    pub fn all_colored(&self, xs: &[i64], c: u8) -> bool {
        xs.iter().all(|&x| self.color_of(x) == Some(c))
    }

    /// The single color covering `xs`, if any.
    pub fn monochrome_color(&self, xs: &[i64]) -> Option<u8> {
        let mut it = xs.iter();
        let first = self.color_of(*it.next()?)?;
        for &x in it {
            if self.color_of(x) != Some(first) {
                return None;
            }
        }
        Some(first)
    }
}

//! Finite-window largeness detectors.
//!
//! The infinite notions — thick, syndetic, piecewise syndetic — are
//! parameterized here by a run length `L`, a gap bound `g`, and a translate
//! bound `m`, and every verdict is a claim about the *interior* window the
//! report names, nothing more. In the multiplicative and star structures the
//! translate sets are `f⁻¹A = {y : f∘y ∈ A}`, evaluated only where `f∘y`
//! stays inside the window.
//!
//! Central sets have no finite characterization; wherever a detector stands
//! in for one, piecewise syndeticity is the implemented proxy and reports
//! label it as such.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::algebra::{AffineShift, AlgebraError, StarParams};
use crate::domain::{DomainError, Window};

// ERRORS
// ================================================================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LargenessError {
    /// Multiplicative analysis needs a window of positive integers.
    NonPositiveWindow { lo: i64 },
    /// Bad structure parameters (no identity, nonpositive l, …).
    InvalidParams(String),
    /// Values in a set description fall outside its window.
    OutOfWindow { value: i64 },
    Domain(DomainError),
    Algebra(AlgebraError),
}

impl fmt::Display for LargenessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LargenessError::NonPositiveWindow { lo } => {
                write!(f, "multiplicative analysis needs lo >= 1, got {lo}")
            }
            LargenessError::InvalidParams(s) => write!(f, "invalid largeness parameters: {s}"),
            LargenessError::OutOfWindow { value } => {
                write!(f, "set member {value} outside its window")
            }
            LargenessError::Domain(e) => write!(f, "{e}"),
            LargenessError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LargenessError {}

impl From<DomainError> for LargenessError {
    fn from(e: DomainError) -> Self {
        LargenessError::Domain(e)
    }
}

impl From<AlgebraError> for LargenessError {
    fn from(e: AlgebraError) -> Self {
        LargenessError::Algebra(e)
    }
}

// SET WITH WINDOW
// ================================================================================================

/// A subset of a window, stored as a membership table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSetWindow {
    window: Window,
    members: Vec<bool>,
}

impl FiniteSetWindow {
    pub fn empty(window: Window) -> Self {
        FiniteSetWindow { window, members: alloc::vec![false; window.width()] }
    }

    pub fn full(window: Window) -> Self {
        FiniteSetWindow { window, members: alloc::vec![true; window.width()] }
    }

    pub fn from_iter<I: IntoIterator<Item = i64>>(
        window: Window,
        values: I,
    ) -> Result<Self, LargenessError> {
        let mut set = FiniteSetWindow::empty(window);
        for v in values {
            if !window.contains(v) {
                return Err(LargenessError::OutOfWindow { value: v });
            }
            set.members[(v - window.lo()) as usize] = true;
        }
        Ok(set)
    }

    /// Inclusive interval list, e.g. `[(1,10),(20,30)]`.
    pub fn from_intervals(window: Window, intervals: &[(i64, i64)]) -> Result<Self, LargenessError> {
        let mut set = FiniteSetWindow::empty(window);
        for &(a, b) in intervals {
            if a > b {
                return Err(LargenessError::InvalidParams(alloc::format!(
                    "interval [{a},{b}] is empty"
                )));
            }
            if !window.contains(a) || !window.contains(b) {
                return Err(LargenessError::OutOfWindow { value: if window.contains(a) { b } else { a } });
            }
            for v in a..=b {
                set.members[(v - window.lo()) as usize] = true;
            }
        }
        Ok(set)
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn contains(&self, v: i64) -> bool {
        self.window.contains(v) && self.members[(v - self.window.lo()) as usize]
    }

    pub fn insert(&mut self, v: i64) -> Result<(), LargenessError> {
        if !self.window.contains(v) {
            return Err(LargenessError::OutOfWindow { value: v });
        }
        self.members[(v - self.window.lo()) as usize] = true;
        Ok(())
    }

    pub fn count(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn complement(&self) -> Self {
        FiniteSetWindow {
            window: self.window,
            members: self.members.iter().map(|&m| !m).collect(),
        }
    }

    /// The same set translated by `c`, on the translated window.
    pub fn shifted(&self, c: i64) -> Result<Self, LargenessError> {
        Ok(FiniteSetWindow { window: self.window.shifted(c)?, members: self.members.clone() })
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(move |(i, &m)| m.then_some(self.window.lo() + i as i64))
    }

    pub fn to_set(&self) -> BTreeSet<i64> {
        self.iter().collect()
    }

    /// Run-length encoding as maximal inclusive intervals.
    pub fn intervals(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        let mut run: Option<(i64, i64)> = None;
        for v in self.iter() {
            match run {
                Some((a, b)) if b + 1 == v => run = Some((a, v)),
                Some(done) => {
                    out.push(done);
                    run = Some((v, v));
                }
                None => run = Some((v, v)),
            }
        }
        if let Some(done) = run {
            out.push(done);
        }
        out
    }
}

// PARAMETERS, VERDICTS, REPORTS
// ================================================================================================

/// `(g, L, m)`: gap bound for syndetic, run length for thick, translate
/// bound for the finite translate family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LargenessParams {
    pub gap: i64,
    pub run: i64,
    pub translates: i64,
}

impl LargenessParams {
    pub fn new(gap: i64, run: i64, translates: i64) -> Result<Self, LargenessError> {
        if gap < 1 || run < 1 || translates < 1 {
            return Err(LargenessError::InvalidParams(alloc::format!(
                "need g, L, m >= 1; got g={gap}, L={run}, m={translates}"
            )));
        }
        Ok(LargenessParams { gap, run, translates })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// A run of consecutive members (witness for thick, best-effort
    /// counterexample otherwise).
    Run { start: i64, len: i64 },
    /// A member-free stretch (counterexample for syndetic).
    Gap { start: i64, len: i64 },
    /// A length-`len` block whose internal gaps are all `< g`.
    Block { start: i64, len: i64 },
    /// The covering translate family, as an inclusive interval.
    Cover { family_lo: i64, family_hi: i64 },
    /// A point of the interior no translate covers.
    Uncovered { at: i64 },
    /// A base point whose whole translate orbit lands in the set.
    Base { at: i64 },
    /// An exists-claim failed after exhausting this range.
    Searched { lo: i64, hi: i64 },
    /// Nothing to scan (empty set or empty interior).
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Additive,
    Multiplicative,
    Star { l: i64, k: i64 },
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureKind::Additive => write!(f, "additive"),
            StructureKind::Multiplicative => write!(f, "multiplicative"),
            StructureKind::Star { l, k } => write!(f, "star:{l},{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargenessReport {
    pub structure: StructureKind,
    pub params: LargenessParams,
    /// The window actually certified; `None` when it is empty.
    pub interior: Option<Window>,
    pub thick: Verdict,
    pub syndetic: Verdict,
    pub pws: Verdict,
    /// Experiment field for star reports: the additive pws verdict of the
    /// same set. Reported, not asserted — the infinite transfer statement
    /// has no exact finite counterpart.
    pub implied_additive_pws: Option<bool>,
}

// RUN SCANS (shared by all structures)
// ================================================================================================

/// Longest `true` run as `(start_index, len)`; `(0, 0)` when none.
fn longest_run(bits: &[bool]) -> (usize, i64) {
    let (mut best_start, mut best_len) = (0usize, 0i64);
    let mut cur: Option<(usize, i64)> = None;
    for (i, &b) in bits.iter().enumerate() {
        if b {
            let (s, l) = cur.map_or((i, 0), |c| c);
            cur = Some((s, l + 1));
            if l + 1 > best_len {
                best_start = s;
                best_len = l + 1;
            }
        } else {
            cur = None;
        }
    }
    (best_start, best_len)
}

fn thick_verdict(bits: &[bool], lo: i64, run: i64) -> Verdict {
    let (start, len) = longest_run(bits);
    if len >= run {
        Verdict { holds: true, evidence: Evidence::Run { start: lo + start as i64, len } }
    } else if len > 0 {
        Verdict { holds: false, evidence: Evidence::Run { start: lo + start as i64, len } }
    } else {
        Verdict { holds: false, evidence: Evidence::Empty }
    }
}

fn syndetic_verdict(bits: &[bool], lo: i64, gap: i64, cover: (i64, i64)) -> Verdict {
    let inverted: Vec<bool> = bits.iter().map(|&b| !b).collect();
    let (start, len) = longest_run(&inverted);
    if len >= gap {
        Verdict { holds: false, evidence: Evidence::Gap { start: lo + start as i64, len } }
    } else {
        Verdict {
            holds: true,
            evidence: Evidence::Cover { family_lo: cover.0, family_hi: cover.1 },
        }
    }
}

/// Longest block containing no `gap`-long hole: a stretch `[s, e]` is good
/// iff it contains no `gap` consecutive non-members, so `e` may run up to
/// `gap − 2` positions into the next long hole.
fn pws_verdict(bits: &[bool], lo: i64, gap: i64, run: i64) -> Verdict {
    let n = bits.len();
    if bits.iter().all(|&b| !b) {
        return Verdict { holds: false, evidence: Evidence::Empty };
    }
    let g = gap as usize;
    // empty-run length starting at each position, then the first position
    // >= s where a g-long hole starts
    let mut empty_run = alloc::vec![0usize; n + 1];
    for p in (0..n).rev() {
        empty_run[p] = if bits[p] { 0 } else { empty_run[p + 1] + 1 };
    }
    let mut next_hole = alloc::vec![n; n + 1];
    for s in (0..n).rev() {
        next_hole[s] = if empty_run[s] >= g { s } else { next_hole[s + 1] };
    }
    let mut members = alloc::vec![0usize; n + 1];
    for p in 0..n {
        members[p + 1] = members[p] + usize::from(bits[p]);
    }
    let mut best: (usize, i64) = (0, 0);
    for s in 0..n {
        let end_excl = if next_hole[s] == n { n } else { next_hole[s] + g - 1 };
        let len = end_excl as i64 - s as i64;
        // an admissible block carries at least one member
        if len > best.1 && members[end_excl] > members[s] {
            best = (s, len);
        }
    }
    let (start, len) = best;
    Verdict {
        holds: len >= run,
        evidence: Evidence::Block { start: lo + start as i64, len },
    }
}

// ADDITIVE
// ================================================================================================

/// Finite additive proxies on the full window: thick ⟺ `L` consecutive
/// members; syndetic ⟺ no member-free stretch of length `g`; pws ⟺ some
/// length-`L` block with all internal gaps `< g`.
pub fn analyze_additive(a: &FiniteSetWindow, p: &LargenessParams) -> LargenessReport {
    let lo = a.window.lo();
    LargenessReport {
        structure: StructureKind::Additive,
        params: *p,
        interior: Some(a.window),
        thick: thick_verdict(&a.members, lo, p.run),
        syndetic: syndetic_verdict(&a.members, lo, p.gap, (0, p.gap - 1)),
        pws: pws_verdict(&a.members, lo, p.gap, p.run),
        implied_additive_pws: None,
    }
}

// MULTIPLICATIVE
// ================================================================================================

/// Translate-set proxies in `(ℕ, ·)` with family `F = [1, m]`, certified on
/// the interior `[lo, ⌊hi/m⌋]`: syndetic ⟺ every interior point is covered
/// by some `f⁻¹A`; thick ⟺ some interior `x` has `F·x ⊆ A`; pws ⟺ the
/// covered set contains `L` consecutive interior points.
pub fn analyze_multiplicative(
    a: &FiniteSetWindow,
    p: &LargenessParams,
) -> Result<LargenessReport, LargenessError> {
    let w = a.window;
    if w.lo() < 1 {
        return Err(LargenessError::NonPositiveWindow { lo: w.lo() });
    }
    let translates: Vec<i64> = (1..=p.translates).collect();
    let apply = |f: i64, y: i64| f.checked_mul(y);
    let interior_hi = w.hi() / p.translates;
    let interior = (interior_hi >= w.lo()).then(|| Window::new(w.lo(), interior_hi).unwrap());
    Ok(translate_report(a, p, StructureKind::Multiplicative, interior, &translates, apply, None))
}

// STAR
// ================================================================================================

/// Star-structure analysis with the identity-anchored translate family
/// `F = [e, e+m−1]`, `e = (1−k)/l`. Requires `l ≥ 1` and `l | (k−1)` so that
/// every translate map `y ↦ f ⊛ y` is strictly increasing; the interior is
/// where all of them stay inside the window, intersected with the positive
/// cone `y ≥ e` (mirroring the positive-window convention that keeps the
/// absorbing element out of multiplicative analysis).
///
/// `implied_additive_pws` reports the additive pws verdict of the same set.
pub fn analyze_star(
    a: &FiniteSetWindow,
    sp: StarParams,
    p: &LargenessParams,
) -> Result<LargenessReport, LargenessError> {
    if sp.l() < 1 {
        return Err(LargenessError::InvalidParams(alloc::format!(
            "star analysis needs l >= 1, got l={}",
            sp.l()
        )));
    }
    let Some(e) = sp.identity() else {
        return Err(LargenessError::InvalidParams(alloc::format!(
            "star analysis needs l | (k-1); got l={}, k={}",
            sp.l(),
            sp.k()
        )));
    };
    let w = a.window;
    let translates: Vec<i64> = (0..p.translates).map(|j| e + j).collect();
    // intersect the per-translate preimage intervals: f ⊛ y = s_f·y + c_f
    let mut int_lo = w.lo().max(e);
    let mut int_hi = w.hi();
    for &f in &translates {
        let s_f = sp.l() as i128 * f as i128 + sp.k() as i128;
        debug_assert!(s_f >= 1);
        let c_f = sp.k() as i128 * f as i128 + sp.offset() as i128;
        let lo_f = Integer::div_ceil(&(w.lo() as i128 - c_f), &s_f);
        let hi_f = Integer::div_floor(&(w.hi() as i128 - c_f), &s_f);
        int_lo = int_lo.max(lo_f.clamp(i64::MIN as i128, i64::MAX as i128) as i64);
        int_hi = int_hi.min(hi_f.clamp(i64::MIN as i128, i64::MAX as i128) as i64);
    }
    let interior = (int_lo <= int_hi).then(|| Window::new(int_lo, int_hi).unwrap());
    let apply = |f: i64, y: i64| sp.star(f, y).ok();
    let additive_pws = analyze_additive(a, p).pws.holds;
    Ok(translate_report(
        a,
        p,
        StructureKind::Star { l: sp.l(), k: sp.k() },
        interior,
        &translates,
        apply,
        Some(additive_pws),
    ))
}

fn translate_report<F>(
    a: &FiniteSetWindow,
    p: &LargenessParams,
    structure: StructureKind,
    interior: Option<Window>,
    translates: &[i64],
    apply: F,
    implied_additive_pws: Option<bool>,
) -> LargenessReport
where
    F: Fn(i64, i64) -> Option<i64>,
{
    let Some(interior) = interior else {
        let empty = Verdict { holds: false, evidence: Evidence::Empty };
        return LargenessReport {
            structure,
            params: *p,
            interior: None,
            thick: empty.clone(),
            syndetic: empty.clone(),
            pws: empty,
            implied_additive_pws,
        };
    };
    let covered: Vec<bool> = interior
        .iter()
        .map(|y| translates.iter().any(|&f| apply(f, y).is_some_and(|v| a.contains(v))))
        .collect();

    let syndetic = match covered.iter().position(|&c| !c) {
        Some(i) => Verdict {
            holds: false,
            evidence: Evidence::Uncovered { at: interior.lo() + i as i64 },
        },
        None => Verdict {
            holds: true,
            evidence: Evidence::Cover {
                family_lo: translates[0],
                family_hi: *translates.last().unwrap(),
            },
        },
    };

    let base = interior
        .iter()
        .find(|&x| translates.iter().all(|&f| apply(f, x).is_some_and(|v| a.contains(v))));
    let thick = match base {
        Some(x) => Verdict { holds: true, evidence: Evidence::Base { at: x } },
        None => Verdict {
            holds: false,
            evidence: Evidence::Searched { lo: interior.lo(), hi: interior.hi() },
        },
    };

    let (start, len) = longest_run(&covered);
    let pws = if len >= p.run {
        Verdict { holds: true, evidence: Evidence::Block { start: interior.lo() + start as i64, len } }
    } else if len > 0 {
        Verdict { holds: false, evidence: Evidence::Block { start: interior.lo() + start as i64, len } }
    } else {
        Verdict { holds: false, evidence: Evidence::Empty }
    };

    LargenessReport { structure, params: *p, interior: Some(interior), thick, syndetic, pws, implied_additive_pws }
}

// PULLBACK COMPARISON
// ================================================================================================

/// Paired analysis mirroring the transfer between `(ℕ,·)` on `A` and
/// `(ℤ,⊙_t)` on `A+t`, plus additive pws translation invariance. The
/// agreement flag compares verdicts on the corresponding interiors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackComparison {
    pub star: LargenessReport,
    pub multiplicative: LargenessReport,
    pub additive_pws_base: bool,
    pub additive_pws_shifted: bool,
    pub agreement: bool,
}

pub fn pullback_compare(
    a: &FiniteSetWindow,
    t: AffineShift,
    p: &LargenessParams,
) -> Result<PullbackComparison, LargenessError> {
    let mult = analyze_multiplicative(a, p)?;
    let shifted = a.shifted(t.t())?;
    let star = analyze_star(&shifted, StarParams::odot(t.t())?, p)?;
    let additive_pws_base = analyze_additive(a, p).pws.holds;
    let additive_pws_shifted = analyze_additive(&shifted, p).pws.holds;

    let interiors_correspond = match (&mult.interior, &star.interior) {
        (Some(mi), Some(si)) => mi.shifted(t.t()).ok() == Some(*si),
        (None, None) => true,
        _ => false,
    };
    let agreement = interiors_correspond
        && mult.thick.holds == star.thick.holds
        && mult.syndetic.holds == star.syndetic.holds
        && mult.pws.holds == star.pws.holds
        && additive_pws_base == additive_pws_shifted;

    Ok(PullbackComparison { star, multiplicative: mult, additive_pws_base, additive_pws_shifted, agreement })
}

/// Experiment: star-pws sets should contain nontrivial arithmetic
/// progressions. Reported for logging, never asserted — a finite window
/// cannot prove the infinite statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApExperiment {
    pub pws: bool,
    pub longest: usize,
    pub progression: Vec<i64>,
}

pub fn ap_content_experiment(
    a: &FiniteSetWindow,
    sp: StarParams,
    p: &LargenessParams,
    max_len: usize,
) -> Result<ApExperiment, LargenessError> {
    let report = analyze_star(a, sp, p)?;
    let (longest, progression) = crate::pattern::longest_ap(&a.to_set(), max_len);
    Ok(ApExperiment { pws: report.pws.holds, longest, progression })
}

// TESTS
// ================================================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn params(g: i64, l: i64, m: i64) -> LargenessParams {
        LargenessParams::new(g, l, m).unwrap()
    }

    fn window(lo: i64, hi: i64) -> Window {
        Window::new(lo, hi).unwrap()
    }

    #[test]
    fn additive_examples() {
        // evens with gap bound 2: syndetic
        let w = window(0, 100);
        let evens = FiniteSetWindow::from_iter(w, (0..=100).filter(|v| v % 2 == 0)).unwrap();
        let r = analyze_additive(&evens, &params(2, 3, 1));
        assert!(r.syndetic.holds);
        assert!(!r.thick.holds, "no 3 consecutive evens");

        // two fat blocks: thick at L=30, not syndetic at g=10 (hole 41..59)
        let blocks = FiniteSetWindow::from_intervals(w, &[(10, 40), (60, 90)]).unwrap();
        let r = analyze_additive(&blocks, &params(10, 30, 1));
        assert!(r.thick.holds);
        assert_eq!(r.thick.evidence, Evidence::Run { start: 10, len: 31 });
        assert!(!r.syndetic.holds);
        assert_eq!(r.syndetic.evidence, Evidence::Gap { start: 41, len: 19 });
        assert!(r.pws.holds);

        // empty set: everything false
        let empty = FiniteSetWindow::empty(w);
        let r = analyze_additive(&empty, &params(2, 2, 1));
        assert!(!r.thick.holds && !r.syndetic.holds && !r.pws.holds);
    }

    #[test]
    fn pws_needs_a_good_block() {
        let w = window(1, 60);
        // members every 3rd point in [1,30], nothing after: gaps of 2 inside
        let sparse = FiniteSetWindow::from_iter(w, (1..=30).step_by(3)).unwrap();
        let r = analyze_additive(&sparse, &params(3, 25, 1));
        assert!(r.pws.holds, "gaps of 2 < 3 across a 28-long block");
        let r = analyze_additive(&sparse, &params(2, 25, 1));
        assert!(!r.pws.holds, "gap 2 blocks at g=2");
    }

    #[test]
    fn multiplicative_examples() {
        let w = window(1, 1024);
        let full = FiniteSetWindow::full(w);
        let r = analyze_multiplicative(&full, &params(2, 4, 3)).unwrap();
        assert!(r.thick.holds && r.syndetic.holds && r.pws.holds);
        assert_eq!(r.interior, Some(window(1, 341)));

        // powers of two: 3 is uncovered at m=3 (3, 6, 9 all miss)
        let pows = FiniteSetWindow::from_iter(w, (0..=10).map(|e| 1i64 << e)).unwrap();
        let r = analyze_multiplicative(&pows, &params(2, 2, 3)).unwrap();
        assert!(!r.syndetic.holds);
        assert_eq!(r.syndetic.evidence, Evidence::Uncovered { at: 3 });

        // geometric blocks with ratio 3 inside: {x,2x,3x} fits from x = 4^i
        let w = window(1, 4096);
        let mut blocks = FiniteSetWindow::empty(w);
        let mut base = 1i64;
        while base <= 4096 {
            for v in base..=(3 * base).min(4096) {
                blocks.insert(v).unwrap();
            }
            base *= 4;
        }
        let r = analyze_multiplicative(&blocks, &params(2, 2, 3)).unwrap();
        assert!(r.thick.holds);
        if let Evidence::Base { at } = r.thick.evidence {
            for f in 1..=3 {
                assert!(blocks.contains(f * at));
            }
        } else {
            panic!("thick witness must be a base point");
        }

        assert!(analyze_multiplicative(&FiniteSetWindow::full(window(0, 10)), &params(1, 1, 1))
            .is_err());
    }

    #[test]
    fn star_examples() {
        // full window: everything true
        let w = window(1, 256);
        let full = FiniteSetWindow::full(w);
        let sp = StarParams::odot(0).unwrap(); // plain multiplication
        let r = analyze_star(&full, sp, &params(2, 4, 3)).unwrap();
        assert!(r.thick.holds && r.syndetic.holds && r.pws.holds);
        assert_eq!(r.implied_additive_pws, Some(true));

        // singleton {t} under odot_t: the absorbing point is outside the
        // positive cone, so nothing is thick
        for t in [-2i64, 0, 3] {
            let w = window(t - 5, t + 20);
            let singleton = FiniteSetWindow::from_iter(w, [t]).unwrap();
            let r = analyze_star(&singleton, StarParams::odot(t).unwrap(), &params(2, 2, 2)).unwrap();
            assert!(!r.thick.holds, "t={t}");
            assert!(!r.syndetic.holds, "t={t}");
        }

        // no identity -> error; negative l -> error
        assert!(analyze_star(&full, StarParams::new(4, 4).unwrap(), &params(1, 1, 1)).is_err());
        assert!(analyze_star(&full, StarParams::new(-1, 2).unwrap(), &params(1, 1, 1)).is_err());
    }

    #[test]
    fn star_with_general_parameters() {
        // (2,3): identity e = -1, translates [-1, m-2], slopes 1 + 2j
        let sp = StarParams::new(2, 3).unwrap();
        assert_eq!(sp.identity(), Some(-1));
        let w = window(-10, 200);
        let full = FiniteSetWindow::full(w);
        let r = analyze_star(&full, sp, &params(2, 4, 3)).unwrap();
        assert!(r.thick.holds && r.syndetic.holds && r.pws.holds);
        let interior = r.interior.unwrap();
        // interior starts at the identity (positive cone) and every
        // translate image of every interior point stays inside the window
        assert_eq!(interior.lo(), -1);
        for y in interior.iter() {
            for f in [-1i64, 0, 1] {
                let v = sp.star(f, y).unwrap();
                assert!(w.contains(v), "f={f} y={y} -> {v}");
            }
        }
        // one past the interior must escape through some translate
        let y = interior.hi() + 1;
        assert!([-1i64, 0, 1].iter().any(|&f| !w.contains(sp.star(f, y).unwrap())));
    }

    #[test]
    fn pullback_examples() {
        let w = window(1, 512);
        let full = FiniteSetWindow::full(w);
        let r = pullback_compare(&full, AffineShift(5), &params(2, 4, 3)).unwrap();
        assert!(r.agreement);

        // geometric blocks, shifted by 5: mult-thick(A) = odot_5-thick(A+5)
        let mut blocks = FiniteSetWindow::empty(w);
        let mut base = 1i64;
        while base <= 512 {
            for v in base..=(3 * base).min(512) {
                blocks.insert(v).unwrap();
            }
            base *= 4;
        }
        let r = pullback_compare(&blocks, AffineShift(5), &params(2, 2, 3)).unwrap();
        assert!(r.multiplicative.thick.holds);
        assert!(r.star.thick.holds);
        assert!(r.agreement);

        // the same content analyzed directly under odot_1 = star(1,-1):
        // the shifted blocks are thick with a mapped base point
        let shifted = blocks.shifted(1).unwrap();
        let r = analyze_star(&shifted, StarParams::new(1, -1).unwrap(), &params(2, 2, 3)).unwrap();
        assert!(r.thick.holds);
        if let Evidence::Base { at } = r.thick.evidence {
            assert!(blocks.contains(at - 1), "base pulls back to a multiplicative base");
        } else {
            panic!("thick witness must be a base point");
        }

        // seeded random halves agree across shifts
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for t in -5..=5 {
            for _ in 0..20 {
                let set =
                    FiniteSetWindow::from_iter(w, w.iter().filter(|_| rng.gen_bool(0.5))).unwrap();
                let r = pullback_compare(&set, AffineShift(t), &params(3, 6, 4)).unwrap();
                assert!(r.agreement, "t={t}");
            }
        }
    }

    /// Literal restatement of the pws block definition: some length-`run`
    /// subinterval of the window, containing a member, whose every
    /// length-`gap` subwindow meets the set.
    fn pws_brute(set: &FiniteSetWindow, gap: i64, run: i64) -> bool {
        let w = set.window();
        let mut s = w.lo();
        while s + run - 1 <= w.hi() {
            let mut good = (s..=(s + run - 1)).any(|v| set.contains(v));
            let mut p = s;
            while good && p + gap - 1 <= s + run - 1 {
                if !(p..=(p + gap - 1)).any(|v| set.contains(v)) {
                    good = false;
                }
                p += 1;
            }
            if good {
                return true;
            }
            s += 1;
        }
        false
    }

    #[test]
    fn pws_scan_matches_brute_definition() {
        // exhaustive over all subsets of a width-12 window, all (g, L)
        let w = window(-3, 8);
        for mask in 0u32..(1 << 12) {
            let set = FiniteSetWindow::from_iter(
                w,
                (0..12).filter(|i| mask & (1 << i) != 0).map(|i| -3 + i as i64),
            )
            .unwrap();
            for g in 1..=6i64 {
                for l in 1..=12i64 {
                    let got = analyze_additive(&set, &params(g, l, 1)).pws.holds;
                    assert_eq!(
                        got,
                        pws_brute(&set, g, l),
                        "mask={mask:b} g={g} L={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn duality_thick_iff_complement_not_syndetic() {
        // exact finite statement at L = g, exhaustive on small windows
        for width in 1..=14u32 {
            let w = window(3, 3 + width as i64 - 1);
            for mask in 0u32..(1 << width) {
                let set = FiniteSetWindow::from_iter(
                    w,
                    (0..width).filter(|i| mask & (1 << i) != 0).map(|i| 3 + i as i64),
                )
                .unwrap();
                for lg in 1..=width as i64 {
                    let p = params(lg, lg, 1);
                    let thick = analyze_additive(&set, &p).thick.holds;
                    let comp_synd = analyze_additive(&set.complement(), &p).syndetic.holds;
                    assert_eq!(thick, !comp_synd, "width={width} mask={mask:b} L=g={lg}");
                }
            }
        }
        // seeded spot checks on wider windows
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let w = window(-20, 19);
        for _ in 0..200 {
            let set = FiniteSetWindow::from_iter(w, w.iter().filter(|_| rng.gen_bool(0.4))).unwrap();
            let lg = rng.gen_range(1..=12);
            let p = params(lg, lg, 1);
            assert_eq!(
                analyze_additive(&set, &p).thick.holds,
                !analyze_additive(&set.complement(), &p).syndetic.holds
            );
        }
    }

    #[test]
    fn monotone_under_enlargement() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let w = window(1, 200);
        for _ in 0..50 {
            let mut a = FiniteSetWindow::from_iter(w, w.iter().filter(|_| rng.gen_bool(0.3))).unwrap();
            let p = params(3, 8, 3);
            let mut prev_add = analyze_additive(&a, &p);
            let mut prev_mul = analyze_multiplicative(&a, &p).unwrap();
            for _ in 0..3 {
                // enlarge
                let mut bigger = a.clone();
                for v in w.iter() {
                    if rng.gen_bool(0.2) {
                        bigger.insert(v).unwrap();
                    }
                }
                let add = analyze_additive(&bigger, &p);
                let mul = analyze_multiplicative(&bigger, &p).unwrap();
                for (before, after) in [
                    (&prev_add.thick, &add.thick),
                    (&prev_add.syndetic, &add.syndetic),
                    (&prev_add.pws, &add.pws),
                    (&prev_mul.thick, &mul.thick),
                    (&prev_mul.syndetic, &mul.syndetic),
                    (&prev_mul.pws, &mul.pws),
                ] {
                    assert!(!(before.holds && !after.holds), "verdict degraded on enlargement");
                }
                a = bigger;
                prev_add = add;
                prev_mul = mul;
            }
        }
    }

    #[test]
    fn additive_pws_translation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let w = window(1, 300);
        for _ in 0..50 {
            let set = FiniteSetWindow::from_iter(w, w.iter().filter(|_| rng.gen_bool(0.45))).unwrap();
            let p = params(3, 10, 1);
            let base = analyze_additive(&set, &p).pws.holds;
            for c in [-17i64, -1, 4, 1000] {
                let shifted = set.shifted(c).unwrap();
                assert_eq!(base, analyze_additive(&shifted, &p).pws.holds);
            }
        }
    }

    #[test]
    fn ap_experiment_reports() {
        let w = window(1, 4096);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let set = FiniteSetWindow::from_iter(w, w.iter().filter(|_| rng.gen_bool(0.5))).unwrap();
        let shifted = set.shifted(1).unwrap();
        let ex = ap_content_experiment(&shifted, StarParams::odot(1).unwrap(), &params(3, 8, 3), 4)
            .unwrap();
        // dense random sets carry long progressions; log-only expectation
        if ex.pws {
            assert!(ex.longest >= 3, "experiment failure would be logged, not asserted");
        }
    }

    #[test]
    fn rle_round_trip() {
        let w = window(-5, 20);
        let set = FiniteSetWindow::from_intervals(w, &[(-5, -2), (0, 0), (7, 12)]).unwrap();
        assert_eq!(set.intervals(), alloc::vec![(-5, -2), (0, 0), (7, 12)]);
        let back = FiniteSetWindow::from_intervals(w, &set.intervals()).unwrap();
        assert_eq!(set, back);
        assert_eq!(set.count(), 11);
    }
}

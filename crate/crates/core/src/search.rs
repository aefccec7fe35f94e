//! Exhaustive avoidability search over r-colorings.
//!
//! The engine assigns colors to domain positions in order, fixing the first
//! position to color 0 and rejecting any color that completes a
//! monochromatic solution tuple whose maximum element is the position being
//! assigned. Depth-first with colors tried in ascending order, so the first
//! full-depth coloring reached is the lexicographically least avoiding
//! coloring, and the first time any depth is reached gives the
//! lexicographically least avoiding coloring of that prefix.
//!
//! The same exploration can be split at a fixed prefix depth into
//! independent subtree jobs ([`prefixes`], [`explore_prefix`],
//! [`merge_runs`]); merged results are identical to the sequential run no
//! matter how jobs are scheduled, which is what makes worker counts
//! irrelevant to the answer. Avoidable outcomes carry no node counts:
//! early stopping makes those scheduling-dependent, while exhaustion
//! statistics are not.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::domain::{Coloring, Domain, DomainError};
use crate::pattern::{enumerate_brute, enumerate_solutions, PatternError, PatternSpec};

// ERRORS
// ================================================================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    Pattern(PatternError),
    Domain(DomainError),
    BadColorCount { r: u32 },
    /// The tuple index would exceed the documented memory budget.
    TupleBudgetExceeded { tuples: usize, limit: usize },
    /// `brute_force_decide` refuses more than 2²⁴ colorings.
    GuardExceeded { colorings: u128, limit: u128 },
    /// Rado search needs `n_max ≥ 1`.
    BadBound { n_max: i64 },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::Pattern(e) => write!(f, "{e}"),
            SearchError::Domain(e) => write!(f, "{e}"),
            SearchError::BadColorCount { r } => write!(f, "color count r={r} outside 1..=256"),
            SearchError::TupleBudgetExceeded { tuples, limit } => {
                write!(f, "solution-tuple index needs {tuples} entries, budget is {limit}")
            }
            SearchError::GuardExceeded { colorings, limit } => {
                write!(f, "brute force would scan {colorings} colorings, guard is {limit}")
            }
            SearchError::BadBound { n_max } => write!(f, "rado bound n_max={n_max} must be >= 1"),
        }
    }
}

impl core::error::Error for SearchError {}

impl From<PatternError> for SearchError {
    fn from(e: PatternError) -> Self {
        SearchError::Pattern(e)
    }
}

impl From<DomainError> for SearchError {
    fn from(e: DomainError) -> Self {
        SearchError::Domain(e)
    }
}

// OUTCOMES
// ================================================================================================

/// Statistics of an exhausted search. `nodes` counts color placements;
/// `max_depth` is the deepest avoiding partial coloring encountered. Both
/// are deterministic and independent of worker scheduling. Wall time is the
/// caller's business.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The lexicographically least avoiding coloring.
    Avoidable(Coloring),
    /// No avoiding coloring exists; the search tree was exhausted.
    Unavoidable(SearchStats),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadoOutcome {
    /// Least `n` at which the pattern is unavoidable, with the avoiding
    /// coloring one step below (absent when `n_star` is the smallest domain).
    Found { n_star: i64, avoider: Option<Coloring>, stats: SearchStats },
    /// Still avoidable at the bound; the avoiding coloring is the
    /// certificate.
    BoundExceeded { n_max: i64, avoider: Coloring },
}

/// Which growing domain family a Rado search runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    /// `[1, n]` (the classical convention).
    Positive,
    /// `[−n, n] ∖ {0}`.
    NonzeroSymmetric,
}

impl DomainKind {
    pub fn domain(&self, n: i64) -> Result<Domain, DomainError> {
        match self {
            DomainKind::Positive => Domain::positive(n),
            DomainKind::NonzeroSymmetric => Domain::symmetric(n),
        }
    }

    /// Positions occupied by the domain for bound `n`.
    fn positions(&self, n: i64) -> usize {
        match self {
            DomainKind::Positive => n as usize,
            DomainKind::NonzeroSymmetric => 2 * n as usize,
        }
    }

    /// Largest `n` whose domain fits inside a `depth`-position prefix.
    fn bound_at_depth(&self, depth: usize) -> i64 {
        match self {
            DomainKind::Positive => depth as i64,
            DomainKind::NonzeroSymmetric => (depth / 2) as i64,
        }
    }
}

// COMPILED TUPLE INDEX
// ================================================================================================

const TUPLE_BUDGET: usize = 1 << 24;
const BRUTE_GUARD: u128 = 1 << 24;

/// Solution tuples compiled to domain positions and indexed by their
/// maximum position, deduplicated by occupied set.
#[derive(Debug, Clone)]
pub struct CompiledSearch {
    domain: Domain,
    r: u32,
    by_max: Vec<Vec<Vec<u32>>>,
    tuple_count: usize,
}

impl CompiledSearch {
    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn tuple_count(&self) -> usize {
        self.tuple_count
    }

    /// The deduplicated occupied position sets, ascending.
    pub fn position_sets(&self) -> impl Iterator<Item = &[u32]> {
        self.by_max.iter().flatten().map(|t| t.as_slice())
    }
}

/// Enumerates the pattern and builds the position index used by the search.
pub fn compile(
    pattern: &PatternSpec,
    r: u32,
    domain: &Domain,
) -> Result<CompiledSearch, SearchError> {
    if r == 0 || r > 256 {
        return Err(SearchError::BadColorCount { r });
    }
    let sols = enumerate_solutions(pattern, domain, None)?;
    if sols.len() > TUPLE_BUDGET {
        return Err(SearchError::TupleBudgetExceeded { tuples: sols.len(), limit: TUPLE_BUDGET });
    }
    let mut sets: BTreeSet<Vec<u32>> = BTreeSet::new();
    for s in &sols {
        let mut positions: Vec<u32> =
            s.occupied().iter().map(|&v| domain.position(v).unwrap() as u32).collect();
        // value order need not be position order (the symmetric domain is
        // ordered by magnitude), and the index is keyed by last position
        positions.sort_unstable();
        sets.insert(positions);
    }
    let mut by_max: Vec<Vec<Vec<u32>>> = alloc::vec![Vec::new(); domain.len()];
    let tuple_count = sets.len();
    for t in sets {
        let max = *t.last().unwrap() as usize;
        by_max[max].push(t);
    }
    Ok(CompiledSearch { domain: *domain, r, by_max, tuple_count })
}

// ENGINE
// ================================================================================================

/// Result of exploring (part of) the search tree to a depth cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineRun {
    /// Color placements made.
    pub nodes: u64,
    /// Deepest avoiding prefix reached.
    pub max_depth: usize,
    /// The lexicographically least avoiding prefix of length `max_depth`.
    pub deepest: Vec<u8>,
    /// First full-depth coloring, when one was reached.
    pub full: Option<Vec<u8>>,
}

impl EngineRun {
    fn seed(prefix: &[u8]) -> Self {
        EngineRun { nodes: 0, max_depth: prefix.len(), deepest: prefix.to_vec(), full: None }
    }
}

struct Explorer<'a> {
    cs: &'a CompiledSearch,
    cap: usize,
    colors: Vec<u8>,
    run: EngineRun,
}

impl<'a> Explorer<'a> {
    fn new(cs: &'a CompiledSearch, cap: usize, prefix: &[u8]) -> Self {
        let mut colors = alloc::vec![0u8; cap];
        colors[..prefix.len()].copy_from_slice(prefix);
        Explorer { cs, cap, colors, run: EngineRun::seed(prefix) }
    }

    /// Would coloring `depth` with `c` complete a monochromatic tuple?
    fn allowed(&self, depth: usize, c: u8) -> bool {
        'tuple: for t in &self.cs.by_max[depth] {
            for &p in &t[..t.len() - 1] {
                if self.colors[p as usize] != c {
                    continue 'tuple;
                }
            }
            return false;
        }
        true
    }

    fn place(&mut self, depth: usize, c: u8) {
        self.colors[depth] = c;
        self.run.nodes += 1;
        if depth + 1 > self.run.max_depth {
            self.run.max_depth = depth + 1;
            self.run.deepest = self.colors[..depth + 1].to_vec();
        }
    }

    /// Returns true when a full-depth coloring was found (stop signal).
    fn explore(&mut self, depth: usize) -> bool {
        if depth == self.cap {
            self.run.full = Some(self.colors[..depth].to_vec());
            return true;
        }
        let choices = if depth == 0 { 1 } else { self.cs.r as u16 };
        for c in 0..choices {
            let c = c as u8;
            if self.allowed(depth, c) {
                self.place(depth, c);
                if self.explore(depth + 1) {
                    return true;
                }
            }
        }
        false
    }

    /// Like `explore`, but stops each branch at `at` and collects the
    /// surviving prefixes in lexicographic order instead of descending.
    fn collect(&mut self, depth: usize, at: usize, out: &mut Vec<Vec<u8>>) {
        if depth == at {
            out.push(self.colors[..depth].to_vec());
            return;
        }
        let choices = if depth == 0 { 1 } else { self.cs.r as u16 };
        for c in 0..choices {
            let c = c as u8;
            if self.allowed(depth, c) {
                self.place(depth, c);
                self.collect(depth + 1, at, out);
            }
        }
    }
}

/// Full sequential exploration to `cap` positions.
pub fn run_sequential(cs: &CompiledSearch, cap: usize) -> EngineRun {
    let mut ex = Explorer::new(cs, cap, &[]);
    ex.explore(0);
    ex.run
}

/// Phase one of a partitioned run: all avoiding prefixes of length
/// `prefix_depth` in lexicographic order, plus the exploration record of the
/// prefix tree itself.
pub fn prefixes(cs: &CompiledSearch, cap: usize, prefix_depth: usize) -> (Vec<Vec<u8>>, EngineRun) {
    let at = prefix_depth.min(cap);
    let mut ex = Explorer::new(cs, cap, &[]);
    let mut out = Vec::new();
    ex.collect(0, at, &mut out);
    (out, ex.run)
}

/// Phase two: exhaust one prefix's subtree (early-stopping at the first
/// full-depth coloring inside it).
pub fn explore_prefix(cs: &CompiledSearch, cap: usize, prefix: &[u8]) -> EngineRun {
    let mut ex = Explorer::new(cs, cap, prefix);
    ex.explore(prefix.len());
    ex.run
}

/// Deterministic merge: results must be supplied in prefix order. Node
/// counts add; the deepest witness is the first one to reach the maximum
/// depth; the full-depth witness is the first subtree's.
pub fn merge_runs(prefix_phase: EngineRun, parts: impl IntoIterator<Item = EngineRun>) -> EngineRun {
    let mut total = prefix_phase;
    for p in parts {
        total.nodes += p.nodes;
        if p.max_depth > total.max_depth {
            total.max_depth = p.max_depth;
            total.deepest = p.deepest;
        }
        if total.full.is_none() {
            total.full = p.full;
        }
    }
    total
}

/// Prefix depth giving roughly `target` subtree jobs.
pub fn partition_depth(r: u32, len: usize, target: usize) -> usize {
    let mut depth = 1usize;
    let mut jobs = 1usize;
    while depth < len && jobs < target {
        jobs = jobs.saturating_mul(r.max(2) as usize);
        depth += 1;
    }
    depth.min(len)
}

// DECIDE / BRUTE FORCE / RADO
// ================================================================================================

fn outcome_from(run: EngineRun, cs: &CompiledSearch) -> Result<SearchOutcome, SearchError> {
    match run.full {
        Some(colors) => {
            let coloring = Coloring::new(*cs.domain(), cs.r(), colors)?;
            Ok(SearchOutcome::Avoidable(coloring))
        }
        None => Ok(SearchOutcome::Unavoidable(SearchStats {
            nodes: run.nodes,
            max_depth: run.max_depth as u32,
        })),
    }
}

/// Decides whether `pattern` is avoidable by an `r`-coloring of `domain`.
pub fn decide(
    pattern: &PatternSpec,
    r: u32,
    domain: &Domain,
) -> Result<SearchOutcome, SearchError> {
    let cs = compile(pattern, r, domain)?;
    outcome_from(run_sequential(&cs, domain.len()), &cs)
}

/// Same decision through an explicit partition at `prefix_depth`; the
/// outcome is identical to [`decide`] for every split (unit-tested), which
/// is what lets callers fan the subtree jobs across workers.
pub fn decide_partitioned(
    pattern: &PatternSpec,
    r: u32,
    domain: &Domain,
    prefix_depth: usize,
) -> Result<SearchOutcome, SearchError> {
    let cs = compile(pattern, r, domain)?;
    let cap = domain.len();
    let (pre, phase) = prefixes(&cs, cap, prefix_depth);
    let parts = pre.iter().map(|p| explore_prefix(&cs, cap, p));
    outcome_from(merge_runs(phase, parts), &cs)
}

/// Exhaustive oracle: scans every coloring with the first position fixed to
/// color 0, in lexicographic order. Refuses more than 2²⁴ colorings. Exists
/// for testing and example derivation, not for scale.
pub fn brute_force_decide(
    pattern: &PatternSpec,
    r: u32,
    domain: &Domain,
) -> Result<SearchOutcome, SearchError> {
    if r == 0 || r > 256 {
        return Err(SearchError::BadColorCount { r });
    }
    let len = domain.len();
    let colorings = (r as u128).checked_pow(len as u32 - 1).filter(|&c| c <= BRUTE_GUARD);
    let Some(total) = colorings else {
        return Err(SearchError::GuardExceeded {
            colorings: (r as u128).saturating_pow(len as u32 - 1),
            limit: BRUTE_GUARD,
        });
    };
    // independent tuple source
    let sols = enumerate_brute(pattern, domain)?;
    let mut sets: BTreeSet<Vec<u32>> = BTreeSet::new();
    for s in &sols {
        let mut positions: Vec<u32> =
            s.occupied().iter().map(|&v| domain.position(v).unwrap() as u32).collect();
        positions.sort_unstable();
        sets.insert(positions);
    }
    let mut by_max: Vec<Vec<Vec<u32>>> = alloc::vec![Vec::new(); len];
    for t in sets {
        let max = *t.last().unwrap() as usize;
        by_max[max].push(t);
    }

    let mut colors = alloc::vec![0u8; len];
    let mut scanned: u64 = 0;
    let mut max_depth: usize = 0;
    loop {
        scanned += 1;
        // first position where some tuple goes monochromatic
        let mut violation: Option<usize> = None;
        'scan: for (p, bucket) in by_max.iter().enumerate() {
            'tuple: for t in bucket {
                let c = colors[t[0] as usize];
                for &q in &t[1..] {
                    if colors[q as usize] != c {
                        continue 'tuple;
                    }
                }
                violation = Some(p);
                break 'scan;
            }
        }
        match violation {
            None => {
                let coloring = Coloring::new(*domain, r, colors)?;
                return Ok(SearchOutcome::Avoidable(coloring));
            }
            Some(p) => max_depth = max_depth.max(p),
        }
        // odometer over positions 1.. (position 0 pinned to color 0)
        let mut pos = len;
        loop {
            if pos == 1 {
                debug_assert_eq!(scanned as u128, total);
                return Ok(SearchOutcome::Unavoidable(SearchStats {
                    nodes: scanned,
                    max_depth: max_depth as u32,
                }));
            }
            pos -= 1;
            if (colors[pos] as u32) + 1 < r {
                colors[pos] += 1;
                break;
            }
            colors[pos] = 0;
        }
    }
}

/// Least `n ≤ n_max` whose domain forces the pattern, by a single bounded
/// exhaustion over the `n_max` domain: positions are assigned in an order
/// under which each smaller domain is a prefix of the next, so the deepest
/// avoiding prefix determines the threshold, its snapshot is the
/// lexicographically least avoiding coloring one step below it, and the
/// exhaustion statistics are exactly those of deciding at the threshold.
pub fn rado_number(
    pattern: &PatternSpec,
    r: u32,
    n_max: i64,
    kind: DomainKind,
) -> Result<RadoOutcome, SearchError> {
    if n_max < 1 {
        return Err(SearchError::BadBound { n_max });
    }
    let domain = kind.domain(n_max)?;
    let cs = compile(pattern, r, &domain)?;
    let run = run_sequential(&cs, domain.len());
    rado_outcome(run, &cs, r, n_max, kind)
}

/// Interprets an engine run over the `n_max` domain as a Rado outcome.
pub fn rado_outcome(
    run: EngineRun,
    cs: &CompiledSearch,
    r: u32,
    n_max: i64,
    kind: DomainKind,
) -> Result<RadoOutcome, SearchError> {
    if let Some(colors) = run.full {
        let avoider = Coloring::new(*cs.domain(), r, colors)?;
        return Ok(RadoOutcome::BoundExceeded { n_max, avoider });
    }
    let n_avoid = kind.bound_at_depth(run.max_depth);
    let n_star = n_avoid + 1;
    let avoider = if n_avoid >= 1 {
        let prev = kind.domain(n_avoid)?;
        let prefix = run.deepest[..kind.positions(n_avoid)].to_vec();
        Some(Coloring::new(prev, r, prefix)?)
    } else {
        None
    };
    Ok(RadoOutcome::Found {
        n_star,
        avoider,
        stats: SearchStats { nodes: run.nodes, max_depth: run.max_depth as u32 },
    })
}

/// Rado search through the partition API (same result as [`rado_number`]).
pub fn rado_partitioned(
    pattern: &PatternSpec,
    r: u32,
    n_max: i64,
    kind: DomainKind,
    prefix_depth: usize,
) -> Result<RadoOutcome, SearchError> {
    if n_max < 1 {
        return Err(SearchError::BadBound { n_max });
    }
    let domain = kind.domain(n_max)?;
    let cs = compile(pattern, r, &domain)?;
    let cap = domain.len();
    let (pre, phase) = prefixes(&cs, cap, prefix_depth);
    let parts = pre.iter().map(|p| explore_prefix(&cs, cap, p));
    rado_outcome(merge_runs(phase, parts), &cs, r, n_max, kind)
}

// TESTS
// ================================================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::find_monochromatic;

    fn positive(n: i64) -> Domain {
        Domain::positive(n).unwrap()
    }

    fn pat(name: &str) -> PatternSpec {
        PatternSpec::parse(name).unwrap()
    }

    #[test]
    fn schur_examples() {
        // avoidable at 4 with classes {1,4 | 2,3}, least coloring 0110
        match decide(&pat("schur:add"), 2, &positive(4)).unwrap() {
            SearchOutcome::Avoidable(c) => {
                assert_eq!(c.colors(), &[0, 1, 1, 0]);
                assert!(find_monochromatic(&c, &pat("schur:add")).unwrap().is_none());
            }
            other => panic!("expected avoidable, got {other:?}"),
        }
        assert!(matches!(
            decide(&pat("schur:add"), 2, &positive(5)).unwrap(),
            SearchOutcome::Unavoidable(_)
        ));
    }

    #[test]
    fn single_color_ap() {
        assert!(matches!(
            decide(&pat("ap:3"), 1, &positive(3)).unwrap(),
            SearchOutcome::Unavoidable(_)
        ));
    }

    #[test]
    fn decide_agrees_with_brute_force() {
        let patterns = [
            "ap:3",
            "schur:add",
            "schur:mul",
            "schur:star:1,1",
            "moreira",
            "blm",
            "glue:poly=d^2:star=1,1",
            "glue:mean:star=1,1",
            "fp:t=1:d=2",
            "polyvdw:d^2",
        ];
        for name in patterns {
            let p = pat(name);
            for n in 1..=12 {
                let d = positive(n);
                let fast = decide(&p, 2, &d).unwrap();
                let slow = brute_force_decide(&p, 2, &d).unwrap();
                match (&fast, &slow) {
                    (SearchOutcome::Avoidable(a), SearchOutcome::Avoidable(b)) => {
                        assert_eq!(a, b, "{name} n={n}")
                    }
                    (SearchOutcome::Unavoidable(_), SearchOutcome::Unavoidable(_)) => {}
                    _ => panic!("{name} n={n}: {fast:?} vs {slow:?}"),
                }
            }
        }
        // three colors on smaller windows
        for name in ["schur:add", "ap:3"] {
            let p = pat(name);
            for n in 1..=8 {
                let d = positive(n);
                let fast = decide(&p, 3, &d).unwrap();
                let slow = brute_force_decide(&p, 3, &d).unwrap();
                match (&fast, &slow) {
                    (SearchOutcome::Avoidable(a), SearchOutcome::Avoidable(b)) => {
                        assert_eq!(a, b, "{name} n={n}")
                    }
                    (SearchOutcome::Unavoidable(_), SearchOutcome::Unavoidable(_)) => {}
                    _ => panic!("{name} n={n} r=3"),
                }
            }
        }
    }

    #[test]
    fn brute_guard_refuses_large_spaces() {
        assert!(matches!(
            brute_force_decide(&pat("schur:add"), 2, &positive(40)),
            Err(SearchError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn rado_thresholds() {
        match rado_number(&pat("schur:add"), 2, 30, DomainKind::Positive).unwrap() {
            RadoOutcome::Found { n_star, avoider, .. } => {
                assert_eq!(n_star, 5);
                let avoider = avoider.unwrap();
                assert_eq!(avoider.domain().len(), 4);
                assert!(find_monochromatic(&avoider, &pat("schur:add")).unwrap().is_none());
            }
            other => panic!("{other:?}"),
        }
        match rado_number(&pat("ap:3"), 2, 30, DomainKind::Positive).unwrap() {
            RadoOutcome::Found { n_star, .. } => assert_eq!(n_star, 9),
            other => panic!("{other:?}"),
        }
        // two distinct elements: pigeonhole at 3
        match rado_number(&pat("ap:2"), 2, 10, DomainKind::Positive).unwrap() {
            RadoOutcome::Found { n_star, .. } => assert_eq!(n_star, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rado_matches_scanning_decides() {
        // the single-run threshold equals the first unavoidable n, its
        // avoider equals decide's at n-1, and its stats equal decide's at n
        let p = pat("schur:add");
        let rado = rado_number(&p, 2, 10, DomainKind::Positive).unwrap();
        let mut first_unavoidable = None;
        for n in 1..=10 {
            if matches!(decide(&p, 2, &positive(n)).unwrap(), SearchOutcome::Unavoidable(_)) {
                first_unavoidable = Some(n);
                break;
            }
        }
        match rado {
            RadoOutcome::Found { n_star, avoider, stats } => {
                assert_eq!(Some(n_star), first_unavoidable);
                match decide(&p, 2, &positive(n_star - 1)).unwrap() {
                    SearchOutcome::Avoidable(c) => assert_eq!(Some(c), avoider),
                    _ => panic!("n_star - 1 must be avoidable"),
                }
                match decide(&p, 2, &positive(n_star)).unwrap() {
                    SearchOutcome::Unavoidable(s) => assert_eq!(s, stats),
                    _ => panic!("n_star must be unavoidable"),
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rado_bound_exceeded_keeps_certificate() {
        match rado_number(&pat("ap:3"), 2, 8, DomainKind::Positive).unwrap() {
            RadoOutcome::BoundExceeded { n_max, avoider } => {
                assert_eq!(n_max, 8);
                assert!(find_monochromatic(&avoider, &pat("ap:3")).unwrap().is_none());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn partitioned_runs_match_sequential() {
        for name in ["schur:add", "ap:3", "glue:poly=d^2:star=1,1"] {
            let p = pat(name);
            for n in [4i64, 5, 8, 9] {
                let d = positive(n);
                let seq = decide(&p, 2, &d).unwrap();
                for depth in 1..=d.len() {
                    let part = decide_partitioned(&p, 2, &d, depth).unwrap();
                    assert_eq!(seq, part, "{name} n={n} split at {depth}");
                }
            }
            let seq = rado_number(&p, 2, 12, DomainKind::Positive).unwrap();
            for depth in [1usize, 3, 7, 12] {
                let part = rado_partitioned(&p, 2, 12, DomainKind::Positive, depth).unwrap();
                assert_eq!(seq, part, "{name} rado split at {depth}");
            }
        }
    }

    #[test]
    fn symmetric_domain_search() {
        // the magnitude ordering of [-n, n] \ {0} makes value order differ
        // from position order; decide and the oracle must agree anyway
        for name in ["schur:add", "schur:star:1,1", "ap:3", "moreira"] {
            let p = pat(name);
            for n in 1..=6i64 {
                let d = Domain::symmetric(n).unwrap();
                let out = decide(&p, 2, &d).unwrap();
                let brute = brute_force_decide(&p, 2, &d).unwrap();
                match (&out, &brute) {
                    (SearchOutcome::Avoidable(a), SearchOutcome::Avoidable(b)) => {
                        assert_eq!(a, b, "{name} n={n}");
                        assert!(find_monochromatic(a, &p).unwrap().is_none());
                    }
                    (SearchOutcome::Unavoidable(_), SearchOutcome::Unavoidable(_)) => {}
                    _ => panic!("{name} n={n}: {out:?} vs {brute:?}"),
                }
            }
        }
        // hand-checked: {1, -1 | 2, -2} avoids additive Schur on [-2, 2]*
        let d = Domain::symmetric(2).unwrap();
        match decide(&pat("schur:add"), 2, &d).unwrap() {
            SearchOutcome::Avoidable(c) => assert_eq!(c.colors(), &[0, 0, 1, 1]),
            other => panic!("expected avoidable, got {other:?}"),
        }
    }

    #[test]
    fn star_triple_matches_shifted_multiplicative() {
        // {x, y, x star y} on [1, n] maps to {x, y, xy} on [2, n+1] via +1
        for n in 1..=14i64 {
            let star = decide(&pat("schur:star:1,1"), 2, &positive(n)).unwrap();
            let shifted = Domain::Interval(crate::domain::Window::new(2, n + 1).unwrap());
            let mult = decide(&pat("schur:mul"), 2, &shifted).unwrap();
            match (&star, &mult) {
                (SearchOutcome::Avoidable(a), SearchOutcome::Avoidable(b)) => {
                    assert_eq!(a.colors(), b.colors(), "n={n}");
                }
                (SearchOutcome::Unavoidable(sa), SearchOutcome::Unavoidable(sb)) => {
                    assert_eq!(sa, sb, "n={n}");
                }
                _ => panic!("n={n}: star and shifted multiplicative disagree"),
            }
        }
    }
}

//! CNF encoding of avoidability: the formula is satisfiable exactly when an
//! avoiding coloring exists.
//!
//! Variable mapping (documented in the DIMACS metadata): the variable of
//! integer `i` with color `c` is `(i − lo)·r + c + 1`. Clauses, in order:
//! one at-least-one clause per integer, `r(r−1)/2` at-most-one clauses per
//! integer, then one clause `∨_{i∈T} ¬x_{i,c}` per deduplicated occupied
//! set `T` per color.

use alloc::string::String;
use alloc::vec::Vec;

use crate::domain::{Coloring, Domain};
use crate::pattern::{find_monochromatic, PatternSpec, Witness};
use crate::search::{compile, SearchError};

/// A propositional encoding plus the metadata needed to interpret models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfDocument {
    /// Canonical pattern name.
    pub pattern: String,
    pub n: i64,
    pub r: u32,
    pub lo: i64,
    pub num_vars: usize,
    /// DIMACS-style clauses (nonzero literals, no terminating zeros).
    pub clauses: Vec<Vec<i32>>,
}

impl CnfDocument {
    pub fn var(&self, i: i64, c: u32) -> i32 {
        ((i - self.lo) as i32) * self.r as i32 + c as i32 + 1
    }
}

/// Encodes avoidability of `pattern` by `r`-colorings of `[1, n]`.
pub fn export_cnf(pattern: &PatternSpec, r: u32, n: i64) -> Result<CnfDocument, SearchError> {
    let domain = Domain::positive(n)?;
    let cs = compile(pattern, r, &domain)?;
    let lo = 1i64;
    let var = |i: i64, c: u32| ((i - lo) as i32) * r as i32 + c as i32 + 1;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    for i in domain.iter() {
        clauses.push((0..r).map(|c| var(i, c)).collect());
    }
    for i in domain.iter() {
        for c1 in 0..r {
            for c2 in (c1 + 1)..r {
                clauses.push(alloc::vec![-var(i, c1), -var(i, c2)]);
            }
        }
    }
    for set in cs.position_sets() {
        for c in 0..r {
            clauses.push(set.iter().map(|&p| -var(domain.value_at(p as usize), c)).collect());
        }
    }
    Ok(CnfDocument {
        pattern: pattern.canonical_name(),
        n,
        r,
        lo,
        num_vars: domain.len() * r as usize,
        clauses,
    })
}

// MODEL VALIDATION
// ================================================================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelRejection {
    /// A literal references a variable outside `1..=num_vars`.
    BadLiteral { literal: i64 },
    /// The assignment does not cover every variable exactly once.
    ArityMismatch { expected: usize, got: usize },
    /// A variable occurs with both polarities.
    Conflicting { var: usize },
    /// A clause evaluates to false (0-based index into the clause list).
    ClauseViolated { index: usize, clause: Vec<i32> },
    /// The decoded coloring contains a monochromatic solution (only
    /// reachable when the clause set is not faithful to the pattern).
    Monochromatic { witness: alloc::boxed::Box<Witness> },
}

impl core::fmt::Display for ModelRejection {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ModelRejection::BadLiteral { literal } => write!(f, "literal {literal} out of range"),
            ModelRejection::ArityMismatch { expected, got } => {
                write!(f, "assignment covers {got} of {expected} variables")
            }
            ModelRejection::Conflicting { var } => write!(f, "variable {var} assigned twice"),
            ModelRejection::ClauseViolated { index, clause } => {
                write!(f, "clause {index} violated: {clause:?}")
            }
            ModelRejection::Monochromatic { witness } => {
                write!(f, "decoded coloring has monochromatic witness {:?}", witness.tuple)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelVerdict {
    /// The model satisfies every clause; the decoded coloring re-verified
    /// with the independent matcher.
    Accepted(Coloring),
    Rejected(ModelRejection),
}

/// Checks a claimed model against the document, names the violated clause if
/// any, reconstructs the coloring through the variable mapping, and
/// re-verifies it with `find_monochromatic`.
pub fn validate_model(doc: &CnfDocument, literals: &[i64]) -> Result<ModelVerdict, SearchError> {
    let mut assignment: Vec<Option<bool>> = alloc::vec![None; doc.num_vars];
    let mut assigned = 0usize;
    for &lit in literals {
        let var = lit.unsigned_abs();
        if lit == 0 || var as usize > doc.num_vars {
            return Ok(ModelVerdict::Rejected(ModelRejection::BadLiteral { literal: lit }));
        }
        let var = var as usize;
        let value = lit > 0;
        match assignment[var - 1] {
            None => {
                assignment[var - 1] = Some(value);
                assigned += 1;
            }
            Some(prev) if prev == value => {}
            Some(_) => return Ok(ModelVerdict::Rejected(ModelRejection::Conflicting { var })),
        }
    }
    if assigned != doc.num_vars {
        return Ok(ModelVerdict::Rejected(ModelRejection::ArityMismatch {
            expected: doc.num_vars,
            got: assigned,
        }));
    }
    let truth = |lit: i32| -> bool {
        let v = assignment[(lit.unsigned_abs() as usize) - 1].unwrap();
        if lit > 0 {
            v
        } else {
            !v
        }
    };
    for (index, clause) in doc.clauses.iter().enumerate() {
        if !clause.iter().any(|&l| truth(l)) {
            return Ok(ModelVerdict::Rejected(ModelRejection::ClauseViolated {
                index,
                clause: clause.clone(),
            }));
        }
    }
    // decode through the documented mapping; ALO/AMO clauses guarantee
    // exactly one color per integer at this point
    let domain = Domain::positive(doc.n)?;
    let mut colors = Vec::with_capacity(domain.len());
    for i in domain.iter() {
        let c = (0..doc.r).find(|&c| truth(doc.var(i, c))).unwrap();
        colors.push(c as u8);
    }
    let coloring = Coloring::new(domain, doc.r, colors)?;
    let pattern = PatternSpec::parse(&doc.pattern)?;
    match find_monochromatic(&coloring, &pattern)? {
        Some(witness) => Ok(ModelVerdict::Rejected(ModelRejection::Monochromatic {
            witness: alloc::boxed::Box::new(witness),
        })),
        None => Ok(ModelVerdict::Accepted(coloring)),
    }
}

// INTERNAL SATISFIABILITY CHECK
// ================================================================================================

/// Plain DPLL (unit propagation plus splitting on the lowest unassigned
/// variable, false first). Intended for the small instances the acceptance
/// checks exercise, not as a competitive solver. Returns a full model as
/// signed literals, ascending by variable.
pub fn solve(doc: &CnfDocument) -> Option<Vec<i64>> {
    let mut assignment: Vec<Option<bool>> = alloc::vec![None; doc.num_vars];
    if dpll(&doc.clauses, &mut assignment) {
        Some(
            assignment
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let var = (i + 1) as i64;
                    // variables untouched by any clause default to false
                    if v.unwrap_or(false) {
                        var
                    } else {
                        -var
                    }
                })
                .collect(),
        )
    } else {
        None
    }
}

fn dpll(clauses: &[Vec<i32>], assignment: &mut Vec<Option<bool>>) -> bool {
    // unit propagation to fixpoint
    let mut trail: Vec<usize> = Vec::new();
    loop {
        let mut unit: Option<i32> = None;
        for clause in clauses {
            let mut satisfied = false;
            let mut unassigned: Option<i32> = None;
            let mut unassigned_count = 0;
            for &lit in clause {
                match assignment[(lit.unsigned_abs() as usize) - 1] {
                    None => {
                        unassigned_count += 1;
                        unassigned = Some(lit);
                    }
                    Some(v) if v == (lit > 0) => {
                        satisfied = true;
                        break;
                    }
                    Some(_) => {}
                }
            }
            if satisfied {
                continue;
            }
            match unassigned_count {
                0 => {
                    // conflict: undo trail
                    for &v in &trail {
                        assignment[v] = None;
                    }
                    return false;
                }
                1 => {
                    unit = unassigned;
                    break;
                }
                _ => {}
            }
        }
        match unit {
            Some(lit) => {
                let var = (lit.unsigned_abs() as usize) - 1;
                assignment[var] = Some(lit > 0);
                trail.push(var);
            }
            None => break,
        }
    }
    let Some(var) = assignment.iter().position(|v| v.is_none()) else {
        return true;
    };
    for value in [false, true] {
        assignment[var] = Some(value);
        if dpll(clauses, assignment) {
            return true;
        }
        assignment[var] = None;
    }
    // undo propagation before backtracking out
    for &v in &trail {
        assignment[v] = None;
    }
    false
}

// TESTS
// ================================================================================================

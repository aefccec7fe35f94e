//! Independent re-validation of solution tuples.
//!
//! Substitutes the assignment back into the defining equations and checks
//! exact equality, domain membership, and distinctness constraints. Star
//! relations are checked through the defining product identity
//! `∏(l·x_i + k) = l·c + k`, polynomials by naive power evaluation — none of
//! the enumerator's divisor or Horner machinery is used here.

use alloc::string::String;
use alloc::vec::Vec;

use super::{GlueLhs, PatternSpec, SolutionTuple, TripleOp};
use crate::algebra::{IntPolynomial, StarParams};
use crate::domain::Domain;

type Check = Result<(), String>;

fn fail(msg: alloc::string::String) -> Check {
    Err(msg)
}

fn need(tuple: &SolutionTuple, var: &str) -> Result<i64, String> {
    tuple.value(var).ok_or_else(|| alloc::format!("missing variable {var}"))
}

/// Naive evaluation: powers by repeated multiplication, no Horner.
fn eval_poly_naive(p: &IntPolynomial, d: i64) -> Option<i128> {
    let mut total: i128 = 0;
    for (i, &c) in p.coeffs().iter().enumerate() {
        let mut pw: i128 = 1;
        for _ in 0..=i {
            pw = pw.checked_mul(d as i128)?;
        }
        total = total.checked_add((c as i128).checked_mul(pw)?)?;
    }
    Some(total)
}

/// The defining identity of the star fold: `∏(l·wᵢ + k) = l·c + k`.
fn star_fold_identity(p: &StarParams, ws: &[i64], c: i128) -> bool {
    let (l, k) = (p.l() as i128, p.k() as i128);
    let mut prod: i128 = 1;
    for &w in ws {
        match prod.checked_mul(l * w as i128 + k) {
            Some(v) => prod = v,
            None => return false,
        }
    }
    prod == l * c + k
}

fn check_occupied(tuple: &SolutionTuple, mut expected: Vec<i64>, domain: &Domain) -> Check {
    expected.sort_unstable();
    expected.dedup();
    if tuple.occupied() != expected.as_slice() {
        return fail(alloc::format!(
            "occupied list {:?} does not match recomputed {:?}",
            tuple.occupied(),
            expected
        ));
    }
    for &v in tuple.occupied() {
        if !domain.contains(v) {
            return fail(alloc::format!("occupied value {v} outside domain {domain}"));
        }
    }
    Ok(())
}

/// Checks that `tuple` is a genuine solution of `pattern` inside `domain`.
pub fn validate_solution(
    pattern: &PatternSpec,
    tuple: &SolutionTuple,
    domain: &Domain,
) -> Check {
    match pattern {
        PatternSpec::Ap { len } => {
            let a = need(tuple, "a")?;
            let d = need(tuple, "d")?;
            if d < 1 {
                return fail(alloc::format!("common difference {d} < 1"));
            }
            let pts: Vec<i64> = (0..*len as i64).map(|j| a + j * d).collect();
            check_occupied(tuple, pts, domain)
        }
        PatternSpec::PolyVdw { polys } => {
            let a = need(tuple, "a")?;
            let d = need(tuple, "d")?;
            if d == 0 {
                return fail(String::from("d must be nonzero"));
            }
            let mut pts = alloc::vec![a];
            for p in polys {
                let off = eval_poly_naive(p, d).ok_or("polynomial value out of range")?;
                let v = i64::try_from(a as i128 + off).map_err(|_| "point out of range")?;
                pts.push(v);
            }
            check_occupied(tuple, pts, domain)
        }
        PatternSpec::SchurTriple { op, distinct } => {
            let x = need(tuple, "x")?;
            let y = need(tuple, "y")?;
            let s = need(tuple, "s")?;
            if *distinct && x == y {
                return fail(String::from("x = y but the triple is declared distinct"));
            }
            let holds = match op {
                TripleOp::Add => x as i128 + y as i128 == s as i128,
                TripleOp::Mul => x as i128 * y as i128 == s as i128,
                TripleOp::Star(p) => star_fold_identity(p, &[x, y], s as i128),
            };
            if !holds {
                return fail(alloc::format!("{x} o {y} != {s}"));
            }
            check_occupied(tuple, alloc::vec![x, y, s], domain)
        }
        PatternSpec::MoreiraTriple => {
            let x = need(tuple, "x")?;
            let y = need(tuple, "y")?;
            if y == 0 {
                return fail(String::from("y must be nonzero"));
            }
            let prod = i64::try_from(x as i128 * y as i128).map_err(|_| "product out of range")?;
            check_occupied(tuple, alloc::vec![x, x + y, prod], domain)
        }
        PatternSpec::BlmTriple => {
            let x = need(tuple, "x")?;
            let y = need(tuple, "y")?;
            if y == 0 {
                return fail(String::from("y must be nonzero"));
            }
            let prod = i64::try_from(x as i128 * y as i128).map_err(|_| "product out of range")?;
            let mid = i64::try_from(x as i128 + y as i128 + x as i128 * y as i128)
                .map_err(|_| "x+y+xy out of range")?;
            check_occupied(tuple, alloc::vec![x, mid, prod], domain)
        }
        PatternSpec::Products { shift, depth } => {
            let mut gens = Vec::with_capacity(*depth);
            for name in super::enumerate::X_NAMES.iter().take(*depth) {
                gens.push(need(tuple, name)?);
            }
            if !gens.windows(2).all(|p| p[0] < p[1]) {
                return fail(String::from("generators must be strictly increasing"));
            }
            // closed form per subset: prod(x_i - t) + t
            let t = shift.t() as i128;
            let mut set = Vec::new();
            for mask in 1u32..(1 << depth) {
                let mut prod: i128 = 1;
                for (i, &g) in gens.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        prod = prod.checked_mul(g as i128 - t).ok_or("product out of range")?;
                    }
                }
                set.push(i64::try_from(prod + t).map_err(|_| "product out of range")?);
            }
            check_occupied(tuple, set, domain)
        }
        PatternSpec::Glue(g) => {
            let mut ws = Vec::with_capacity(g.rhs_arity);
            for name in super::enumerate::W_NAMES.iter().take(g.rhs_arity) {
                ws.push(need(tuple, name)?);
            }
            let mut occupied: Vec<i64>;
            let v: i128 = match &g.lhs {
                GlueLhs::PolyOffset { poly } => {
                    let x = need(tuple, "x")?;
                    let y = need(tuple, "y")?;
                    if x == y && !g.allow_equal_xy {
                        return fail(String::from("x = y is not allowed here"));
                    }
                    occupied = alloc::vec![x, y];
                    let pd = eval_poly_naive(poly, y - x).ok_or("polynomial out of range")?;
                    x as i128 + pd
                }
                GlueLhs::Mean => {
                    let a = need(tuple, "a")?;
                    let b = need(tuple, "b")?;
                    if (a as i128 + b as i128) % 2 != 0 {
                        return fail(alloc::format!("{a}+{b} is odd"));
                    }
                    occupied = alloc::vec![a, b];
                    (a as i128 + b as i128) / 2
                }
                GlueLhs::System { polys } => {
                    let x = need(tuple, "x")?;
                    let y = need(tuple, "y")?;
                    if x == y && !g.allow_equal_xy {
                        return fail(String::from("x = y is not allowed here"));
                    }
                    occupied = alloc::vec![x, y];
                    // the shared value from the first equation, then the rest
                    // must agree
                    let mut shared = None;
                    for (i, p) in polys.iter().enumerate() {
                        let u = need(tuple, super::enumerate::U_NAMES[i])?;
                        occupied.push(u);
                        let pd = eval_poly_naive(p, y - x).ok_or("polynomial out of range")?;
                        let vi = u as i128 - pd;
                        match shared {
                            None => shared = Some(vi),
                            Some(v0) if v0 == vi => {}
                            Some(v0) => {
                                return fail(alloc::format!(
                                    "equation {} gives {vi}, others give {v0}",
                                    i + 1
                                ))
                            }
                        }
                    }
                    shared.unwrap()
                }
            };
            if !star_fold_identity(&g.star, &ws, v) {
                return fail(alloc::format!("star fold of {ws:?} != shared value {v}"));
            }
            occupied.extend_from_slice(&ws);
            check_occupied(tuple, occupied, domain)
        }
        PatternSpec::Mixed { .. } | PatternSpec::QuadSeq { .. } => {
            fail(String::from("mixed/quad witnesses validate through their structure sets"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_solutions;
    use super::*;

    #[test]
    fn every_enumerated_tuple_validates() {
        let domain = Domain::positive(20).unwrap();
        for name in [
            "ap:3",
            "polyvdw:d^2",
            "schur:add",
            "schur:mul",
            "schur:star:1,1",
            "schur:star:2,3:distinct",
            "moreira",
            "blm",
            "fp:t=1:d=2",
            "glue:poly=d^2:star=1,1",
            "glue:mean:star=1,1",
            "glue:system=d;d^2:star=1,1",
            "glue:poly=d:star=2,3:n=3",
        ] {
            let pattern = PatternSpec::parse(name).unwrap();
            let sols = enumerate_solutions(&pattern, &domain, None).unwrap();
            // the n=3 fold of (2,3) needs a product of three factors >= 5,
            // out of reach on this window
            let may_be_empty = name == "glue:poly=d:star=2,3:n=3";
            assert!(!sols.is_empty() || may_be_empty, "{name} found nothing");
            for s in &sols {
                validate_solution(&pattern, s, &domain)
                    .unwrap_or_else(|e| panic!("{name}: {s:?}: {e}"));
            }
        }
    }

    #[test]
    fn corrupted_tuples_are_rejected() {
        let pattern = PatternSpec::parse("schur:add").unwrap();
        let domain = Domain::positive(10).unwrap();
        let bad = SolutionTuple::new(
            alloc::vec![("x", 1), ("y", 2), ("s", 4)],
            alloc::vec![1, 2, 4],
        );
        assert!(validate_solution(&pattern, &bad, &domain).is_err());
        let wrong_occupied = SolutionTuple::new(
            alloc::vec![("x", 1), ("y", 2), ("s", 3)],
            alloc::vec![1, 2],
        );
        assert!(validate_solution(&pattern, &wrong_occupied, &domain).is_err());
        let outside = SolutionTuple::new(
            alloc::vec![("x", 9), ("y", 2), ("s", 11)],
            alloc::vec![2, 9, 11],
        );
        assert!(validate_solution(&pattern, &outside, &domain).is_err());
    }
}

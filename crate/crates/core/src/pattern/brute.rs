//! Brute-force enumeration and matching, kept deliberately independent of
//! the production enumerator: subsets are tested directly against the
//! defining relations (no divisor elimination, no Horner evaluation, no
//! precomputed offsets). This is the oracle side of every dual-route check
//! and the engine behind `brute_force_decide`.

use alloc::vec::Vec;

use itertools::Itertools;

use super::enumerate::{U_NAMES, W_NAMES, X_NAMES};
use super::{GlueLhs, PatternError, PatternSpec, SolutionTuple, TripleOp, Witness};
use crate::algebra::StarParams;
use crate::domain::{Coloring, Domain};

fn product_identity(p: &StarParams, ws: &[i64]) -> Option<i128> {
    let (l, k) = (p.l() as i128, p.k() as i128);
    let mut prod: i128 = 1;
    for &w in ws {
        prod = prod.checked_mul(l * w as i128 + k)?;
    }
    Some(prod)
}

fn poly_value(coeffs: &[i64], d: i64) -> Option<i128> {
    let mut total: i128 = 0;
    let mut pw: i128 = 1;
    for &c in coeffs {
        pw = pw.checked_mul(d as i128)?;
        total = total.checked_add(pw.checked_mul(c as i128)?)?;
    }
    Some(total)
}

/// Same output contract as `enumerate_solutions` (complete, sorted), built by
/// direct scans.
pub fn enumerate_brute(
    pattern: &PatternSpec,
    domain: &Domain,
) -> Result<Vec<SolutionTuple>, PatternError> {
    pattern.validate()?;
    super::enumerate::window_guard(domain)?;
    let values: Vec<i64> = domain.iter().collect();
    let mut out = Vec::new();
    match pattern {
        PatternSpec::Ap { len } => {
            // test every subset of the right size for equal gaps
            for combo in values.iter().copied().combinations(*len as usize) {
                let d = combo[1] - combo[0];
                if d >= 1 && combo.windows(2).all(|p| p[1] - p[0] == d) {
                    out.push(SolutionTuple::new(
                        alloc::vec![("a", combo[0]), ("d", d)],
                        combo,
                    ));
                }
            }
        }
        PatternSpec::PolyVdw { polys } => {
            let w = domain.window();
            let width = w.hi() - w.lo();
            for &a in &values {
                for d in -width..=width {
                    if d == 0 {
                        continue;
                    }
                    let mut pts = alloc::vec![a];
                    let mut ok = true;
                    for p in polys {
                        let v = poly_value(p.coeffs(), d)
                            .and_then(|off| i64::try_from(a as i128 + off).ok());
                        match v {
                            Some(v) if domain.contains(v) => pts.push(v),
                            _ => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if ok {
                        out.push(SolutionTuple::new(alloc::vec![("a", a), ("d", d)], pts));
                    }
                }
            }
        }
        PatternSpec::SchurTriple { op, distinct } => {
            // scan all value triples against the defining relation
            for (i, &x) in values.iter().enumerate() {
                for &y in &values[i + usize::from(*distinct)..] {
                    for &s in &values {
                        let holds = match op {
                            TripleOp::Add => x as i128 + y as i128 == s as i128,
                            TripleOp::Mul => x as i128 * y as i128 == s as i128,
                            TripleOp::Star(p) => {
                                product_identity(p, &[x, y])
                                    == Some(p.l() as i128 * s as i128 + p.k() as i128)
                            }
                        };
                        if holds {
                            out.push(SolutionTuple::new(
                                alloc::vec![("x", x), ("y", y), ("s", s)],
                                alloc::vec![x, y, s],
                            ));
                        }
                    }
                }
            }
        }
        PatternSpec::MoreiraTriple => {
            // solve y from the middle element instead of ranging over it
            for &x in &values {
                for &mid in &values {
                    let y = mid - x;
                    if y == 0 {
                        continue;
                    }
                    if let Ok(prod) = i64::try_from(x as i128 * y as i128) {
                        if domain.contains(prod) {
                            out.push(SolutionTuple::new(
                                alloc::vec![("x", x), ("y", y)],
                                alloc::vec![x, mid, prod],
                            ));
                        }
                    }
                }
            }
        }
        PatternSpec::BlmTriple => {
            // solve y from the product element
            for &x in &values {
                if x == 0 {
                    for &y in &values {
                        if y != 0 && domain.contains(0) {
                            out.push(SolutionTuple::new(
                                alloc::vec![("x", 0), ("y", y)],
                                alloc::vec![0, y],
                            ));
                        }
                    }
                    continue;
                }
                for &prod in &values {
                    if prod % x != 0 {
                        continue;
                    }
                    let y = prod / x;
                    if y == 0 {
                        continue;
                    }
                    let mid = x as i128 + y as i128 + prod as i128;
                    if let Ok(mid) = i64::try_from(mid) {
                        if domain.contains(mid) {
                            out.push(SolutionTuple::new(
                                alloc::vec![("x", x), ("y", y)],
                                alloc::vec![x, mid, prod],
                            ));
                        }
                    }
                }
            }
        }
        PatternSpec::Products { shift, depth } => {
            let t = shift.t() as i128;
            'combo: for combo in values.iter().copied().combinations(*depth) {
                let mut set = Vec::new();
                for mask in 1u32..(1 << depth) {
                    let mut prod: i128 = 1;
                    for (i, &g) in combo.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            match prod.checked_mul(g as i128 - t) {
                                Some(v) => prod = v,
                                None => continue 'combo,
                            }
                        }
                    }
                    match i64::try_from(prod + t) {
                        Ok(v) if domain.contains(v) => set.push(v),
                        _ => continue 'combo,
                    }
                }
                let assignment = combo.iter().enumerate().map(|(i, &x)| (X_NAMES[i], x)).collect();
                out.push(SolutionTuple::new(assignment, set));
            }
        }
        PatternSpec::Glue(g) => {
            // mirror the production skip rules exactly: targets that leave
            // 128-bit range or equal zero are not solutions
            let fold_target = |v: i128| -> Option<i128> {
                (g.star.l() as i128)
                    .checked_mul(v)
                    .and_then(|p| p.checked_add(g.star.k() as i128))
                    .filter(|&t| t != 0)
            };
            let rhs: Vec<Vec<i64>> =
                values.iter().copied().combinations_with_replacement(g.rhs_arity).collect();
            match &g.lhs {
                GlueLhs::PolyOffset { poly } => {
                    for &x in &values {
                        for &y in &values {
                            if x == y && !g.allow_equal_xy {
                                continue;
                            }
                            let Some(pd) = poly_value(poly.coeffs(), y - x) else { continue };
                            let Some(v) = pd.checked_add(x as i128) else { continue };
                            let Some(target) = fold_target(v) else { continue };
                            for ws in &rhs {
                                if product_identity(&g.star, ws) == Some(target) {
                                    let mut assignment = alloc::vec![("x", x), ("y", y)];
                                    let mut occ = alloc::vec![x, y];
                                    for (i, &w) in ws.iter().enumerate() {
                                        assignment.push((W_NAMES[i], w));
                                        occ.push(w);
                                    }
                                    out.push(SolutionTuple::new(assignment, occ));
                                }
                            }
                        }
                    }
                }
                GlueLhs::Mean => {
                    for (i, &a) in values.iter().enumerate() {
                        for &b in &values[i..] {
                            if (a as i128 + b as i128) % 2 != 0 {
                                continue;
                            }
                            let v = (a as i128 + b as i128) / 2;
                            let Some(target) = fold_target(v) else { continue };
                            for ws in &rhs {
                                if product_identity(&g.star, ws) == Some(target) {
                                    let mut assignment = alloc::vec![("a", a), ("b", b)];
                                    let mut occ = alloc::vec![a, b];
                                    for (i, &w) in ws.iter().enumerate() {
                                        assignment.push((W_NAMES[i], w));
                                        occ.push(w);
                                    }
                                    out.push(SolutionTuple::new(assignment, occ));
                                }
                            }
                        }
                    }
                }
                GlueLhs::System { polys } => {
                    let (l, k) = (g.star.l() as i128, g.star.k() as i128);
                    for ws in &rhs {
                        // shared value through the defining identity
                        let Some(prod) = product_identity(&g.star, ws) else { continue };
                        let Some(num) = prod.checked_sub(k) else { continue };
                        if num % l != 0 {
                            continue;
                        }
                        let Ok(v) = i64::try_from(num / l) else { continue };
                        for &x in &values {
                            'y: for &y in &values {
                                if x == y && !g.allow_equal_xy {
                                    continue;
                                }
                                let mut us = Vec::with_capacity(polys.len());
                                for p in polys {
                                    let u = poly_value(p.coeffs(), y - x)
                                        .and_then(|pd| i64::try_from(v as i128 + pd).ok());
                                    match u {
                                        Some(u) if domain.contains(u) => us.push(u),
                                        _ => continue 'y,
                                    }
                                }
                                let mut assignment = alloc::vec![("x", x), ("y", y)];
                                let mut occ = alloc::vec![x, y];
                                for (i, &u) in us.iter().enumerate() {
                                    assignment.push((U_NAMES[i], u));
                                    occ.push(u);
                                }
                                for (i, &w) in ws.iter().enumerate() {
                                    assignment.push((W_NAMES[i], w));
                                    occ.push(w);
                                }
                                out.push(SolutionTuple::new(assignment, occ));
                            }
                        }
                    }
                }
            }
        }
        PatternSpec::Mixed { .. } | PatternSpec::QuadSeq { .. } => {
            return Err(PatternError::Invalid(alloc::string::String::from(
                "mixed/quad patterns have no brute enumeration",
            )))
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Brute-force least monochromatic witness; the oracle twin of
/// `find_monochromatic` for enumerable patterns.
pub fn find_monochromatic_brute(
    coloring: &Coloring,
    pattern: &PatternSpec,
) -> Result<Option<Witness>, PatternError> {
    let sols = enumerate_brute(pattern, coloring.domain())?;
    for s in sols {
        if let Some(color) = coloring.monochrome_color(s.occupied()) {
            return Ok(Some(Witness {
                pattern: pattern.canonical_name(),
                color,
                window: coloring.domain().window(),
                tuple: s,
                parts: Vec::new(),
            }));
        }
    }
    Ok(None)
}

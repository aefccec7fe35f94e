//! Complete solution enumeration inside a finite domain.
//!
//! Output is sorted lexicographically by occupied integers (then by
//! assignment values), so truncation by `limit` keeps the least solutions.
//! For glue equations the shared value is eliminated by divisor enumeration:
//! for each admissible left side with value `v`, the integer `l·v + k` is
//! factored by trial division and every ascending right-hand tuple
//! `(w₁ ≤ … ≤ w_n)` with `∏(l·w_i + k) = l·v + k` inside the domain is
//! emitted.

use alloc::vec::Vec;

use itertools::Itertools;

use super::{GlueLhs, GlueSpec, PatternError, PatternSpec, SolutionTuple, TripleOp};
use crate::algebra::{IntPolynomial, StarParams};
use crate::domain::Domain;

/// Enumeration refuses windows whose products could leave 64-bit range.
const WINDOW_BOUND: i64 = 1 << 31;
/// Hard cap on trial-division work per factored value.
const TRIAL_DIVISION_CAP: u128 = 1 << 24;

pub(crate) const W_NAMES: [&str; 4] = ["w1", "w2", "w3", "w4"];
pub(crate) const U_NAMES: [&str; 4] = ["u1", "u2", "u3", "u4"];
pub(crate) const X_NAMES: [&str; 3] = ["x1", "x2", "x3"];

pub(crate) fn window_guard(domain: &Domain) -> Result<(), PatternError> {
    let w = domain.window();
    if w.lo().abs() > WINDOW_BOUND || w.hi().abs() > WINDOW_BOUND {
        return Err(PatternError::Overflow(alloc::format!(
            "window {w} exceeds the +-2^31 bound for 64-bit product enumeration"
        )));
    }
    Ok(())
}

/// Enumerates all solution tuples of `pattern` inside `domain`, least first.
/// `limit` truncates after sorting. `Mixed` and `QuadSeq` have no tuple
/// stream and are rejected.
pub fn enumerate_solutions(
    pattern: &PatternSpec,
    domain: &Domain,
    limit: Option<usize>,
) -> Result<Vec<SolutionTuple>, PatternError> {
    pattern.validate()?;
    window_guard(domain)?;
    let mut out = Vec::new();
    match pattern {
        PatternSpec::Ap { len } => gen_ap(*len, domain, &mut out),
        PatternSpec::PolyVdw { polys } => gen_polyvdw(polys, domain, &mut out),
        PatternSpec::SchurTriple { op, distinct } => gen_schur(op, *distinct, domain, &mut out),
        PatternSpec::MoreiraTriple => gen_moreira(domain, &mut out),
        PatternSpec::BlmTriple => gen_blm(domain, &mut out),
        PatternSpec::Products { shift, depth } => gen_products(*shift, *depth, domain, &mut out),
        PatternSpec::Glue(g) => gen_glue(g, domain, &mut out)?,
        PatternSpec::Mixed { .. } | PatternSpec::QuadSeq { .. } => {
            return Err(PatternError::Invalid(alloc::string::String::from(
                "mixed/quad patterns are matched against colorings, not enumerated",
            )))
        }
    }
    out.sort();
    out.dedup();
    if let Some(n) = limit {
        out.truncate(n);
    }
    Ok(out)
}

fn gen_ap(len: u32, domain: &Domain, out: &mut Vec<SolutionTuple>) {
    let hi = domain.window().hi();
    let step = (len - 1) as i64;
    for a in domain.iter() {
        let max_d = (hi - a) / step;
        'd: for d in 1..=max_d {
            let mut pts = Vec::with_capacity(len as usize);
            for j in 0..len as i64 {
                let p = a + j * d;
                if !domain.contains(p) {
                    continue 'd;
                }
                pts.push(p);
            }
            out.push(SolutionTuple::new(alloc::vec![("a", a), ("d", d)], pts));
        }
    }
}

fn gen_polyvdw(polys: &[IntPolynomial], domain: &Domain, out: &mut Vec<SolutionTuple>) {
    let w = domain.window();
    let width = w.hi() - w.lo();
    for d_abs in 1..=width.max(0) {
        for d in [d_abs, -d_abs] {
            // a point with |p(d)| beyond 64 bits cannot land in the window
            let Ok(offsets) = polys.iter().map(|p| p.eval(d)).collect::<Result<Vec<i64>, _>>()
            else {
                continue;
            };
            'a: for a in domain.iter() {
                let mut pts = alloc::vec![a];
                for &off in &offsets {
                    let p = a as i128 + off as i128;
                    let Ok(p) = i64::try_from(p) else { continue 'a };
                    if !domain.contains(p) {
                        continue 'a;
                    }
                    pts.push(p);
                }
                out.push(SolutionTuple::new(alloc::vec![("a", a), ("d", d)], pts));
            }
        }
    }
}

fn gen_schur(op: &TripleOp, distinct: bool, domain: &Domain, out: &mut Vec<SolutionTuple>) {
    let values: Vec<i64> = domain.iter().collect();
    for (i, &x) in values.iter().enumerate() {
        for &y in &values[i + usize::from(distinct)..] {
            let s128 = match op {
                TripleOp::Add => x as i128 + y as i128,
                TripleOp::Mul => x as i128 * y as i128,
                TripleOp::Star(p) => match p.star(x, y) {
                    Ok(s) => s as i128,
                    Err(_) => continue,
                },
            };
            let Ok(s) = i64::try_from(s128) else { continue };
            if domain.contains(s) {
                out.push(SolutionTuple::new(
                    alloc::vec![("x", x), ("y", y), ("s", s)],
                    alloc::vec![x, y, s],
                ));
            }
        }
    }
}

fn gen_moreira(domain: &Domain, out: &mut Vec<SolutionTuple>) {
    let w = domain.window();
    for x in domain.iter() {
        for y in (w.lo() - x)..=(w.hi() - x) {
            if y == 0 {
                continue;
            }
            let sum = x + y;
            let Ok(prod) = i64::try_from(x as i128 * y as i128) else { continue };
            if domain.contains(sum) && domain.contains(prod) {
                out.push(SolutionTuple::new(
                    alloc::vec![("x", x), ("y", y)],
                    alloc::vec![x, sum, prod],
                ));
            }
        }
    }
}

fn gen_blm(domain: &Domain, out: &mut Vec<SolutionTuple>) {
    use num_integer::Integer;
    let w = domain.window();
    for x in domain.iter() {
        // x + y + xy = x + y(1+x): solve the y-range per x
        let (ylo, yhi) = if x == -1 {
            if !domain.contains(-1) {
                continue;
            }
            (-w.hi(), -w.lo())
        } else {
            let s = 1 + x;
            let a = Integer::div_ceil(&(w.lo() - x), &s);
            let b = Integer::div_floor(&(w.hi() - x), &s);
            if s > 0 {
                (a, b)
            } else {
                (b, a)
            }
        };
        for y in ylo..=yhi {
            if y == 0 {
                continue;
            }
            let Ok(prod) = i64::try_from(x as i128 * y as i128) else { continue };
            let Ok(blm) = i64::try_from(x as i128 + y as i128 + x as i128 * y as i128) else {
                continue;
            };
            if domain.contains(blm) && domain.contains(prod) {
                out.push(SolutionTuple::new(
                    alloc::vec![("x", x), ("y", y)],
                    alloc::vec![x, blm, prod],
                ));
            }
        }
    }
}

fn gen_products(
    shift: crate::algebra::AffineShift,
    depth: usize,
    domain: &Domain,
    out: &mut Vec<SolutionTuple>,
) {
    let values: Vec<i64> = domain.iter().collect();
    if values.len() < depth {
        return;
    }
    'combo: for combo in values.iter().copied().combinations(depth) {
        let Ok(set) = crate::algebra::odot_products(shift, &combo, depth) else {
            continue;
        };
        for &v in &set {
            if !domain.contains(v) {
                continue 'combo;
            }
        }
        let assignment = combo.iter().enumerate().map(|(i, &x)| (X_NAMES[i], x)).collect();
        out.push(SolutionTuple::new(assignment, set.into_iter().collect()));
    }
}

// GLUE EQUATIONS
// ================================================================================================

/// Largest possible `|l·w + k|` over the domain, and its `rhs_arity`-th
/// power: no right-hand fold can exceed the latter, so shared values beyond
/// it are skipped without factoring. Refuses parameter/window combinations
/// whose bound leaves 128-bit range.
fn factor_bounds(g: &GlueSpec, domain: &Domain) -> Result<(u128, u128), PatternError> {
    let w = domain.window();
    let p = &g.star;
    let a = (p.l() as i128 * w.lo() as i128 + p.k() as i128).unsigned_abs();
    let b = (p.l() as i128 * w.hi() as i128 + p.k() as i128).unsigned_abs();
    let dmax = a.max(b);
    let dpow = dmax
        .checked_pow(g.rhs_arity as u32)
        .filter(|&v| v <= i128::MAX as u128)
        .ok_or_else(|| {
            PatternError::Overflow(alloc::format!(
                "glue fold bound {dmax}^{} exceeds 128-bit range; shrink the window or parameters",
                g.rhs_arity
            ))
        })?;
    Ok((dmax, dpow))
}

/// All ascending `(w₁ ≤ … ≤ w_n)` in the domain with `∏(l·w_i + k) = t`.
#[allow(clippy::too_many_arguments)]
fn star_preimages(
    p: &StarParams,
    t: i128,
    arity: usize,
    min_w: i64,
    dmax: u128,
    domain: &Domain,
    prefix: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) -> Result<(), PatternError> {
    debug_assert!(t != 0);
    let (l, k) = (p.l() as i128, p.k() as i128);
    if arity == 1 {
        if (t - k) % l == 0 {
            if let Ok(w) = i64::try_from((t - k) / l) {
                if w >= min_w && domain.contains(w) {
                    let mut tuple = prefix.clone();
                    tuple.push(w);
                    out.push(tuple);
                }
            }
        }
        return Ok(());
    }
    let at = t.unsigned_abs();
    let stop = at.isqrt().min(dmax);
    if stop > TRIAL_DIVISION_CAP {
        return Err(PatternError::Overflow(alloc::format!(
            "glue factoring of |{t}| needs more than 2^24 trial divisions"
        )));
    }
    let mut divisors: Vec<i128> = Vec::new();
    let mut i: u128 = 1;
    while i <= stop {
        if at.is_multiple_of(i) {
            divisors.push(i as i128);
            let co = at / i;
            if co != i && co <= dmax {
                divisors.push(co as i128);
            }
        }
        i += 1;
    }
    for d in divisors {
        for d1 in [d, -d] {
            if (d1 - k) % l != 0 {
                continue;
            }
            let Ok(w1) = i64::try_from((d1 - k) / l) else { continue };
            if w1 < min_w || !domain.contains(w1) {
                continue;
            }
            prefix.push(w1);
            star_preimages(p, t / d1, arity - 1, w1, dmax, domain, prefix, out)?;
            prefix.pop();
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn emit_rhs(
    g: &GlueSpec,
    v: i128,
    dmax: u128,
    dpow: u128,
    domain: &Domain,
    lhs_vars: &[(&'static str, i64)],
    lhs_occupied: &[i64],
    out: &mut Vec<SolutionTuple>,
) -> Result<(), PatternError> {
    // a value whose l·v + k leaves 128-bit range is beyond every fold bound
    let Some(t) = (g.star.l() as i128)
        .checked_mul(v)
        .and_then(|p| p.checked_add(g.star.k() as i128))
    else {
        return Ok(());
    };
    // l·v + k = 0 has no factorization; such tuples are skipped
    if t == 0 {
        return Ok(());
    }
    if t.unsigned_abs() > dpow {
        return Ok(());
    }
    let mut tuples = Vec::new();
    star_preimages(&g.star, t, g.rhs_arity, i64::MIN, dmax, domain, &mut Vec::new(), &mut tuples)?;
    for ws in tuples {
        let mut assignment = lhs_vars.to_vec();
        let mut occupied = lhs_occupied.to_vec();
        for (i, &w) in ws.iter().enumerate() {
            assignment.push((W_NAMES[i], w));
            occupied.push(w);
        }
        out.push(SolutionTuple::new(assignment, occupied));
    }
    Ok(())
}

fn gen_glue(g: &GlueSpec, domain: &Domain, out: &mut Vec<SolutionTuple>) -> Result<(), PatternError> {
    let (dmax, dpow) = factor_bounds(g, domain)?;
    let values: Vec<i64> = domain.iter().collect();
    match &g.lhs {
        GlueLhs::PolyOffset { poly } => {
            for &x in &values {
                for &y in &values {
                    if y == x && !g.allow_equal_xy {
                        continue;
                    }
                    let Some(pd) = poly.eval_wide(y - x) else { continue };
                    let Some(v) = pd.checked_add(x as i128) else { continue };
                    emit_rhs(g, v, dmax, dpow, domain, &[("x", x), ("y", y)], &[x, y], out)?;
                }
            }
        }
        GlueLhs::Mean => {
            for (i, &a) in values.iter().enumerate() {
                for &b in &values[i..] {
                    // odd sums are skipped, not errors
                    if (a + b) % 2 != 0 {
                        continue;
                    }
                    let v = (a as i128 + b as i128) / 2;
                    emit_rhs(g, v, dmax, dpow, domain, &[("a", a), ("b", b)], &[a, b], out)?;
                }
            }
        }
        GlueLhs::System { polys } => {
            // the shared value comes from the right side here: group the
            // ascending folds by value, then place the u_i per (x, y).
            // folds go through the defining identity in 128-bit arithmetic
            // (partial products stay within the prechecked dpow bound)
            let (l, k) = (g.star.l() as i128, g.star.k() as i128);
            let mut by_value: alloc::collections::BTreeMap<i64, Vec<Vec<i64>>> =
                alloc::collections::BTreeMap::new();
            for combo in values.iter().copied().combinations_with_replacement(g.rhs_arity) {
                let prod = combo.iter().fold(1i128, |acc, &w| acc * (l * w as i128 + k));
                let Some(num) = prod.checked_sub(k) else { continue };
                if num % l != 0 {
                    continue;
                }
                if let Ok(v) = i64::try_from(num / l) {
                    by_value.entry(v).or_default().push(combo);
                }
            }
            for &x in &values {
                'y: for &y in &values {
                    if y == x && !g.allow_equal_xy {
                        continue;
                    }
                    let mut offs = Vec::with_capacity(polys.len());
                    for p in polys {
                        match p.eval(y - x) {
                            Ok(o) => offs.push(o),
                            Err(_) => continue 'y,
                        }
                    }
                    for (&v, folds) in &by_value {
                        let mut us = Vec::with_capacity(offs.len());
                        let mut ok = true;
                        for &o in &offs {
                            match i64::try_from(v as i128 + o as i128) {
                                Ok(u) if domain.contains(u) => us.push(u),
                                _ => {
                                    ok = false;
                                    break;
                                }
                            }
                        }
                        if !ok {
                            continue;
                        }
                        for ws in folds {
                            let mut assignment = alloc::vec![("x", x), ("y", y)];
                            let mut occupied = alloc::vec![x, y];
                            for (i, &u) in us.iter().enumerate() {
                                assignment.push((U_NAMES[i], u));
                                occupied.push(u);
                            }
                            for (i, &w) in ws.iter().enumerate() {
                                assignment.push((W_NAMES[i], w));
                                occupied.push(w);
                            }
                            out.push(SolutionTuple::new(assignment, occupied));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

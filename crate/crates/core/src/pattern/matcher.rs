//! Matching patterns against colorings.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::enumerate::X_NAMES;
use super::{enumerate_solutions, PatternError, PatternSpec, SolutionTuple, Witness};
use crate::algebra::{odot_products, oplus_sums, AffineShift};
use crate::domain::Coloring;

const Y_NAMES: [&str; 2] = ["y1", "y2"];
const Z_NAMES: [&str; 2] = ["z1", "z2"];
const QW_NAMES: [&str; 2] = ["w1", "w2"];

/// The lexicographically least monochromatic witness of `pattern` in
/// `coloring`, or `None` after exhausting every solution tuple.
///
/// `Mixed` and `QuadSeq` dispatch to their dedicated searches.
pub fn find_monochromatic(
    coloring: &Coloring,
    pattern: &PatternSpec,
) -> Result<Option<Witness>, PatternError> {
    pattern.validate()?;
    match pattern {
        PatternSpec::Mixed { family, shift, depth } => {
            find_mixed(coloring, family, *shift, *depth)
        }
        PatternSpec::QuadSeq { shift, depth } => find_quad(coloring, *shift, *depth),
        _ => {
            let sols = enumerate_solutions(pattern, coloring.domain(), None)?;
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
    }
}

/// Longest arithmetic progression (`d ≥ 1`) contained in `a`, capped at
/// `max_len`. Returns its length and the progression itself; ties prefer the
/// smallest `(start, d)`. A singleton counts as length 1.
pub fn longest_ap(a: &BTreeSet<i64>, max_len: usize) -> (usize, Vec<i64>) {
    if max_len == 0 || a.is_empty() {
        return (0, Vec::new());
    }
    let values: Vec<i64> = a.iter().copied().collect();
    let mut best_len = 1usize;
    let mut best = alloc::vec![values[0]];
    if max_len == 1 {
        return (1, best);
    }
    for (i, &start) in values.iter().enumerate() {
        for &second in &values[i + 1..] {
            let d = second - start;
            // only scan maximal progressions; a capped sub-progression of the
            // same chain never beats its start
            if a.contains(&(start - d)) {
                continue;
            }
            let mut len = 2;
            let mut next = second + d;
            while len < max_len && a.contains(&next) {
                len += 1;
                next += d;
            }
            if len > best_len {
                best_len = len;
                best = (0..len as i64).map(|j| start + j * d).collect();
                if best_len == max_len && best[0] == values[0] {
                    // cannot improve on the cap with the least start
                    break;
                }
            }
        }
    }
    (best_len, best)
}

fn part(values: impl IntoIterator<Item = i64>) -> Vec<i64> {
    let set: BTreeSet<i64> = values.into_iter().collect();
    set.into_iter().collect()
}

/// All values in the set are in-domain and carry color `c`.
fn all_colored(coloring: &Coloring, values: &[i64], c: u8) -> bool {
    values.iter().all(|&v| coloring.color_of(v) == Some(c))
}

/// Pairwise `⊙_t`-products between two sets, or `None` on overflow or a
/// value outside the coloring's domain.
fn cross_products(
    shift: AffineShift,
    lhs: &[i64],
    rhs: &[i64],
    coloring: &Coloring,
    c: u8,
) -> Option<Vec<i64>> {
    let mut out = Vec::with_capacity(lhs.len() * rhs.len());
    for &a in lhs {
        for &b in rhs {
            let v = shift.odot(a, b).ok()?;
            if coloring.color_of(v) != Some(c) {
                return None;
            }
            out.push(v);
        }
    }
    Some(out)
}

/// Scales a family set by a generator under `⊙_t`.
fn family_products(
    shift: AffineShift,
    family: &[i64],
    x: i64,
    coloring: &Coloring,
    c: u8,
) -> Option<Vec<i64>> {
    cross_products(shift, family, &[x], coloring, c)
}

/// Searches for family members `F₁..F_depth` and generators `x₁..x_depth`
/// whose joint `⊙_t`-product structure is monochromatic: the generators'
/// products, every `F_i ⊙_t x_i` (with cross products at depth 2), and the
/// families themselves (with cross products) must share one color.
///
/// Candidates are scanned in order `(F₁, x₁, F₂, x₂)` — families in
/// enumeration order, generators ascending — and the first hit is returned.
pub fn find_mixed(
    coloring: &Coloring,
    family: &PatternSpec,
    shift: AffineShift,
    depth: usize,
) -> Result<Option<Witness>, PatternError> {
    if depth == 0 || depth > 2 {
        return Err(PatternError::DepthOutOfRange { depth, max: 2 });
    }
    family.validate()?;
    if !family.is_enumerable() {
        return Err(PatternError::Invalid(alloc::string::String::from(
            "mixed family must be an enumerable pattern",
        )));
    }
    let pattern_name = PatternSpec::Mixed {
        family: alloc::boxed::Box::new(family.clone()),
        shift,
        depth,
    }
    .canonical_name();
    let domain = coloring.domain();
    let families: Vec<Vec<i64>> = enumerate_solutions(family, domain, None)?
        .into_iter()
        .map(|s| s.occupied().to_vec())
        .collect();
    let generators: Vec<i64> = domain.iter().collect();

    for (fi, f1) in families.iter().enumerate() {
        let Some(c) = coloring.monochrome_color(f1) else { continue };
        for (i1, &x1) in generators.iter().enumerate() {
            if coloring.color_of(x1) != Some(c) {
                continue;
            }
            let Some(g1) = family_products(shift, f1, x1, coloring, c) else { continue };
            if depth == 1 {
                let occupied = part(
                    f1.iter().copied().chain(g1.iter().copied()).chain(core::iter::once(x1)),
                );
                return Ok(Some(Witness {
                    pattern: pattern_name.clone(),
                    color: c,
                    window: domain.window(),
                    tuple: SolutionTuple::new(alloc::vec![("x1", x1)], occupied.clone()),
                    parts: alloc::vec![
                        ("family1", part(f1.iter().copied())),
                        ("family1_scaled", part(g1.iter().copied())),
                        ("generators", alloc::vec![x1]),
                    ],
                }));
            }
            for f2 in &families[fi..] {
                if !all_colored(coloring, f2, c) {
                    continue;
                }
                let Some(ff) = cross_products(shift, f1, f2, coloring, c) else { continue };
                for &x2 in &generators[i1 + 1..] {
                    if coloring.color_of(x2) != Some(c) {
                        continue;
                    }
                    let Ok(xx) = shift.odot(x1, x2) else { continue };
                    if coloring.color_of(xx) != Some(c) {
                        continue;
                    }
                    let Some(g2) = family_products(shift, f2, x2, coloring, c) else { continue };
                    let Some(gg) = cross_products(shift, &g1, &g2, coloring, c) else { continue };
                    let occupied = part(
                        [x1, x2, xx]
                            .into_iter()
                            .chain(f1.iter().copied())
                            .chain(f2.iter().copied())
                            .chain(ff.iter().copied())
                            .chain(g1.iter().copied())
                            .chain(g2.iter().copied())
                            .chain(gg.iter().copied()),
                    );
                    return Ok(Some(Witness {
                        pattern: pattern_name,
                        color: c,
                        window: domain.window(),
                        tuple: SolutionTuple::new(
                            alloc::vec![("x1", x1), ("x2", x2)],
                            occupied,
                        ),
                        parts: alloc::vec![
                            ("family1", part(f1.iter().copied())),
                            ("family2", part(f2.iter().copied())),
                            ("family1_scaled", part(g1.iter().copied())),
                            ("family2_scaled", part(g2.iter().copied())),
                            ("family_cross", part(ff.iter().copied())),
                            ("scaled_cross", part(gg.iter().copied())),
                            ("generator_products", alloc::vec![x1, x2, xx]),
                        ],
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Least strictly increasing sequence of the given length whose structure set
/// (computed by `build`) lies inside color class `c` of the coloring.
fn least_sequence<F>(
    coloring: &Coloring,
    c: u8,
    depth: usize,
    mut build: F,
) -> Option<(Vec<i64>, Vec<i64>)>
where
    F: FnMut(&[i64]) -> Option<Vec<i64>>,
{
    let values: Vec<i64> = coloring.domain().iter().collect();
    let check = |seq: &[i64], coloring: &Coloring, build: &mut F| -> Option<Vec<i64>> {
        let set = build(seq)?;
        all_colored(coloring, &set, c).then_some(set)
    };
    match depth {
        1 => {
            for &v in &values {
                if let Some(set) = check(&[v], coloring, &mut build) {
                    return Some((alloc::vec![v], set));
                }
            }
            None
        }
        2 => {
            for (i, &v1) in values.iter().enumerate() {
                for &v2 in &values[i + 1..] {
                    if let Some(set) = check(&[v1, v2], coloring, &mut build) {
                        return Some((alloc::vec![v1, v2], set));
                    }
                }
            }
            None
        }
        _ => None,
    }
}

/// Searches for four sequences of length `depth` whose structure sets — sums
/// of `x⃗`, products of `w⃗`, `t`-shifted `⊕_{−t}`-sums of `y⃗`, and
/// `t`-shifted `⊙_{−t}`-products of `z⃗` — are jointly monochromatic.
/// Colors are scanned in ascending order; within a color each of the four
/// searches independently takes its least sequence.
pub fn find_quad(
    coloring: &Coloring,
    shift: AffineShift,
    depth: usize,
) -> Result<Option<Witness>, PatternError> {
    if depth == 0 || depth > 2 {
        return Err(PatternError::DepthOutOfRange { depth, max: 2 });
    }
    let t = shift.t();
    let neg = AffineShift(-t);
    let zero = AffineShift(0);
    let pattern_name = PatternSpec::QuadSeq { shift, depth }.canonical_name();

    let plain_sums = |seq: &[i64]| -> Option<Vec<i64>> {
        Some(oplus_sums(zero, seq, seq.len()).ok()?.into_iter().collect())
    };
    let plain_products = |seq: &[i64]| -> Option<Vec<i64>> {
        Some(odot_products(zero, seq, seq.len()).ok()?.into_iter().collect())
    };
    let shifted_sums = |seq: &[i64]| -> Option<Vec<i64>> {
        oplus_sums(neg, seq, seq.len())
            .ok()?
            .into_iter()
            .map(|v| v.checked_add(t))
            .collect::<Option<Vec<i64>>>()
    };
    let shifted_products = |seq: &[i64]| -> Option<Vec<i64>> {
        odot_products(neg, seq, seq.len())
            .ok()?
            .into_iter()
            .map(|v| v.checked_add(t))
            .collect::<Option<Vec<i64>>>()
    };

    for c in 0..coloring.r() as u8 {
        let Some((xs, x_set)) = least_sequence(coloring, c, depth, plain_sums) else { continue };
        let Some((ws, w_set)) = least_sequence(coloring, c, depth, plain_products) else {
            continue;
        };
        let Some((ys, y_set)) = least_sequence(coloring, c, depth, shifted_sums) else { continue };
        let Some((zs, z_set)) = least_sequence(coloring, c, depth, shifted_products) else {
            continue;
        };
        let mut assignment = Vec::new();
        for (names, seq) in
            [(&X_NAMES[..], &xs), (&Y_NAMES[..], &ys), (&Z_NAMES[..], &zs), (&QW_NAMES[..], &ws)]
        {
            for (i, &v) in seq.iter().enumerate() {
                assignment.push((names[i], v));
            }
        }
        let occupied = part(
            x_set
                .iter()
                .chain(w_set.iter())
                .chain(y_set.iter())
                .chain(z_set.iter())
                .copied(),
        );
        return Ok(Some(Witness {
            pattern: pattern_name,
            color: c,
            window: coloring.domain().window(),
            tuple: SolutionTuple::new(assignment, occupied),
            parts: alloc::vec![
                ("sums_x", x_set),
                ("shifted_sums_y", y_set),
                ("shifted_products_z", z_set),
                ("products_w", w_set),
            ],
        }));
    }
    Ok(None)
}

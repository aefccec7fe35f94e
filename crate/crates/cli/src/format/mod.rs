//! External file formats.

pub mod dimacs;

use std::path::Path;

use ringshift_core::domain::{Coloring, Window};
use ringshift_core::largeness::FiniteSetWindow;

use crate::encode;

/// `lo:hi`, both signed.
pub fn parse_window(s: &str) -> Result<Window, String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("window `{s}` must be lo:hi"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad window bound `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad window bound `{hi}`"))?;
    Window::new(lo, hi).map_err(|e| e.to_string())
}

/// Inline interval list `a:b,c:d,…` (single points as `a:a` or just `a`).
pub fn parse_set_inline(window: Window, s: &str) -> Result<FiniteSetWindow, String> {
    let mut intervals = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (a, b) = match part.split_once(':') {
            Some((a, b)) => (a, b),
            None => (part, part),
        };
        let a: i64 = a.trim().parse().map_err(|_| format!("bad interval bound `{a}`"))?;
        let b: i64 = b.trim().parse().map_err(|_| format!("bad interval bound `{b}`"))?;
        intervals.push((a, b));
    }
    FiniteSetWindow::from_intervals(window, &intervals).map_err(|e| e.to_string())
}

pub fn read_set_file(path: &Path) -> Result<FiniteSetWindow, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("bad set JSON: {e}"))?;
    encode::set_rle_from(&value)
}

pub fn read_coloring_file(path: &Path) -> Result<Coloring, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("bad coloring JSON: {e}"))?;
    encode::coloring_from(&value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows_and_sets_parse() {
        let w = parse_window("-5:20").unwrap();
        assert_eq!((w.lo(), w.hi()), (-5, 20));
        let s = parse_set_inline(w, "-5:-2, 0, 7:12").unwrap();
        assert_eq!(s.intervals(), vec![(-5, -2), (0, 0), (7, 12)]);
        assert!(parse_window("5").is_err());
        assert!(parse_set_inline(w, "30:40").is_err());
    }
}

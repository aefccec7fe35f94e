//! DIMACS CNF writing and reading.
//!
//! Output grammar (UTF-8, LF line endings):
//!
//! ```text
//! c pattern=<canonical name> n=<N> r=<r> map=(i-lo)*r+c+1
//! p cnf <nvars> <nclauses>
//! <lit> <lit> … 0
//! ```
//!
//! Models are read from `v`-lines (`v 1 -2 … 0`); `c` and `s` lines are
//! ignored, bare literal lines are accepted too.

use ringshift_core::cnf::CnfDocument;

pub fn render(doc: &CnfDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "c pattern={} n={} r={} map=(i-lo)*r+c+1\n",
        doc.pattern, doc.n, doc.r
    ));
    out.push_str(&format!("p cnf {} {}\n", doc.num_vars, doc.clauses.len()));
    for clause in &doc.clauses {
        for lit in clause {
            out.push_str(&lit.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

pub fn parse(text: &str) -> Result<CnfDocument, String> {
    let mut pattern = None;
    let mut n = None;
    let mut r = None;
    let mut num_vars = None;
    let mut expected_clauses = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();

    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('c') {
            for token in comment.split_whitespace() {
                if let Some(v) = token.strip_prefix("pattern=") {
                    pattern = Some(v.to_string());
                } else if let Some(v) = token.strip_prefix("n=") {
                    n = Some(v.parse::<i64>().map_err(|_| format!("bad n= in `{line}`"))?);
                } else if let Some(v) = token.strip_prefix("r=") {
                    r = Some(v.parse::<u32>().map_err(|_| format!("bad r= in `{line}`"))?);
                }
            }
            continue;
        }
        if let Some(header) = line.strip_prefix("p ") {
            let mut it = header.split_whitespace();
            if it.next() != Some("cnf") {
                return Err(format!("unsupported problem line `{line}`"));
            }
            num_vars = Some(
                it.next()
                    .and_then(|v| v.parse::<usize>().ok())
                    .ok_or_else(|| format!("bad variable count in `{line}`"))?,
            );
            expected_clauses = Some(
                it.next()
                    .and_then(|v| v.parse::<usize>().ok())
                    .ok_or_else(|| format!("bad clause count in `{line}`"))?,
            );
            continue;
        }
        for token in line.split_whitespace() {
            let lit: i32 = token.parse().map_err(|_| format!("bad literal `{token}`"))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        return Err("final clause not terminated with 0".into());
    }
    let num_vars = num_vars.ok_or("missing `p cnf` header")?;
    if let Some(expected) = expected_clauses {
        if expected != clauses.len() {
            return Err(format!("header promises {expected} clauses, found {}", clauses.len()));
        }
    }
    let pattern = pattern.ok_or("missing pattern= metadata")?;
    let n = n.ok_or("missing n= metadata")?;
    let r = r.ok_or("missing r= metadata")?;
    Ok(CnfDocument { pattern, n, r, lo: 1, num_vars, clauses })
}

/// Reads a model from DIMACS `v`-lines (or bare literal lines). The
/// terminating 0 is optional.
pub fn parse_model(text: &str) -> Result<Vec<i64>, String> {
    let mut literals = Vec::new();
    let mut terminated = false;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('s') {
            continue;
        }
        let rest = line.strip_prefix("v ").or_else(|| line.strip_prefix('v')).unwrap_or(line);
        for token in rest.split_whitespace() {
            if terminated {
                return Err("literals after the terminating 0".into());
            }
            let lit: i64 = token.parse().map_err(|_| format!("bad literal `{token}`"))?;
            if lit == 0 {
                terminated = true;
            } else {
                literals.push(lit);
            }
        }
    }
    Ok(literals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ringshift_core::cnf::export_cnf;
    use ringshift_core::pattern::PatternSpec;

    #[test]
    fn render_matches_pinned_grammar() {
        let doc = export_cnf(&PatternSpec::parse("schur:add").unwrap(), 2, 3).unwrap();
        let text = render(&doc);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("c pattern=schur:add n=3 r=2 map=(i-lo)*r+c+1"));
        assert_eq!(lines.next(), Some("p cnf 6 10"));
        assert!(text.ends_with("0\n"));
        assert!(!text.contains('\r'));
    }

    #[test]
    fn round_trip() {
        let doc = export_cnf(&PatternSpec::parse("glue:poly=d^2:star=1,1").unwrap(), 2, 8).unwrap();
        let parsed = parse(&render(&doc)).unwrap();
        assert_eq!(parsed, doc);
    }

    #[test]
    fn model_lines() {
        assert_eq!(parse_model("v 1 -2 3 0\n").unwrap(), vec![1, -2, 3]);
        assert_eq!(
            parse_model("s SATISFIABLE\nv 1 -2\nv 3 -4 0\n").unwrap(),
            vec![1, -2, 3, -4]
        );
        assert_eq!(parse_model("1 -2 3 0").unwrap(), vec![1, -2, 3]);
        assert!(parse_model("v 1 0 2").is_err());
    }
}

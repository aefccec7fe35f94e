//! JSON encodings of core values (report schema v1).
//!
//! Everything goes through `serde_json::Value`, whose object maps are
//! ordered, so identical data always serializes to identical bytes.

use serde_json::{json, Map, Value};

use ringshift_core::algebra::SymmetryCheck;
use ringshift_core::domain::{Coloring, Domain, Window};
use ringshift_core::largeness::{
    ApExperiment, Evidence, FiniteSetWindow, LargenessReport, PullbackComparison, StructureKind,
    Verdict,
};
use ringshift_core::pattern::Witness;
use ringshift_core::search::{RadoOutcome, SearchOutcome, SearchStats};

pub fn window(w: &Window) -> Value {
    json!([w.lo(), w.hi()])
}

pub fn domain(d: &Domain) -> Value {
    match d {
        Domain::Interval(w) => json!({ "kind": "interval", "lo": w.lo(), "hi": w.hi() }),
        Domain::NonzeroSymmetric(n) => json!({ "kind": "nonzero_symmetric", "n": n }),
    }
}

pub fn domain_from(v: &Value) -> Result<Domain, String> {
    let kind = v.get("kind").and_then(Value::as_str).ok_or("domain needs a kind")?;
    match kind {
        "interval" => {
            let lo = v.get("lo").and_then(Value::as_i64).ok_or("interval needs lo")?;
            let hi = v.get("hi").and_then(Value::as_i64).ok_or("interval needs hi")?;
            Ok(Domain::Interval(Window::new(lo, hi).map_err(|e| e.to_string())?))
        }
        "nonzero_symmetric" => {
            let n = v.get("n").and_then(Value::as_i64).ok_or("needs n")?;
            Domain::symmetric(n).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown domain kind `{other}`")),
    }
}

pub fn coloring(c: &Coloring) -> Value {
    json!({
        "domain": domain(c.domain()),
        "r": c.r(),
        "colors": c.colors(),
    })
}

pub fn coloring_from(v: &Value) -> Result<Coloring, String> {
    let d = domain_from(v.get("domain").ok_or("coloring needs a domain")?)?;
    let r = v.get("r").and_then(Value::as_u64).ok_or("coloring needs r")? as u32;
    let colors: Vec<u8> = v
        .get("colors")
        .and_then(Value::as_array)
        .ok_or("coloring needs a colors array")?
        .iter()
        .map(|x| {
            x.as_u64().and_then(|u| u8::try_from(u).ok()).ok_or_else(|| format!("bad color {x}"))
        })
        .collect::<Result<_, _>>()?;
    Coloring::new(d, r, colors).map_err(|e| e.to_string())
}

pub fn witness(w: &Witness) -> Value {
    let mut assignment = Map::new();
    for (name, value) in w.tuple.assignment() {
        assignment.insert((*name).to_string(), json!(value));
    }
    let mut parts = Map::new();
    for (name, values) in &w.parts {
        parts.insert((*name).to_string(), json!(values));
    }
    json!({
        "pattern": w.pattern,
        "color": w.color,
        "window": window(&w.window),
        "assignment": Value::Object(assignment),
        "occupied": w.tuple.occupied(),
        "parts": Value::Object(parts),
    })
}

pub fn stats(s: &SearchStats) -> Value {
    json!({ "nodes": s.nodes, "max_depth": s.max_depth })
}

pub fn search_outcome(out: &SearchOutcome, verified: Option<bool>) -> Value {
    match out {
        SearchOutcome::Avoidable(c) => json!({
            "verdict": "avoidable",
            "certificate": coloring(c),
            "verified": verified,
            "stats": Value::Null,
        }),
        SearchOutcome::Unavoidable(s) => json!({
            "verdict": "unavoidable",
            "certificate": Value::Null,
            "verified": Value::Null,
            "stats": stats(s),
        }),
    }
}

pub fn rado_outcome(out: &RadoOutcome, verified: Option<bool>) -> Value {
    match out {
        RadoOutcome::Found { n_star, avoider, stats: s } => json!({
            "n_star": n_star,
            "certificate": avoider.as_ref().map(coloring),
            "verified": verified,
            "stats": stats(s),
            "bound_exceeded": false,
        }),
        RadoOutcome::BoundExceeded { n_max, avoider } => json!({
            "n_star": Value::Null,
            "certificate": coloring(avoider),
            "verified": verified,
            "stats": Value::Null,
            "bound_exceeded": true,
            "n_max": n_max,
        }),
    }
}

pub fn structure(s: &StructureKind) -> Value {
    json!(s.to_string())
}

fn evidence(e: &Evidence) -> Value {
    match e {
        Evidence::Run { start, len } => json!({ "kind": "run", "start": start, "len": len }),
        Evidence::Gap { start, len } => json!({ "kind": "gap", "start": start, "len": len }),
        Evidence::Block { start, len } => json!({ "kind": "block", "start": start, "len": len }),
        Evidence::Cover { family_lo, family_hi } => {
            json!({ "kind": "cover", "family": [family_lo, family_hi] })
        }
        Evidence::Uncovered { at } => json!({ "kind": "uncovered", "at": at }),
        Evidence::Base { at } => json!({ "kind": "base", "at": at }),
        Evidence::Searched { lo, hi } => json!({ "kind": "searched", "lo": lo, "hi": hi }),
        Evidence::Empty => json!({ "kind": "empty" }),
    }
}

fn verdict(v: &Verdict) -> Value {
    json!({ "holds": v.holds, "evidence": evidence(&v.evidence) })
}

pub fn largeness_report(r: &LargenessReport) -> Value {
    let mut obj = Map::new();
    obj.insert("structure".into(), structure(&r.structure));
    obj.insert(
        "params".into(),
        json!({ "gap": r.params.gap, "run": r.params.run, "translates": r.params.translates }),
    );
    obj.insert("interior".into(), r.interior.as_ref().map(window).unwrap_or(Value::Null));
    obj.insert("thick".into(), verdict(&r.thick));
    obj.insert("syndetic".into(), verdict(&r.syndetic));
    obj.insert("pws".into(), verdict(&r.pws));
    if let Some(implied) = r.implied_additive_pws {
        obj.insert("implied_additive_pws".into(), json!(implied));
        // pws stands in wherever the infinite theory says "central"
        obj.insert("central_proxy".into(), json!("pws"));
    }
    Value::Object(obj)
}

pub fn pullback(p: &PullbackComparison) -> Value {
    json!({
        "star": largeness_report(&p.star),
        "multiplicative": largeness_report(&p.multiplicative),
        "additive_pws": { "base": p.additive_pws_base, "shifted": p.additive_pws_shifted },
        "agreement": p.agreement,
    })
}

pub fn ap_experiment(e: &ApExperiment) -> Value {
    json!({ "pws": e.pws, "longest": e.longest, "progression": e.progression })
}

pub fn set_rle(s: &FiniteSetWindow) -> Value {
    let intervals: Vec<Value> = s.intervals().iter().map(|(a, b)| json!([a, b])).collect();
    json!({ "window": window(&s.window()), "intervals": intervals })
}

pub fn set_rle_from(v: &Value) -> Result<FiniteSetWindow, String> {
    let w = v.get("window").and_then(Value::as_array).ok_or("set needs a window [lo,hi]")?;
    let (lo, hi) = match (w[0].as_i64(), w.get(1).and_then(Value::as_i64)) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err("bad window".into()),
    };
    let window = Window::new(lo, hi).map_err(|e| e.to_string())?;
    let mut intervals = Vec::new();
    for iv in v.get("intervals").and_then(Value::as_array).ok_or("set needs intervals")? {
        let pair = iv.as_array().ok_or("interval must be [a,b]")?;
        let (a, b) = match (pair.first().and_then(Value::as_i64), pair.get(1).and_then(Value::as_i64)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err("interval must hold two integers".into()),
        };
        intervals.push((a, b));
    }
    FiniteSetWindow::from_intervals(window, &intervals).map_err(|e| e.to_string())
}

pub fn symmetry(s: &SymmetryCheck) -> Value {
    json!({
        "symmetric": s.symmetric,
        "arity": s.arity,
        "samples": s.samples,
        "bound": s.bound,
        "seed": s.seed,
        "counterexample": s.counterexample.as_ref().map(|c| json!({
            "tuple": c.tuple,
            "permuted": c.permuted,
        })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_round_trip() {
        let d = Domain::positive(4).unwrap();
        let c = Coloring::new(d, 2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(coloring_from(&coloring(&c)).unwrap(), c);
        let z = Domain::symmetric(3).unwrap();
        let c = Coloring::new(z, 3, vec![0, 1, 2, 0, 1, 2]).unwrap();
        assert_eq!(coloring_from(&coloring(&c)).unwrap(), c);
    }

    #[test]
    fn set_round_trip() {
        let w = Window::new(-5, 20).unwrap();
        let s = FiniteSetWindow::from_intervals(w, &[(-5, -2), (0, 0), (7, 12)]).unwrap();
        assert_eq!(set_rle_from(&set_rle(&s)).unwrap(), s);
    }
}

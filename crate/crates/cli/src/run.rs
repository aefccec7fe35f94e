//! Command dispatch and exit-code policy.
//!
//! Exit 0: the command succeeded and the mathematical outcome is positive
//! (or the command is a plain computation). Exit 1: the tool worked but the
//! outcome is negative — an avoidable instance when deciding, a rejected
//! model, no witness found, a disagreeing comparison, a failed identity
//! suite, or a Rado bound exceeded. Exit 2: usage, validation, or I/O
//! errors; no report is emitted.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use serde_json::{json, Value};

use clap::Parser;

use ringshift_core::algebra::{
    check_symmetric, elem_sym, odot_products, oplus_sums, star_poly, AffineShift,
    IndexedSequence, StarParams,
};
use ringshift_core::cnf::{export_cnf, validate_model, ModelRejection, ModelVerdict};
use ringshift_core::domain::{Coloring, Domain};
use ringshift_core::largeness::{
    analyze_additive, analyze_multiplicative, analyze_star, ap_content_experiment,
    pullback_compare, FiniteSetWindow, LargenessParams,
};
use ringshift_core::pattern::{
    enumerate_solutions, find_monochromatic, PatternSpec,
};
use ringshift_core::search::{DomainKind, RadoOutcome, SearchOutcome};

use crate::args::{
    AlgebraCmd, Cli, Command, Direction, EvalArgs, EvalOp, LargenessCmd, PatternsCmd, PrCmd,
    ReportFormat,
};
use crate::config::{self, Effective};
use crate::encode;
use crate::format::{self, dimacs};
use crate::parallel;
use crate::report::{Manifest, Report};
use crate::verify::verify_params;

pub type ExitCode = i32;

pub const EXIT_OK: ExitCode = 0;
pub const EXIT_NEGATIVE: ExitCode = 1;
pub const EXIT_ERROR: ExitCode = 2;

pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let argv = match config::inject_file_args(argv) {
        Ok(argv) => argv,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_ERROR;
        }
    };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { EXIT_OK } else { EXIT_ERROR };
            let _ = e.print();
            return code;
        }
    };
    let eff = match config::resolve(&cli) {
        Ok(eff) => eff,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_ERROR;
        }
    };
    let started = Instant::now();
    match dispatch(&cli, &eff) {
        Ok((code, mut report)) => {
            if eff.timings {
                report.manifest.wall_ms = Some(started.elapsed().as_millis() as u64);
            }
            match emit(&report, &eff) {
                Ok(()) => code,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    EXIT_ERROR
                }
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_ERROR
        }
    }
}

fn emit(report: &Report, eff: &Effective) -> Result<(), String> {
    let text = match eff.format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(),
    };
    // export-cnf claims --out for the DIMACS document; its report always
    // goes to stdout (see the pr handler)
    let to_file = eff.out.as_ref().filter(|_| report.manifest.command != "pr export-cnf");
    match to_file {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write report to {}: {e}", path.display())),
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| format!("cannot write report: {e}"))
        }
    }
}

fn dispatch(cli: &Cli, eff: &Effective) -> Result<(ExitCode, Report), String> {
    match &cli.command {
        Command::Algebra(cmd) => algebra(cmd, eff),
        Command::Patterns(cmd) => patterns(cmd, eff),
        Command::Largeness(cmd) => largeness(cmd, eff),
        Command::Pr(cmd) => pr(cmd, eff),
    }
}

fn parse_pattern(name: &str) -> Result<PatternSpec, String> {
    PatternSpec::parse(name).map_err(|e| e.to_string())
}

// ALGEBRA
// ================================================================================================

fn algebra(cmd: &AlgebraCmd, eff: &Effective) -> Result<(ExitCode, Report), String> {
    match cmd {
        AlgebraCmd::Verify { l, k, samples, bound } => {
            let out = verify_params(*l, *k, *samples, *bound, eff.seed)?;
            let checks: Vec<Value> = out
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            let failures = out.failures();
            let manifest = Manifest::new("algebra verify", eff.seed, eff.workers)
                .param("l", *l)
                .param("k", *k)
                .param("samples", *samples)
                .param("bound", *bound);
            let outcome = json!({
                "l": out.l, "k": out.k,
                "samples": out.samples,
                "bound": out.bound,
                "seed": out.seed,
                "fold_samples": out.fold_samples,
                "checks": checks,
                "failures": failures,
            });
            let code = if failures == 0 { EXIT_OK } else { EXIT_NEGATIVE };
            Ok((code, Report { manifest, outcome }))
        }
        AlgebraCmd::Eval(args) => eval(args, eff),
    }
}

fn need<T: Copy>(v: &Option<T>, flag: &str, op: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("--op {op} needs {flag}"))
}

fn need_xs(args: &EvalArgs, op: &str) -> Result<Vec<i64>, String> {
    let xs = args.xs.clone().ok_or_else(|| format!("--op {op} needs --xs"))?;
    if args.distinct {
        IndexedSequence::distinct(xs.clone()).map_err(|e| e.to_string())?;
    }
    Ok(xs)
}

fn eval(args: &EvalArgs, eff: &Effective) -> Result<(ExitCode, Report), String> {
    let mut manifest = Manifest::new("algebra eval", eff.seed, eff.workers)
        .param("op", format!("{:?}", args.op).to_lowercase());
    let err = |e: ringshift_core::algebra::AlgebraError| e.to_string();
    let outcome: Value = match args.op {
        EvalOp::Star => {
            let p = StarParams::new(need(&args.l, "--l", "star")?, need(&args.k, "--k", "star")?)
                .map_err(err)?;
            let (a, b) = (need(&args.a, "-a", "star")?, need(&args.b, "-b", "star")?);
            manifest = manifest.param("l", p.l()).param("k", p.k()).param("a", a).param("b", b);
            json!({ "value": p.star(a, b).map_err(err)? })
        }
        EvalOp::Fold => {
            let p = StarParams::new(need(&args.l, "--l", "fold")?, need(&args.k, "--k", "fold")?)
                .map_err(err)?;
            let xs = need_xs(args, "fold")?;
            manifest = manifest.param("l", p.l()).param("k", p.k()).param("xs", xs.clone());
            json!({ "value": p.star_fold(&xs).map_err(err)? })
        }
        EvalOp::SymPoly => {
            let p = StarParams::new(
                need(&args.l, "--l", "sym-poly")?,
                need(&args.k, "--k", "sym-poly")?,
            )
            .map_err(err)?;
            let xs = need_xs(args, "sym-poly")?;
            manifest = manifest.param("l", p.l()).param("k", p.k()).param("xs", xs.clone());
            // arbitrary precision: decimal string
            json!({ "value": star_poly(&p, &xs).map_err(err)?.to_string() })
        }
        EvalOp::ElemSym => {
            let j = need(&args.j, "--j", "elem-sym")?;
            let xs = need_xs(args, "elem-sym")?;
            manifest = manifest.param("j", j).param("xs", xs.clone());
            json!({ "value": elem_sym(j, &xs).map_err(err)?.to_string() })
        }
        EvalOp::Oplus => {
            let t = AffineShift(need(&args.t, "--t", "oplus")?);
            let (a, b) = (need(&args.a, "-a", "oplus")?, need(&args.b, "-b", "oplus")?);
            manifest = manifest.param("t", t.t()).param("a", a).param("b", b);
            json!({
                "value": t.oplus(a, b).map_err(err)?,
                "identity": t.oplus_identity(),
                "inverse_of_a": t.oplus_inverse(a).map_err(err)?,
            })
        }
        EvalOp::Odot => {
            let t = AffineShift(need(&args.t, "--t", "odot")?);
            let (a, b) = (need(&args.a, "-a", "odot")?, need(&args.b, "-b", "odot")?);
            manifest = manifest.param("t", t.t()).param("a", a).param("b", b);
            json!({ "value": t.odot(a, b).map_err(err)?, "identity": t.odot_identity().map_err(err)? })
        }
        EvalOp::H => {
            let t = AffineShift(need(&args.t, "--t", "h")?);
            let x = need(&args.a, "-a", "h")?;
            let value = match args.direction {
                Direction::Forward => t.forward(x),
                Direction::Inverse => t.back(x),
            }
            .map_err(err)?;
            manifest = manifest
                .param("t", t.t())
                .param("x", x)
                .param("direction", format!("{:?}", args.direction).to_lowercase());
            json!({ "value": value })
        }
        EvalOp::Products | EvalOp::Sums => {
            let t = AffineShift(need(&args.t, "--t", "products/sums")?);
            let xs = need_xs(args, "products/sums")?;
            let depth = args.depth.unwrap_or(xs.len());
            manifest =
                manifest.param("t", t.t()).param("xs", xs.clone()).param("depth", depth);
            let set = if matches!(args.op, EvalOp::Products) {
                odot_products(t, &xs, depth).map_err(err)?
            } else {
                oplus_sums(t, &xs, depth).map_err(err)?
            };
            json!({ "set": set.into_iter().collect::<Vec<_>>() })
        }
        EvalOp::CheckSym => {
            let p = StarParams::new(
                need(&args.l, "--l", "check-sym")?,
                need(&args.k, "--k", "check-sym")?,
            )
            .map_err(err)?;
            let arity = args.depth.unwrap_or(3).max(1);
            manifest = manifest.param("l", p.l()).param("k", p.k()).param("arity", arity);
            let check = check_symmetric(
                arity,
                |xs| star_poly(&p, xs).expect("nonempty tuple"),
                200,
                100,
                eff.seed,
            );
            encode::symmetry(&check)
        }
    };
    Ok((EXIT_OK, Report { manifest, outcome }))
}

// PATTERNS
// ================================================================================================

fn patterns(cmd: &PatternsCmd, eff: &Effective) -> Result<(ExitCode, Report), String> {
    match cmd {
        PatternsCmd::Enumerate { pattern, window, limit } => {
            let spec = parse_pattern(pattern)?;
            let w = format::parse_window(window)?;
            let domain = Domain::Interval(w);
            let sols =
                enumerate_solutions(&spec, &domain, Some(*limit)).map_err(|e| e.to_string())?;
            let manifest = Manifest::new("patterns enumerate", eff.seed, eff.workers)
                .param("pattern", spec.canonical_name())
                .param("window", json!([w.lo(), w.hi()]))
                .param("limit", *limit);
            let solutions: Vec<Value> = sols
                .iter()
                .map(|s| {
                    let mut assignment = serde_json::Map::new();
                    for (name, v) in s.assignment() {
                        assignment.insert((*name).to_string(), json!(v));
                    }
                    json!({ "assignment": assignment, "occupied": s.occupied() })
                })
                .collect();
            let outcome = json!({
                "pattern": spec.canonical_name(),
                "window": [w.lo(), w.hi()],
                "count": sols.len(),
                "truncated": sols.len() == *limit,
                "solutions": solutions,
            });
            Ok((EXIT_OK, Report { manifest, outcome }))
        }
        PatternsCmd::Find { pattern, coloring, window, colors, coloring_file } => {
            let spec = parse_pattern(pattern)?;
            let c = match (coloring, coloring_file) {
                (Some(table), None) => {
                    let w = window
                        .as_ref()
                        .ok_or("--coloring needs --window lo:hi")
                        .and_then(|s| format::parse_window(s).map_err(|_| "bad --window"))
                        .map_err(|e| e.to_string())?;
                    let r = colors
                        .unwrap_or_else(|| table.iter().copied().max().unwrap_or(0) as u32 + 1);
                    Coloring::new(Domain::Interval(w), r, table.clone())
                        .map_err(|e| e.to_string())?
                }
                (None, Some(path)) => format::read_coloring_file(path)?,
                _ => return Err("give exactly one of --coloring or --coloring-file".into()),
            };
            let witness = find_monochromatic(&c, &spec).map_err(|e| e.to_string())?;
            let manifest = Manifest::new("patterns find", eff.seed, eff.workers)
                .param("pattern", spec.canonical_name())
                .param("domain", encode::domain(c.domain()))
                .param("colors", c.r());
            let outcome = json!({
                "pattern": spec.canonical_name(),
                "witness": witness.as_ref().map(encode::witness),
            });
            let code = if witness.is_some() { EXIT_OK } else { EXIT_NEGATIVE };
            Ok((code, Report { manifest, outcome }))
        }
    }
}

// LARGENESS
// ================================================================================================

fn read_set(
    window: &str,
    set: &Option<String>,
    set_file: &Option<std::path::PathBuf>,
) -> Result<FiniteSetWindow, String> {
    let w = format::parse_window(window)?;
    match (set, set_file) {
        (Some(inline), None) => format::parse_set_inline(w, inline),
        (None, Some(path)) => {
            let s = format::read_set_file(path)?;
            if s.window() != w {
                return Err(format!("set file window {} does not match --window {w}", s.window()));
            }
            Ok(s)
        }
        _ => Err("give exactly one of --set or --set-file".into()),
    }
}

fn largeness(cmd: &LargenessCmd, eff: &Effective) -> Result<(ExitCode, Report), String> {
    match cmd {
        LargenessCmd::Analyze {
            structure,
            window,
            set,
            set_file,
            gap,
            run,
            translates,
            ap_experiment,
        } => {
            let a = read_set(window, set, set_file)?;
            let p = LargenessParams::new(*gap, *run, *translates).map_err(|e| e.to_string())?;
            let (report, experiment) = match structure.as_str() {
                "add" => (analyze_additive(&a, &p), None),
                "mul" => (analyze_multiplicative(&a, &p).map_err(|e| e.to_string())?, None),
                s => {
                    let lk = s
                        .strip_prefix("star:")
                        .ok_or_else(|| format!("unknown structure `{s}` (add, mul, star:l,k)"))?;
                    let (l, k) = lk.split_once(',').ok_or("star structure needs l,k")?;
                    let sp = StarParams::new(
                        l.parse().map_err(|_| format!("bad l `{l}`"))?,
                        k.parse().map_err(|_| format!("bad k `{k}`"))?,
                    )
                    .map_err(|e| e.to_string())?;
                    let rep = analyze_star(&a, sp, &p).map_err(|e| e.to_string())?;
                    let ex = ap_experiment
                        .then(|| ap_content_experiment(&a, sp, &p, 4))
                        .transpose()
                        .map_err(|e| e.to_string())?;
                    (rep, ex)
                }
            };
            let manifest = Manifest::new("largeness analyze", eff.seed, eff.workers)
                .param("structure", structure.clone())
                .param("set", encode::set_rle(&a))
                .param("gap", *gap)
                .param("run", *run)
                .param("translates", *translates);
            let mut outcome = encode::largeness_report(&report);
            if let Some(ex) = experiment {
                outcome["ap_experiment"] = encode::ap_experiment(&ex);
            }
            Ok((EXIT_OK, Report { manifest, outcome }))
        }
        LargenessCmd::Compare { t, window, set, set_file, gap, run, translates } => {
            let a = read_set(window, set, set_file)?;
            let p = LargenessParams::new(*gap, *run, *translates).map_err(|e| e.to_string())?;
            let cmp = pullback_compare(&a, AffineShift(*t), &p).map_err(|e| e.to_string())?;
            let manifest = Manifest::new("largeness compare", eff.seed, eff.workers)
                .param("t", *t)
                .param("set", encode::set_rle(&a))
                .param("gap", *gap)
                .param("run", *run)
                .param("translates", *translates);
            let code = if cmp.agreement { EXIT_OK } else { EXIT_NEGATIVE };
            Ok((code, Report { manifest, outcome: encode::pullback(&cmp) }))
        }
    }
}

// PR SEARCH
// ================================================================================================

fn parse_domain(spec: &Option<String>, n: i64) -> Result<(DomainKind, i64), String> {
    match spec.as_deref() {
        None | Some("positive") => Ok((DomainKind::Positive, n)),
        Some("z") => Ok((DomainKind::NonzeroSymmetric, n)),
        Some(z) => {
            let m = z
                .strip_prefix("z:")
                .ok_or_else(|| format!("unknown domain `{z}` (positive, z, or z:n)"))?;
            let m: i64 = m.parse().map_err(|_| format!("bad domain bound `{m}`"))?;
            Ok((DomainKind::NonzeroSymmetric, m))
        }
    }
}

fn pr(cmd: &PrCmd, eff: &Effective) -> Result<(ExitCode, Report), String> {
    match cmd {
        PrCmd::Decide { pattern, colors, n, domain } => {
            let spec = parse_pattern(pattern)?;
            let (kind, n) = parse_domain(domain, *n)?;
            let d = kind.domain(n).map_err(|e| e.to_string())?;
            let outcome = parallel::decide_with_workers(&spec, *colors, &d, eff.workers)
                .map_err(|e| e.to_string())?;
            // every avoidable certificate is re-verified before it is reported
            let verified = match &outcome {
                SearchOutcome::Avoidable(c) => {
                    let rescan = find_monochromatic(c, &spec).map_err(|e| e.to_string())?;
                    if rescan.is_some() {
                        return Err("internal error: certificate failed re-verification".into());
                    }
                    Some(true)
                }
                SearchOutcome::Unavoidable(_) => None,
            };
            let manifest = Manifest::new("pr decide", eff.seed, eff.workers)
                .param("pattern", spec.canonical_name())
                .param("colors", *colors)
                .param("n", n)
                .param("domain", encode::domain(&d));
            let mut out = encode::search_outcome(&outcome, verified);
            out["pattern"] = json!(spec.canonical_name());
            out["r"] = json!(*colors);
            let code = match outcome {
                SearchOutcome::Avoidable(_) => EXIT_NEGATIVE,
                SearchOutcome::Unavoidable(_) => EXIT_OK,
            };
            Ok((code, Report { manifest, outcome: out }))
        }
        PrCmd::Rado { pattern, colors, max, domain } => {
            let spec = parse_pattern(pattern)?;
            let (kind, n_max) = parse_domain(domain, *max)?;
            let outcome =
                parallel::rado_with_workers(&spec, *colors, n_max, kind, eff.workers)
                    .map_err(|e| e.to_string())?;
            let avoider = match &outcome {
                RadoOutcome::Found { avoider, .. } => avoider.as_ref(),
                RadoOutcome::BoundExceeded { avoider, .. } => Some(avoider),
            };
            let verified = match avoider {
                Some(c) => {
                    if find_monochromatic(c, &spec).map_err(|e| e.to_string())?.is_some() {
                        return Err("internal error: certificate failed re-verification".into());
                    }
                    Some(true)
                }
                None => None,
            };
            let manifest = Manifest::new("pr rado", eff.seed, eff.workers)
                .param("pattern", spec.canonical_name())
                .param("colors", *colors)
                .param("max", n_max)
                .param("domain", format!("{kind:?}").to_lowercase());
            let mut out = encode::rado_outcome(&outcome, verified);
            out["pattern"] = json!(spec.canonical_name());
            out["r"] = json!(*colors);
            let code = match outcome {
                RadoOutcome::Found { .. } => EXIT_OK,
                RadoOutcome::BoundExceeded { .. } => EXIT_NEGATIVE,
            };
            Ok((code, Report { manifest, outcome: out }))
        }
        PrCmd::ExportCnf { pattern, colors, n } => {
            let spec = parse_pattern(pattern)?;
            let doc = export_cnf(&spec, *colors, *n).map_err(|e| e.to_string())?;
            let path = eff
                .out
                .as_ref()
                .ok_or("pr export-cnf needs --out FILE for the DIMACS document")?;
            std::fs::write(path, dimacs::render(&doc))
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            let manifest = Manifest::new("pr export-cnf", eff.seed, eff.workers)
                .param("pattern", spec.canonical_name())
                .param("colors", *colors)
                .param("n", *n);
            let outcome = json!({
                "pattern": spec.canonical_name(),
                "r": *colors,
                "n": *n,
                "vars": doc.num_vars,
                "clauses": doc.clauses.len(),
                "path": path.display().to_string(),
            });
            Ok((EXIT_OK, Report { manifest, outcome }))
        }
        PrCmd::CheckModel { cnf, model } => {
            let cnf_text = std::fs::read_to_string(cnf)
                .map_err(|e| format!("cannot read {}: {e}", cnf.display()))?;
            let doc = dimacs::parse(&cnf_text)?;
            let model_text = std::fs::read_to_string(model)
                .map_err(|e| format!("cannot read {}: {e}", model.display()))?;
            let literals = dimacs::parse_model(&model_text)?;
            let verdict = validate_model(&doc, &literals).map_err(|e| e.to_string())?;
            let manifest = Manifest::new("pr check-model", eff.seed, eff.workers)
                .param("pattern", doc.pattern.clone())
                .param("n", doc.n)
                .param("colors", doc.r);
            let (code, outcome) = match verdict {
                ModelVerdict::Accepted(coloring) => (
                    EXIT_OK,
                    json!({ "accepted": true, "coloring": encode::coloring(&coloring), "rejection": Value::Null }),
                ),
                ModelVerdict::Rejected(rej) => {
                    (EXIT_NEGATIVE, json!({ "accepted": false, "coloring": Value::Null, "rejection": rejection(&rej) }))
                }
            };
            Ok((code, Report { manifest, outcome }))
        }
    }
}

fn rejection(rej: &ModelRejection) -> Value {
    match rej {
        ModelRejection::BadLiteral { literal } => {
            json!({ "kind": "bad_literal", "literal": literal })
        }
        ModelRejection::ArityMismatch { expected, got } => {
            json!({ "kind": "arity_mismatch", "expected": expected, "got": got })
        }
        ModelRejection::Conflicting { var } => json!({ "kind": "conflicting", "var": var }),
        ModelRejection::ClauseViolated { index, clause } => {
            json!({ "kind": "clause_violated", "index": index, "clause": clause })
        }
        ModelRejection::Monochromatic { witness } => {
            json!({ "kind": "monochromatic", "witness": encode::witness(witness) })
        }
    }
}

//! Layered configuration: flags > config file > environment > defaults.
//! The effective merged values are echoed in every manifest.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

use crate::args::{Cli, ReportFormat};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub workers: Option<usize>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    /// Fallbacks for any long command flag (same schema as the flags);
    /// applied only when the flag is absent from the command line.
    #[serde(default)]
    pub args: BTreeMap<String, Value>,
}

/// The resolved configuration a run actually uses.
#[derive(Debug, Clone)]
pub struct Effective {
    pub seed: u64,
    pub workers: usize,
    pub format: ReportFormat,
    pub out: Option<PathBuf>,
    pub timings: bool,
}

pub const WORKERS_ENV: &str = "RINGSHIFT_WORKERS";
pub const DEFAULT_SEED: u64 = 0;

pub fn load_file(path: &Path) -> Result<FileConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    if is_json {
        serde_json::from_str(&text).map_err(|e| format!("bad JSON config: {e}"))
    } else {
        // route TOML through the same JSON value model
        let value: toml::Value = toml::from_str(&text).map_err(|e| format!("bad TOML config: {e}"))?;
        let value = serde_json::to_value(value).map_err(|e| format!("bad TOML config: {e}"))?;
        serde_json::from_value(value).map_err(|e| format!("bad TOML config: {e}"))
    }
}

/// Fills absent long flags from the config's `args` table, before parsing.
/// Scalars become `--key value`, `true` a bare `--key`, arrays a
/// comma-joined value; flags already on the command line win.
pub fn inject_file_args(mut argv: Vec<OsString>) -> Result<Vec<OsString>, String> {
    let config_path = argv.iter().position(|a| a == "--config").and_then(|i| argv.get(i + 1));
    let Some(path) = config_path else { return Ok(argv) };
    let file = load_file(Path::new(path))?;
    for (key, value) in &file.args {
        let flag = format!("--{key}");
        let present = argv
            .iter()
            .any(|a| *a == *flag.as_str() || a.to_string_lossy().starts_with(&format!("{flag}=")));
        if present {
            continue;
        }
        let rendered = match value {
            Value::Bool(true) => {
                argv.push(flag.into());
                continue;
            }
            Value::Bool(false) => continue,
            Value::Array(items) => items
                .iter()
                .map(render_scalar)
                .collect::<Result<Vec<_>, _>>()?
                .join(","),
            other => render_scalar(other)?,
        };
        argv.push(flag.into());
        argv.push(rendered.into());
    }
    Ok(argv)
}

fn render_scalar(v: &Value) -> Result<String, String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(format!("config arg value {other} must be a string, number, or array")),
    }
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    match s {
        "json" => Ok(ReportFormat::Json),
        "csv" => Ok(ReportFormat::Csv),
        other => Err(format!("unknown format `{other}` (json or csv)")),
    }
}

pub fn resolve(cli: &Cli) -> Result<Effective, String> {
    let file = match &cli.config {
        Some(path) => load_file(path)?,
        None => FileConfig::default(),
    };
    let env_workers = std::env::var(WORKERS_ENV)
        .ok()
        .map(|v| v.parse::<usize>().map_err(|_| format!("bad {WORKERS_ENV}: `{v}`")))
        .transpose()?;
    let format = match (cli.format, &file.format) {
        (Some(f), _) => f,
        (None, Some(s)) => parse_format(s)?,
        (None, None) => ReportFormat::Json,
    };
    let workers = cli.workers.or(file.workers).or(env_workers).unwrap_or(1).max(1);
    Ok(Effective {
        seed: cli.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        workers,
        format,
        out: cli.out.clone().or(file.out),
        timings: cli.timings,
    })
}

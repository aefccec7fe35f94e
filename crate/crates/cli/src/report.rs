//! Run manifests and schema-versioned reports.
//!
//! JSON output is canonical: object keys are sorted (the `serde_json` map is
//! ordered) and wall-clock time is omitted unless `--timings` asks for it,
//! so a re-run with the same parameters and seed produces identical bytes.

use std::collections::BTreeMap;

use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone)]
pub struct Manifest {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub seed: u64,
    pub workers: usize,
    pub version: String,
    /// Only populated under `--timings`.
    pub wall_ms: Option<u64>,
}

impl Manifest {
    pub fn new(command: &str, seed: u64, workers: usize) -> Self {
        Manifest {
            command: command.to_string(),
            params: BTreeMap::new(),
            seed,
            workers,
            version: env!("CARGO_PKG_VERSION").to_string(),
            wall_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "seed": self.seed,
            "workers": self.workers,
            "version": self.version,
            "wall_ms": self.wall_ms,
        })
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub manifest: Manifest,
    pub outcome: Value,
}

impl Report {
    pub fn to_value(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "manifest": self.manifest.to_value(),
            "outcome": self.outcome,
        })
    }

    /// Canonical JSON bytes (sorted keys, trailing newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        s.push('\n');
        s
    }

    /// Flat CSV: one `key,value` row per leaf of the outcome, paths joined
    /// with dots, preceded by manifest rows.
    pub fn to_csv(&self) -> String {
        let mut rows: Vec<(String, String)> = Vec::new();
        rows.push(("schema".into(), SCHEMA_VERSION.to_string()));
        flatten("manifest", &self.manifest.to_value(), &mut rows);
        flatten("outcome", &self.outcome, &mut rows);
        let mut wtr = csv::Writer::from_writer(Vec::new());
        wtr.write_record(["key", "value"]).expect("csv");
        for (k, v) in rows {
            wtr.write_record([k, v]).expect("csv");
        }
        String::from_utf8(wtr.into_inner().expect("csv")).expect("utf8")
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                flatten(&format!("{prefix}.{k}"), inner, rows);
            }
        }
        Value::Array(items) => {
            // short numeric arrays inline; long or nested ones per element
            if items.len() <= 8 && items.iter().all(|i| i.is_number()) {
                let joined: Vec<String> = items.iter().map(Value::to_string).collect();
                rows.push((prefix.to_string(), joined.join(" ")));
            } else {
                for (i, inner) in items.iter().enumerate() {
                    flatten(&format!("{prefix}[{i}]"), inner, rows);
                }
            }
        }
        Value::Null => rows.push((prefix.to_string(), String::new())),
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_byte_stable() {
        let make = || {
            let m = Manifest::new("pr decide", 7, 2).param("n", 4).param("colors", 2);
            Report { manifest: m, outcome: json!({"verdict": "avoidable", "zeta": 1, "alpha": 2}) }
        };
        assert_eq!(make().to_json(), make().to_json());
        // keys sorted regardless of insertion order
        let j = make().to_json();
        let alpha = j.find("\"alpha\"").unwrap();
        let zeta = j.find("\"zeta\"").unwrap();
        assert!(alpha < zeta);
    }

    #[test]
    fn csv_flattens_leaves() {
        let m = Manifest::new("largeness analyze", 0, 1);
        let r = Report {
            manifest: m,
            outcome: json!({"thick": {"holds": true}, "interior": [1, 4096]}),
        };
        let csv = r.to_csv();
        assert!(csv.contains("outcome.thick.holds,true"));
        assert!(csv.contains("outcome.interior,1 4096"));
    }
}

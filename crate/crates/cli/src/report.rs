use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    /// SHA-256 of the normalized input document.
    pub input_digest: String,
    pub version: String,
    pub seed: Option<u64>,
    pub results: Value,
}

impl Report {
    pub fn new(command: String, input: &str, seed: Option<u64>, results: Value) -> Self {
        Self {
            command,
            input_digest: digest(input),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            seed,
            results: round_floats(results),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One `path: value` line per leaf.
    pub fn to_human(&self) -> String {
        let mut out = format!(
            "command: {}\ninput digest: {}\nversion: {}\nseed: {}\n",
            self.command,
            self.input_digest,
            self.version,
            self.seed.map_or("none".to_owned(), |s| s.to_string())
        );
        flatten("", &self.results, &mut out);
        out
    }
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

/// Rounds every non-integer number to the report precision.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_significant(n.as_f64().expect("f64 number"));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => Value::Object(
            map.into_iter()
                .map(|(k, v)| (k, round_floats(v)))
                .collect::<Map<_, _>>(),
        ),
        other => other,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, item, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let joined: Vec<String> = items.iter().map(render_scalar).collect();
            out.push_str(&format!("{prefix}: [{}]\n", joined.join(", ")));
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), item, out);
            }
        }
        leaf => out.push_str(&format!("{prefix}: {}\n", render_scalar(leaf))),
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

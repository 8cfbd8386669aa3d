//! File formats for arithmetic functions.
//!
//! JSON: `{"domain": "Q"|"Z", "bound": N, "values": ["p/q" | "n", ...]}`.
//! CSV: one `index,value` line per index, indices `1..=N` in order. CSV
//! carries no domain; the reader is told which domain to use.

use serde::{Deserialize, Serialize};

use crate::{ArithFunc, Coefficient, Domain, Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionFile {
    domain: Domain,
    bound: usize,
    values: Vec<String>,
}

pub fn to_json(f: &ArithFunc) -> String {
    let file = FunctionFile {
        domain: f.domain(),
        bound: f.bound(),
        values: f.values().iter().map(ToString::to_string).collect(),
    };
    serde_json::to_string_pretty(&file).expect("function file serializes")
}

pub fn from_json(text: &str) -> Result<ArithFunc> {
    let file: FunctionFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line() as u64,
        message: e.to_string(),
    })?;
    if file.bound != file.values.len() {
        return Err(Error::BoundMismatch {
            expected: file.bound,
            found: file.values.len(),
        });
    }
    let values = file
        .values
        .iter()
        .map(|s| s.parse::<Coefficient>())
        .collect::<Result<Vec<_>>>()?;
    ArithFunc::new(values, file.domain)
}

pub fn to_csv(f: &ArithFunc) -> String {
    let mut out = String::new();
    for (i, v) in f.values().iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, v));
    }
    out
}

/// Reads `index,value` lines. A leading `index,value` header line is
/// skipped if present.
pub fn from_csv(text: &str, domain: Domain) -> Result<ArithFunc> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let bad = |message: String| Error::Parse { line, message };
        if record.len() != 2 {
            return Err(bad(format!(
                "expected `index,value`, found {} fields",
                record.len()
            )));
        }
        if values.is_empty() && &record[0] == "index" {
            continue;
        }
        let index: usize = record[0]
            .parse()
            .map_err(|_| bad(format!("`{}` is not an index", &record[0])))?;
        if index != values.len() + 1 {
            return Err(bad(format!(
                "expected index {}, found {index}",
                values.len() + 1
            )));
        }
        let value: Coefficient = record[1].parse().map_err(|e: Error| bad(e.to_string()))?;
        if !domain.contains(&value) {
            return Err(bad(format!("{value} is not an element of {domain}")));
        }
        values.push(value);
    }
    ArithFunc::new(values, domain).map_err(|e| match e {
        Error::Empty => Error::Format("no values".into()),
        other => other,
    })
}

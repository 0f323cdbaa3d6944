use std::fmt;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

/// Status of one of the conditions `(1_X)` to `(6_X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Verified,
    Refuted,
    Implied,
    Unknown,
    NotApplicable,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Verified => "VERIFIED",
            Status::Refuted => "REFUTED",
            Status::Implied => "IMPLIED",
            Status::Unknown => "UNKNOWN",
            Status::NotApplicable => "N/A",
        }
    }

    pub fn from_label(s: &str) -> Option<Status> {
        [
            Status::Verified,
            Status::Refuted,
            Status::Implied,
            Status::Unknown,
            Status::NotApplicable,
        ]
        .into_iter()
        .find(|st| st.label() == s)
    }

    fn holds(self) -> bool {
        matches!(self, Status::Verified | Status::Implied)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Proven implications between the conditions, as `(from, to)` pairs of
/// 1-based condition numbers.
pub const IMPLICATIONS: &[(usize, usize)] = &[(2, 3), (3, 4), (4, 3), (4, 5), (1, 6), (6, 1), (6, 5), (4, 1)];

pub fn condition_name(i: usize) -> String {
    format!("({i}_X)")
}

/// Statuses of `(1_X)` ... `(6_X)` with the reason for each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionMap {
    entries: [(Status, String); 6],
}

impl ConditionMap {
    pub fn unknown() -> Self {
        ConditionMap {
            entries: std::array::from_fn(|_| (Status::Unknown, "not examined by this command".to_string())),
        }
    }

    pub fn not_applicable(reason: &str) -> Self {
        ConditionMap {
            entries: std::array::from_fn(|_| (Status::NotApplicable, reason.to_string())),
        }
    }

    pub fn get(&self, i: usize) -> Status {
        self.entries[i - 1].0
    }

    pub fn provenance(&self, i: usize) -> &str {
        &self.entries[i - 1].1
    }

    pub fn set(&mut self, i: usize, status: Status, provenance: impl Into<String>) {
        self.entries[i - 1] = (status, provenance.into());
    }

    /// Closes the map under the implications and their contrapositives.
    /// Fails if the evidence is contradictory.
    pub fn propagate(&mut self) -> Result<()> {
        loop {
            let mut changed = false;
            for &(a, b) in IMPLICATIONS {
                let (sa, sb) = (self.get(a), self.get(b));
                if sa.holds() && sb == Status::Refuted {
                    return Err(Error::Internal(format!(
                        "{} holds but {} is refuted",
                        condition_name(a),
                        condition_name(b)
                    )));
                }
                if sa.holds() && sb == Status::Unknown {
                    self.set(b, Status::Implied, format!("implied by {}", condition_name(a)));
                    changed = true;
                }
                if sb == Status::Refuted && sa == Status::Unknown {
                    self.set(
                        a,
                        Status::Refuted,
                        format!("{} is refuted and {} implies it", condition_name(b), condition_name(a)),
                    );
                    changed = true;
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for i in 1..=6 {
            map.insert(
                condition_name(i),
                json!({"status": self.get(i).label(), "provenance": self.provenance(i)}),
            );
        }
        Value::Object(map)
    }
}

/// Checks a rendered condition map against the proven implications.
///
/// For every implication `A => B`: if `A` holds (VERIFIED or IMPLIED) then
/// `B` holds, and if `B` is REFUTED then so is `A`. `N/A` must be all or
/// nothing.
pub fn validate_conditions(conditions: &Value) -> std::result::Result<(), String> {
    let mut status = [Status::Unknown; 6];
    for (i, slot) in status.iter_mut().enumerate() {
        let name = condition_name(i + 1);
        let label = conditions
            .get(&name)
            .and_then(|c| c.get("status"))
            .and_then(Value::as_str)
            .ok_or_else(|| format!("missing status for {name}"))?;
        *slot = Status::from_label(label).ok_or_else(|| format!("bad status {label:?} for {name}"))?;
    }
    let na = status.iter().filter(|s| **s == Status::NotApplicable).count();
    if na != 0 && na != 6 {
        return Err("N/A mixed with other statuses".into());
    }
    for &(a, b) in IMPLICATIONS {
        let (sa, sb) = (status[a - 1], status[b - 1]);
        if sa.holds() && !sb.holds() {
            return Err(format!(
                "{} is {sa} but {} is {sb}",
                condition_name(a),
                condition_name(b)
            ));
        }
        if sb == Status::Refuted && sa != Status::Refuted {
            return Err(format!(
                "{} is REFUTED but {} is {sa}",
                condition_name(b),
                condition_name(a)
            ));
        }
    }
    Ok(())
}

/// Output format of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// One command's output: echo of the inputs, results and condition map.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportDocument {
    pub command: String,
    pub input: String,
    pub digest: String,
    pub seed: u64,
    pub samples: usize,
    pub results: Value,
    pub conditions: ConditionMap,
    /// Wall-clock milliseconds per phase; omitted unless requested so that
    /// reports are reproducible byte for byte.
    pub timings: Option<Value>,
}

impl ReportDocument {
    pub fn to_json(&self) -> Value {
        let mut doc = json!({
            "command": self.command,
            "input": {
                "problem": self.input.lines().collect::<Vec<_>>(),
                "sha256": self.digest,
            },
            "seed": self.seed.to_string(),
            "samples": self.samples.to_string(),
            "results": self.results,
            "conditions": self.conditions.to_json(),
        });
        if let Some(t) = &self.timings {
            doc["timings"] = t.clone();
        }
        doc
    }

    pub fn render(&self, format: Format) -> String {
        let value = self.to_json();
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&value).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                render_text(&value, 0, &mut out);
                out
            }
        }
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other).unwrap_or_default())),
    }
}

/// Single-line rendering of scalars and arrays of scalars.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items
                .iter()
                .map(|x| if x.is_array() || x.is_object() { None } else { inline(x) })
                .collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(map) if map.is_empty() => Some("{}".into()),
        Value::Object(_) => None,
    }
}

//! Deterministic reports, rendered as JSON or indented text.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    /// A valid computation with a negative answer.
    Fail,
    /// Usage, reference or guard errors.
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub findings: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            status: Status::Ok,
            error: None,
            findings: Map::new(),
            timing_ms: None,
        }
    }

    pub fn error(command: impl Into<String>, message: impl Into<String>) -> Self {
        let mut r = Report::new(command);
        r.status = Status::Error;
        r.error = Some(message.into());
        r
    }

    pub fn fail(&mut self, message: impl Into<String>) {
        self.status = Status::Fail;
        self.error = Some(message.into());
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.findings.insert(key.to_string(), value.into());
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\nstatus: {}\n", self.command, self.status_str());
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        for (k, v) in &self.findings {
            write_value(&mut out, k, v, 0);
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("timing_ms: {t:.3}\n"));
        }
        out
    }

    fn status_str(&self) -> &'static str {
        match self.status {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        Value::Object(m) if m.values().all(|x| x.is_string()) && m.len() <= 8 => Some(format!(
            "{{{}}}",
            m.iter()
                .map(|(k, x)| format!("{k}: {}", x.as_str().unwrap_or_default()))
                .collect::<Vec<_>>()
                .join(", ")
        )),
        _ => None,
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                write_value(out, &format!("[{i}]"), item, depth + 1);
            }
        }
        Value::Object(m) => {
            for (k, item) in m {
                write_value(out, k, item, depth + 1);
            }
        }
        _ => unreachable!("scalars are handled above"),
    }
}

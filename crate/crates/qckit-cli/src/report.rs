//! Machine-parseable reports with a stable section and key order.
//!
//! Reports render as TOML built by hand: sections appear in insertion order,
//! keys inside a section in insertion order, so a fixed sequence of `push`
//! calls produces byte-identical output on every run.

use std::fmt::Write as _;

/// A report value. Lists render as TOML arrays of strings.
#[derive(Clone, Debug)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Str(String),
    List(Vec<String>),
}

impl From<bool> for Value {
    fn from(b: bool) -> Value {
        Value::Bool(b)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Value {
        Value::Int(n)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Value {
        Value::Int(n as i64)
    }
}

impl From<u64> for Value {
    fn from(n: u64) -> Value {
        Value::Int(n as i64)
    }
}

impl From<u32> for Value {
    fn from(n: u32) -> Value {
        Value::Int(n as i64)
    }
}

impl From<String> for Value {
    fn from(s: String) -> Value {
        Value::Str(s)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Value {
        Value::Str(s.to_string())
    }
}

impl From<Vec<String>> for Value {
    fn from(items: Vec<String>) -> Value {
        Value::List(items)
    }
}

/// Ordered key-value report, rendered as TOML sections.
#[derive(Clone, Debug, Default)]
pub struct Report {
    sections: Vec<(String, Vec<(String, Value)>)>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    /// Append `key = value` to `section`, creating the section at the end of
    /// the report if this is its first key.
    pub fn push(&mut self, section: &str, key: &str, value: impl Into<Value>) {
        let entry = (key.to_string(), value.into());
        if let Some((_, entries)) = self.sections.iter_mut().find(|(name, _)| name == section) {
            entries.push(entry);
        } else {
            self.sections.push((section.to_string(), vec![entry]));
        }
    }

    /// Render the whole report as TOML.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, (section, entries)) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "[{section}]");
            for (key, value) in entries {
                let _ = writeln!(out, "{} = {}", render_key(key), render_value(value));
            }
        }
        out
    }
}

fn bare_key(key: &str) -> bool {
    !key.is_empty()
        && key
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn render_key(key: &str) -> String {
    if bare_key(key) {
        key.to_string()
    } else {
        quote(key)
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn render_value(value: &Value) -> String {
    match value {
        Value::Bool(b) => b.to_string(),
        Value::Int(n) => n.to_string(),
        Value::Str(s) => quote(s),
        Value::List(items) => {
            let inner: Vec<String> = items.iter().map(|s| quote(s)).collect();
            format!("[{}]", inner.join(", "))
        }
    }
}

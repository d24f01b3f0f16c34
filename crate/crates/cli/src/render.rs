//! Text and JSON rendering of command results.

use posetrep_core::filter::Representation;
use posetrep_core::game::{Move, TraceStep};
use posetrep_core::{ElementSet, Poset};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Output of one command, kept in both forms. Text is the canonical one;
/// the JSON object uses the same keys.
#[derive(Clone, Debug, Default)]
pub struct Report {
    lines: Vec<String>,
    json: Map<String, Value>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    /// A `key: value` line and the matching JSON member.
    pub fn field(&mut self, key: &str, value: impl Into<Value>) {
        let value = value.into();
        self.lines.push(format!("{key}: {}", plain(&value)));
        self.json.insert(key.to_string(), value);
    }

    pub fn text_line(&mut self, line: String) {
        self.lines.push(line);
    }

    pub fn json_member(&mut self, key: &str, value: Value) {
        self.json.insert(key.to_string(), value);
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.lines.iter().map(|l| format!("{l}\n")).collect(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&Value::Object(self.json.clone()))
                    .expect("JSON values always serialize");
                s.push('\n');
                s
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// `{a,c}`, members in index order.
pub fn compact_set(p: &Poset, s: ElementSet) -> String {
    let names: Vec<&str> = s.iter().map(|e| p.name(e)).collect();
    format!("{{{}}}", names.join(","))
}

pub fn render_move(p: &Poset, mv: Move) -> String {
    match mv {
        Move::Up(b) => format!("up {}", p.name(b)),
        Move::Meet(a) => format!("meet {}", compact_set(p, a)),
        Move::Join(b) => format!("join {}", compact_set(p, b)),
    }
}

/// `A: <move>` and `E: <element>` lines, alternating.
pub fn trace_lines(p: &Poset, trace: &[TraceStep]) -> Vec<String> {
    trace
        .iter()
        .flat_map(|step| [format!("A: {}", render_move(p, step.mv)), format!("E: {}", p.name(step.added))])
        .collect()
}

pub fn trace_json(p: &Poset, trace: &[TraceStep]) -> Value {
    trace
        .iter()
        .map(|step| serde_json::json!({ "A": render_move(p, step.mv), "E": p.name(step.added) }))
        .collect()
}

/// `filter <i>: {a, b}` per filter, then `h <name> = {i, j}` per element.
pub fn representation_lines(p: &Poset, rep: &Representation) -> Vec<String> {
    let mut lines: Vec<String> = rep
        .filters
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let names: Vec<&str> = g.iter().map(|e| p.name(e)).collect();
            format!("filter {i}: {{{}}}", names.join(", "))
        })
        .collect();
    for e in 0..p.len() {
        let indices: Vec<String> = rep.image(e).iter().map(|i| i.to_string()).collect();
        lines.push(format!("h {} = {{{}}}", p.name(e), indices.join(", ")));
    }
    lines
}

pub fn representation_json(p: &Poset, rep: &Representation) -> (Value, Value) {
    let filters = rep
        .filters
        .iter()
        .map(|g| g.iter().map(|e| Value::from(p.name(e))).collect::<Value>())
        .collect();
    let h = (0..p.len())
        .map(|e| (p.name(e).to_string(), rep.image(e).iter().map(|&i| Value::from(i)).collect()))
        .collect::<Map<String, Value>>();
    (filters, Value::Object(h))
}

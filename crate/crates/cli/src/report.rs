//! Run reports and their deterministic JSON, CSV and text renderings.

use std::io::{self, Write};

use conformal_em::exact::{self, Exact};
use serde_json::ser::{Formatter, PrettyFormatter, Serializer};
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: &str = "1";

/// Rows destined for `--csv`.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub failures: Vec<String>,
    pub table: Option<Table>,
}

impl RunReport {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            inputs: Map::new(),
            outputs: Map::new(),
            failures: Vec::new(),
            table: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_owned(), value.into());
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) {
        self.outputs.insert(key.to_owned(), value.into());
    }

    /// Records a named check; a failing check fails the run.
    pub fn check(&mut self, name: &str, ok: bool) {
        if !ok {
            self.failures.push(name.to_owned());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_value(&self) -> Value {
        let mut root = Map::new();
        root.insert("schema_version".into(), SCHEMA_VERSION.into());
        root.insert("command".into(), self.command.into());
        root.insert("inputs".into(), Value::Object(self.inputs.clone()));
        root.insert("outputs".into(), Value::Object(self.outputs.clone()));
        let mut summary = Map::new();
        summary.insert("pass".into(), self.passed().into());
        summary.insert("failures".into(), self.failures.clone().into());
        root.insert("summary".into(), Value::Object(summary));
        let mut tool = Map::new();
        tool.insert("name".into(), "conformal-em".into());
        tool.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        root.insert("tool".into(), Value::Object(tool));
        Value::Object(root)
    }

    pub fn to_json(&self) -> String {
        render_json(&self.to_value())
    }

    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        if let Some(t) = &self.table {
            w.write_record(&t.header)?;
            for row in &t.rows {
                w.write_record(row)?;
            }
        }
        w.flush()
    }

    /// `path = value` lines for the outputs, then a verdict line.
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        flatten(
            "",
            &canonical(&Value::Object(self.outputs.clone())),
            &mut lines,
        );
        let verdict = if self.passed() {
            "PASS".to_owned()
        } else {
            format!("FAIL: {}", self.failures.join(", "))
        };
        lines.push(verdict);
        lines.join("\n") + "\n"
    }
}

/// Floats with 17 significant digits in scientific notation.
pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

pub fn float(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

/// `{"exact": "p/q", "value": f}`.
pub fn exact_value(x: &Exact) -> Value {
    let mut m = Map::new();
    m.insert("exact".into(), x.to_string().into());
    m.insert("value".into(), float(exact::to_f64(x)));
    Value::Object(m)
}

pub fn object<const N: usize>(entries: [(&str, Value); N]) -> Value {
    Value::Object(
        entries
            .into_iter()
            .map(|(k, v)| (k.to_owned(), v))
            .collect(),
    )
}

/// Copy of `v` with every object's keys inserted in sorted order.
fn canonical(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            Value::Object(
                keys.into_iter()
                    .map(|k| (k.clone(), canonical(&m[k])))
                    .collect(),
            )
        }
        Value::Array(a) => Value::Array(a.iter().map(canonical).collect()),
        other => other.clone(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_owned()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, v)| flatten(&join(k), v, out)),
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => a
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&join(&i.to_string()), v, out)),
        other => out.push(format!("{prefix} = {}", render_compact(other))),
    }
}

fn render_compact(v: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = Serializer::with_formatter(&mut buf, SigFigs(serde_json::ser::CompactFormatter));
    serde::Serialize::serialize(v, &mut ser).expect("in-memory serialization");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// Pretty JSON with sorted keys and 17-significant-digit floats.
pub fn render_json(v: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser =
        Serializer::with_formatter(&mut buf, SigFigs(PrettyFormatter::with_indent(b"  ")));
    serde::Serialize::serialize(&canonical(v), &mut ser).expect("in-memory serialization");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// Delegates layout to the inner formatter and fixes the float format.
struct SigFigs<F>(F);

impl<F: Formatter> Formatter for SigFigs<F> {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(fmt_f64(value).as_bytes())
    }

    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

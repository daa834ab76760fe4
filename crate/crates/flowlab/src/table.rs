//! Tabular output shared by the subcommands.
//!
//! Every tabular subcommand produces one `Table`, which serializes either as
//! CSV (header row, `.` decimal separator, floats at 17 significant digits so
//! a round trip through text is lossless, LF line endings) or as JSON (an
//! array of one object per row, keyed by the same headers in the same order).
//! Both writers are deterministic byte-for-byte for a given table.

use std::borrow::Cow;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::cli::Format;

// ============================================================================
// Values
// ============================================================================

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Value {
    fn csv(&self) -> Cow<'_, str> {
        match self {
            Value::Int(v) => Cow::Owned(v.to_string()),
            Value::Float(v) => Cow::Owned(format_float(*v)),
            Value::Text(v) => csv_escape(v),
        }
    }

    fn json(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            // f64 Display is the shortest representation that parses back to
            // the same bits, so JSON output is lossless as well.
            Value::Float(v) => format!("{v}"),
            Value::Text(v) => json_string(v),
        }
    }
}

/// 17 significant digits: the shortest count that round-trips every f64.
fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_escape(text: &str) -> Cow<'_, str> {
    if text.contains([',', '"', '\n', '\r']) {
        Cow::Owned(format!("\"{}\"", text.replace('"', "\"\"")))
    } else {
        Cow::Borrowed(text)
    }
}

fn json_string(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

// ============================================================================
// Table
// ============================================================================

#[derive(Debug)]
pub struct Table {
    headers: &'static [&'static str],
    rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(headers: &'static [&'static str]) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(
            row.len(),
            self.headers.len(),
            "row width does not match the header"
        );
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{}", self.headers.join(","))?;
        for row in &self.rows {
            let mut first = true;
            for value in row {
                if !first {
                    w.write_all(b",")?;
                }
                w.write_all(value.csv().as_bytes())?;
                first = false;
            }
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(b"[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                w.write_all(b",")?;
            }
            w.write_all(b"\n  {")?;
            for (k, (header, value)) in self.headers.iter().zip(row).enumerate() {
                if k > 0 {
                    w.write_all(b", ")?;
                }
                write!(w, "{}: {}", json_string(header), value.json())?;
            }
            w.write_all(b"}")?;
        }
        if !self.rows.is_empty() {
            w.write_all(b"\n")?;
        }
        w.write_all(b"]\n")?;
        Ok(())
    }

    /// Write the table to `out` (or standard output) in the requested format.
    pub fn emit(&self, out: Option<&Path>, format: Format) -> anyhow::Result<()> {
        match out {
            Some(path) => {
                let file = File::create(path)?;
                let mut w = BufWriter::new(file);
                self.write(&mut w, format)?;
                w.flush()?;
            }
            None => {
                let stdout = io::stdout();
                let mut w = BufWriter::new(stdout.lock());
                self.write(&mut w, format)?;
                w.flush()?;
            }
        }
        Ok(())
    }

    fn write<W: Write>(&self, w: W, format: Format) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(w),
            Format::Json => self.write_json(w),
        }
    }
}

// ============================================================================
// Tests
// ============================================================================

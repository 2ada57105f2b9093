use std::io::{self, Write};

use anyhow::{bail, Result};
use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::Value;

use crate::args::Format;

/// Shortest `%.17g`-style rendering: 17 significant digits, trailing zeros
/// dropped, always readable back as the same `f64`.
pub fn fmt_f64(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "NaN".into()
        } else if x > 0.0 {
            "Infinity".into()
        } else {
            "-Infinity".into()
        };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0.0" } else { "0.0" }.into();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    if !(-4..17).contains(&exp) {
        let (head, tail) = digits.split_at(1);
        let tail = if tail.is_empty() { "0" } else { tail };
        return format!("{sign}{head}.{tail}e{exp}");
    }
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        return format!("{sign}0.{zeros}{digits}");
    }
    let point = exp as usize + 1;
    if digits.len() <= point {
        let pad = "0".repeat(point - digits.len());
        format!("{sign}{digits}{pad}.0")
    } else {
        format!("{sign}{}.{}", &digits[..point], &digits[point..])
    }
}

/// Compact JSON with every float through [`fmt_f64`].
struct Digits17;

impl Formatter for Digits17 {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fmt_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Digits17);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(out)?)
}

#[derive(Serialize)]
pub struct RunReport<'a> {
    pub command: &'a str,
    pub inputs: &'a Value,
    pub results: &'a Value,
    pub tool_version: &'static str,
    pub elapsed_ms: u64,
}

/// A header row plus data rows.
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

/// Everything one command produces; rendered according to `--format`.
pub struct Outcome {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub table: Option<Table>,
    pub graph6: Option<Vec<String>>,
    pub text: String,
    /// A verdict failed: exit status 1.
    pub violated: bool,
}

impl Outcome {
    pub fn new(command: impl Into<String>, inputs: Value, results: Value, text: String) -> Self {
        Self {
            command: command.into(),
            inputs,
            results,
            table: None,
            graph6: None,
            text,
            violated: false,
        }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn with_graph6(mut self, lines: Vec<String>) -> Self {
        self.graph6 = Some(lines);
        self
    }

    pub fn violated(mut self, violated: bool) -> Self {
        self.violated = violated;
        self
    }

    pub fn render(&self, format: Format, elapsed_ms: u64) -> Result<String> {
        Ok(match format {
            Format::Json => {
                let report = RunReport {
                    command: &self.command,
                    inputs: &self.inputs,
                    results: &self.results,
                    tool_version: env!("CARGO_PKG_VERSION"),
                    elapsed_ms,
                };
                to_json(&report)? + "\n"
            }
            Format::Csv => match &self.table {
                Some(t) => t.to_csv()?,
                None => bail!("`{}` has no CSV output", self.command),
            },
            Format::Graph6 => match &self.graph6 {
                Some(lines) => lines.iter().map(|l| format!("{l}\n")).collect(),
                None => bail!("`{}` does not produce graphs", self.command),
            },
            Format::Text => {
                let mut t = self.text.clone();
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                t
            }
        })
    }
}

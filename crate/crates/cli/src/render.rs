use std::io::{self, Write};

use clap::ValueEnum;
use num_bigint::BigUint;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Counts that fit in a `u64` become JSON numbers, larger ones strings.
pub fn big_json(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::from(v.to_string()),
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Rows of strings under a header, printable in every output format.
pub struct Table {
    header: Vec<String>,
    numeric: Vec<bool>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Table {
            numeric: vec![false; header.len()],
            header,
            rows: Vec::new(),
        }
    }

    /// Marks columns whose cells are emitted as JSON numbers.
    pub fn numeric(mut self, columns: &[&str]) -> Self {
        for (flag, h) in self.numeric.iter_mut().zip(&self.header) {
            *flag = columns.contains(&h.as_str());
        }
        self
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    /// Left-aligned columns separated by two spaces.
    pub fn write(&self, out: &mut impl Write) -> io::Result<()> {
        let mut width: Vec<usize> = self.header.iter().map(String::len).collect();
        for r in &self.rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.len());
            }
        }
        for r in std::iter::once(&self.header).chain(&self.rows) {
            let line: Vec<String> = r.iter().zip(&width).map(|(c, &w)| format!("{c:<w$}")).collect();
            writeln!(out, "{}", line.join("  ").trim_end())?;
        }
        Ok(())
    }

    pub fn emit(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Text => self.write(out),
            Format::Csv => {
                for r in std::iter::once(&self.header).chain(&self.rows) {
                    let line: Vec<String> = r.iter().map(|c| csv_field(c)).collect();
                    writeln!(out, "{}", line.join(","))?;
                }
                Ok(())
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let obj: Map<String, Value> = self
                            .header
                            .iter()
                            .zip(r)
                            .zip(&self.numeric)
                            .map(|((h, c), &num)| (h.clone(), cell_json(c, num)))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                writeln!(out, "{}", Value::Array(rows))
            }
        }
    }
}

fn cell_json(c: &str, numeric: bool) -> Value {
    if c.is_empty() {
        return Value::Null;
    }
    match c.parse::<BigUint>() {
        Ok(v) if numeric => big_json(&v),
        _ => Value::from(c),
    }
}

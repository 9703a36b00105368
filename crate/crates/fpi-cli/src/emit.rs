//! Plot-ready tables and their CSV/JSON renderings.  Formatting is fully
//! deterministic: 12 significant digits in scientific notation, unbounded
//! values as the token `inf`, and column order fixed by the producer.

use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Float(f64),
    Seed(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }
}

fn float_token(v: f64) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    format!("{v:.11e}")
}

fn csv_token(cell: &Cell) -> String {
    match cell {
        Cell::Float(v) => float_token(*v),
        Cell::Seed(s) => s.to_string(),
    }
}

fn json_token(cell: &Cell) -> String {
    match cell {
        Cell::Float(v) if v.is_infinite() => format!("\"{}\"", float_token(*v)),
        Cell::Float(v) => float_token(*v),
        Cell::Seed(s) => s.to_string(),
    }
}

pub fn to_csv(table: &Table) -> String {
    let mut out = table.columns.join(",");
    out.push('\n');
    for row in &table.rows {
        let line: Vec<String> = row.iter().map(csv_token).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(table: &Table) -> String {
    let mut out = String::from("[");
    for (i, row) in table.rows.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        let fields: Vec<String> = table
            .columns
            .iter()
            .zip(row)
            .map(|(name, cell)| format!("  \"{name}\": {}", json_token(cell)))
            .collect();
        out.push_str("  {\n  ");
        out.push_str(&fields.join(",\n  "));
        out.push_str("\n  }");
    }
    out.push_str("\n]\n");
    out
}

/// Writes to the given path, or to stdout when no path is set.
pub fn write_output(text: &str, path: Option<&std::path::Path>) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

/// A command's result in every output format, plus its verdict.
pub struct Rendered {
    pub csv: String,
    pub md: String,
    pub json: Value,
    pub pass: bool,
}

impl Rendered {
    /// A table rendered as CSV and Markdown, with its JSON form alongside.
    pub fn table(header: &[&str], rows: &[Vec<String>], json: Value) -> Self {
        Rendered {
            csv: csv_string(header, rows),
            md: md_table(header, rows),
            json,
            pass: true,
        }
    }

    /// A single value: bare in CSV, a one-row table in Markdown.
    pub fn scalar(header: &[&str], row: Vec<String>, value: String, json: Value) -> Self {
        Rendered {
            csv: format!("{value}\n"),
            md: md_table(header, &[row]),
            json,
            pass: true,
        }
    }

    pub fn with_pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }

    pub fn output(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv.clone(),
            Format::Md => self.md.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json value");
                s.push('\n');
                s
            }
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report serializes")
}

/// Unquoted text of a unit enum's serde name.
pub fn label<T: Serialize>(value: &T) -> String {
    match json(value) {
        Value::String(s) => s,
        other => other.to_string(),
    }
}

pub fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn csv_string(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 cells")
}

pub fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let line = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out.push_str(&line(header.iter().map(|_| "---".to_string()).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(|c| c.replace('|', "\\|")).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_cells() {
        let s = csv_string(&["a", "b"], &[vec!["1".into(), "x,y".into()]]);
        assert_eq!(s, "a,b\n1,\"x,y\"\n");
    }

    #[test]
    fn markdown_layout() {
        let s = md_table(&["a", "b"], &[vec!["1".into(), "p|q".into()]]);
        assert_eq!(s, "| a | b |\n| --- | --- |\n| 1 | p\\|q |\n");
    }
}

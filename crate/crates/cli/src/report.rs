//! Reports and their text and JSON renderings.

use std::fmt::Write;

use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub enum Block {
    Line(String),
    Table { headers: Vec<String>, rows: Vec<Vec<String>> },
}

/// Outcome of one command. `verdict` is `Some` for commands that verify
/// something; `Some(false)` maps to exit code 1.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub verdict: Option<bool>,
    pub blocks: Vec<Block>,
    pub data: Value,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), verdict: None, blocks: Vec::new(), data: json!({}) }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.blocks.push(Block::Line(s.into()));
        self
    }

    pub fn table(&mut self, headers: &[&str], rows: Vec<Vec<String>>) -> &mut Self {
        self.blocks.push(Block::Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows });
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.verdict == Some(false) {
            1
        } else {
            0
        }
    }
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = json!({
                "command": report.command,
                "verdict": report.verdict.map(|v| if v { "pass" } else { "fail" }),
                "data": report.data,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            for b in &report.blocks {
                match b {
                    Block::Line(l) => {
                        out.push_str(l);
                        out.push('\n');
                    }
                    Block::Table { headers, rows } => render_table(&mut out, headers, rows),
                }
            }
            if let Some(v) = report.verdict {
                let _ = writeln!(out, "verdict: {}", if v { "PASS" } else { "FAIL" });
            }
            out
        }
    }
}

fn render_table(out: &mut String, headers: &[String], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(headers));
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    let _ = writeln!(out, "{}", rule.join("  "));
    for r in rows {
        let _ = writeln!(out, "{}", line(r));
    }
}

/// `[[1,0],[0,1]]` as `1,0;0,1`, the same syntax `--L` accepts; `0` for the zero space.
pub fn rows_text(rows: &[Vec<u32>]) -> String {
    if rows.is_empty() {
        return "0".to_string();
    }
    rows.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")).collect::<Vec<_>>().join(";")
}

pub fn dims_text(d: &[usize]) -> String {
    format!("({})", d.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

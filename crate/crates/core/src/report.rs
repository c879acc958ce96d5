//! Rendered reports: a structured document with a text and a JSON form.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::display::{decimal, e_to_human};
use crate::error::{Error, Result};
use crate::exact::{rational_string, Prob, Ratio};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Cell {
    Text {
        value: String,
    },
    /// `exact` is `n/d` (or `inf`); `decimal` is its rounded rendering.
    Number {
        exact: String,
        decimal: String,
    },
}

impl Cell {
    pub fn text(value: impl Into<String>) -> Self {
        Cell::Text { value: value.into() }
    }

    pub fn rational(value: &BigRational, sig: usize) -> Self {
        Cell::Number {
            exact: rational_string(value),
            decimal: decimal(value, sig),
        }
    }

    pub fn prob(value: &Prob, sig: usize) -> Self {
        Cell::rational(value.value(), sig)
    }

    pub fn ratio(value: &Ratio, sig: usize) -> Self {
        match value {
            Ratio::Finite(v) => Cell::rational(v, sig),
            Ratio::Infinite => Cell::Number {
                exact: "inf".into(),
                decimal: "inf".into(),
            },
        }
    }

    pub fn integer(value: impl ToString) -> Self {
        let value = value.to_string();
        Cell::Number {
            exact: format!("{value}/1"),
            decimal: value,
        }
    }

    /// Text form: the human decimal, followed by the exact value when it is
    /// short enough to read.
    pub fn render(&self) -> String {
        match self {
            Cell::Text { value } => value.clone(),
            Cell::Number { exact, decimal } => {
                let human = e_to_human(decimal);
                let exact = exact.strip_suffix("/1").unwrap_or(exact);
                if exact == human || exact == "inf" || exact.len() > MAX_INLINE_EXACT {
                    human
                } else {
                    format!("{human} ({exact})")
                }
            }
        }
    }
}

/// Longest exact value shown inline in text tables.
pub const MAX_INLINE_EXACT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RenderedReport {
    pub title: String,
    pub assumptions: Vec<String>,
    pub tables: Vec<Table>,
    pub caveats: Vec<String>,
    pub statement: Option<String>,
}

impl RenderedReport {
    pub fn new(title: impl Into<String>) -> Self {
        RenderedReport {
            title: title.into(),
            assumptions: Vec::new(),
            tables: Vec::new(),
            caveats: Vec::new(),
            statement: None,
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| Error::schema(e.path().to_string(), e.inner().to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title);
        let _ = writeln!(out, "{}", "=".repeat(self.title.chars().count()));
        if !self.assumptions.is_empty() {
            out.push_str("\nAssumptions\n");
            for a in &self.assumptions {
                let _ = writeln!(out, "  - {a}");
            }
        }
        for table in &self.tables {
            let _ = write!(out, "\n{}\n", table.title);
            render_table(&mut out, table);
        }
        if !self.caveats.is_empty() {
            out.push_str("\nCaveats\n");
            for c in &self.caveats {
                let _ = writeln!(out, "  - {c}");
            }
        }
        if let Some(statement) = &self.statement {
            out.push_str("\nStatement\n");
            for line in statement.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        out
    }

    /// Every number cell, in document order.
    pub fn numbers(&self) -> Vec<(&str, &str)> {
        self.tables
            .iter()
            .flat_map(|t| t.rows.iter().flatten())
            .filter_map(|c| match c {
                Cell::Number { exact, decimal } => Some((exact.as_str(), decimal.as_str())),
                Cell::Text { .. } => None,
            })
            .collect()
    }
}

fn render_table(out: &mut String, table: &Table) {
    let cells: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|r| r.iter().map(Cell::render).collect())
        .collect();
    let mut widths: Vec<usize> = table.columns.iter().map(|c| c.chars().count()).collect();
    for row in &cells {
        for (i, cell) in row.iter().enumerate() {
            if i < widths.len() {
                widths[i] = widths[i].max(cell.chars().count());
            }
        }
    }
    let line = |out: &mut String, row: &[String]| {
        let padded: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        let _ = writeln!(out, "  {}", padded.join(" | ").trim_end());
    };
    line(out, &table.columns);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    let _ = writeln!(out, "  {}", rule.join("-+-"));
    if cells.is_empty() {
        let _ = writeln!(out, "  (no rows)");
    }
    for row in &cells {
        line(out, row);
    }
}

//! The seven reference tables.
//!
//! | id | rows | columns |
//! |----|------|---------|
//! | 1 | `n` | `C_n(q)`, `C_n(-1)` |
//! | 2 | `n` | `P_n(q)`, `P_n(1)`, `P_n(-1)`, `|P_n(j)|`, `|P_n(i)|`, `a_{n,0}` |
//! | 3 | `n` | `B°_n(q)`, `B°_n(1)`, `B°_n(-1)` |
//! | 4 | `n` | `A_n(q)`, `A_n(1)`, `A_n(-1)` |
//! | 5 | `n` | the coefficients `a_{n,i}` and `c_{n,i}` |
//! | 6 | `d = 2, 3, 4, 6` | `|a_d(n)|` for each `n` |
//! | 7 | `k = 2, 3, 4, 6` | `s_k(n)` for each `n` |
//!
//! Here `j` is a primitive cube root of unity and `i` a primitive fourth
//! root. Polynomials are written in descending powers.

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::algebra::laurent::bigint_to_json;
use crate::algebra::LaurentPoly;
use crate::arith::{abs_at_root, section_s, value_a_d};
use crate::census::{coeff_a, coefficient_table, poly_a, poly_bcirc, poly_c, poly_p};
use crate::error::{invalid, Result};

pub const TABLE_IDS: [u32; 7] = [1, 2, 3, 4, 5, 6, 7];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Column {
    /// JSON key.
    pub key: String,
    /// Header in plain and CSV output.
    pub label: String,
}

impl Column {
    pub fn new(key: impl Into<String>, label: impl Into<String>) -> Self {
        Column {
            key: key.into(),
            label: label.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    /// 1 to 7 for the reference tables, 0 for ad hoc listings.
    pub id: u32,
    pub title: String,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Value>>,
}

pub fn default_max_n(id: u32) -> u32 {
    if id >= 6 {
        18
    } else {
        12
    }
}

/// Builds table `id` for `n = 1..=max_n` (default 12, or 18 for tables 6
/// and 7).
pub fn table(id: u32, max_n: Option<u32>) -> Result<Table> {
    let max_n = max_n.unwrap_or_else(|| default_max_n(id));
    if max_n == 0 {
        return Err(invalid("max_n must be at least 1"));
    }
    match id {
        1 => table_c(max_n),
        2 => table_p(max_n),
        3 => table_bcirc(max_n),
        4 => table_a(max_n),
        5 => table_coefficients(max_n),
        6 => table_root_values(max_n),
        7 => table_sections(max_n),
        _ => Err(invalid(format!("tables are numbered 1 to 7, got {id}"))),
    }
}

fn num(v: impl Into<BigInt>) -> Value {
    bigint_to_json(&v.into())
}

fn poly(p: &LaurentPoly) -> Value {
    Value::String(p.display_in("q"))
}

fn value_list<T: ToString>(vals: &[T]) -> Value {
    Value::String(vals.iter().map(T::to_string).collect::<Vec<_>>().join(" "))
}

fn table_c(max_n: u32) -> Result<Table> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let c = poly_c(n)?;
        rows.push(vec![num(n), poly(&c), num(c.eval_i64(-1)?)]);
    }
    Ok(Table {
        id: 1,
        title: "The polynomials C_n(q)".into(),
        columns: vec![Column::new("n", "n"), Column::new("poly", "C_n(q)"), Column::new("at_-1", "C_n(-1)")],
        rows,
    })
}

fn table_p(max_n: u32) -> Result<Table> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let p = poly_p(n)?;
        rows.push(vec![
            num(n),
            poly(&p),
            num(p.eval_i64(1)?),
            num(p.eval_i64(-1)?),
            num(abs_at_root(&p, 3)?),
            num(abs_at_root(&p, 4)?),
            num(coeff_a(n, 0)),
        ]);
    }
    Ok(Table {
        id: 2,
        title: "The polynomials P_n(q)".into(),
        columns: vec![
            Column::new("n", "n"),
            Column::new("poly", "P_n(q)"),
            Column::new("at_1", "P_n(1)"),
            Column::new("at_-1", "P_n(-1)"),
            Column::new("abs_at_j", "|P_n(j)|"),
            Column::new("abs_at_i", "|P_n(i)|"),
            Column::new("a_n0", "a_{n,0}"),
        ],
        rows,
    })
}

fn table_bcirc(max_n: u32) -> Result<Table> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let b = poly_bcirc(n)?;
        rows.push(vec![num(n), poly(&b), num(b.eval_i64(1)?), num(b.eval_i64(-1)?)]);
    }
    Ok(Table {
        id: 3,
        title: "The polynomials B°_n(q)".into(),
        columns: vec![
            Column::new("n", "n"),
            Column::new("poly", "B°_n(q)"),
            Column::new("at_1", "B°_n(1)"),
            Column::new("at_-1", "B°_n(-1)"),
        ],
        rows,
    })
}

fn table_a(max_n: u32) -> Result<Table> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let a = poly_a(n)?;
        rows.push(vec![num(n), poly(&a), num(a.eval_i64(1)?), num(a.eval_i64(-1)?)]);
    }
    Ok(Table {
        id: 4,
        title: "The polynomials A_n(q)".into(),
        columns: vec![
            Column::new("n", "n"),
            Column::new("poly", "A_n(q)"),
            Column::new("at_1", "A_n(1)"),
            Column::new("at_-1", "A_n(-1)"),
        ],
        rows,
    })
}

fn table_coefficients(max_n: u32) -> Result<Table> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let t = coefficient_table(n)?;
        rows.push(vec![num(n), value_list(&t.a), value_list(&t.c)]);
    }
    Ok(Table {
        id: 5,
        title: "The coefficients a_{n,i} (i = 0..n-1) and c_{n,i} (i = 0..n)".into(),
        columns: vec![
            Column::new("n", "n"),
            Column::new("a", "a_{n,0} ... a_{n,n-1}"),
            Column::new("c", "c_{n,0} ... c_{n,n}"),
        ],
        rows,
    })
}

fn by_n_columns(max_n: u32) -> Vec<Column> {
    std::iter::once(Column::new("row", "n"))
        .chain((1..=max_n).map(|n| Column::new(n.to_string(), n.to_string())))
        .collect()
}

fn table_root_values(max_n: u32) -> Result<Table> {
    let mut rows = Vec::new();
    for d in [2u32, 3, 4, 6] {
        let mut row = vec![Value::String(format!("|a_{d}(n)|"))];
        for n in 1..=max_n {
            row.push(num(value_a_d(d, n)?.magnitude().clone()));
        }
        rows.push(row);
    }
    Ok(Table {
        id: 6,
        title: "The absolute values of a_d(n)".into(),
        columns: by_n_columns(max_n),
        rows,
    })
}

fn table_sections(max_n: u32) -> Result<Table> {
    let mut rows = Vec::new();
    for k in [2u32, 3, 4, 6] {
        let mut row = vec![Value::String(format!("s_{k}(n)"))];
        for n in 1..=max_n {
            row.push(num(section_s(k, n)?));
        }
        rows.push(row);
    }
    Ok(Table {
        id: 7,
        title: "Sections of the polynomials P_n(q)".into(),
        columns: by_n_columns(max_n),
        rows,
    })
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Quotes `s` for CSV when it contains a comma, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Table {
    /// Column-aligned text with a title line and ` | ` separators.
    pub fn render_plain(&self) -> String {
        let header: Vec<String> = self.columns.iter().map(|c| c.label.clone()).collect();
        let body: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell_text).collect()).collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|k| {
                std::iter::once(&header)
                    .chain(&body)
                    .map(|row| row[k].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |row: &[String]| {
            row.iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect::<Vec<_>>()
                .join(" | ")
                .trim_end()
                .to_string()
        };
        let mut out = if self.id > 0 {
            format!("Table {}: {}\n", self.id, self.title)
        } else {
            format!("{}\n", self.title)
        };
        out.push_str(&line(&header));
        out.push('\n');
        let rule: usize = widths.iter().sum::<usize>() + 3 * widths.len().saturating_sub(1);
        out.push_str(&"-".repeat(rule));
        out.push('\n');
        for row in &body {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.columns.iter().map(|c| csv_field(&c.label)).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| csv_field(&cell_text(v))).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// `{"table": id, "title": ..., "rows": [{"n": 1, "poly": "...", ...}]}`.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (col, v) in self.columns.iter().zip(row) {
                    obj.insert(col.key.clone(), v.clone());
                }
                Value::Object(obj)
            })
            .collect();
        serde_json::json!({"table": self.id, "title": self.title, "rows": rows})
    }

    /// The cell in column `key` of the row whose first cell renders as `first`.
    pub fn lookup(&self, first: &str, key: &str) -> Option<&Value> {
        let col = self.columns.iter().position(|c| c.key == key)?;
        self.rows.iter().find(|r| cell_text(&r[0]) == first).map(|r| &r[col])
    }
}

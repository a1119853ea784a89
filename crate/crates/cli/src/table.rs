use serde_json::{json, Value};

use crate::args::Format;

/// A rectangular result table; cells are JSON scalars.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    /// Cross-check failures, reported on stderr.
    pub mismatches: Vec<String>,
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = self.columns.join(",");
                out.push('\n');
                for r in &self.rows {
                    out.push_str(&r.iter().map(plain).collect::<Vec<_>>().join(","));
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&json!({
                    "columns": self.columns,
                    "rows": self.rows,
                }))
                .expect("tables serialise");
                s.push('\n');
                s
            }
            Format::Pretty => {
                let cells: Vec<Vec<String>> = std::iter::once(self.columns.clone())
                    .chain(self.rows.iter().map(|r| r.iter().map(plain).collect()))
                    .collect();
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|c| {
                        cells
                            .iter()
                            .map(|r| r[c].chars().count())
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let mut out = String::new();
                for r in &cells {
                    let line: Vec<String> = r
                        .iter()
                        .zip(&widths)
                        .map(|(s, &w)| format!("{s:>w$}"))
                        .collect();
                    out.push_str(line.join("  ").trim_end());
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// An exact count as a JSON number when it fits in `u64`, else as a string.
pub fn count(x: impl ToString) -> Value {
    let s = x.to_string();
    s.parse::<u64>().map_or(Value::String(s), Value::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["N", "f_P"]);
        t.push(vec![json!(3), json!(6)]);
        t.push(vec![json!(10), json!(178)]);
        t
    }

    #[test]
    fn csv_is_lf_separated() {
        assert_eq!(sample().render(Format::Csv), "N,f_P\n3,6\n10,178\n");
    }

    #[test]
    fn pretty_right_aligns() {
        assert_eq!(
            sample().render(Format::Pretty),
            " N  f_P\n 3    6\n10  178\n"
        );
    }

    #[test]
    fn huge_counts_become_strings() {
        assert_eq!(count(12u32), json!(12));
        assert_eq!(
            count("123456789012345678901234567890"),
            json!("123456789012345678901234567890")
        );
    }

    #[test]
    fn json_keeps_column_order() {
        let v: Value = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        assert_eq!(v["columns"], json!(["N", "f_P"]));
        assert_eq!(v["rows"][1], json!([10, 178]));
    }
}

//! Deterministic table and report emission: CSV with six significant digits,
//! '.' decimal separator and '\n' line endings, or a JSON report object.

use couette::report::Check;
use serde_json::{json, Value};
use std::fs;
use std::io::Write;

/// Formats with six significant digits, plain decimal notation in the range
/// where the tables live and scientific notation far outside it.
pub fn sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let exp = v.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        return format!("{:.5e}", v);
    }
    let decimals = (5 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

/// A fully assembled run result, rendered as CSV rows or one JSON object.
pub struct RunOutput {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub inputs: Vec<(String, Value)>,
    pub checks: Vec<Check>,
}

impl RunOutput {
    pub fn new(header: Vec<&'static str>) -> Self {
        RunOutput {
            header,
            rows: Vec::new(),
            inputs: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn input(&mut self, name: &str, value: impl Into<Value>) {
        self.inputs.push((name.to_string(), value.into()));
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    pub fn csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn json(&self) -> String {
        let inputs: serde_json::Map<String, Value> = self.inputs.iter().cloned().collect();
        let outputs: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, Value> = self
                    .header
                    .iter()
                    .zip(row)
                    .map(|(k, v)| ((*k).to_string(), Value::String(v.clone())))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "value": c.value,
                    "bound": c.bound,
                    "pass": c.pass,
                })
            })
            .collect();
        let doc = json!({
            "inputs": inputs,
            "outputs": outputs,
            "checks": checks,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    /// Writes to the path or stdout; returns an I/O error message on failure.
    pub fn emit(&self, format: Format, out: Option<&std::path::Path>) -> Result<(), String> {
        let text = self.render(format);
        match out {
            Some(path) => fs::write(path, text).map_err(|e| format!("writing {path:?}: {e}")),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(text.as_bytes())
                    .map_err(|e| format!("stdout: {e}"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig6_formatting() {
        assert_eq!(sig6(6.246061839), "6.24606");
        assert_eq!(sig6(986.7334809), "986.733");
        assert_eq!(sig6(0.000784516), "0.000784516");
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(-23.93454), "-23.9345");
        assert_eq!(sig6(1.0), "1.00000");
        assert_eq!(sig6(1e20), "1.00000e20");
    }

    #[test]
    fn csv_layout() {
        let mut o = RunOutput::new(vec!["a", "b"]);
        o.row(vec!["1".into(), "2".into()]);
        assert_eq!(o.csv(), "a,b\n1,2\n");
    }
}

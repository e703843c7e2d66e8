use serde::Serialize;
use serde_json::Value;

use zetanorm::verify::Check;
use zetanorm::Real;

use crate::args::Format;

#[derive(Serialize, Debug)]
pub struct Meta {
    pub digits: u32,
    pub seed: u64,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// What a command produced, in every output format.
#[derive(Serialize, Debug)]
pub struct RunReport {
    pub command: &'static str,
    pub params: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    pub meta: Meta,
    #[serde(skip)]
    pub table: Vec<String>,
    #[serde(skip)]
    pub csv: Csv,
}

#[derive(Debug, Default)]
pub struct Csv {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl RunReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| !c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = self.csv.header.join(",");
                s.push('\n');
                for row in &self.csv.rows {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    s.push_str(&cells.join(","));
                    s.push('\n');
                }
                s
            }
            Format::Table => {
                let mut s = String::new();
                for line in &self.table {
                    s.push_str(line);
                    s.push('\n');
                }
                if !self.checks.is_empty() {
                    if !self.table.is_empty() {
                        s.push('\n');
                    }
                    for c in &self.checks {
                        s.push_str(&check_line(c));
                        s.push('\n');
                    }
                    let failed = self.checks.iter().filter(|c| !c.passed).count();
                    s.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
                }
                s
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

pub fn check_line(c: &Check) -> String {
    let status = if c.passed { "PASS" } else { "FAIL" };
    match (c.residual, c.threshold) {
        (Some(r), Some(t)) => format!("{status}  {}  (residual {r:.3e}, bound {t:.1e})", c.name),
        (Some(r), None) => format!("{status}  {}  (value {})", c.name, float(r, 8)),
        _ => format!("{status}  {}", c.name),
    }
}

/// A double as a decimal string with at most `sig` (≤ 17) significant digits.
pub fn float(x: f64, sig: u32) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    match Real::from_f64(x, 64) {
        Ok(r) => r.to_decimal_string(sig.min(17)),
        Err(_) => x.to_string(),
    }
}

/// Significant digits for printing an f64 oracle value.
pub fn oracle_digits(digits: u32) -> u32 {
    digits.min(17)
}

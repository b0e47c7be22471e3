//! Output assembly and rendering: text, CSV, and JSON share the same values.

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};
use wavecount::{RatPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (text, csv, json)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::VerificationFailed => "verification_failed",
        }
    }
}

/// One command's output: structured results plus a flat table whose cells are
/// rendered identically in text and CSV.
pub struct CommandOutput {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub status: Status,
    /// key/value lines shown before the table in text mode
    pub prelude: Vec<(String, String)>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CommandOutput {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let record = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "results": self.results,
                    "status": self.status.as_str(),
                });
                serde_json::to_string_pretty(&record).expect("serializable record")
            }
            Format::Csv => {
                let mut out = String::new();
                out.push_str(&csv_row(&self.header));
                for row in &self.rows {
                    out.push('\n');
                    out.push_str(&csv_row(row));
                }
                out
            }
            Format::Text => {
                let mut out = String::new();
                for (k, v) in &self.prelude {
                    out.push_str(&format!("{k}: {v}\n"));
                }
                if !self.header.is_empty() {
                    let widths: Vec<usize> = self
                        .header
                        .iter()
                        .enumerate()
                        .map(|(i, h)| {
                            self.rows
                                .iter()
                                .map(|r| r.get(i).map_or(0, |c| c.chars().count()))
                                .chain(std::iter::once(h.chars().count()))
                                .max()
                                .unwrap_or(0)
                        })
                        .collect();
                    // numeric-looking columns right-aligned, text columns left
                    let left: Vec<bool> = (0..self.header.len())
                        .map(|i| {
                            self.rows.iter().any(|r| {
                                r.get(i)
                                    .is_some_and(|c| c.chars().any(|ch| ch.is_alphabetic()))
                            })
                        })
                        .collect();
                    let fmt_row = |cells: &[String]| -> String {
                        cells
                            .iter()
                            .enumerate()
                            .map(|(i, c)| {
                                if left[i] {
                                    format!("{:<width$}", c, width = widths[i])
                                } else {
                                    format!("{:>width$}", c, width = widths[i])
                                }
                            })
                            .collect::<Vec<_>>()
                            .join("  ")
                    };
                    out.push_str(fmt_row(&self.header).trim_end());
                    for row in &self.rows {
                        out.push('\n');
                        out.push_str(fmt_row(row).trim_end());
                    }
                    out.push('\n');
                }
                out.push_str(&format!("status: {}", self.status.as_str()));
                out
            }
        }
    }
}

fn csv_row(cells: &[String]) -> String {
    cells
        .iter()
        .map(|c| {
            if c.contains([',', '"', '\n']) {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Canonical wire form of a rational: "n" or "n/d".
pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

/// k-digit decimal approximation, rounded half away from zero.
/// Never authoritative; only produced under --approx.
pub fn approx_str(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled_num = r.numer() * &scale;
    let twice = &scaled_num * BigInt::from(2);
    let denom = r.denom();
    let rounded: BigInt = if scaled_num.is_negative() {
        (twice - denom) / (denom * BigInt::from(2))
    } else {
        (twice + denom) / (denom * BigInt::from(2))
    };
    let negative = rounded.is_negative();
    let digits_str = rounded.abs().to_string();
    let (int_part, frac_part) = if digits == 0 {
        (digits_str.clone(), String::new())
    } else if digits_str.len() <= digits as usize {
        (
            "0".to_string(),
            format!("{:0>width$}", digits_str, width = digits as usize),
        )
    } else {
        let split = digits_str.len() - digits as usize;
        (
            digits_str[..split].to_string(),
            digits_str[split..].to_string(),
        )
    };
    let sign = if negative { "-" } else { "" };
    if frac_part.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// JSON object for a polynomial: variable, ascending coefficients, rendering.
pub fn poly_json(p: &RatPoly, approx: Option<u32>) -> Value {
    let coeffs: Vec<String> = p.coeffs().iter().map(rational_str).collect();
    let mut obj = json!({
        "var": p.var().name(),
        "coeffs": coeffs,
        "text": p.to_string(),
    });
    if let Some(k) = approx {
        obj["approx_non_authoritative"] =
            Value::Array(p.coeffs().iter().map(|c| approx_str(c, k).into()).collect());
    }
    obj
}

#[cfg(test)]
mod tests {
    use super::*;
    use wavecount::rat;

    #[test]
    fn approx_rounds_half_away_from_zero() {
        assert_eq!(approx_str(&rat(1, 3), 4), "0.3333");
        assert_eq!(approx_str(&rat(-1, 3), 4), "-0.3333");
        assert_eq!(approx_str(&rat(1, 2), 0), "1");
        assert_eq!(approx_str(&rat(83, 144), 6), "0.576389");
        assert_eq!(approx_str(&rat(-13, 144), 3), "-0.090");
        assert_eq!(approx_str(&rat(7, 1), 2), "7.00");
    }

    #[test]
    fn csv_escapes_embedded_commas() {
        assert_eq!(csv_row(&["a,b".to_string(), "c".to_string()]), "\"a,b\",c");
    }
}

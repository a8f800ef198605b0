//! Output records and their plain, JSON and CSV renderings.
//!
//! Exact values never pass through floating point: every value is a
//! `"p/q"` (or `"p"`) string.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use bernstir::{MethodId, Rational};
use clap::ValueEnum;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

/// A computed value, or the marker for an index the method cannot evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Value(Rational),
    Unsupported,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Value(v) => write!(f, "{v}"),
            Cell::Unsupported => f.write_str("unsupported"),
        }
    }
}

impl FromStr for Cell {
    type Err = bernstir::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "unsupported" {
            Ok(Cell::Unsupported)
        } else {
            s.parse().map(Cell::Value)
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BernoulliRecord {
    pub n: usize,
    pub method: MethodId,
    pub value: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StirlingRecord {
    pub n: usize,
    pub k: usize,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: usize,
    pub method: MethodId,
    pub value: Rational,
    pub micros: u64,
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

pub fn bernoulli(records: &[BernoulliRecord], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain if records.len() == 1 => {
            let _ = writeln!(out, "{}", records[0].value);
        }
        OutputFormat::Plain => {
            for r in records {
                let _ = writeln!(out, "{:<16} {}", r.method.name(), r.value);
            }
        }
        OutputFormat::Json if records.len() == 1 => out = json(&records[0]),
        OutputFormat::Json => out = json(records),
        OutputFormat::Csv => {
            out.push_str("n,method,value\n");
            for r in records {
                let _ = writeln!(out, "{},{},{}", r.n, r.method.name(), r.value);
            }
        }
    }
    out
}

pub fn stirling(records: &[StirlingRecord], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            let mut current = None;
            for r in records {
                if current != Some(r.n) {
                    if current.is_some() {
                        out.push('\n');
                    }
                    let _ = write!(out, "{:>3}:", r.n);
                    current = Some(r.n);
                }
                let _ = write!(out, " {}", r.value);
            }
            if current.is_some() {
                out.push('\n');
            }
        }
        OutputFormat::Json => out = json(records),
        OutputFormat::Csv => {
            out.push_str("n,k,value\n");
            for r in records {
                let _ = writeln!(out, "{},{},{}", r.n, r.k, r.value);
            }
        }
    }
    out
}

pub fn bell(value: &bernstir::BellValue, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => format!("{}\n", value.value),
        OutputFormat::Json => json(value),
        OutputFormat::Csv => format!("n,k,value\n{},{},{}\n", value.n, value.k, value.value),
    }
}

pub fn verification(report: &bernstir::VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => report.to_table(),
        OutputFormat::Json => json(report),
        OutputFormat::Csv => {
            let mut out = String::from("n,method,value,agrees,status\n");
            for e in &report.entries {
                let status = if e.agrees_with_oracle {
                    "ok"
                } else if report.known.contains(&e.method) {
                    "known"
                } else {
                    "mismatch"
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    e.n,
                    e.method.name(),
                    e.value,
                    e.agrees_with_oracle,
                    status
                );
            }
            out
        }
    }
}

pub fn identities(report: &bernstir::IdentityReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => report.to_table(),
        OutputFormat::Json => json(report),
        OutputFormat::Csv => {
            let mut out = String::from("identity,checked,passed\n");
            for t in &report.tallies {
                let _ = writeln!(out, "{},{},{}", t.identity.name(), t.checked, t.passed);
            }
            out
        }
    }
}

pub fn bench(records: &[BenchRecord], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            let _ = writeln!(out, "{:>4}  {:<16} {:>10}  value", "n", "method", "micros");
            for r in records {
                let _ = writeln!(
                    out,
                    "{:>4}  {:<16} {:>10}  {}",
                    r.n,
                    r.method.name(),
                    r.micros,
                    r.value
                );
            }
        }
        OutputFormat::Json => out = json(records),
        OutputFormat::Csv => {
            out.push_str("n,method,value,micros\n");
            for r in records {
                let _ = writeln!(out, "{},{},{},{}", r.n, r.method.name(), r.value, r.micros);
            }
        }
    }
    out
}

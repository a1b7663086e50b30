//! Output records and their two renderings.
//!
//! Every subcommand produces a list of flat records (ordered key/value pairs
//! split into inputs and result). The JSON and CSV writers both consume that
//! one representation, so the two formats carry identical values
//! field-for-field by construction: JSON emits one object per line, CSV emits
//! a header row plus one row per record with RFC 4180 quoting.

use antipower::Ratio;
use std::io::{self, Write};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq)]
pub enum Val {
    U64(u64),
    Bool(bool),
    Str(String),
    Null,
}

impl Val {
    pub fn opt_u64(v: Option<u64>) -> Val {
        v.map(Val::U64).unwrap_or(Val::Null)
    }

    fn to_json(&self) -> String {
        match self {
            Val::U64(n) => n.to_string(),
            Val::Bool(b) => b.to_string(),
            Val::Str(s) => serde_json::to_string(s).expect("string serialization"),
            Val::Null => "null".to_string(),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Val::U64(n) => n.to_string(),
            Val::Bool(b) => b.to_string(),
            Val::Str(s) => csv_quote(s),
            Val::Null => String::new(),
        }
    }

    /// Canonical comparison form shared by both formats.
    #[cfg(test)]
    pub fn as_text(&self) -> String {
        match self {
            Val::U64(n) => n.to_string(),
            Val::Bool(b) => b.to_string(),
            Val::Str(s) => s.clone(),
            Val::Null => String::new(),
        }
    }
}

/// Push a ratio as the conventional field pair: exact fraction plus a
/// 6-decimal-place approximation.
pub fn push_ratio(
    fields: &mut Vec<(&'static str, Val)>,
    name: &'static str,
    dec_name: &'static str,
    r: Option<Ratio>,
) {
    match r {
        Some(r) => {
            fields.push((name, Val::Str(r.to_fraction_string())));
            fields.push((dec_name, Val::Str(r.to_decimal_string(6))));
        }
        None => {
            fields.push((name, Val::Null));
            fields.push((dec_name, Val::Null));
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub inputs: Vec<(&'static str, Val)>,
    pub result: Vec<(&'static str, Val)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "json" => Some(Format::Json),
            "csv" => Some(Format::Csv),
            _ => None,
        }
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\r', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn write_records(
    out: &mut dyn Write,
    format: Format,
    command: &str,
    records: &[Record],
    elapsed_ms: u64,
) -> io::Result<()> {
    match format {
        Format::Json => {
            for rec in records {
                let inputs: Vec<String> = rec
                    .inputs
                    .iter()
                    .map(|(k, v)| format!("{}:{}", serde_json::to_string(k).unwrap(), v.to_json()))
                    .collect();
                let result: Vec<String> = rec
                    .result
                    .iter()
                    .map(|(k, v)| format!("{}:{}", serde_json::to_string(k).unwrap(), v.to_json()))
                    .collect();
                writeln!(
                    out,
                    "{{\"schema_version\":\"{}\",\"command\":{},\"inputs\":{{{}}},\"result\":{{{}}},\"elapsed_ms\":{}}}",
                    SCHEMA_VERSION,
                    serde_json::to_string(command).unwrap(),
                    inputs.join(","),
                    result.join(","),
                    elapsed_ms,
                )?;
            }
        }
        Format::Csv => {
            let Some(first) = records.first() else {
                return Ok(());
            };
            let mut header = vec!["schema_version".to_string(), "command".to_string()];
            header.extend(first.inputs.iter().map(|(k, _)| k.to_string()));
            header.extend(first.result.iter().map(|(k, _)| k.to_string()));
            header.push("elapsed_ms".to_string());
            writeln!(out, "{}", header.join(","))?;
            for rec in records {
                let mut row = vec![SCHEMA_VERSION.to_string(), csv_quote(command)];
                row.extend(rec.inputs.iter().map(|(_, v)| v.to_csv()));
                row.extend(rec.result.iter().map(|(_, v)| v.to_csv()));
                row.push(elapsed_ms.to_string());
                writeln!(out, "{}", row.join(","))?;
            }
        }
    }
    Ok(())
}

//! Text, JSON, CSV and b-file renderings. Text prints polynomials with the
//! highest power first; every other format lists coefficients ascending.

use std::fmt::Write;

use clap::ValueEnum;
use greg_core::fps::fmt_rat;
use greg_core::numeric::WEval;
use greg_core::trees::GregTree;
use greg_core::verify::SuiteResult;
use greg_core::{Error, Poly, PolyTriangle, RatSeries};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Bfile => "bfile",
        }
    }
}

fn unsupported(format: Format, what: &'static str) -> Error {
    Error::Unknown {
        kind: what,
        name: format.name().to_string(),
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// `index value` lines with a 1-based running index.
fn bfile<'a>(values: impl Iterator<Item = &'a num_bigint::BigInt>) -> String {
    let mut out = String::new();
    for (i, v) in values.enumerate() {
        writeln!(out, "{} {v}", i + 1).expect("string write");
    }
    out
}

pub fn polys(rows: &[Poly], format: Format) -> Result<String, Error> {
    let mut out = String::new();
    match format {
        Format::Text => rows
            .iter()
            .for_each(|p| writeln!(out, "{p}").expect("string write")),
        Format::Json => out = json(rows),
        Format::Bfile => out = bfile(rows.iter().flat_map(|p| p.coeffs())),
        Format::Csv => {
            out.push_str("n,power,coefficient\n");
            for (i, p) in rows.iter().enumerate() {
                for (k, c) in p.coeffs().iter().enumerate() {
                    writeln!(out, "{},{k},{c}", i + 1).expect("string write");
                }
            }
        }
    }
    Ok(out)
}

pub fn poly(p: &Poly, format: Format) -> Result<String, Error> {
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Json => json(p),
        Format::Bfile => bfile(p.coeffs().iter()),
        Format::Csv => {
            let mut out = String::from("power,coefficient\n");
            for (k, c) in p.coeffs().iter().enumerate() {
                writeln!(out, "{k},{c}").expect("string write");
            }
            out
        }
    })
}

/// Text mode prints one row per line, entries `Q_{n,0} .. Q_{n,n-1}`
/// separated by ` ; `.
pub fn triangle(q: &PolyTriangle, format: Format) -> Result<String, Error> {
    let mut out = String::new();
    match format {
        Format::Text => {
            for row in &q.rows {
                let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
                writeln!(out, "{}", cells.join(" ; ")).expect("string write");
            }
        }
        Format::Json => out = json(&q.rows),
        Format::Bfile => out = bfile(q.rows.iter().flatten().flat_map(|p| p.coeffs())),
        Format::Csv => {
            out.push_str("n,k,power,coefficient\n");
            for (i, row) in q.rows.iter().enumerate() {
                for (k, p) in row.iter().enumerate() {
                    for (j, c) in p.coeffs().iter().enumerate() {
                        writeln!(out, "{},{k},{j},{c}", i + 1).expect("string write");
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Text mode separates trees by a blank line.
pub fn trees(trees: &[GregTree], format: Format) -> Result<String, Error> {
    match format {
        Format::Text => Ok(trees
            .iter()
            .map(|t| t.to_text())
            .collect::<Vec<_>>()
            .join("\n")),
        Format::Json => Ok(json(trees)),
        Format::Csv => {
            let mut out = String::from("tree,n,u,roots,a,b\n");
            for (i, t) in trees.iter().enumerate() {
                let roots: Vec<String> = t.roots.iter().map(|r| r.to_string()).collect();
                for (a, b) in &t.edges {
                    writeln!(out, "{},{},{},{},{a},{b}", i + 1, t.n, t.u, roots.join(" "))
                        .expect("string write");
                }
                if t.edges.is_empty() {
                    writeln!(out, "{},{},{},{},,", i + 1, t.n, t.u, roots.join(" "))
                        .expect("string write");
                }
            }
            Ok(out)
        }
        Format::Bfile => Err(unsupported(format, "format for tree listings")),
    }
}

pub fn series(s: &RatSeries, format: Format) -> Result<String, Error> {
    let mut out = String::new();
    match format {
        Format::Text => s
            .coeffs()
            .iter()
            .enumerate()
            .for_each(|(k, c)| writeln!(out, "{k} {}", fmt_rat(c)).expect("string write")),
        Format::Json => out = json(s),
        Format::Csv => {
            out.push_str("power,coefficient\n");
            for (k, c) in s.coeffs().iter().enumerate() {
                writeln!(out, "{k},{}", fmt_rat(c)).expect("string write");
            }
        }
        Format::Bfile => return Err(unsupported(format, "format for series")),
    }
    Ok(out)
}

pub fn suite(r: &SuiteResult, format: Format) -> Result<String, Error> {
    match format {
        Format::Text => Ok(r.to_text()),
        Format::Json => {
            let mut s = r.to_json();
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut out = String::from("check,status,witness\n");
            for c in &r.reports {
                let status = if c.skipped {
                    "skip"
                } else if c.passed {
                    "pass"
                } else {
                    "fail"
                };
                let witness = c.witness.as_deref().unwrap_or("").replace('"', "\"\"");
                writeln!(out, "{},{status},\"{witness}\"", c.name).expect("string write");
            }
            Ok(out)
        }
        Format::Bfile => Err(unsupported(format, "format for check results")),
    }
}

#[derive(Serialize)]
struct WOutput<'a> {
    #[serde(flatten)]
    eval: &'a WEval,
    derivatives: &'a [f64],
}

pub fn wfun(e: &WEval, derivatives: &[f64], format: Format) -> Result<String, Error> {
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "W = {}", e.w).expect("string write");
            writeln!(out, "residual = {:e}", e.residual).expect("string write");
            writeln!(out, "iterations = {}", e.iterations).expect("string write");
            for (i, d) in derivatives.iter().enumerate() {
                writeln!(out, "W^({}) = {d:e}", i + 1).expect("string write");
            }
            Ok(out)
        }
        Format::Json => Ok(json(&WOutput {
            eval: e,
            derivatives,
        })),
        Format::Csv => {
            let mut out = String::from("quantity,re,im\n");
            writeln!(out, "W,{:e},{:e}", e.w.re, e.w.im).expect("string write");
            for (i, d) in derivatives.iter().enumerate() {
                writeln!(out, "W^({}),{d:e},0", i + 1).expect("string write");
            }
            Ok(out)
        }
        Format::Bfile => Err(unsupported(format, "format for wfun")),
    }
}

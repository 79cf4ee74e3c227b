use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{AccuracySweepResult, TableResult};

/// Output layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    /// Comma separated, LF line endings, empty field for missing values.
    #[default]
    Csv,
    Markdown,
    /// Right-aligned plain text columns.
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            "text" | "aligned-text" | "txt" => Ok(Format::Text),
            other => Err(Error::domain(format!("unknown output format '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    /// Decimal places after scaling.
    pub precision: usize,
    /// Scale probabilities by 100.
    pub percent: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            precision: 1,
            percent: true,
        }
    }
}

impl RenderOptions {
    /// Formats a probability with round-half-away-from-zero.
    pub fn format(&self, x: f64) -> String {
        let x = if self.percent { x * 100.0 } else { x };
        format_fixed(x, self.precision)
    }
}

/// Fixed-point formatting with round-half-away-from-zero; never prints `-0`.
pub(crate) fn format_fixed(x: f64, precision: usize) -> String {
    let scale = 10f64.powi(precision as i32);
    let mut v = (x * scale).round() / scale;
    if v == 0.0 {
        v = 0.0;
    }
    format!("{v:.precision$}")
}

const NOT_APPLICABLE: &str = "–";

/// Text renderings of computed results.
pub trait Render {
    fn render(&self, format: Format, options: &RenderOptions) -> String;
}

impl Render for TableResult {
    fn render(&self, format: Format, options: &RenderOptions) -> String {
        let n_values = self.spec.n_values();
        let f_values = self.spec.f_values();
        let cell = |i: usize, j: usize| self.cells[i][j].map(|p| options.format(p.value()));

        match format {
            Format::Csv => {
                let mut out = String::new();
                let header: Vec<String> = std::iter::once("f".to_string())
                    .chain(n_values.iter().map(u64::to_string))
                    .collect();
                out.push_str(&header.join(","));
                out.push('\n');
                for (i, f) in f_values.iter().enumerate() {
                    let row: Vec<String> = std::iter::once(f.to_string())
                        .chain((0..n_values.len()).map(|j| cell(i, j).unwrap_or_default()))
                        .collect();
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Markdown | Format::Text => {
                let mut blocks = Vec::new();
                let mut start = 0;
                for &width in self.spec.panels() {
                    let cols = start..start + width;
                    start += width;
                    let header: Vec<String> = std::iter::once("f \\ n".to_string())
                        .chain(n_values[cols.clone()].iter().map(u64::to_string))
                        .collect();
                    let rows: Vec<Vec<String>> =
                        f_values
                            .iter()
                            .enumerate()
                            .map(|(i, f)| {
                                std::iter::once(f.to_string())
                                    .chain(cols.clone().map(|j| {
                                        cell(i, j).unwrap_or_else(|| NOT_APPLICABLE.into())
                                    }))
                                    .collect()
                            })
                            .collect();
                    blocks.push(match format {
                        Format::Markdown => markdown(&header, &rows),
                        _ => aligned(&header, &rows),
                    });
                }
                let unit = if options.percent { " (%)" } else { "" };
                format!("{}{unit}\n\n{}", self.caption(), blocks.join("\n"))
            }
        }
    }
}

const SWEEP_COLUMNS: [&str; 6] = [
    "f",
    "r_exact",
    "r_wilson",
    "r_wilson_cc",
    "err_wilson",
    "err_wilson_cc",
];

impl AccuracySweepResult {
    fn sweep_rows(&self, options: &RenderOptions, missing: &str) -> Vec<Vec<String>> {
        let fmt = |v: Option<f64>| {
            v.map(|x| options.format(x))
                .unwrap_or_else(|| missing.into())
        };
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.f.to_string(),
                    fmt(r.r_exact),
                    fmt(r.r_wilson),
                    fmt(r.r_wilson_cc),
                    fmt(r.err_wilson()),
                    fmt(r.err_wilson_cc()),
                ]
            })
            .collect()
    }

    /// Extra columns: the point estimate, the derived confidence and the
    /// exact-inversion error.
    pub fn render_detailed(&self, format: Format, options: &RenderOptions) -> String {
        let missing = if format == Format::Csv {
            ""
        } else {
            NOT_APPLICABLE
        };
        let fmt = |v: Option<f64>| {
            v.map(|x| options.format(x))
                .unwrap_or_else(|| missing.into())
        };
        let header: Vec<String> = SWEEP_COLUMNS
            .iter()
            .chain(["r_point", "confidence", "err_exact"].iter())
            .map(|s| s.to_string())
            .collect();
        let rows: Vec<Vec<String>> = self
            .sweep_rows(options, missing)
            .into_iter()
            .zip(&self.rows)
            .map(|(mut cells, r)| {
                cells.push(fmt(Some(r.r_point)));
                cells.push(fmt(Some(r.confidence)));
                cells.push(fmt(r.err_exact()));
                cells
            })
            .collect();
        emit(format, &header, &rows)
    }
}

impl Render for AccuracySweepResult {
    fn render(&self, format: Format, options: &RenderOptions) -> String {
        let missing = if format == Format::Csv {
            ""
        } else {
            NOT_APPLICABLE
        };
        let header: Vec<String> = SWEEP_COLUMNS.iter().map(|s| s.to_string()).collect();
        emit(format, &header, &self.sweep_rows(options, missing))
    }
}

fn emit(format: Format, header: &[String], rows: &[Vec<String>]) -> String {
    match format {
        Format::Csv => {
            let mut out = header.join(",");
            out.push('\n');
            for r in rows {
                out.push_str(&r.join(","));
                out.push('\n');
            }
            out
        }
        Format::Markdown => markdown(header, rows),
        Format::Text => aligned(header, rows),
    }
}

fn markdown(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let rule: Vec<&str> = header.iter().map(|_| "---:").collect();
    let _ = writeln!(out, "|{}|", rule.join("|"));
    for r in rows {
        let _ = writeln!(out, "| {} |", r.join(" | "));
    }
    out
}

fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|j| {
            rows.iter()
                .map(|r| r[j].chars().count())
                .chain(std::iter::once(header[j].chars().count()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{}{c}", " ".repeat(w - c.chars().count())))
            .collect();
        let (first, rest) = padded.split_first().expect("non-empty row");
        format!("{first} | {}\n", rest.join("  "))
    };
    let mut out = line(header);
    let total = out.chars().count() - 1;
    out.push_str(&"-".repeat(total));
    out.push('\n');
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

/// A grid read back from CSV output.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedCsv {
    pub n_values: Vec<u64>,
    pub f_values: Vec<u64>,
    pub cells: Vec<Vec<Option<f64>>>,
}

/// Parses the CSV layout written by [`Render`] for a [`TableResult`].
pub fn parse_csv(text: &str) -> Result<ParsedCsv> {
    let bad = |msg: &str| Error::domain(format!("malformed table CSV: {msg}"));
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty input"))?;
    let mut fields = header.split(',');
    if fields.next() != Some("f") {
        return Err(bad("header must start with 'f'"));
    }
    let n_values = fields
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| bad("non-integer sample count"))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut f_values = Vec::new();
    let mut cells = Vec::new();
    for line in lines.filter(|l| !l.is_empty()) {
        let mut fields = line.split(',');
        let f = fields
            .next()
            .and_then(|s| s.parse::<u64>().ok())
            .ok_or_else(|| bad("non-integer failure count"))?;
        let row = fields
            .map(|s| {
                if s.is_empty() {
                    Ok(None)
                } else {
                    s.parse::<f64>()
                        .map(Some)
                        .map_err(|_| bad("non-numeric cell"))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n_values.len() {
            return Err(bad("ragged row"));
        }
        f_values.push(f);
        cells.push(row);
    }
    Ok(ParsedCsv {
        n_values,
        f_values,
        cells,
    })
}

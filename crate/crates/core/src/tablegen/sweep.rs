use crate::error::{Error, Result};
use crate::metrics::{self, ReliabilityOptions};
use crate::types::{Probability, TrialOutcome};

/// How the sweep derives the confidence it feeds to the inverters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConfidenceSource {
    /// Binomial confidence with the actual failure count at the point
    /// estimate.
    #[default]
    Binomial,
    /// `1 - r^n`, the zero-failure formula, regardless of the failure count.
    ZeroFailure,
}

/// One failure count of an accuracy sweep.
///
/// Reliability columns are `None` where the derived confidence is not
/// strictly inside `(0, 1)` and nothing can be inverted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub f: u64,
    /// point estimate `(n - f) / n`
    pub r_point: f64,
    pub confidence: f64,
    pub r_exact: Option<f64>,
    pub r_wilson: Option<f64>,
    pub r_wilson_cc: Option<f64>,
}

impl SweepRow {
    pub fn err_wilson(&self) -> Option<f64> {
        Some(self.r_wilson? - self.r_exact?)
    }

    pub fn err_wilson_cc(&self) -> Option<f64> {
        Some(self.r_wilson_cc? - self.r_exact?)
    }

    /// Exact inversion against the reliability the confidence came from.
    pub fn err_exact(&self) -> Option<f64> {
        Some(self.r_exact? - self.r_point)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AccuracySweepResult {
    pub n: u64,
    pub source: ConfidenceSource,
    pub rows: Vec<SweepRow>,
}

impl AccuracySweepResult {
    fn max_abs(&self, col: impl Fn(&SweepRow) -> Option<f64>) -> Option<f64> {
        self.rows
            .iter()
            .filter_map(col)
            .map(f64::abs)
            .reduce(f64::max)
    }

    pub fn max_abs_err_wilson(&self) -> Option<f64> {
        self.max_abs(SweepRow::err_wilson)
    }

    pub fn max_abs_err_wilson_cc(&self) -> Option<f64> {
        self.max_abs(SweepRow::err_wilson_cc)
    }

    pub fn max_abs_err_exact(&self) -> Option<f64> {
        self.max_abs(SweepRow::err_exact)
    }
}

/// For each `f` in `1..n`: take `r = (n - f) / n`, derive a confidence from
/// it, and invert that confidence back to a reliability with the exact
/// method and both Wilson variants.
pub fn wilson_accuracy_sweep(
    n: u64,
    source: ConfidenceSource,
    options: ReliabilityOptions,
) -> Result<AccuracySweepResult> {
    if n < 3 {
        return Err(Error::domain(format!(
            "accuracy sweep needs at least 3 samples, got {n}"
        )));
    }
    let rows = (1..n)
        .map(|f| sweep_row(n, f, source, options))
        .collect::<Result<_>>()?;
    Ok(AccuracySweepResult { n, source, rows })
}

fn sweep_row(
    n: u64,
    f: u64,
    source: ConfidenceSource,
    options: ReliabilityOptions,
) -> Result<SweepRow> {
    let outcome = TrialOutcome::new(n, f)?;
    let r_point = outcome.point_estimate();
    let confidence = match source {
        ConfidenceSource::Binomial => {
            metrics::confidence(outcome, Probability::new(r_point)?).value()
        }
        ConfidenceSource::ZeroFailure => 1.0 - r_point.powf(n as f64),
    };
    let mut row = SweepRow {
        f,
        r_point,
        confidence,
        r_exact: None,
        r_wilson: None,
        r_wilson_cc: None,
    };
    if let Ok(c) = Probability::open(confidence) {
        row.r_exact = Some(metrics::reliability_exact(outcome, c, options.x_tol)?.value());
        row.r_wilson = Some(metrics::reliability_wilson(outcome, c, false, options.z)?.value());
        row.r_wilson_cc = Some(metrics::reliability_wilson(outcome, c, true, options.z)?.value());
    }
    Ok(row)
}

//! Rectangular sweeps of a metric over sample and failure counts, the
//! Wilson accuracy sweep, and their text renderings.

mod render;
mod sweep;

pub use render::{parse_csv, Format, ParsedCsv, Render, RenderOptions};
pub use sweep::{wilson_accuracy_sweep, AccuracySweepResult, ConfidenceSource, SweepRow};

use crate::error::{Error, Result};
use crate::metrics;
use crate::types::{Probability, TrialOutcome};

/// Absolute root tolerance used by the published tables (0.1 %).
pub const PUBLISHED_X_TOL: f64 = 1e-3;

/// Which metric fills a grid, together with the fixed input it needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Quantity {
    /// Exact reliability at a fixed confidence.
    Reliability { confidence: Probability },
    /// Confidence at a fixed reliability.
    Confidence { reliability: Probability },
    /// Assurance; needs no fixed input.
    Assurance,
}

impl Quantity {
    pub fn fixed_target(&self) -> Option<Probability> {
        match *self {
            Quantity::Reliability { confidence } => Some(confidence),
            Quantity::Confidence { reliability } => Some(reliability),
            Quantity::Assurance => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Quantity::Reliability { .. } => "reliability",
            Quantity::Confidence { .. } => "confidence",
            Quantity::Assurance => "assurance",
        }
    }
}

/// A grid of sample counts (columns) by failure counts (rows).
///
/// `panels` splits the columns into consecutive groups for the text layouts;
/// CSV output always emits one wide table.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    n_values: Vec<u64>,
    f_values: Vec<u64>,
    quantity: Quantity,
    panels: Vec<usize>,
}

impl GridSpec {
    pub fn new(n_values: Vec<u64>, f_values: Vec<u64>, quantity: Quantity) -> Result<Self> {
        check_axis("sample counts", &n_values)?;
        check_axis("failure counts", &f_values)?;
        if n_values[0] == 0 {
            return Err(Error::domain("sample counts must be positive"));
        }
        if let Some(target) = quantity.fixed_target() {
            if !target.is_interior() {
                return Err(Error::domain(format!(
                    "fixed {} target must lie strictly inside (0, 1), got {target}",
                    match quantity {
                        Quantity::Reliability { .. } => "confidence",
                        _ => "reliability",
                    }
                )));
            }
        }
        let panels = vec![n_values.len()];
        Ok(GridSpec {
            n_values,
            f_values,
            quantity,
            panels,
        })
    }

    /// Splits the columns into panels of the given widths.
    pub fn with_panels(mut self, panels: Vec<usize>) -> Result<Self> {
        if panels.contains(&0) || panels.iter().sum::<usize>() != self.n_values.len() {
            return Err(Error::domain(format!(
                "panel widths {panels:?} do not partition {} columns",
                self.n_values.len()
            )));
        }
        self.panels = panels;
        Ok(self)
    }

    pub fn n_values(&self) -> &[u64] {
        &self.n_values
    }

    pub fn f_values(&self) -> &[u64] {
        &self.f_values
    }

    pub fn quantity(&self) -> Quantity {
        self.quantity
    }

    pub fn panels(&self) -> &[usize] {
        &self.panels
    }
}

fn check_axis(what: &str, values: &[u64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::domain(format!("{what} must not be empty")));
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain(format!("{what} must be strictly increasing")));
    }
    Ok(())
}

/// The published tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Reliability at 95 % confidence, n = 10..100 step 10, f = 0..5.
    Table1,
    /// Confidence at 90 % reliability on the same grid.
    Table2,
    /// Assurance over four panels of sample counts, f = 0..5.
    Table3,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Table1, Preset::Table2, Preset::Table3];

    pub fn grid(self) -> GridSpec {
        let decades: Vec<u64> = (1..=10).map(|i| 10 * i).collect();
        let failures: Vec<u64> = (0..=5).collect();
        let spec = match self {
            Preset::Table1 => GridSpec::new(
                decades,
                failures,
                Quantity::Reliability {
                    confidence: Probability::new(0.95).unwrap(),
                },
            ),
            Preset::Table2 => GridSpec::new(
                decades,
                failures,
                Quantity::Confidence {
                    reliability: Probability::new(0.90).unwrap(),
                },
            ),
            Preset::Table3 => {
                let n: Vec<u64> = (1..=30)
                    .chain((31..=59).step_by(2))
                    .chain((60..=480).step_by(30))
                    .collect();
                GridSpec::new(n, failures, Quantity::Assurance)
                    .and_then(|g| g.with_panels(vec![15; 4]))
            }
        };
        spec.expect("preset grids are valid")
    }

    /// Root tolerance the published values were produced with.
    pub fn solver_tolerance(self) -> f64 {
        PUBLISHED_X_TOL
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Table1 => "table1",
            Preset::Table2 => "table2",
            Preset::Table3 => "table3",
        }
    }
}

/// A filled grid. `cells[i][j]` belongs to `f_values[i]` and `n_values[j]`;
/// `None` marks a combination where the metric is not defined.
#[derive(Debug, Clone, PartialEq)]
pub struct TableResult {
    pub spec: GridSpec,
    pub cells: Vec<Vec<Option<Probability>>>,
}

impl TableResult {
    pub fn cell(&self, f: u64, n: u64) -> Option<Probability> {
        let i = self.spec.f_values.iter().position(|&x| x == f)?;
        let j = self.spec.n_values.iter().position(|&x| x == n)?;
        self.cells[i][j]
    }

    pub fn caption(&self) -> String {
        match self.spec.quantity {
            Quantity::Reliability { confidence } => format!(
                "Reliability percentages for different number of failures at {}% confidence",
                trim_percent(confidence)
            ),
            Quantity::Confidence { reliability } => format!(
                "Confidence percentages for different number of failures at {}% reliability",
                trim_percent(reliability)
            ),
            Quantity::Assurance => "Assurance percentages for different number of failures".into(),
        }
    }
}

fn trim_percent(p: Probability) -> String {
    let s = format!("{:.6}", p.value() * 100.0);
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Fills every cell of `spec` with the matching metric, inverting with
/// Brent's method at absolute tolerance `x_tol` where needed.
pub fn build_table(spec: &GridSpec, x_tol: f64) -> TableResult {
    let cells = spec
        .f_values
        .iter()
        .map(|&f| {
            spec.n_values
                .iter()
                .map(|&n| cell_value(spec.quantity, n, f, x_tol))
                .collect()
        })
        .collect();
    TableResult {
        spec: spec.clone(),
        cells,
    }
}

fn cell_value(quantity: Quantity, n: u64, f: u64, x_tol: f64) -> Option<Probability> {
    let Ok(outcome) = TrialOutcome::new(n, f) else {
        // more failures than samples
        return match quantity {
            Quantity::Assurance => Some(Probability::ZERO),
            _ => None,
        };
    };
    match quantity {
        Quantity::Reliability { confidence } => {
            metrics::reliability_exact(outcome, confidence, x_tol).ok()
        }
        Quantity::Confidence { reliability } => Some(metrics::confidence(outcome, reliability)),
        Quantity::Assurance => metrics::assurance(outcome, x_tol).ok(),
    }
}

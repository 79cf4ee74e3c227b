//! Browser bindings. Build with
//! `wasm-pack build crates/wasm --target web --out-dir www/pkg`
//! and serve `crates/wasm/www`.

use binrel::rootfind::DEFAULT_X_TOL;
use binrel::tablegen::{build_table, Format, Preset, Render, RenderOptions};
use binrel::{assurance, confidence, Probability, TrialOutcome};
use wasm_bindgen::prelude::*;

fn outcome(samples: u32, failures: u32) -> Result<TrialOutcome, String> {
    TrialOutcome::new(samples.into(), failures.into()).map_err(|e| e.to_string())
}

/// Confidence at `points` evenly spaced reliabilities `r = i / (points - 1)`.
#[wasm_bindgen]
pub fn confidence_curve(samples: u32, failures: u32, points: u32) -> Result<Vec<f64>, String> {
    let outcome = outcome(samples, failures)?;
    if points < 2 {
        return Err(format!("need at least 2 points, got {points}"));
    }
    let last = f64::from(points - 1);
    (0..points)
        .map(|i| {
            let r = Probability::new(f64::from(i) / last).map_err(|e| e.to_string())?;
            Ok(confidence(outcome, r).value())
        })
        .collect()
}

/// Assurance for `n = 1..=max_samples`, one row per `f = 0..=max_failures`,
/// flattened row-major.
#[wasm_bindgen]
pub fn assurance_curves(max_samples: u32, max_failures: u32) -> Result<Vec<f64>, String> {
    if max_samples == 0 {
        return Err("need at least one sample".into());
    }
    let mut out = Vec::with_capacity((max_samples as usize) * (max_failures as usize + 1));
    for f in 0..=u64::from(max_failures) {
        for n in 1..=u64::from(max_samples) {
            let a = if f >= n {
                0.0
            } else {
                let o = TrialOutcome::new(n, f).map_err(|e| e.to_string())?;
                assurance(o, DEFAULT_X_TOL)
                    .map_err(|e| e.to_string())?
                    .value()
            };
            out.push(a);
        }
    }
    Ok(out)
}

/// One of the published tables as text. `tolerance` defaults to the
/// preset's own solver setting.
#[wasm_bindgen]
pub fn render_table(
    preset: &str,
    format: &str,
    precision: u32,
    tolerance: Option<f64>,
) -> Result<String, String> {
    let preset = Preset::ALL
        .into_iter()
        .find(|p| p.name() == preset)
        .ok_or_else(|| format!("unknown preset '{preset}'"))?;
    let format: Format = format.parse().map_err(|e: binrel::Error| e.to_string())?;
    let x_tol = tolerance.unwrap_or(preset.solver_tolerance());
    if !(x_tol > 0.0 && x_tol <= 0.1) {
        return Err(format!("tolerance must lie in (0, 0.1], got {x_tol}"));
    }
    let options = RenderOptions {
        precision: precision as usize,
        percent: true,
    };
    Ok(build_table(&preset.grid(), x_tol).render(format, &options))
}

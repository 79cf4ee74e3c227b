//! Confidence, reliability and assurance for binomial success/failure
//! trials.
//!
//! Given `f` failures in `n` samples:
//!
//! * [`confidence`] that the true reliability is at least `r`,
//! * the [`reliability`] demonstrated at a given confidence, by closed form
//!   (zero failures), Wilson score bound, or exact Brent inversion,
//! * the [`assurance`] level where reliability equals confidence,
//! * the smallest sample count reaching a target assurance or confidence.
//!
//! ```
//! use binrel::{assurance, confidence, Probability, TrialOutcome};
//!
//! let outcome = TrialOutcome::new(10, 0)?;
//! let c = confidence(outcome, Probability::new(0.9)?);
//! assert!((c.value() - (1.0 - 0.9f64.powi(10))).abs() < 1e-12);
//!
//! let a = assurance(TrialOutcome::new(3, 1)?, 1e-10)?;
//! assert!((a.value() - 0.5).abs() < 1e-10);
//! # Ok::<(), binrel::Error>(())
//! ```

pub mod binomial;
mod error;
pub mod metrics;
mod normal;
pub mod rootfind;
mod special;
pub mod tablegen;
mod types;

pub use error::{Error, Result};
pub use metrics::{
    assurance, confidence, min_samples_for_assurance, min_samples_for_confidence, reliability,
    reliability_closed_form_zero_failure, reliability_exact, reliability_wilson, ReliabilityMethod,
    ReliabilityOptions, ZConvention,
};
pub use normal::std_normal_quantile;
pub use special::ln_gamma;
pub use types::{Probability, TrialOutcome};

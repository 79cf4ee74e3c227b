use std::fmt;

use crate::error::{Error, Result};

/// A probability in the closed interval `[0, 1]`.
///
/// Used for reliability, confidence and assurance alike. Values are stored as
/// fractions; conversion to percent is a rendering concern.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub const ZERO: Probability = Probability(0.0);
    pub const ONE: Probability = Probability(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Probability(value))
        } else {
            Err(Error::ProbabilityOutOfRange(value))
        }
    }

    /// Clamps `value` into `[0, 1]`. NaN maps to zero.
    pub(crate) fn saturating(value: f64) -> Self {
        if value.is_nan() {
            Probability(0.0)
        } else {
            Probability(value.clamp(0.0, 1.0))
        }
    }

    /// Like [`Probability::new`] but also rejects the endpoints.
    pub fn open(value: f64) -> Result<Self> {
        if value > 0.0 && value < 1.0 {
            Ok(Probability(value))
        } else {
            Err(Error::domain(format!(
                "probability {value} must lie strictly inside (0, 1)"
            )))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 - p`.
    #[inline]
    pub fn complement(self) -> Probability {
        Probability(1.0 - self.0)
    }

    #[inline]
    pub fn is_interior(self) -> bool {
        self.0 > 0.0 && self.0 < 1.0
    }
}

impl TryFrom<f64> for Probability {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Probability::new(value)
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Observed result of a success/failure test: `failures` failed out of
/// `samples` trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrialOutcome {
    samples: u64,
    failures: u64,
}

impl TrialOutcome {
    pub fn new(samples: u64, failures: u64) -> Result<Self> {
        if samples == 0 || failures > samples {
            return Err(Error::InvalidOutcome { samples, failures });
        }
        Ok(TrialOutcome { samples, failures })
    }

    pub fn zero_failure(samples: u64) -> Result<Self> {
        TrialOutcome::new(samples, 0)
    }

    #[inline]
    pub fn samples(&self) -> u64 {
        self.samples
    }

    #[inline]
    pub fn failures(&self) -> u64 {
        self.failures
    }

    /// Observed success fraction `(n - f) / n`.
    pub fn point_estimate(&self) -> f64 {
        (self.samples - self.failures) as f64 / self.samples as f64
    }
}

impl fmt::Display for TrialOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failures in {} samples", self.failures, self.samples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probability_bounds() {
        assert!(Probability::new(0.0).is_ok());
        assert!(Probability::new(1.0).is_ok());
        assert!(Probability::new(-1e-300).is_err());
        assert!(Probability::new(1.0 + f64::EPSILON).is_err());
        assert!(Probability::new(f64::NAN).is_err());
        assert!(Probability::open(0.0).is_err());
        assert!(Probability::open(1.0).is_err());
        assert_eq!(Probability::saturating(f64::NAN).value(), 0.0);
        assert_eq!(Probability::saturating(1.5).value(), 1.0);
    }

    #[test]
    fn outcome_invariants() {
        assert!(TrialOutcome::new(0, 0).is_err());
        assert!(TrialOutcome::new(3, 4).is_err());
        let o = TrialOutcome::new(40, 4).unwrap();
        assert_eq!(o.point_estimate(), 0.9);
        assert_eq!(TrialOutcome::new(5, 5).unwrap().point_estimate(), 0.0);
    }
}

//! Confidence, reliability and assurance for an observed trial outcome.
//!
//! * confidence `c(n, f, r) = P[more than f failures | reliability r]`: the
//!   probability that the true reliability is at least `r`.
//! * reliability: the `r` at which confidence reaches a given `c`. Closed
//!   form for zero failures, the Wilson score lower bound as an approximation,
//!   or an exact Brent inversion.
//! * assurance: the fixed point `a = c(n, f, a)`.

use crate::binomial;
use crate::error::{Error, Result};
use crate::normal::std_normal_quantile;
use crate::rootfind::{brent, RootProblem, DEFAULT_X_TOL};
use crate::types::{Probability, TrialOutcome};

/// Bracket for every probability inversion. Both objectives are finite and
/// of opposite sign at the closed ends.
pub const BRACKET: (f64, f64) = (0.0, 1.0);

/// How the normal quantile `z` of the Wilson bound is chosen from `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZConvention {
    /// `z = Phi^-1(1 - alpha/2)` with `alpha = 1 - c`.
    #[default]
    TwoSided,
    /// `z = Phi^-1(1 - alpha)`, the one-sided lower-bound quantile.
    OneSided,
}

impl ZConvention {
    pub fn z(self, c: Probability) -> Result<f64> {
        // upper quantile taken from the lower tail so that c close to 1
        // does not round the argument to 1
        let alpha = 1.0 - c.value();
        let tail = match self {
            ZConvention::TwoSided => alpha / 2.0,
            ZConvention::OneSided => alpha,
        };
        Ok(-std_normal_quantile(Probability::new(tail)?)?)
    }
}

/// Ways of turning `(n, f, c)` into a reliability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReliabilityMethod {
    /// `(1 - c)^(1/n)`; zero failures only.
    ClosedFormZeroFailure,
    /// Wilson score lower bound.
    Wilson,
    /// Wilson score lower bound with continuity correction.
    WilsonCc,
    /// Brent inversion of the binomial confidence.
    #[default]
    BrentExact,
}

/// Solver and approximation settings for reliability queries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReliabilityOptions {
    pub x_tol: f64,
    pub z: ZConvention,
}

impl Default for ReliabilityOptions {
    fn default() -> Self {
        ReliabilityOptions {
            x_tol: DEFAULT_X_TOL,
            z: ZConvention::TwoSided,
        }
    }
}

/// Probability that the true reliability is at least `r` given `outcome`.
pub fn confidence(outcome: TrialOutcome, r: Probability) -> Probability {
    binomial::survival(outcome.failures(), outcome.samples(), r)
        .expect("TrialOutcome guarantees f <= n")
}

/// Reliability demonstrated at confidence `c` by `n` samples with no failure.
pub fn reliability_closed_form_zero_failure(n: u64, c: Probability) -> Result<Probability> {
    if n == 0 {
        return Err(Error::domain("sample count must be positive"));
    }
    let c = interior(c, "confidence")?;
    Ok(Probability::saturating(
        (1.0 - c.value()).powf(1.0 / n as f64),
    ))
}

/// Wilson score lower bound at confidence `c`, evaluated at the point
/// estimate `(n - f) / n` or, with `continuity`, at
/// `max((n - f) / n - 1/(2n), 0)`.
pub fn reliability_wilson(
    outcome: TrialOutcome,
    c: Probability,
    continuity: bool,
    z: ZConvention,
) -> Result<Probability> {
    let c = interior(c, "confidence")?;
    let z = z.z(c)?;
    let n = outcome.samples() as f64;
    let mut r_hat = outcome.point_estimate();
    if continuity {
        r_hat = (r_hat - 1.0 / (2.0 * n)).max(0.0);
    }
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (r_hat + z2 / (2.0 * n)) / denom;
    let spread = z / denom * (r_hat * (1.0 - r_hat) / n + z2 / (4.0 * n * n)).sqrt();
    Ok(Probability::saturating(centre - spread))
}

/// Reliability at which the observed outcome gives exactly confidence `c`.
///
/// Solves `c + P[X <= f | r] - 1 = 0` with Brent's method on
/// [`BRACKET`].
pub fn reliability_exact(outcome: TrialOutcome, c: Probability, x_tol: f64) -> Result<Probability> {
    let c = interior(c, "confidence")?.value();
    let (n, f) = (outcome.samples(), outcome.failures());
    if f == n {
        return Err(Error::domain(
            "reliability unidentifiable, all samples failed",
        ));
    }
    let objective = |r: f64| c + lower_cdf(f, n, r) - 1.0;
    solve(objective, x_tol)
}

/// Reliability by the selected method.
pub fn reliability(
    outcome: TrialOutcome,
    c: Probability,
    method: ReliabilityMethod,
    options: ReliabilityOptions,
) -> Result<Probability> {
    match method {
        ReliabilityMethod::ClosedFormZeroFailure => {
            if outcome.failures() != 0 {
                return Err(Error::domain(
                    "closed-form reliability requires zero failures",
                ));
            }
            reliability_closed_form_zero_failure(outcome.samples(), c)
        }
        ReliabilityMethod::Wilson => reliability_wilson(outcome, c, false, options.z),
        ReliabilityMethod::WilsonCc => reliability_wilson(outcome, c, true, options.z),
        ReliabilityMethod::BrentExact => reliability_exact(outcome, c, options.x_tol),
    }
}

/// Assurance: the value `a` at which reliability and confidence coincide.
///
/// Zero when every sample failed. Otherwise the root of
/// `a + P[X <= f | a] - 1`, which for `f = 0` is `a^n + a - 1`.
pub fn assurance(outcome: TrialOutcome, x_tol: f64) -> Result<Probability> {
    let (n, f) = (outcome.samples(), outcome.failures());
    if f >= n {
        return Ok(Probability::ZERO);
    }
    let objective = |a: f64| a + lower_cdf(f, n, a) - 1.0;
    solve(objective, x_tol)
}

/// Smallest `n` whose assurance with `f` failures reaches `target`.
///
/// Uses `assurance(n, f) >= t  <=>  confidence((n, f), t) >= t`, which holds
/// because confidence decreases in `r` and assurance is its fixed point.
pub fn min_samples_for_assurance(target: Probability, f: u64) -> Result<u64> {
    let target = interior(target, "target assurance")?;
    min_samples(f, |outcome| confidence(outcome, target) >= target)
}

/// Smallest `n` whose confidence at reliability `r` with `f` failures
/// reaches `target_c`.
pub fn min_samples_for_confidence(target_c: Probability, r: Probability, f: u64) -> Result<u64> {
    let target_c = interior(target_c, "target confidence")?;
    let r = interior(r, "reliability")?;
    min_samples(f, |outcome| confidence(outcome, r) >= target_c)
}

/// Largest sample count the searches will consider.
pub const MAX_SEARCH_SAMPLES: u64 = 1 << 52;

/// Exponential bracketing followed by binary search over a predicate that is
/// monotone in `n`.
fn min_samples(f: u64, meets: impl Fn(TrialOutcome) -> bool) -> Result<u64> {
    let at = |n: u64| meets(TrialOutcome::new(n, f).expect("n > f by construction"));
    let start = f + 1;
    if at(start) {
        return Ok(start);
    }
    let mut below = start;
    let mut step = 1u64;
    let above = loop {
        let candidate = start.saturating_add(step);
        if candidate > MAX_SEARCH_SAMPLES {
            return Err(Error::domain(format!(
                "target not reached within {MAX_SEARCH_SAMPLES} samples"
            )));
        }
        if at(candidate) {
            break candidate;
        }
        below = candidate;
        step *= 2;
    };
    let (mut lo, mut hi) = (below, above);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if at(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

fn interior(p: Probability, what: &str) -> Result<Probability> {
    if p.is_interior() {
        Ok(p)
    } else {
        Err(Error::domain(format!(
            "{what} must lie strictly inside (0, 1), got {p}"
        )))
    }
}

fn lower_cdf(f: u64, n: u64, r: f64) -> f64 {
    binomial::cdf(f, n, Probability::saturating(r))
        .expect("f <= n checked by caller")
        .value()
}

fn solve(objective: impl Fn(f64) -> f64, x_tol: f64) -> Result<Probability> {
    let problem = RootProblem::new(objective, BRACKET.0, BRACKET.1).with_tolerance(x_tol);
    let result = brent(&problem)?;
    if !result.converged {
        return Err(Error::domain(format!(
            "root search did not converge in {} iterations",
            result.iterations
        )));
    }
    Ok(Probability::saturating(result.root))
}

//! Binomial failure-count distribution evaluated in log space.
//!
//! `k` counts failures, so a single trial fails with probability `1 - r`
//! where `r` is the reliability. Each term is formed as
//! `exp(ln C(n,k) + k ln(1-r) + (n-k) ln r)` and tails are accumulated from
//! the term nearest the mode outward with Kahan summation. Only the tail that
//! excludes the mode is summed, so tiny tail probabilities keep their relative
//! precision and the complementary value is formed by a benign subtraction.

use crate::error::{Error, Result};
use crate::special::{stirling_remainder, LN_SQRT_2PI};
use crate::types::Probability;

/// `ln C(n, k)`.
///
/// Finite for any `n` representable as `u64` up to at least `1e7` (and far
/// beyond). Evaluated through the Stirling form of log-gamma so that no
/// factorial or large intermediate is ever formed.
pub fn log_choose(n: u64, k: u64) -> Result<f64> {
    if k > n {
        return Err(Error::domain(format!(
            "binomial coefficient C({n}, {k}) needs k <= n"
        )));
    }
    Ok(ln_choose_unchecked(n, k))
}

pub(crate) fn ln_choose_unchecked(n: u64, k: u64) -> f64 {
    let m = k.min(n - k);
    if m == 0 {
        return 0.0;
    }
    if m == 1 {
        return (n as f64).ln();
    }
    let (nf, mf, rf) = (n as f64, m as f64, (n - m) as f64);
    // ln n! - ln m! - ln (n-m)! with the Stirling main terms combined so
    // that nothing cancels: m ln(n/m) - (n-m) ln(1 - m/n) + ...
    mf * (nf / mf).ln() - rf * (-mf / nf).ln_1p() + 0.5 * (nf / (mf * rf)).ln() - LN_SQRT_2PI
        + stirling_remainder(nf)
        - stirling_remainder(mf)
        - stirling_remainder(rf)
}

/// Per-trial parameters shared by every term of one distribution.
#[derive(Debug, Clone, Copy)]
struct Terms {
    n: u64,
    /// reliability (success probability)
    r: f64,
    /// failure probability, `1 - r`
    q: f64,
    ln_r: f64,
    ln_q: f64,
}

impl Terms {
    fn new(n: u64, r: f64) -> Self {
        let q = 1.0 - r;
        Terms {
            n,
            r,
            q,
            ln_r: r.ln(),
            ln_q: q.ln(),
        }
    }

    /// Probability of exactly `k` failures. Requires `0 < r < 1`.
    fn term(&self, k: u64) -> f64 {
        let n = self.n;
        if k == 0 {
            self.r.powf(n as f64)
        } else if k == n {
            self.q.powf(n as f64)
        } else {
            (ln_choose_unchecked(n, k) + k as f64 * self.ln_q + (n - k) as f64 * self.ln_r).exp()
        }
    }

    /// Most likely failure count.
    fn mode(&self) -> u64 {
        let m = ((self.n as f64 + 1.0) * self.q).floor();
        (m as u64).min(self.n)
    }

    /// `sum_{k=0}^{upto} term(k)`, accumulated from `upto` downward.
    fn lower_tail(&self, upto: u64) -> f64 {
        let mode = self.mode();
        let mut acc = Kahan::default();
        for k in (0..=upto).rev() {
            let t = self.term(k);
            acc.add(t);
            if k < mode && t <= acc.sum() * NEGLIGIBLE {
                break;
            }
        }
        acc.sum()
    }

    /// `sum_{k=from}^{n} term(k)`, accumulated from `from` upward.
    fn upper_tail(&self, from: u64) -> f64 {
        let mode = self.mode();
        let mut acc = Kahan::default();
        for k in from..=self.n {
            let t = self.term(k);
            acc.add(t);
            if k > mode && t <= acc.sum() * NEGLIGIBLE {
                break;
            }
        }
        acc.sum()
    }

    /// `(P[X <= f], P[X > f])`, each from a direct tail sum whenever it is
    /// the smaller of the two.
    fn split(&self, f: u64) -> (f64, f64) {
        if f < self.mode() {
            let lower = self.lower_tail(f);
            if lower < 0.5 {
                (lower, 1.0 - lower)
            } else {
                (lower, self.upper_tail(f + 1))
            }
        } else {
            let upper = self.upper_tail(f + 1);
            if upper < 0.5 {
                (1.0 - upper, upper)
            } else {
                (self.lower_tail(f), upper)
            }
        }
    }
}

/// Tail terms below this fraction of the running sum end the accumulation.
const NEGLIGIBLE: f64 = 1e-20;

#[derive(Debug, Default)]
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn sum(&self) -> f64 {
        self.sum
    }
}

fn check_count(what: &str, k: u64, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("sample count must be positive"));
    }
    if k > n {
        return Err(Error::domain(format!(
            "{what} {k} exceeds sample count {n}"
        )));
    }
    Ok(())
}

/// Probability of exactly `k` failures in `n` trials at reliability `r`,
/// `C(n,k) (1-r)^k r^(n-k)`, with `0^0 = 1`.
pub fn pmf(k: u64, n: u64, r: Probability) -> Result<Probability> {
    check_count("failure count", k, n)?;
    let r = r.value();
    let p = if r == 1.0 {
        if k == 0 {
            1.0
        } else {
            0.0
        }
    } else if r == 0.0 {
        if k == n {
            1.0
        } else {
            0.0
        }
    } else {
        Terms::new(n, r).term(k)
    };
    Ok(Probability::saturating(p))
}

/// Returns `(cdf, survival)` at failure count `f`, with the degenerate
/// reliabilities short-circuited.
fn tails(f: u64, n: u64, r: f64) -> (f64, f64) {
    if f >= n || r == 1.0 {
        return (1.0, 0.0);
    }
    if r == 0.0 {
        // every trial fails, all mass sits at k = n > f
        return (0.0, 1.0);
    }
    Terms::new(n, r).split(f)
}

/// `P[X <= f]`: probability of at most `f` failures in `n` trials.
pub fn cdf(f: u64, n: u64, r: Probability) -> Result<Probability> {
    check_count("failure count", f, n)?;
    Ok(Probability::saturating(tails(f, n, r.value()).0))
}

/// `P[X > f] = 1 - cdf(f)`, computed as a direct tail sum whenever it is the
/// smaller side.
pub fn survival(f: u64, n: u64, r: Probability) -> Result<Probability> {
    check_count("failure count", f, n)?;
    Ok(Probability::saturating(tails(f, n, r.value()).1))
}

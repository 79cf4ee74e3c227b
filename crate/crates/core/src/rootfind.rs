//! Bracketing scalar root finders.
//!
//! [`brent`] is the production solver. [`bisect`] exists as an independent
//! reference for tests and is not used by any library path.

use crate::error::{Error, Result};

/// Relative tolerance term, `4 * f64::EPSILON`.
pub const REL_TOL: f64 = 4.0 * f64::EPSILON;

/// Default absolute tolerance on the root abscissa.
pub const DEFAULT_X_TOL: f64 = 1e-10;

/// Default iteration cap.
pub const DEFAULT_MAX_ITER: usize = 200;

/// A continuous scalar function with a sign change on `[lo, hi]`.
#[derive(Debug, Clone)]
pub struct RootProblem<F> {
    pub objective: F,
    pub lo: f64,
    pub hi: f64,
    pub x_tol: f64,
    pub max_iter: usize,
}

impl<F: Fn(f64) -> f64> RootProblem<F> {
    pub fn new(objective: F, lo: f64, hi: f64) -> Self {
        RootProblem {
            objective,
            lo,
            hi,
            x_tol: DEFAULT_X_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }

    pub fn with_tolerance(mut self, x_tol: f64) -> Self {
        self.x_tol = x_tol;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }

    fn validate(&self) -> Result<(f64, f64)> {
        if self.lo.is_nan() || self.hi.is_nan() || self.lo >= self.hi {
            return Err(Error::domain(format!(
                "root bracket needs lo < hi, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        if self.x_tol.is_nan() || self.x_tol <= 0.0 {
            return Err(Error::domain(format!(
                "root tolerance must be positive, got {}",
                self.x_tol
            )));
        }
        let f_lo = (self.objective)(self.lo);
        let f_hi = (self.objective)(self.hi);
        let straddles = (f_lo <= 0.0 && f_hi >= 0.0) || (f_lo >= 0.0 && f_hi <= 0.0);
        if !straddles || f_lo.is_nan() || f_hi.is_nan() {
            return Err(Error::NoBracket {
                lo: self.lo,
                hi: self.hi,
                f_lo,
                f_hi,
            });
        }
        Ok((f_lo, f_hi))
    }
}

/// Outcome of a root search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub root: f64,
    /// objective evaluated at `root`
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Brent's method: inverse quadratic interpolation, secant and bisection
/// combined so that the bracket is always kept.
///
/// The step rules follow the formulation used by SciPy's `brentq`, so runs at
/// a loose tolerance land on the same iterates. Terminates once the bracket
/// half-width drops below `(x_tol + REL_TOL * |x|) / 2` or the objective hits
/// zero. Returns a non-converged result with the best estimate when
/// `max_iter` is exhausted.
pub fn brent<F: Fn(f64) -> f64>(problem: &RootProblem<F>) -> Result<RootResult> {
    let (f_lo, f_hi) = problem.validate()?;
    let f = &problem.objective;

    if f_lo == 0.0 {
        return Ok(exact(problem.lo));
    }
    if f_hi == 0.0 {
        return Ok(exact(problem.hi));
    }

    // `cur` is the best estimate, `blk` the opposite end of the bracket and
    // `pre` the previous estimate.
    let (mut x_pre, mut f_pre) = (problem.lo, f_lo);
    let (mut x_cur, mut f_cur) = (problem.hi, f_hi);
    let (mut x_blk, mut f_blk) = (0.0, 0.0);
    let (mut s_pre, mut s_cur) = (0.0_f64, 0.0_f64);

    for iter in 1..=problem.max_iter {
        if f_pre != 0.0 && f_cur != 0.0 && f_pre.is_sign_negative() != f_cur.is_sign_negative() {
            x_blk = x_pre;
            f_blk = f_pre;
            s_cur = x_cur - x_pre;
            s_pre = s_cur;
        }
        if f_blk.abs() < f_cur.abs() {
            x_pre = x_cur;
            x_cur = x_blk;
            x_blk = x_pre;

            f_pre = f_cur;
            f_cur = f_blk;
            f_blk = f_pre;
        }

        let delta = (problem.x_tol + REL_TOL * x_cur.abs()) / 2.0;
        let s_bis = (x_blk - x_cur) / 2.0;
        if f_cur == 0.0 || s_bis.abs() < delta {
            return Ok(RootResult {
                root: x_cur,
                residual: f_cur,
                iterations: iter,
                converged: true,
            });
        }

        let mut bisect = true;
        if s_pre.abs() > delta && f_cur.abs() < f_pre.abs() {
            let s_try = if x_pre == x_blk {
                // secant
                -f_cur * (x_cur - x_pre) / (f_cur - f_pre)
            } else {
                // inverse quadratic
                let d_pre = (f_pre - f_cur) / (x_pre - x_cur);
                let d_blk = (f_blk - f_cur) / (x_blk - x_cur);
                -f_cur * (f_blk * d_blk - f_pre * d_pre) / (d_blk * d_pre * (f_blk - f_pre))
            };
            // accept only short steps that point into the bracket
            let toward_blk = s_try.is_sign_negative() == s_bis.is_sign_negative();
            if toward_blk && 2.0 * s_try.abs() < s_pre.abs().min(3.0 * s_bis.abs() - delta) {
                s_pre = s_cur;
                s_cur = s_try;
                bisect = false;
            }
        }
        if bisect {
            s_pre = s_bis;
            s_cur = s_bis;
        }

        x_pre = x_cur;
        f_pre = f_cur;
        if s_cur.abs() > delta {
            x_cur += s_cur;
        } else {
            x_cur += delta.copysign(s_bis);
        }
        f_cur = f(x_cur);
    }

    Ok(RootResult {
        root: x_cur,
        residual: f_cur,
        iterations: problem.max_iter,
        converged: false,
    })
}

/// Plain bisection to the same stopping rule as [`brent`].
pub fn bisect<F: Fn(f64) -> f64>(problem: &RootProblem<F>) -> Result<RootResult> {
    let (f_lo, f_hi) = problem.validate()?;
    let f = &problem.objective;

    if f_lo == 0.0 {
        return Ok(exact(problem.lo));
    }
    if f_hi == 0.0 {
        return Ok(exact(problem.hi));
    }

    let (mut lo, mut hi) = (problem.lo, problem.hi);
    let lo_negative = f_lo < 0.0;
    let mut mid = 0.5 * (lo + hi);
    for iter in 1..=problem.max_iter {
        mid = lo + 0.5 * (hi - lo);
        let f_mid = f(mid);
        let half = 0.5 * (hi - lo);
        if f_mid == 0.0 || half < (problem.x_tol + REL_TOL * mid.abs()) / 2.0 {
            return Ok(RootResult {
                root: mid,
                residual: f_mid,
                iterations: iter,
                converged: true,
            });
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RootResult {
        root: mid,
        residual: f(mid),
        iterations: problem.max_iter,
        converged: false,
    })
}

fn exact(x: f64) -> RootResult {
    RootResult {
        root: x,
        residual: 0.0,
        iterations: 0,
        converged: true,
    }
}

//! Principal branch of the Lambert W function on `[0, inf)`.

use std::f64::consts::{E, LN_2};

use crate::error::{Error, Result};

const MAX_ITERATIONS: u32 = 100;
const RESIDUAL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambertW0 {
    pub x: f64,
    pub w: f64,
    /// `|w e^w - x|`
    pub residual: f64,
    pub iterations: u32,
}

impl LambertW0 {
    pub fn converged(&self) -> bool {
        self.residual <= RESIDUAL_TOLERANCE * self.x.max(1.0)
    }
}

/// Solves `w e^w = x` for `w >= 0` by Halley iteration.
pub fn lambert_w0(x: f64) -> Result<LambertW0> {
    if x.is_nan() || x < 0.0 || x.is_infinite() {
        return Err(Error::Domain(format!(
            "lambert_w0 needs a finite x >= 0, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(LambertW0 {
            x,
            w: 0.0,
            residual: 0.0,
            iterations: 0,
        });
    }
    let tolerance = RESIDUAL_TOLERANCE * x.max(1.0);
    let mut w = if x > E { x.ln() - x.ln().ln() } else { x };
    let mut best = (f64::INFINITY, w);
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        let ew = w.exp();
        let f = w * ew - x;
        let residual = f.abs();
        if residual < best.0 {
            best = (residual, w);
        }
        if residual <= tolerance {
            break;
        }
        let step = f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
        iterations += 1;
        if step == 0.0 || !step.is_finite() {
            break;
        }
        w -= step;
    }
    let (residual, w) = best;
    Ok(LambertW0 {
        x,
        w,
        residual,
        iterations,
    })
}

/// `ceil(W0(2^(n-3) ln 2) / ln 2 - 1)` evaluated in double precision.
///
/// The argument of the ceiling is an exact integer whenever `v 2^v = 2^(n-3)`
/// has an integer solution (n = 6, 9, 14, 23, 40, ...), so values within
/// `1e-9` of an integer are snapped to it before rounding up.
pub fn lambert_consecutive_exponent(n: usize) -> Result<i64> {
    if n < 5 {
        return Err(Error::Domain(format!(
            "takum width must be at least 5, got {n}"
        )));
    }
    let x = 2f64.powi(n as i32 - 3) * LN_2;
    let t = lambert_w0(x)?.w / LN_2 - 1.0;
    let nearest = t.round();
    let t = if (t - nearest).abs() <= 1e-9 * t.abs().max(1.0) {
        nearest
    } else {
        t
    };
    Ok(t.ceil() as i64)
}

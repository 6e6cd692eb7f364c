//! Polygamma functions of orders one and two (trigamma and tetragamma) for
//! positive real arguments.
//!
//! Both are computed by shifting the argument upward with the recurrences
//!
//! ```text
//! psi'(x)  = psi'(x+1)  + 1/x^2
//! psi''(x) = psi''(x+1) - 2/x^3
//! ```
//!
//! until it reaches 24, then summing the asymptotic expansion in inverse
//! powers truncated after the Bernoulli-number term B10. At that shift the
//! first neglected term is below 1e-16 relative for both orders, so the
//! values and the recurrence identity hold at double precision. (Switching
//! as low as 8 with this truncation costs ~5e-11 relative on the third
//! derivative, which is not good enough here.)

use thiserror::Error;

/// Arguments at or above this point go straight to the asymptotic series.
const ASYMPTOTIC_CUTOFF: f64 = 24.0;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SpecFunError {
    #[error("polygamma order {0} is not supported (only 1 and 2)")]
    UnsupportedOrder(u32),
    #[error("polygamma requires a positive finite argument, got {0}")]
    NonPositiveArgument(f64),
}

/// psi'(x), the second derivative of log Gamma.
pub fn trigamma(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(SpecFunError::NonPositiveArgument(x));
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < ASYMPTOTIC_CUTOFF {
        shift += 1.0 / (y * y);
        y += 1.0;
    }
    Ok(shift + trigamma_asymptotic(y))
}

/// psi''(x), the third derivative of log Gamma.
pub fn tetragamma(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(SpecFunError::NonPositiveArgument(x));
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < ASYMPTOTIC_CUTOFF {
        shift -= 2.0 / (y * y * y);
        y += 1.0;
    }
    Ok(shift + tetragamma_asymptotic(y))
}

/// psi^(order)(x) for order 1 or 2.
pub fn polygamma(order: u32, x: f64) -> Result<f64, SpecFunError> {
    match order {
        1 => trigamma(x),
        2 => tetragamma(x),
        other => Err(SpecFunError::UnsupportedOrder(other)),
    }
}

/// Asymptotic series for psi'(y), y >= 8:
/// 1/y + 1/(2y^2) + 1/(6y^3) - 1/(30y^5) + 1/(42y^7) - 1/(30y^9) + 5/(66y^11).
fn trigamma_asymptotic(y: f64) -> f64 {
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    // Horner form in 1/y^2 applied to the bracket of 1/y^3 terms.
    let tail = inv2 * inv * (1.0 / 6.0
        + inv2 * (-1.0 / 30.0
            + inv2 * (1.0 / 42.0 + inv2 * (-1.0 / 30.0 + inv2 * (5.0 / 66.0)))));
    inv + 0.5 * inv2 + tail
}

/// Asymptotic series for psi''(y), y >= 8:
/// -1/y^2 - 1/y^3 - 1/(2y^4) + 1/(6y^6) - 1/(6y^8) + 3/(10y^10) - 5/(6y^12).
fn tetragamma_asymptotic(y: f64) -> f64 {
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let tail = inv2 * inv2 * (-0.5
        + inv2 * (1.0 / 6.0 + inv2 * (-1.0 / 6.0 + inv2 * (3.0 / 10.0 + inv2 * (-5.0 / 6.0)))));
    -inv2 - inv2 * inv + tail
}

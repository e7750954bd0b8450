//! Principal-branch Lambert W and the closed-form α estimates built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{DerivedParams, SpectroscopicParams};

const MAX_ITERATIONS: usize = 50;

/// W₀(x), the solution w ≥ −1 of w e^w = x, for x ≥ −1/e.
///
/// Halley iteration. Starting guess: ln(1+x) away from the branch point and
/// the branch-point series −1 + p − p²/3 + 11p³/72, p = √(2(ex+1)), for
/// x < −0.25.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::LambertDomain { argument: x });
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() && x > 0.0 {
        return Ok(f64::INFINITY);
    }
    let branch = std::f64::consts::E * x + 1.0;
    if branch < 0.0 {
        // Allow a couple of ulps of slack at exactly −1/e.
        if branch > -4.0 * f64::EPSILON {
            return Ok(-1.0);
        }
        return Err(Error::LambertDomain { argument: x });
    }
    if branch == 0.0 {
        return Ok(-1.0);
    }

    let mut w = if x < -0.25 {
        let p = (2.0 * branch).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else {
        x.ln_1p()
    };

    for _ in 0..MAX_ITERATIONS {
        let ew = w.exp();
        let f = w * ew - x;
        // Near the branch point the step stalls on rounding long before it
        // shrinks below epsilon; a machine-level residual is as good as it gets.
        if f.abs() <= f64::EPSILON * x.abs().max(1.0) {
            return Ok(w);
        }
        let wp1 = w + 1.0;
        if wp1 == 0.0 {
            return Ok(w);
        }
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        let next = w - step;
        if !next.is_finite() {
            break;
        }
        let done = step.abs() <= 4.0 * f64::EPSILON * (1.0 + next.abs());
        w = next.max(-1.0);
        if done {
            return Ok(w);
        }
    }
    Err(Error::Convergence {
        what: "lambert_w0",
        iterations: MAX_ITERATIONS,
    })
}

/// Which Lambert-W argument to use for α_DMRM.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DmrmVariant {
    /// W(r_e q β e^{−r_e β/2}).
    AsPublished,
    /// W(r_e q β e^{−r_e β}).
    Corrected,
}

impl DmrmVariant {
    pub fn argument(self, re: f64, q: f64, beta: f64) -> f64 {
        let decay = match self {
            DmrmVariant::AsPublished => (-re * beta / 2.0).exp(),
            DmrmVariant::Corrected => (-re * beta).exp(),
        };
        re * q * beta * decay
    }
}

/// α_DMRM = β/2 + W(arg)/(2 r_e), Å⁻¹.
pub fn alpha_dmrm(
    params: &SpectroscopicParams,
    derived: &DerivedParams,
    variant: DmrmVariant,
) -> Result<f64> {
    let arg = variant.argument(params.re, derived.q, derived.beta);
    let w = lambert_w0(arg)?;
    Ok(derived.beta / 2.0 + w / (2.0 * params.re))
}

//! Three-term exponential factorisation of the centrifugal barrier,
//!
//! ```text
//! r_e²/r² ≈ C1 + C2/(e^{br}+q) + C3/(e^{br}+q)²,
//! ```
//!
//! fixed by matching value, slope and curvature at r = r_e, and the
//! effective-potential coefficients P̃ᵢ = Pᵢ + γ Cᵢ built from it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::potential::{PForm, POLE_GUARD};
use crate::units;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FactorizationCoefficients {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    /// u = b r_e.
    pub u: f64,
    pub eta: f64,
}

impl FactorizationCoefficients {
    /// q = −η e^u.
    pub fn q(&self) -> f64 {
        -self.eta * self.u.exp()
    }

    /// The expansion as a function of y = b(r − r_e).
    pub fn expansion(&self, y: f64) -> f64 {
        let s = 1.0 / ((y + self.u).exp() + self.q());
        self.c1 + self.c2 * s + self.c3 * s * s
    }
}

pub fn badawi_coefficients(u: f64, eta: f64) -> Result<FactorizationCoefficients> {
    if !(u > 0.0) || !u.is_finite() {
        return Err(Error::invalid("u", u, "u = b r_e must be positive"));
    }
    if eta == 1.0 || !eta.is_finite() {
        return Err(Error::DegenerateEta);
    }
    let k = 1.0 - eta;
    let a = k / u;
    let c1 = 1.0 - a * a * (4.0 * u / k - (3.0 + u));
    let c2 = 2.0 * u.exp() * k * (3.0 * a - (3.0 + u) * a * a);
    let c3 = (2.0 * u).exp() / (u * u) * k.powi(4) * ((3.0 + u) - 2.0 * u / k);
    Ok(FactorizationCoefficients { c1, c2, c3, u, eta })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EffectiveCoefficients {
    pub pt1: f64,
    pub pt2: f64,
    pub pt3: f64,
    /// γ = J(J+1) ħ²/(2μ r_e²), cm⁻¹.
    pub gamma: f64,
    pub j: u32,
}

pub fn effective_coefficients(
    pform: &PForm,
    coeffs: &FactorizationCoefficients,
    j: u32,
    mu: f64,
    re: f64,
) -> Result<EffectiveCoefficients> {
    if !(re > 0.0) {
        return Err(Error::invalid("re", re, "must be positive"));
    }
    let jj = f64::from(j);
    let gamma = jj * (jj + 1.0) * units::kinetic_factor(mu)? / (re * re);
    Ok(EffectiveCoefficients {
        pt1: pform.p1 + gamma * coeffs.c1,
        pt2: pform.p2 + gamma * coeffs.c2,
        pt3: pform.p3 + gamma * coeffs.c3,
        gamma,
        j,
    })
}

/// Relative error (approx − exact)/exact of the factorised r_e²/r² on a
/// grid of radii.
pub fn centrifugal_approx_error(
    coeffs: &FactorizationCoefficients,
    b: f64,
    r_grid: &[f64],
) -> Result<Vec<f64>> {
    let re = coeffs.u / b;
    let pole = (coeffs.q() < 0.0).then(|| (-coeffs.q()).ln() / b);
    r_grid
        .iter()
        .map(|&r| {
            if !(r > 0.0) {
                return Err(Error::invalid("r", r, "radius must be positive"));
            }
            if let Some(pole) = pole {
                if (r - pole).abs() < POLE_GUARD {
                    return Err(Error::Singularity {
                        r,
                        pole,
                        tolerance: POLE_GUARD,
                    });
                }
            }
            let exact = (re / r).powi(2);
            let approx = coeffs.expansion(b * (r - re));
            Ok((approx - exact) / exact)
        })
        .collect()
}

/// 200 log-spaced radii in [0.6 r_e, 5 r_e], dropping any within 1e-6 Å of
/// the pole.
pub fn default_error_grid(re: f64, pole: Option<f64>) -> Vec<f64> {
    let (lo, hi) = ((0.6 * re).ln(), (5.0 * re).ln());
    let n = 200;
    (0..n)
        .map(|i| (lo + (hi - lo) * i as f64 / (n - 1) as f64).exp())
        .filter(|r| pole.is_none_or(|p| (r - p).abs() > 1e-6))
        .collect()
}

/// λ² (1/12 + e^{λr}/(e^{λr} − 1)²), an approximation to 1/r².
pub fn greene_aldrich_approx(lambda: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::invalid("r", r, "radius must be positive"));
    }
    // e^{x}/(e^{x}−1)² = e^{−x}/(1−e^{−x})²
    let x = (-lambda * r).exp();
    let denom = -(-lambda * r).exp_m1();
    Ok(lambda * lambda * (1.0 / 12.0 + x / (denom * denom)))
}

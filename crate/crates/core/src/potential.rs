//! Potential-energy curves: the q-deformed Schiöberg form, Tietz-Hua,
//! Deng-Fan, Morse and the shared three-term exponential ("P-form").
//!
//! All models are measured from the well minimum, U(r_e) = 0, and tend to
//! D_e as r → ∞. Exponentials are evaluated as e^{-br} so large r never
//! overflows.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{DerivedParams, SpectroscopicParams};

/// Distance from the pole e^{br} = −q inside which evaluation is refused, Å.
pub const POLE_GUARD: f64 = 1e-9;

/// U(r) = P1 + P2/(e^{br}+q) + P3/(e^{br}+q)².
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PForm {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub b: f64,
    pub q: f64,
}

impl PForm {
    /// P1 = D_e, P2 = −2 D_e (e^{br_e}+q), P3 = D_e (e^{br_e}+q)².
    pub fn from_depth(de: f64, re: f64, b: f64, q: f64) -> Self {
        let s = (b * re).exp() + q;
        PForm {
            p1: de,
            p2: -2.0 * de * s,
            p3: de * s * s,
            b,
            q,
        }
    }

    pub fn evaluate(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        check_pole(self.b, self.q, r)?;
        // 1/(e^{br}+q) written in e^{-br}
        let x = (-self.b * r).exp();
        let s = x / (1.0 + self.q * x);
        Ok(self.p1 + self.p2 * s + self.p3 * s * s)
    }

    /// r_e recovered from e^{br_e} + q = −P2/(2 P1).
    pub fn equilibrium_radius(&self) -> f64 {
        (-self.p2 / (2.0 * self.p1) - self.q).ln() / self.b
    }

    pub fn pole_radius(&self) -> Option<f64> {
        pole_radius(self.b, self.q)
    }
}

/// Potential models. Each variant carries what it needs to evaluate itself.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum PotentialModel {
    /// U(r) = A (B + tanh_q αr)² with tanh_q x = (e^x − q e^{−x})/(e^x + q e^{−x}).
    /// `re` fixes the reference point for the reported offset.
    DeformedSchioberg {
        amplitude: f64,
        shift: f64,
        q: f64,
        alpha: f64,
        re: f64,
    },
    /// U(r) = D_e [(1 − e^{−b(r−r_e)}) / (1 − η e^{−b(r−r_e)})]².
    TietzHua { de: f64, re: f64, b: f64, eta: f64 },
    /// U(r) = D_e [1 − (e^{λr_e} − 1)/(e^{λr} − 1)]².
    DengFan { de: f64, re: f64, lambda: f64 },
    /// U(r) = D_e (1 − e^{−β(r−r_e)})².
    Morse { de: f64, re: f64, beta: f64 },
    GeneralPForm(PForm),
}

/// A model value together with the constant subtracted to place the minimum
/// at zero (non-zero only for the raw Schiöberg form).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub offset: f64,
}

impl PotentialModel {
    pub fn tietz_hua(params: &SpectroscopicParams) -> Self {
        PotentialModel::TietzHua {
            de: params.de,
            re: params.re,
            b: params.b(),
            eta: params.eta,
        }
    }

    /// The raw deformed Schiöberg curve; `None` when q = 0 (A diverges).
    pub fn deformed_schioberg(params: &SpectroscopicParams, derived: &DerivedParams) -> Option<Self> {
        derived.amplitude.map(|amplitude| PotentialModel::DeformedSchioberg {
            amplitude,
            shift: derived.shift,
            q: derived.q,
            alpha: params.alpha,
            re: params.re,
        })
    }

    /// Evaluates relative to the minimum, cm⁻¹.
    pub fn evaluate(&self, r: f64) -> Result<f64> {
        self.evaluate_with_offset(r).map(|e| e.value)
    }

    pub fn evaluate_with_offset(&self, r: f64) -> Result<Evaluation> {
        check_radius(r)?;
        let plain = |value| Evaluation { value, offset: 0.0 };
        match *self {
            PotentialModel::DeformedSchioberg {
                amplitude,
                shift,
                q,
                alpha,
                re,
            } => {
                check_pole(2.0 * alpha, q, r)?;
                let raw = amplitude * (shift + tanh_q(alpha * r, q)).powi(2);
                let offset = amplitude * (shift + tanh_q(alpha * re, q)).powi(2);
                Ok(Evaluation {
                    value: raw - offset,
                    offset,
                })
            }
            PotentialModel::TietzHua { de, re, b, eta } => {
                let q = -eta * (b * re).exp();
                check_pole(b, q, r)?;
                let x = (-b * (r - re)).exp();
                let ratio = (1.0 - x) / (1.0 - eta * x);
                Ok(plain(de * ratio * ratio))
            }
            PotentialModel::DengFan { de, re, lambda } => {
                Ok(plain(common_form(de, re, lambda, -1.0, r)?))
            }
            PotentialModel::Morse { de, re, beta } => {
                let y = 1.0 - (-beta * (r - re)).exp();
                Ok(plain(de * y * y))
            }
            PotentialModel::GeneralPForm(p) => Ok(plain(p.evaluate(r)?)),
        }
    }

    pub fn to_pform(&self) -> Result<PForm> {
        match *self {
            PotentialModel::DeformedSchioberg {
                amplitude,
                shift,
                q,
                alpha,
                re,
            } => {
                if q == 0.0 {
                    return Err(Error::Unrepresentable("DeformedSchioberg"));
                }
                let de = amplitude * (shift + 1.0).powi(2);
                Ok(PForm::from_depth(de, re, 2.0 * alpha, q))
            }
            PotentialModel::TietzHua { de, re, b, eta } => {
                if eta == 0.0 {
                    return Err(Error::Unrepresentable("TietzHua with eta = 0"));
                }
                Ok(PForm::from_depth(de, re, b, -eta * (b * re).exp()))
            }
            PotentialModel::DengFan { de, re, lambda } => Ok(PForm::from_depth(de, re, lambda, -1.0)),
            PotentialModel::Morse { .. } => Err(Error::Unrepresentable("Morse")),
            PotentialModel::GeneralPForm(p) => Ok(p),
        }
    }

    pub fn equilibrium_radius(&self) -> f64 {
        match *self {
            PotentialModel::DeformedSchioberg { re, .. }
            | PotentialModel::TietzHua { re, .. }
            | PotentialModel::DengFan { re, .. }
            | PotentialModel::Morse { re, .. } => re,
            PotentialModel::GeneralPForm(p) => p.equilibrium_radius(),
        }
    }

    pub fn depth(&self) -> f64 {
        match *self {
            PotentialModel::DeformedSchioberg {
                amplitude,
                shift,
                q,
                alpha,
                re,
            } => amplitude * ((shift + 1.0).powi(2) - (shift + tanh_q(alpha * re, q)).powi(2)),
            PotentialModel::TietzHua { de, .. }
            | PotentialModel::DengFan { de, .. }
            | PotentialModel::Morse { de, .. } => de,
            PotentialModel::GeneralPForm(p) => p.p1,
        }
    }

    pub fn pole_radius(&self) -> Option<f64> {
        match *self {
            PotentialModel::DeformedSchioberg { q, alpha, .. } => pole_radius(2.0 * alpha, q),
            PotentialModel::TietzHua { re, b, eta, .. } => pole_radius(b, -eta * (b * re).exp()),
            // e^{λr} = 1 only at r = 0, outside the domain.
            PotentialModel::DengFan { .. } | PotentialModel::Morse { .. } => None,
            PotentialModel::GeneralPForm(p) => p.pole_radius(),
        }
    }
}

/// D_e [1 − (e^{br_e}+q)/(e^{br}+q)]², the form every q-deformed model
/// reduces to once the Varshni conditions are imposed.
pub fn common_form(de: f64, re: f64, b: f64, q: f64, r: f64) -> Result<f64> {
    check_radius(r)?;
    check_pole(b, q, r)?;
    // (e^{br_e}+q)/(e^{br}+q) = e^{-b(r-r_e)} (1 + q e^{-br_e})/(1 + q e^{-br})
    let ratio = (-b * (r - re)).exp() * (1.0 + q * (-b * re).exp()) / (1.0 + q * (-b * r).exp());
    let y = 1.0 - ratio;
    Ok(de * y * y)
}

/// tanh_q x = (1 − q e^{−2x})/(1 + q e^{−2x}).
pub fn tanh_q(x: f64, q: f64) -> f64 {
    let t = q * (-2.0 * x).exp();
    (1.0 - t) / (1.0 + t)
}

fn pole_radius(b: f64, q: f64) -> Option<f64> {
    (q < 0.0).then(|| (-q).ln() / b)
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::invalid("r", r, "radius must be positive"));
    }
    Ok(())
}

fn check_pole(b: f64, q: f64, r: f64) -> Result<()> {
    match pole_radius(b, q) {
        Some(pole) if (r - pole).abs() < POLE_GUARD => Err(Error::Singularity {
            r,
            pole,
            tolerance: POLE_GUARD,
        }),
        _ => Ok(()),
    }
}

/// Finite-difference check of the three Varshni conditions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VarshniReport {
    pub re: f64,
    /// dU/dr at r_e, cm⁻¹/Å.
    pub du_at_re: f64,
    /// U(100 r_e) − U(r_e), cm⁻¹.
    pub depth: f64,
    /// d²U/dr² at r_e, cm⁻¹/Å².
    pub d2u_at_re: f64,
    pub expected_de: f64,
    pub expected_ke: f64,
}

impl VarshniReport {
    pub fn slope_ok(&self) -> bool {
        self.du_at_re.abs() < 1e-6 * self.expected_de / self.re
    }

    pub fn depth_ok(&self) -> bool {
        (self.depth - self.expected_de).abs() < 1e-6 * self.expected_de
    }

    pub fn curvature_ok(&self) -> bool {
        (self.d2u_at_re - self.expected_ke).abs() < 1e-5 * self.expected_ke
    }

    pub fn holds(&self) -> bool {
        self.slope_ok() && self.depth_ok() && self.curvature_ok()
    }
}

/// Evaluates dU/dr and d²U/dr² at r_e with 5-point stencils (h = 1e-4 r_e)
/// and the well depth at 100 r_e.
pub fn verify_varshni(model: &PotentialModel, derived: &DerivedParams) -> Result<VarshniReport> {
    let re = model.equilibrium_radius();
    let h = 1e-4 * re;
    let u = |r: f64| model.evaluate(r);
    let (m2, m1, c, p1, p2) = (u(re - 2.0 * h)?, u(re - h)?, u(re)?, u(re + h)?, u(re + 2.0 * h)?);
    let du = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    let d2u = (-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h);
    let depth = u(100.0 * re)? - c;
    Ok(VarshniReport {
        re,
        du_at_re: du,
        depth,
        d2u_at_re: d2u,
        expected_de: model.depth(),
        expected_ke: derived.ke,
    })
}

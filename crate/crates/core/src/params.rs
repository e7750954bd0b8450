//! Spectroscopic constants of a molecule and the potential parameters that
//! follow from imposing the three Varshni conditions (zero slope at r_e,
//! well depth D_e, curvature K_e at r_e).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::units;

/// Raw molecular constants in internal units.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectroscopicParams {
    pub name: String,
    /// Dissociation energy D_e, cm⁻¹.
    pub de: f64,
    /// Equilibrium bond length r_e, Å.
    pub re: f64,
    /// Harmonic frequency ω_e, cm⁻¹.
    pub we: f64,
    /// Reduced mass, amu.
    pub mu: f64,
    /// Screening parameter α, Å⁻¹ (b = 2α).
    pub alpha: f64,
    /// Tietz-Hua optimisation parameter η (c_h).
    pub eta: f64,
    /// Morse constant β as tabulated, Å⁻¹, when available.
    pub beta_table: Option<f64>,
}

impl SpectroscopicParams {
    pub fn new(
        name: impl Into<String>,
        de: f64,
        re: f64,
        we: f64,
        mu: f64,
        alpha: f64,
        eta: f64,
    ) -> Result<Self> {
        let params = SpectroscopicParams {
            name: name.into(),
            de,
            re,
            we,
            mu,
            alpha,
            eta,
            beta_table: None,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn with_beta_table(mut self, beta: f64) -> Result<Self> {
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::invalid("beta", beta, "must be positive"));
        }
        self.beta_table = Some(beta);
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        for (field, value) in [
            ("De", self.de),
            ("re", self.re),
            ("we", self.we),
            ("mu", self.mu),
            ("alpha", self.alpha),
        ] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::invalid(field, value, "must be positive and finite"));
            }
        }
        if !self.eta.is_finite() {
            return Err(Error::invalid("eta", self.eta, "must be finite"));
        }
        if self.eta == 1.0 {
            return Err(Error::invalid("eta", self.eta, "eta = 1 is degenerate"));
        }
        Ok(())
    }

    /// b = 2α.
    pub fn b(&self) -> f64 {
        2.0 * self.alpha
    }
}

/// Parameters derived from [`SpectroscopicParams`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivedParams {
    /// Exponent b = 2α, Å⁻¹.
    pub b: f64,
    /// Morse constant implied by the model, β = b/(1−η), Å⁻¹.
    pub beta: f64,
    /// Force constant K_e = 2 D_e β², cm⁻¹·Å⁻².
    pub ke: f64,
    /// Deformation q = −η e^{b r_e}.
    pub q: f64,
    /// Schiöberg amplitude A; `None` in the Morse limit q = 0 where it diverges.
    pub amplitude: Option<f64>,
    /// Schiöberg shift B.
    pub shift: f64,
    /// β from ω_e through K_e = (2πc)² μ ω_e², Å⁻¹.
    pub beta_from_we: f64,
    /// K_e = (2πc)² μ ω_e² in cm⁻¹·Å⁻².
    pub ke_from_we: f64,
}

impl DerivedParams {
    /// Position of the pole e^{br} = −q, present only for q < 0.
    pub fn pole_radius(&self) -> Option<f64> {
        (self.q < 0.0).then(|| (-self.q).ln() / self.b)
    }
}

/// Applies the Varshni conditions to fix (A, B, q) and the derived constants.
pub fn derive(params: &SpectroscopicParams) -> Result<DerivedParams> {
    params.validate()?;
    if params.eta == 1.0 {
        return Err(Error::DegenerateEta);
    }
    let b = params.b();
    let ebr = (b * params.re).exp();
    let q = -params.eta * ebr;
    let sum = ebr + q;
    if sum == 0.0 {
        return Err(Error::DegenerateEta);
    }
    let shift = -(ebr - q) / sum;
    let amplitude = (q != 0.0).then(|| params.de / (4.0 * q * q) * sum * sum);
    let beta = b / (1.0 - params.eta);
    let ke = 2.0 * params.de * beta * beta;

    // Harmonic spacing ω_e = sqrt(2 (ħ²/2μ) K_e) in wavenumber units.
    let kinetic = units::kinetic_factor(params.mu)?;
    let ke_from_we = params.we * params.we / (2.0 * kinetic);
    let beta_from_we = (ke_from_we / (2.0 * params.de)).sqrt();

    let derived = DerivedParams {
        b,
        beta,
        ke,
        q,
        amplitude,
        shift,
        beta_from_we,
        ke_from_we,
    };
    let finite = [b, beta, ke, q, shift, beta_from_we, ke_from_we]
        .iter()
        .all(|v| v.is_finite())
        && amplitude.is_none_or(f64::is_finite);
    if !finite {
        return Err(Error::invalid("eta", params.eta, "non-finite derived parameter"));
    }
    Ok(derived)
}

//! Closed-form ro-vibrational levels from the supersymmetric treatment of
//! the effective potential P̃1 + P̃2/(e^{br}+q) + P̃3/(e^{br}+q)².
//!
//! With k = ħ²/2μ, s = k q² b², D = 1 + 4 P̃3/s, T = (P̃3 + q P̃2)/s and
//! x_ν = −1 − 2ν ± √D (plus for q > 0, minus for q < 0):
//!
//! ```text
//! E(ν, J) = P̃1 − k b² (T/x_ν − x_ν/4)²
//! ```
//!
//! The bracket b (T/x_ν − x_ν/4) is the ν-th superpotential constant; it is
//! negative for bound levels and crosses zero where E(ν) peaks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{derive, SpectroscopicParams};
use crate::potential::{PForm, PotentialModel, POLE_GUARD};
use crate::rotational::{badawi_coefficients, effective_coefficients, EffectiveCoefficients, FactorizationCoefficients};
use crate::units;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    /// Plus for q > 0, minus for q < 0.
    pub fn for_q(q: f64) -> Self {
        if q > 0.0 {
            Branch::Plus
        } else {
            Branch::Minus
        }
    }

    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SusyIntermediates {
    /// Q̃1, Å⁻¹.
    pub q1: f64,
    /// Q̃2, Å⁻¹.
    pub q2: f64,
    /// Lowest level at this J, cm⁻¹.
    pub e0: f64,
    pub branch: Branch,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyLevel {
    pub nu: u32,
    pub j: u32,
    /// cm⁻¹ above the potential minimum.
    pub energy: f64,
    pub bound: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WavefunctionSample {
    pub r: f64,
    /// Unnormalised ψ(r) (N = 1).
    pub value: f64,
    pub ln_value: f64,
}

struct Reduced {
    kinetic: f64,
    q: f64,
    b: f64,
    sqrt_d: f64,
    t: f64,
    branch: Branch,
}

fn reduce(pform: &PForm, eff: &EffectiveCoefficients, mu: f64) -> Result<Reduced> {
    let kinetic = units::kinetic_factor(mu)?;
    let (q, b) = (pform.q, pform.b);
    if q == 0.0 {
        return Err(Error::MorseLimit);
    }
    let scale = kinetic * q * q * b * b;
    let discriminant = 1.0 + 4.0 * eff.pt3 / scale;
    if !(discriminant >= 0.0) {
        return Err(Error::NoRealSolution { discriminant });
    }
    Ok(Reduced {
        kinetic,
        q,
        b,
        sqrt_d: discriminant.sqrt(),
        t: (eff.pt3 + q * eff.pt2) / scale,
        branch: Branch::for_q(q),
    })
}

pub fn energy(pform: &PForm, eff: &EffectiveCoefficients, nu: u32, mu: f64) -> Result<EnergyLevel> {
    let red = reduce(pform, eff, mu)?;
    let x = -1.0 - 2.0 * f64::from(nu) + red.branch.sign() * red.sqrt_d;
    if x == 0.0 {
        return Err(Error::NoRealSolution {
            discriminant: red.sqrt_d * red.sqrt_d,
        });
    }
    let bracket = red.t / x - x / 4.0;
    let e = eff.pt1 - red.kinetic * red.b * red.b * bracket * bracket;
    Ok(EnergyLevel {
        nu,
        j: eff.j,
        energy: e,
        bound: bracket < 0.0 && e < eff.pt1,
    })
}

pub fn susy_intermediates(pform: &PForm, eff: &EffectiveCoefficients, mu: f64) -> Result<SusyIntermediates> {
    let red = reduce(pform, eff, mu)?;
    // Q̃2 = bq x₀/2 with x₀ = −1 ± √D: the root of Q̃2² + bqQ̃2 = P̃3/k that
    // matches the branch used for the energies.
    let x0 = -1.0 + red.branch.sign() * red.sqrt_d;
    let q2 = red.b * red.q * x0 / 2.0;
    let q1 = ((red.q * eff.pt2 + eff.pt3) / red.kinetic - q2 * q2) / (2.0 * red.q * q2);
    Ok(SusyIntermediates {
        q1,
        q2,
        e0: eff.pt1 - red.kinetic * q1 * q1,
        branch: red.branch,
    })
}

/// ψ(r) = e^{Q̃1 r} (e^{br}/(e^{br}+q))^{Q̃2/(bq)}, evaluated in the log
/// domain.
pub fn wavefunction(susy: &SusyIntermediates, pform: &PForm, r: f64) -> Result<WavefunctionSample> {
    if !(r > 0.0) {
        return Err(Error::invalid("r", r, "radius must be positive"));
    }
    let (b, q) = (pform.b, pform.q);
    if let Some(pole) = pform.pole_radius() {
        if (r - pole).abs() < POLE_GUARD {
            return Err(Error::Singularity {
                r,
                pole,
                tolerance: POLE_GUARD,
            });
        }
        if r < pole {
            return Err(Error::invalid("r", r, "inside the pole of e^{br}+q"));
        }
    }
    // ln(e^{br}/(e^{br}+q)) = −ln(1 + q e^{−br})
    let ln_value = susy.q1 * r - susy.q2 / (b * q) * (q * (-b * r).exp()).ln_1p();
    Ok(WavefunctionSample {
        r,
        value: ln_value.exp(),
        ln_value,
    })
}

/// ω_e(ν+½) − ω_e²/(4D_e) (ν+½)², J = 0.
pub fn morse_vibrational_energy(de: f64, we: f64, nu: u32) -> Result<f64> {
    if !(de > 0.0) {
        return Err(Error::invalid("De", de, "must be positive"));
    }
    if !(we > 0.0) {
        return Err(Error::invalid("we", we, "must be positive"));
    }
    let cap = 2.0 * de / we;
    let v = f64::from(nu) + 0.5;
    if v >= cap {
        return Err(Error::AboveDissociation { nu, cap });
    }
    Ok(we * v - we * we / (4.0 * de) * v * v)
}

/// Everything the closed form needs for one molecule, prepared once.
#[derive(Debug, Clone)]
pub struct ClosedForm {
    pub pform: PForm,
    pub coeffs: FactorizationCoefficients,
    pub mu: f64,
    pub re: f64,
}

impl ClosedForm {
    pub fn new(params: &SpectroscopicParams) -> Result<Self> {
        derive(params)?;
        let pform = PotentialModel::tietz_hua(params).to_pform()?;
        let coeffs = badawi_coefficients(params.b() * params.re, params.eta)?;
        Ok(ClosedForm {
            pform,
            coeffs,
            mu: params.mu,
            re: params.re,
        })
    }

    pub fn effective(&self, j: u32) -> Result<EffectiveCoefficients> {
        effective_coefficients(&self.pform, &self.coeffs, j, self.mu, self.re)
    }

    pub fn level(&self, nu: u32, j: u32) -> Result<EnergyLevel> {
        energy(&self.pform, &self.effective(j)?, nu, self.mu)
    }

    pub fn intermediates(&self, j: u32) -> Result<SusyIntermediates> {
        susy_intermediates(&self.pform, &self.effective(j)?, self.mu)
    }
}

#[derive(Debug)]
pub struct LevelRow {
    pub nu: u32,
    pub j: u32,
    pub result: Result<EnergyLevel>,
}

/// One row per (ν, J), ν outermost. Per-row failures are kept in the row.
pub fn level_table(params: &SpectroscopicParams, nu_list: &[u32], j_list: &[u32]) -> Result<Vec<LevelRow>> {
    if nu_list.is_empty() {
        return Err(Error::EmptyInput("nu list"));
    }
    if j_list.is_empty() {
        return Err(Error::EmptyInput("J list"));
    }
    let closed = ClosedForm::new(params)?;
    Ok(nu_list
        .iter()
        .flat_map(|&nu| j_list.iter().map(move |&j| (nu, j)))
        .map(|(nu, j)| LevelRow {
            nu,
            j,
            result: closed.level(nu, j),
        })
        .collect())
}

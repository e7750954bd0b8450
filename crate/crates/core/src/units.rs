//! Physical constants and the handful of unit conversions used throughout.
//!
//! Internal units: energies in cm⁻¹ (wavenumbers), lengths in Å, masses in
//! unified atomic mass units. Energies are measured from the bottom of the
//! potential well unless a function says otherwise.

use crate::error::{Error, Result};

/// Planck constant, J·s. CODATA-1986 value; the published tables were
/// generated with this h (CODATA-2018 leaves a 0.006 cm⁻¹ residual).
pub const PLANCK_J_S: f64 = 6.626_075_5e-34;

/// Speed of light, m/s (exact).
pub const SPEED_OF_LIGHT_M_S: f64 = 299_792_458.0;

/// Atomic mass constant, kg (CODATA-2018).
pub const ATOMIC_MASS_KG: f64 = 1.660_539_066_60e-27;

/// Atomic mass constant in grams.
pub const AMU_IN_GRAMS: f64 = ATOMIC_MASS_KG * 1.0e3;

/// ħ²/(2 m_u) expressed in cm⁻¹·Å² (= h / (8π² c m_u)).
///
/// h/(c m_u) comes out in metres; 1 m = 1e-2 cm⁻¹ × 1e20 Å² gives the 1e18.
/// Evaluates to 16.857 642 80 cm⁻¹·Å².
pub const HBAR2_OVER_2AMU: f64 = PLANCK_J_S
    / (8.0 * std::f64::consts::PI * std::f64::consts::PI * SPEED_OF_LIGHT_M_S * ATOMIC_MASS_KG)
    * 1.0e18;

/// eV per cm⁻¹ used for the GPS reference energies. Kept at the literal
/// published value (CODATA gives 1.239 841 98e-4) so conversions of those
/// reference energies round-trip exactly.
pub const EV_PER_WAVENUMBER: f64 = 1.239_411_88e-4;

/// Speed of light in cm/s, for K_e = (2πc)² μ ω_e².
pub const SPEED_OF_LIGHT_CM_S: f64 = SPEED_OF_LIGHT_M_S * 1.0e2;

/// ħ²/2μ in cm⁻¹·Å² for a reduced mass in amu.
pub fn kinetic_factor(mu: f64) -> Result<f64> {
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(Error::invalid("mu", mu, "reduced mass must be positive"));
    }
    Ok(HBAR2_OVER_2AMU / mu)
}

/// Converts a mass tabulated in units of 10⁻²³ g to amu.
pub fn mass_grams_to_amu(mu_1e23_g: f64) -> Result<f64> {
    if !(mu_1e23_g > 0.0) || !mu_1e23_g.is_finite() {
        return Err(Error::invalid("mu", mu_1e23_g, "mass must be positive"));
    }
    Ok(mu_1e23_g * 1.0e-23 / AMU_IN_GRAMS)
}

/// Inverse of [`mass_grams_to_amu`].
pub fn amu_to_mass_grams(mu_amu: f64) -> f64 {
    mu_amu * AMU_IN_GRAMS / 1.0e-23
}

/// Energy above the well minimum (cm⁻¹) to the GPS convention: eV measured
/// from the dissociation limit.
pub fn wavenumber_to_roy_ev(energy: f64, de: f64) -> f64 {
    (energy - de) * EV_PER_WAVENUMBER
}

/// `E(cm⁻¹) = D_e(cm⁻¹) + E(eV) / 1.23941188e-4`.
pub fn roy_ev_to_wavenumber(energy_ev: f64, de: f64) -> f64 {
    de + energy_ev / EV_PER_WAVENUMBER
}

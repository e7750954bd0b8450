//! Numerical bound states of the radial equation
//!
//! ```text
//! −k R'' + [J(J+1) k / r² + U(r)] R = E R,   k = ħ²/2μ,
//! ```
//!
//! with the exact centrifugal term. Three-point finite differences on a
//! uniform grid with Dirichlet ends give a symmetric tridiagonal matrix;
//! eigenvalues come from Sturm bisection, eigenvectors from inverse
//! iteration. Grid error is O(h²) and is removed by Richardson
//! extrapolation in [`converge`].

pub mod tridiag;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::SpectroscopicParams;
use crate::potential::PotentialModel;
use crate::spectrum::ClosedForm;
use crate::units;

/// Change between successive extrapolants accepted as converged, cm⁻¹.
pub const CONVERGENCE_TOLERANCE: f64 = 0.01;

/// Minimum grid points per de Broglie wavelength at E ≈ D_e.
pub const MIN_POINTS_PER_WAVELENGTH: f64 = 20.0;

/// Relative amplitude below which tail values are ignored when counting
/// nodes and checking boundaries.
const TAIL_THRESHOLD: f64 = 1e-8;

/// Anything the oracle can put into the radial equation.
pub trait RadialPotential {
    /// U(r) in cm⁻¹.
    fn value(&self, r: f64) -> Result<f64>;

    fn pole_radius(&self) -> Option<f64> {
        None
    }

    /// Dissociation energy above the minimum, when the curve has one.
    fn well_depth(&self) -> Option<f64> {
        None
    }
}

impl RadialPotential for PotentialModel {
    fn value(&self, r: f64) -> Result<f64> {
        self.evaluate(r)
    }

    fn pole_radius(&self) -> Option<f64> {
        PotentialModel::pole_radius(self)
    }

    fn well_depth(&self) -> Option<f64> {
        Some(self.depth())
    }
}

/// Uniform grid; the end points carry the Dirichlet condition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub n_points: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        if !(r_min > 0.0) || !(r_max > r_min) || !r_max.is_finite() {
            return Err(Error::invalid("r_min", r_min, "need 0 < r_min < r_max"));
        }
        if n_points < 1000 {
            return Err(Error::invalid("n_points", n_points as f64, "need at least 1000 points"));
        }
        Ok(RadialGrid {
            r_min,
            r_max,
            n_points,
        })
    }

    /// [0.3 r_e, 8 r_e] with 8000 points.
    pub fn default_for(re: f64) -> Self {
        RadialGrid {
            r_min: 0.3 * re,
            r_max: 8.0 * re,
            n_points: 8000,
        }
    }

    pub fn with_points(self, n_points: usize) -> Result<Self> {
        RadialGrid::new(self.r_min, self.r_max, n_points)
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n_points - 1) as f64
    }

    /// Same interval, half the spacing.
    pub fn halved(&self) -> Self {
        RadialGrid {
            n_points: 2 * (self.n_points - 1) + 1,
            ..*self
        }
    }

    pub fn radius(&self, i: usize) -> f64 {
        self.r_min + self.spacing() * i as f64
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenSolution {
    pub nu: u32,
    pub j: u32,
    /// cm⁻¹ above the potential minimum.
    pub energy: f64,
    pub grid: RadialGrid,
    /// R on all grid points (ends are zero), Σ R² h = 1.
    pub wavefunction: Vec<f64>,
}

impl EigenSolution {
    pub fn node_count(&self) -> usize {
        count_nodes(&self.wavefunction)
    }
}

fn count_nodes(values: &[f64]) -> usize {
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut last_sign = 0.0;
    let mut nodes = 0;
    for &v in values {
        if v.abs() <= TAIL_THRESHOLD * peak {
            continue;
        }
        let s = v.signum();
        if last_sign != 0.0 && s != last_sign {
            nodes += 1;
        }
        last_sign = s;
    }
    nodes
}

/// Lowest `n_levels` eigenpairs, ascending, labelled by node count.
pub fn solve_bound_states<P: RadialPotential + ?Sized>(
    model: &P,
    j: u32,
    mu: f64,
    grid: &RadialGrid,
    n_levels: usize,
) -> Result<Vec<EigenSolution>> {
    if n_levels == 0 {
        return Err(Error::EmptyInput("level count"));
    }
    if let Some(pole) = model.pole_radius() {
        if pole >= grid.r_min && pole <= grid.r_max {
            return Err(Error::PoleInGrid {
                pole,
                r_min: grid.r_min,
                r_max: grid.r_max,
            });
        }
    }
    let kinetic = units::kinetic_factor(mu)?;
    let h = grid.spacing();
    let interior = grid.n_points - 2;
    let centrifugal = f64::from(j) * (f64::from(j) + 1.0) * kinetic;
    let hop = kinetic / (h * h);

    let mut diag = Vec::with_capacity(interior);
    for i in 1..=interior {
        let r = grid.radius(i);
        diag.push(2.0 * hop + model.value(r)? + centrifugal / (r * r));
    }
    let off = vec![-hop; interior - 1];

    let energies = tridiag::lowest_eigenvalues(&diag, &off, n_levels);
    let mut out = Vec::with_capacity(energies.len());
    for (k, &energy) in energies.iter().enumerate() {
        let vec = tridiag::eigenvector(&diag, &off, energy);
        let mut wavefunction = Vec::with_capacity(grid.n_points);
        wavefunction.push(0.0);
        wavefunction.extend_from_slice(&vec);
        wavefunction.push(0.0);

        let norm = (wavefunction.iter().map(|v| v * v).sum::<f64>() * h).sqrt();
        let peak = wavefunction.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let first = wavefunction
            .iter()
            .find(|v| v.abs() > 1e-6 * peak)
            .copied()
            .unwrap_or(1.0);
        let scale = first.signum() / norm;
        wavefunction.iter_mut().for_each(|v| *v *= scale);

        let peak = peak / norm;
        let ends = [wavefunction[1].abs(), wavefunction[interior].abs()];
        if ends.iter().any(|&e| e >= TAIL_THRESHOLD * peak) {
            return Err(Error::Resolution(format!(
                "level {k} at J = {j} does not vanish at the grid ends ({:.3e}, {:.3e} of peak); widen [r_min, r_max]",
                ends[0] / peak,
                ends[1] / peak
            )));
        }
        let nodes = count_nodes(&wavefunction);
        if nodes != k {
            return Err(Error::Resolution(format!(
                "level {k} at J = {j} has {nodes} nodes; refine the grid"
            )));
        }
        out.push(EigenSolution {
            nu: k as u32,
            j,
            energy,
            grid: *grid,
            wavefunction,
        });
    }
    Ok(out)
}

/// Richardson-extrapolated eigenvalue with the raw values that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergedLevel {
    pub nu: u32,
    pub j: u32,
    /// E(h) on the coarser grid of the final pair.
    pub coarse: f64,
    /// E(h/2) on the finer grid of the final pair.
    pub fine: f64,
    /// E(h/2) + (E(h/2) − E(h))/3.
    pub extrapolated: f64,
    /// Change of the extrapolant from the previous grid pair.
    pub refinement_change: f64,
    /// Points on the finest grid used.
    pub n_points: usize,
}

fn check_resolution<P: RadialPotential + ?Sized>(model: &P, mu: f64, grid: &RadialGrid) -> Result<()> {
    if let Some(depth) = model.well_depth() {
        let wavelength = 2.0 * std::f64::consts::PI * (units::kinetic_factor(mu)? / depth).sqrt();
        let per_wavelength = wavelength / grid.spacing();
        if per_wavelength < MIN_POINTS_PER_WAVELENGTH {
            return Err(Error::Resolution(format!(
                "{per_wavelength:.1} points per wavelength at E = De (need {MIN_POINTS_PER_WAVELENGTH})"
            )));
        }
    }
    Ok(())
}

/// Converged values for levels ν = 0..n_levels at one J.
///
/// Solves on h, h/2 and h/4 and compares the two Richardson extrapolants;
/// if they differ by more than [`CONVERGENCE_TOLERANCE`], one more halving
/// is tried before giving up.
pub fn converge_levels<P: RadialPotential + ?Sized>(
    model: &P,
    j: u32,
    mu: f64,
    n_levels: usize,
    base_grid: &RadialGrid,
) -> Result<Vec<ConvergedLevel>> {
    check_resolution(model, mu, base_grid)?;
    let energies = |g: &RadialGrid| -> Result<Vec<f64>> {
        Ok(solve_bound_states(model, j, mu, g, n_levels)?
            .into_iter()
            .map(|s| s.energy)
            .collect())
    };
    let extrapolate = |coarse: &[f64], fine: &[f64]| -> Vec<f64> {
        coarse.iter().zip(fine).map(|(c, f)| f + (f - c) / 3.0).collect()
    };

    let mut grid = base_grid.halved();
    let mut coarse = energies(base_grid)?;
    let mut fine = energies(&grid)?;
    let mut previous = extrapolate(&coarse, &fine);
    for _ in 0..2 {
        grid = grid.halved();
        coarse = fine;
        fine = energies(&grid)?;
        let current = extrapolate(&coarse, &fine);
        let worst = previous
            .iter()
            .zip(&current)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if worst < CONVERGENCE_TOLERANCE {
            return Ok((0..n_levels)
                .map(|k| ConvergedLevel {
                    nu: k as u32,
                    j,
                    coarse: coarse[k],
                    fine: fine[k],
                    extrapolated: current[k],
                    refinement_change: current[k] - previous[k],
                    n_points: grid.n_points,
                })
                .collect());
        }
        previous = current;
    }
    Err(Error::Resolution(format!(
        "extrapolated levels at J = {j} still moving after {} points",
        grid.n_points
    )))
}

/// Converged value for a single level.
pub fn converge<P: RadialPotential + ?Sized>(
    model: &P,
    j: u32,
    mu: f64,
    nu: u32,
    base_grid: &RadialGrid,
) -> Result<ConvergedLevel> {
    let mut levels = converge_levels(model, j, mu, nu as usize + 1, base_grid)?;
    Ok(levels.pop().expect("n_levels >= 1"))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeviationRow {
    pub nu: u32,
    pub j: u32,
    pub closed: f64,
    pub oracle: f64,
    /// closed − oracle, cm⁻¹.
    pub delta: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeviationReport {
    pub molecule: String,
    pub rows: Vec<DeviationRow>,
    pub max_abs_delta: f64,
    pub mean_delta: f64,
    /// (J, max |Δ| over ν) in ascending J.
    pub max_abs_by_j: Vec<(u32, f64)>,
}

impl DeviationReport {
    fn from_rows(molecule: String, rows: Vec<DeviationRow>) -> Self {
        let max_abs_delta = rows.iter().map(|r| r.delta.abs()).fold(0.0, f64::max);
        let mean_delta = rows.iter().map(|r| r.delta).sum::<f64>() / rows.len() as f64;
        let mut js: Vec<u32> = rows.iter().map(|r| r.j).collect();
        js.sort_unstable();
        js.dedup();
        let max_abs_by_j = js
            .into_iter()
            .map(|j| {
                let m = rows
                    .iter()
                    .filter(|r| r.j == j)
                    .map(|r| r.delta.abs())
                    .fold(0.0, f64::max);
                (j, m)
            })
            .collect();
        DeviationReport {
            molecule,
            rows,
            max_abs_delta,
            mean_delta,
            max_abs_by_j,
        }
    }
}

/// Closed form against the converged oracle for every (ν, J), ν outermost.
pub fn deviation_report(
    params: &SpectroscopicParams,
    nu_list: &[u32],
    j_list: &[u32],
    base_grid: &RadialGrid,
) -> Result<DeviationReport> {
    let max_nu = *nu_list.iter().max().ok_or(Error::EmptyInput("nu list"))?;
    if j_list.is_empty() {
        return Err(Error::EmptyInput("J list"));
    }
    let closed = ClosedForm::new(params)?;
    let model = PotentialModel::tietz_hua(params);

    let mut by_j = Vec::with_capacity(j_list.len());
    for &j in j_list {
        by_j.push((j, converge_levels(&model, j, params.mu, max_nu as usize + 1, base_grid)?));
    }

    let mut rows = Vec::with_capacity(nu_list.len() * j_list.len());
    for &nu in nu_list {
        for (j, levels) in &by_j {
            let e_closed = closed.level(nu, *j)?.energy;
            let e_oracle = levels[nu as usize].extrapolated;
            rows.push(DeviationRow {
                nu,
                j: *j,
                closed: e_closed,
                oracle: e_oracle,
                delta: e_closed - e_oracle,
            });
        }
    }
    Ok(DeviationReport::from_rows(params.name.clone(), rows))
}

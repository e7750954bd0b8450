//! Invariant checks shared by the property tests and the acceptance runner.
//! Each returns `Err` with a short description of the first violation.
#![allow(dead_code)]

use rovib::lambert::lambert_w0;
use rovib::oracle::{converge_levels, solve_bound_states, RadialGrid};
use rovib::potential::{common_form, verify_varshni, PForm, PotentialModel};
use rovib::rotational::{badawi_coefficients, FactorizationCoefficients};
use rovib::spectrum::{morse_vibrational_energy, wavefunction, ClosedForm};
use rovib::units::kinetic_factor;
use rovib::{derive, SpectroscopicParams};

pub type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn lambert_residual(x: f64) -> Check {
    let w = lambert_w0(x).map_err(|e| format!("W({x:e}): {e}"))?;
    let residual = (w * w.exp() - x).abs();
    ensure(residual <= 1e-13 * x.abs().max(1.0), || {
        format!("W({x:e}) = {w}: residual {residual:e}")
    })
}

/// 1000 arguments log-spaced above the branch point up to 1e6.
pub fn lambert_sweep() -> Check {
    let branch = -(-1.0f64).exp();
    let (lo, hi) = (1e-9f64.ln(), (1e6 - branch).ln());
    for i in 0..1000 {
        let t = (lo + (hi - lo) * i as f64 / 999.0).exp();
        lambert_residual(branch + t)?;
    }
    Ok(())
}

/// Bisection on w e^w = x, w ≥ −1.
pub fn lambert_by_bisection(x: f64) -> f64 {
    let (mut lo, mut hi) = (-1.0f64, 1.0f64.max(x.ln_1p() + 1.0));
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid * mid.exp() < x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn varshni(params: &SpectroscopicParams) -> Check {
    let derived = derive(params).map_err(|e| e.to_string())?;
    let report = verify_varshni(&PotentialModel::tietz_hua(params), &derived).map_err(|e| e.to_string())?;
    ensure(report.holds(), || format!("{}: {report:?}", params.name))
}

/// Tietz-Hua, raw Schiöberg (offset removed), the common form and the
/// P-form agree pointwise on [0.5 r_e, 6 r_e].
pub fn four_forms(params: &SpectroscopicParams) -> Check {
    let d = derive(params).map_err(|e| e.to_string())?;
    let th = PotentialModel::tietz_hua(params);
    let sch = PotentialModel::deformed_schioberg(params, &d).ok_or("q = 0")?;
    let pf = PForm::from_depth(params.de, params.re, d.b, d.q);
    for i in 0..=400 {
        let r = params.re * (0.5 + 5.5 * i as f64 / 400.0);
        if d.pole_radius().is_some_and(|p| (r - p).abs() < 1e-3) {
            continue;
        }
        let values = [
            th.evaluate(r).map_err(|e| e.to_string())?,
            sch.evaluate(r).map_err(|e| e.to_string())?,
            common_form(params.de, params.re, d.b, d.q, r).map_err(|e| e.to_string())?,
            pf.evaluate(r).map_err(|e| e.to_string())?,
        ];
        let spread = values.iter().cloned().fold(f64::MIN, f64::max) - values.iter().cloned().fold(f64::MAX, f64::min);
        let scale = values.iter().fold(params.de, |m, v| m.max(v.abs()));
        ensure(spread <= 1e-10 * scale, || {
            format!("{} r = {r}: forms disagree {values:?}", params.name)
        })?;
    }
    Ok(())
}

/// η = e^{−b r_e} (q = −1) is the Deng-Fan potential with λ = b.
pub fn deng_fan_reduction(de: f64, re: f64, b: f64) -> Check {
    let th = PotentialModel::TietzHua { de, re, b, eta: (-b * re).exp() };
    let df = PotentialModel::DengFan { de, re, lambda: b };
    for i in 0..=200 {
        let r = re * (0.5 + 5.5 * i as f64 / 200.0);
        let (a, c) = (th.evaluate(r).map_err(|e| e.to_string())?, df.evaluate(r).map_err(|e| e.to_string())?);
        ensure((a - c).abs() <= 1e-12 * de.max(a.abs()), || format!("r = {r}: {a} vs {c}"))?;
    }
    Ok(())
}

/// η → 0 reproduces Morse with β = b/(1 − η).
pub fn morse_limit(params: &SpectroscopicParams) -> Check {
    let eta = 1e-8;
    let b = params.b();
    let th = PotentialModel::TietzHua { de: params.de, re: params.re, b, eta };
    let morse = PotentialModel::Morse { de: params.de, re: params.re, beta: b / (1.0 - eta) };
    for i in 0..=200 {
        let r = params.re * (0.5 + 5.5 * i as f64 / 200.0);
        let (a, c) = (th.evaluate(r).map_err(|e| e.to_string())?, morse.evaluate(r).map_err(|e| e.to_string())?);
        ensure((a - c).abs() <= 1e-5 * params.de, || format!("r = {r}: {a} vs {c}"))?;
    }
    Ok(())
}

fn stencil7(f: impl Fn(f64) -> f64, h: f64) -> [f64; 3] {
    let v: Vec<f64> = (-3..=3).map(|k| f(k as f64 * h)).collect();
    let d1 = (-v[0] + 9.0 * v[1] - 45.0 * v[2] + 45.0 * v[4] - 9.0 * v[5] + v[6]) / (60.0 * h);
    let d2 = (2.0 * v[0] - 27.0 * v[1] + 270.0 * v[2] - 490.0 * v[3] + 270.0 * v[4] - 27.0 * v[5] + 2.0 * v[6])
        / (180.0 * h * h);
    [v[3], d1, d2]
}

fn solve3(m: [[f64; 3]; 3], rhs: [f64; 3]) -> [f64; 3] {
    let det = |a: [[f64; 3]; 3]| {
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    };
    let d = det(m);
    let mut out = [0.0; 3];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut a = m;
        for row in 0..3 {
            a[row][col] = rhs[row];
        }
        *slot = det(a) / d;
    }
    out
}

/// Coefficients obtained by matching value, slope and curvature of
/// (r_e/r)² = (u/(y+u))² at y = 0 against the basis {1, s, s²},
/// s = 1/(e^{y+u} + q). Derivatives are taken term by term from the
/// definitions (s′ = −E s², s″ = −E s² + 2E² s³ with E = e^{y+u}).
pub fn series_matched_coefficients(u: f64, eta: f64) -> [f64; 3] {
    let e = u.exp();
    let s = 1.0 / (e - eta * e);
    let d1 = -e * s * s;
    let d2 = -e * s * s + 2.0 * e * e * s * s * s;
    let m = [
        [1.0, s, s * s],
        [0.0, d1, 2.0 * s * d1],
        [0.0, d2, 2.0 * d1 * d1 + 2.0 * s * d2],
    ];
    solve3(m, [1.0, -2.0 / u, 6.0 / (u * u)])
}

/// The closed-form expansion touches (r_e/r)² to second order at r_e:
/// value, slope and curvature agree under 7-point stencils.
pub fn taylor_contact(u: f64, eta: f64) -> Check {
    let c = badawi_coefficients(u, eta).map_err(|e| e.to_string())?;
    let h = 1e-2;
    let got = stencil7(|y| c.expansion(y), h);
    let want = stencil7(|y| (u / (y + u)).powi(2), h);
    for (k, (g, w)) in got.iter().zip(want).enumerate() {
        ensure((g - w).abs() <= 1e-7 * w.abs().max(1.0), || {
            format!("u = {u}, eta = {eta}: derivative {k} {g} vs {w}")
        })?;
    }
    Ok(())
}

pub fn coefficient_oracle(u: f64, eta: f64) -> Check {
    let FactorizationCoefficients { c1, c2, c3, .. } = badawi_coefficients(u, eta).map_err(|e| e.to_string())?;
    let oracle = series_matched_coefficients(u, eta);
    for (got, want) in [c1, c2, c3].iter().zip(oracle) {
        ensure((got - want).abs() <= 1e-8 * want.abs().max(1.0), || {
            format!("u = {u}, eta = {eta}: closed {:?} vs matched {oracle:?}", [c1, c2, c3])
        })?;
    }
    Ok(())
}

/// −k(W′ + W²) + Ṽ(r) = E₀ with W = (ln ψ)′ differentiated numerically.
pub fn riccati_residual(params: &SpectroscopicParams, j: u32) -> Check {
    let cf = ClosedForm::new(params).map_err(|e| e.to_string())?;
    let eff = cf.effective(j).map_err(|e| e.to_string())?;
    let susy = cf.intermediates(j).map_err(|e| e.to_string())?;
    let k = kinetic_factor(cf.mu).map_err(|e| e.to_string())?;
    let veff = PForm { p1: eff.pt1, p2: eff.pt2, p3: eff.pt3, ..cf.pform };
    let h = 1e-3;
    for i in 0..=40 {
        let r = params.re * (0.7 + 1.3 * i as f64 / 40.0);
        let lnpsi = |x: f64| wavefunction(&susy, &cf.pform, x).map(|s| s.ln_value).unwrap_or(f64::NAN);
        let v: Vec<f64> = (-2..=2).map(|n| lnpsi(r + n as f64 * h)).collect();
        let w = (v[0] - 8.0 * v[1] + 8.0 * v[3] - v[4]) / (12.0 * h);
        let dw = (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) / (12.0 * h * h);
        let lhs = -k * (dw + w * w) + veff.evaluate(r).map_err(|e| e.to_string())?;
        ensure((lhs - susy.e0).abs() <= 1e-6 * params.de, || {
            format!("{} J = {j} r = {r}: {lhs} vs E0 = {}", params.name, susy.e0)
        })?;
    }
    Ok(())
}

pub fn ground_state_consistency(params: &SpectroscopicParams, j: u32) -> Check {
    let cf = ClosedForm::new(params).map_err(|e| e.to_string())?;
    let e0 = cf.intermediates(j).map_err(|e| e.to_string())?.e0;
    let level = cf.level(0, j).map_err(|e| e.to_string())?.energy;
    ensure((e0 - level).abs() <= 1e-9 * params.de, || {
        format!("{} J = {j}: E0 = {e0}, E(0, J) = {level}", params.name)
    })
}

/// E increases with ν (0..20) and J (0..30) over bound levels.
pub fn monotonicity(params: &SpectroscopicParams) -> Check {
    let cf = ClosedForm::new(params).map_err(|e| e.to_string())?;
    let energy = |nu, j| cf.level(nu, j).map_err(|e| e.to_string());
    for j in 0..=30 {
        for nu in 0..20 {
            let (a, b) = (energy(nu, j)?, energy(nu + 1, j)?);
            if a.bound && b.bound {
                ensure(b.energy > a.energy, || format!("{} J = {j}: E not rising at nu = {nu}", params.name))?;
            }
        }
    }
    for nu in 0..=20 {
        for j in 0..30 {
            let (a, b) = (energy(nu, j)?, energy(nu, j + 1)?);
            if a.bound && b.bound {
                ensure(b.energy > a.energy, || format!("{} nu = {nu}: E not rising at J = {j}", params.name))?;
            }
        }
    }
    Ok(())
}

/// Eigenvector ν has ν nodes; successive differences shrink by ~4 per halving.
pub fn oracle_nodes_and_convergence(params: &SpectroscopicParams) -> Check {
    let model = PotentialModel::tietz_hua(params);
    let mu = ClosedForm::new(params).map_err(|e| e.to_string())?.mu;
    let grid = RadialGrid::default_for(params.re);
    let mut energies = Vec::new();
    for g in [grid, grid.halved(), grid.halved().halved()] {
        let states = solve_bound_states(&model, 0, mu, &g, 6).map_err(|e| e.to_string())?;
        for s in &states {
            ensure(s.node_count() == s.nu as usize, || {
                format!("{}: level {} has {} nodes", params.name, s.nu, s.node_count())
            })?;
        }
        energies.push(states.iter().map(|s| s.energy).collect::<Vec<_>>());
    }
    for (nu, ((e0, e1), e2)) in energies[0].iter().zip(&energies[1]).zip(&energies[2]).enumerate() {
        let (d1, d2) = (e0 - e1, e1 - e2);
        let ratio = d1 / d2;
        ensure((3.5..4.5).contains(&ratio), || {
            format!("{} nu = {nu}: refinement ratio {ratio}", params.name)
        })?;
    }
    Ok(())
}

/// Oracle on the Morse curve with β fixed by ω_e reproduces the Morse formula.
pub fn morse_oracle(params: &SpectroscopicParams) -> Check {
    let d = derive(params).map_err(|e| e.to_string())?;
    let mu = ClosedForm::new(params).map_err(|e| e.to_string())?.mu;
    let model = PotentialModel::Morse { de: params.de, re: params.re, beta: d.beta_from_we };
    let levels =
        converge_levels(&model, 0, mu, 10, &RadialGrid::default_for(params.re)).map_err(|e| e.to_string())?;
    for l in levels {
        let exact = morse_vibrational_energy(params.de, params.we, l.nu).map_err(|e| e.to_string())?;
        ensure((l.extrapolated - exact).abs() <= 0.02, || {
            format!("{} nu = {}: oracle {} vs {exact}", params.name, l.nu, l.extrapolated)
        })?;
    }
    Ok(())
}

/// ψ decays by 20 r_e and stays finite down to 1e-4 Å (outside any pole).
pub fn wavefunction_behaviour(params: &SpectroscopicParams, j: u32) -> Check {
    let cf = ClosedForm::new(params).map_err(|e| e.to_string())?;
    let susy = cf.intermediates(j).map_err(|e| e.to_string())?;
    ensure(susy.q2 > 0.0 && susy.q1 < 0.0, || {
        format!("{} J = {j}: Q1 = {}, Q2 = {}", params.name, susy.q1, susy.q2)
    })?;
    let at = |r: f64| wavefunction(&susy, &cf.pform, r).map_err(|e| e.to_string());
    let peak = at(params.re)?.ln_value;
    let far = at(20.0 * params.re)?.ln_value;
    ensure(far - peak < -20.0, || format!("{}: ln psi at 20 re only {far} vs {peak}", params.name))?;
    if cf.pform.pole_radius().is_none_or(|p| p < 1e-4) {
        let near = at(1e-4)?;
        ensure(near.value.is_finite() && near.ln_value.is_finite(), || {
            format!("{}: psi(1e-4) = {}", params.name, near.value)
        })?;
    }
    Ok(())
}

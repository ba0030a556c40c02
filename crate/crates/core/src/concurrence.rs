//! Wootters concurrence of two-qubit states.
//!
//! For a density matrix `ρ` the concurrence is `max(λ1 − λ2 − λ3 − λ4, 0)`
//! where the `λ`s, sorted descending, are the square roots of the eigenvalues
//! of `ρ ρ̃` with `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`.
//!
//! Writing `X = √ρ √ρ̃`, the product `ρ ρ̃` is similar to `X X^H`, so the `λ`s
//! are the singular values of `X`. They are read off as the non-negative
//! eigenvalues of the Hermitian embedding `[[0, X], [X^H, 0]]`, which keeps
//! small `λ`s accurate to the rounding level of `X` instead of its square root.
//!
//! The closed forms for the XXZ and z-axis DM thermal states are also here.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, psd_sqrt, ComplexMatrix};
use crate::models::{DMParams, ModelParams, XXZParams};
use crate::pauli::sigma_yy;
use crate::thermal::{gibbs_state, Temperature, ThermalState};

/// Tolerance used when validating a density matrix passed in by the caller.
pub const DENSITY_TOL: f64 = 1e-10;

/// Sorted `λ`s and the resulting concurrence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceResult {
    /// `λ1 ≥ λ2 ≥ λ3 ≥ λ4 ≥ 0`.
    pub lambdas: [f64; 4],
    /// `max(λ1 − λ2 − λ3 − λ4, 0)`.
    pub value: f64,
}

impl ConcurrenceResult {
    /// Sorts the four values descending and applies the concurrence formula.
    pub fn from_lambdas(mut lambdas: [f64; 4]) -> Self {
        lambdas.sort_by(|a, b| b.total_cmp(a));
        let value = (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0);
        ConcurrenceResult { lambdas, value }
    }
}

fn validate_density(rho: &ComplexMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::InvalidDensityMatrix(format!("expected 4x4, got {0}x{0}", rho.dim())));
    }
    let deviation = rho.hermitian_deviation();
    if deviation > DENSITY_TOL {
        return Err(Error::InvalidDensityMatrix(format!("not Hermitian (deviation {deviation:e})")));
    }
    let trace = rho.trace();
    if (trace - 1.0).norm() > DENSITY_TOL {
        return Err(Error::InvalidDensityMatrix(format!("trace {trace} differs from 1")));
    }
    Ok(())
}

fn flip_unchecked(m: &ComplexMatrix) -> ComplexMatrix {
    let yy = sigma_yy();
    &(&yy * &m.conj()) * &yy
}

/// `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`.
pub fn spin_flip(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    validate_density(rho)?;
    let min = hermitian_eigen(rho)?.eigenvalues[0];
    if min < -crate::linalg::PSD_TOL {
        return Err(Error::InvalidDensityMatrix(format!("negative eigenvalue {min:e}")));
    }
    Ok(flip_unchecked(rho))
}

/// Concurrence of an arbitrary two-qubit density matrix.
pub fn wootters_concurrence(rho: &ComplexMatrix) -> Result<ConcurrenceResult> {
    validate_density(rho)?;
    let root = psd_sqrt(rho).map_err(|e| match e {
        Error::NotPsd { eigenvalue } => Error::InvalidDensityMatrix(format!("negative eigenvalue {eigenvalue:e}")),
        other => other,
    })?;
    // √ρ̃ is the spin flip of √ρ, since conjugation by σy⊗σy and complex
    // conjugation both commute with the square root.
    let x = &root * &flip_unchecked(&root);

    let mut embed = ComplexMatrix::zeros(8);
    for i in 0..4 {
        for j in 0..4 {
            embed[(i, j + 4)] = x[(i, j)];
            embed[(j + 4, i)] = x[(i, j)].conj();
        }
    }
    let eig = hermitian_eigen(&embed)?;
    // Eigenvalues come in ± pairs of singular values; the top four are λ1..λ4.
    let mut lambdas = [0.0; 4];
    for (l, &e) in lambdas.iter_mut().zip(eig.eigenvalues.iter().rev()) {
        *l = e.max(0.0);
    }
    Ok(ConcurrenceResult::from_lambdas(lambdas))
}

/// Concurrence of a validated Gibbs state.
pub fn state_concurrence(state: &ThermalState) -> Result<ConcurrenceResult> {
    wootters_concurrence(state.rho())
}

/// Numeric pipeline: Hamiltonian, Gibbs state, then Wootters concurrence.
pub fn numeric_concurrence(model: &ModelParams, t: Temperature) -> Result<ConcurrenceResult> {
    wootters_concurrence(gibbs_state(&model.hamiltonian(), t)?.rho())
}

/// `λ`s of the XXZ Gibbs state in closed form:
/// `e^{−JΔ/T}` (twice), `e^{J/T}` and `e^{−J/T}`, each over `2(cosh(J/T) + e^{−JΔ/T})`.
pub fn closed_lambdas_xxz(p: &XXZParams, t: Temperature) -> ConcurrenceResult {
    let x = p.j / t.value();
    let exps = [-p.j * p.delta / t.value(), x, -x];
    let m = exps.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let [a, b, c] = exps.map(|e| (e - m).exp());
    let denom = b + c + 2.0 * a;
    ConcurrenceResult::from_lambdas([a / denom, a / denom, b / denom, c / denom])
}

/// `λ`s of the DM Gibbs state in closed form:
/// `1` (twice) and `e^{±x}`, each over `2(cosh x + 1)` with `x = J√(1+D²)/T`.
pub fn closed_lambdas_dm(p: &DMParams, t: Temperature) -> ConcurrenceResult {
    let x = p.coupling() / t.value();
    let m = x.abs();
    let (a, b, c) = ((-m).exp(), (x - m).exp(), (-x - m).exp());
    let denom = b + c + 2.0 * a;
    ConcurrenceResult::from_lambdas([a / denom, a / denom, b / denom, c / denom])
}

/// `(sinh x − e^{−xΔ}) / (cosh x + e^{−xΔ})`, clamped at zero, for `x > 0`.
///
/// Evaluated after dividing through by `e^x / 2` so it stays finite at any `x`.
fn xxz_branch(x: f64, delta: f64) -> f64 {
    let cross = 2.0 * (-x * (1.0 + delta)).exp();
    let tail = (-2.0 * x).exp();
    let value = (1.0 - tail - cross) / (1.0 + tail + cross);
    value.max(0.0)
}

/// Antiferromagnetic (`J > 0`) XXZ thermal concurrence.
pub fn concurrence_xxz_afm(p: &XXZParams, t: Temperature) -> Result<f64> {
    if p.j <= 0.0 {
        return Err(Error::WrongSign { j: p.j, branch: "antiferromagnetic" });
    }
    if p.delta <= -1.0 {
        return Ok(0.0);
    }
    Ok(xxz_branch(p.j / t.value(), p.delta))
}

/// Ferromagnetic (`J < 0`) XXZ thermal concurrence:
/// `(sinh(|J|/T) − e^{|J|Δ/T}) / (cosh(|J|/T) + e^{|J|Δ/T})`, clamped at zero.
pub fn concurrence_xxz_fm(p: &XXZParams, t: Temperature) -> Result<f64> {
    if p.j >= 0.0 {
        return Err(Error::WrongSign { j: p.j, branch: "ferromagnetic" });
    }
    if p.delta >= 1.0 {
        return Ok(0.0);
    }
    Ok(xxz_branch(p.j.abs() / t.value(), -p.delta))
}

/// XXZ concurrence, choosing the branch from the sign of `J`.
pub fn concurrence_xxz(p: &XXZParams, t: Temperature) -> Result<f64> {
    if p.j > 0.0 {
        concurrence_xxz_afm(p, t)
    } else if p.j < 0.0 {
        concurrence_xxz_fm(p, t)
    } else {
        Err(Error::DegenerateModel)
    }
}

/// `(sinh x − 1) / (cosh x + 1)` clamped at zero, with `x = |J|√(1+D²)/T`.
pub fn concurrence_dm(p: &DMParams, t: Temperature) -> Result<f64> {
    if p.is_degenerate() {
        return Err(Error::DegenerateModel);
    }
    let x = p.coupling().abs() / t.value();
    let e1 = (-x).exp();
    let e2 = e1 * e1;
    Ok(((1.0 - e2 - 2.0 * e1) / (1.0 + e2 + 2.0 * e1)).max(0.0))
}

/// Closed-form concurrence of any model that has one.
pub fn closed_concurrence(model: &ModelParams, t: Temperature) -> Result<f64> {
    match model {
        ModelParams::Xxz(p) => concurrence_xxz(p, t),
        ModelParams::Dm(p) => concurrence_dm(p, t),
        ModelParams::General(_) => Err(Error::NoClosedForm),
    }
}

/// `Tr(ρ ρ̃)`, which equals the sum of the squared `λ`s.
pub fn flip_overlap(rho: &ComplexMatrix) -> Result<f64> {
    let flipped = spin_flip(rho)?;
    let tr: Complex64 = (rho * &flipped).trace();
    Ok(tr.re)
}

//! Gibbs states `ρ(T) = exp(−H/T)/Z` with Boltzmann's constant set to one.
//!
//! [`gibbs_state`] works for any Hermitian Hamiltonian by diagonalizing it.
//! [`closed_rho_xxz`] and [`closed_rho_dm`] write the same states down
//! entry by entry, serving as an independent reference for the numeric route.
//!
//! All exponentials are evaluated relative to the largest exponent, so very
//! low temperatures underflow the excited populations to zero instead of
//! overflowing the ground population.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, ComplexMatrix};
use crate::models::{DMParams, ModelParams, XXZParams};

/// Tolerance on Hermiticity, unit trace and positivity of a [`ThermalState`].
pub const STATE_TOL: f64 = 1e-12;

/// Temperature in units of the exchange constant (k = 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature(f64);

impl Temperature {
    pub fn new(value: f64) -> Result<Self> {
        if value > 0.0 && value.is_finite() {
            Ok(Temperature(value))
        } else {
            Err(Error::TemperatureOutOfRange { value })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// A validated two-qubit Gibbs state.
#[derive(Debug, Clone)]
pub struct ThermalState {
    rho: ComplexMatrix,
    temperature: Temperature,
    model: Option<ModelParams>,
}

impl ThermalState {
    /// Wraps `rho` after checking it is Hermitian, unit-trace and positive
    /// semidefinite to within [`STATE_TOL`].
    pub fn new(rho: ComplexMatrix, temperature: Temperature, model: Option<ModelParams>) -> Result<Self> {
        let deviation = rho.hermitian_deviation();
        if deviation > STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("not Hermitian (deviation {deviation:e})")));
        }
        let trace = rho.trace();
        if (trace - 1.0).norm() > STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {trace} differs from 1")));
        }
        let min = hermitian_eigen(&rho)?.eigenvalues[0];
        if min < -STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("negative eigenvalue {min:e}")));
        }
        Ok(ThermalState { rho, temperature, model })
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn temperature(&self) -> Temperature {
        self.temperature
    }

    /// Source model, when the state was built from one.
    pub fn model(&self) -> Option<&ModelParams> {
        self.model.as_ref()
    }

    pub fn into_rho(self) -> ComplexMatrix {
        self.rho
    }
}

fn shifted_gibbs(h: &ComplexMatrix, t: Temperature) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(h)?;
    let ground = eig.eigenvalues[0];
    let beta = 1.0 / t.value();
    let z: f64 = eig.eigenvalues.iter().map(|&e| (-(e - ground) * beta).exp()).sum();
    if !z.is_finite() || z < 1.0 {
        return Err(Error::TemperatureOutOfRange { value: t.value() });
    }
    Ok(eig.map_eigenvalues(|e| (-(e - ground) * beta).exp() / z))
}

/// Numeric Gibbs state of an arbitrary Hermitian Hamiltonian.
pub fn gibbs_state(h: &ComplexMatrix, t: Temperature) -> Result<ThermalState> {
    ThermalState::new(shifted_gibbs(h, t)?, t, None)
}

/// Numeric Gibbs state of a model, tagged with its parameters.
pub fn thermal_state(model: &ModelParams, t: Temperature) -> Result<ThermalState> {
    ThermalState::new(shifted_gibbs(&model.hamiltonian(), t)?, t, Some(*model))
}

/// Weights of the central `{|01>, |10>}` block relative to a shared scale:
/// `(cosh x, sinh x) · e^{shift}` evaluated without overflow as
/// `e^{shift + |x|} (1 ± e^{−2|x|}) / 2`.
fn scaled_cosh_sinh(x: f64, log_scale: f64) -> (f64, f64) {
    let big = log_scale.exp();
    let ch = big * (1.0 + (-2.0 * x.abs()).exp()) * 0.5;
    let sh = big * (-(-2.0 * x.abs()).exp_m1()) * 0.5 * x.signum();
    (ch, sh)
}

/// Closed-form XXZ Gibbs state: corners `e^{−JΔ/2T}`, central block
/// `e^{JΔ/2T}[[cosh, −sinh], [−sinh, cosh]](J/T)`, over
/// `Z = 2(e^{JΔ/2T} cosh(J/T) + e^{−JΔ/2T})`.
pub fn closed_rho_xxz(p: &XXZParams, t: Temperature) -> Result<ThermalState> {
    let x = p.j / t.value();
    let a = 0.5 * p.j * p.delta / t.value();
    let m = (-a).max(a + x.abs());
    let corner = (-a - m).exp();
    let (ch, sh) = scaled_cosh_sinh(x, a + x.abs() - m);
    let z = 2.0 * (ch + corner);

    let mut rho = ComplexMatrix::from_real_diag(&[corner / z, ch / z, ch / z, corner / z]);
    rho[(1, 2)] = Complex64::new(-sh / z, 0.0);
    rho[(2, 1)] = Complex64::new(-sh / z, 0.0);
    ThermalState::new(rho, t, Some(ModelParams::Xxz(*p)))
}

/// The DM Gibbs state with the phase of its coherences set to `phi`:
/// corners `1`, diagonal `cosh x`, `rho[1,2] = −e^{iφ} sinh x` and
/// `rho[2,1] = −e^{−iφ} sinh x`, with `x = J√(1+D²)/T` and `Z = 2(cosh x + 1)`.
///
/// Only `phi = θ = arctan D` is the Gibbs state of [`crate::models::build_dm`];
/// other phases give states with identical populations and coherence moduli.
pub fn dm_rho_with_phase(p: &DMParams, t: Temperature, phi: f64) -> Result<ThermalState> {
    let x = p.coupling() / t.value();
    let corner = (-x.abs()).exp();
    let (ch, sh) = scaled_cosh_sinh(x, 0.0);
    let z = 2.0 * (ch + corner);

    let mut rho = ComplexMatrix::from_real_diag(&[corner / z, ch / z, ch / z, corner / z]);
    rho[(1, 2)] = Complex64::from_polar(-sh / z, phi);
    rho[(2, 1)] = Complex64::from_polar(-sh / z, -phi);
    ThermalState::new(rho, t, Some(ModelParams::Dm(*p)))
}

/// Closed-form Gibbs state of the z-axis DM model.
///
/// With `H[1,2] = J(1 + iD)` the coherence `rho[1,2]` carries `e^{+iθ}`;
/// the matrix is the complex conjugate of the one obtained under the
/// opposite ladder-operator convention.
pub fn closed_rho_dm(p: &DMParams, t: Temperature) -> Result<ThermalState> {
    dm_rho_with_phase(p, t, p.theta())
}

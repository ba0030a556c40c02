//! Critical temperature above which the thermal concurrence vanishes.
//!
//! For the XXZ model `T_C` solves `sinh(J/T) = e^{−JΔ/T}` (antiferromagnet)
//! or `sinh(|J|/T) = e^{|J|Δ/T}` (ferromagnet); both are found by bisection.
//! The z-axis DM model has `T_C = |J|√(1+D²) / arcsinh(1)` in closed form.

use crate::error::{Error, Result};
use crate::models::{DMParams, XXZParams};

/// Lower end of the bisection bracket, in units of `|J|`.
const BRACKET_LO: f64 = 1e-8;
/// Maximum number of times the upper end is doubled from `|J|`.
const MAX_DOUBLINGS: usize = 60;
const MAX_BISECTIONS: usize = 200;

/// Which XXZ branch a critical temperature refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Antiferromagnetic,
    Ferromagnetic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TcResult {
    /// `None` when the state is unentangled at every temperature.
    pub tc: Option<f64>,
    /// Left side minus right side of the defining equation at `tc`.
    pub residual: Option<f64>,
    /// Search interval that contained the sign change; `None` for closed forms.
    pub bracket: Option<(f64, f64)>,
}

impl TcResult {
    pub fn exists(&self) -> bool {
        self.tc.is_some()
    }

    fn absent() -> Self {
        TcResult { tc: None, residual: None, bracket: None }
    }
}

/// `sinh(x) − e^{−xa}` divided by `e^x / 2`; same sign, no overflow.
fn scaled_residual(x: f64, a: f64) -> f64 {
    1.0 - (-2.0 * x).exp() - 2.0 * (-x * (1.0 + a)).exp()
}

/// Root in `T` of `sinh(s/T) = e^{−s·a/T}` for `s > 0`, `a > −1`.
fn solve_xxz(scale: f64, a: f64) -> Result<TcResult> {
    let g = |t: f64| scaled_residual(scale / t, a);

    let mut lo = BRACKET_LO * scale;
    if g(lo) <= 0.0 {
        return Err(Error::NoRoot);
    }
    let mut hi = scale;
    let mut doublings = 0;
    while g(hi) > 0.0 {
        if doublings == MAX_DOUBLINGS {
            return Err(Error::NoRoot);
        }
        hi *= 2.0;
        doublings += 1;
    }
    let bracket = (lo, hi);

    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let residual = |t: f64| (scale / t).sinh() - (-scale * a / t).exp();
    let (r_lo, r_hi) = (residual(lo), residual(hi));
    let (tc, r) = if r_lo.abs() <= r_hi.abs() { (lo, r_lo) } else { (hi, r_hi) };
    Ok(TcResult { tc: Some(tc), residual: Some(r), bracket: Some(bracket) })
}

pub fn tc_xxz_afm(p: &XXZParams) -> Result<TcResult> {
    if p.j <= 0.0 {
        return Err(Error::WrongSign { j: p.j, branch: "antiferromagnetic" });
    }
    if p.delta <= -1.0 {
        return Ok(TcResult::absent());
    }
    solve_xxz(p.j, p.delta)
}

pub fn tc_xxz_fm(p: &XXZParams) -> Result<TcResult> {
    if p.j >= 0.0 {
        return Err(Error::WrongSign { j: p.j, branch: "ferromagnetic" });
    }
    if p.delta >= 1.0 {
        return Ok(TcResult::absent());
    }
    solve_xxz(p.j.abs(), -p.delta)
}

/// `T_C = |J|√(1+D²) / arcsinh(1)`, with the residual `sinh(|J|√(1+D²)/T_C) − 1`.
pub fn tc_dm(p: &DMParams) -> Result<TcResult> {
    if p.is_degenerate() {
        return Err(Error::DegenerateModel);
    }
    let scale = p.coupling().abs();
    let tc = scale / 1f64.asinh();
    let residual = (scale / tc).sinh() - 1.0;
    Ok(TcResult { tc: Some(tc), residual: Some(residual), bracket: None })
}

/// `T_C` across a grid of anisotropies; per-point failures are kept in place.
pub fn tc_phase_curve(phase: Phase, delta_grid: &[f64], j: f64) -> Vec<(f64, Result<TcResult>)> {
    delta_grid
        .iter()
        .map(|&delta| {
            let result = XXZParams::new(j, delta).and_then(|p| match phase {
                Phase::Antiferromagnetic => tc_xxz_afm(&p),
                Phase::Ferromagnetic => tc_xxz_fm(&p),
            });
            (delta, result)
        })
        .collect()
}

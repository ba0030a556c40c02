//! Two-qubit Hamiltonians in the standard basis {|00>, |01>, |10>, |11>}.
//!
//! Index 0 is |00> and the left factor of every Kronecker product is qubit 1.
//! Besides the matrix builders, the XXZ and z-axis DM models expose their
//! spectra in closed form so the numeric pipeline can be checked against them.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron, ComplexMatrix};
use crate::pauli;

fn ensure_finite(values: &[f64]) -> Result<()> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFiniteParameter)
    }
}

/// `H = (J/2)(σ1x σ2x + σ1y σ2y + Δ σ1z σ2z)`.
///
/// `J > 0` is antiferromagnetic, `J < 0` ferromagnetic. `J = 0` is accepted
/// (the Hamiltonian vanishes) but is rejected by the concurrence and
/// critical-temperature routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XXZParams {
    pub j: f64,
    pub delta: f64,
}

impl XXZParams {
    pub fn new(j: f64, delta: f64) -> Result<Self> {
        ensure_finite(&[j, delta])?;
        Ok(XXZParams { j, delta })
    }

    pub fn is_degenerate(&self) -> bool {
        self.j == 0.0
    }
}

/// `H = J[(1 + iD) σ1+ σ2- + (1 − iD) σ1- σ2+]`: XY exchange plus a DM vector `D ẑ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DMParams {
    pub j: f64,
    pub d: f64,
}

impl DMParams {
    pub fn new(j: f64, d: f64) -> Result<Self> {
        ensure_finite(&[j, d])?;
        Ok(DMParams { j, d })
    }

    /// Phase `θ = arctan D` of the `|01>`/`|10>` coupling.
    pub fn theta(&self) -> f64 {
        self.d.atan()
    }

    /// Energy scale `J √(1 + D²)` (signed like `J`).
    pub fn coupling(&self) -> f64 {
        self.j * self.d.hypot(1.0)
    }

    pub fn is_degenerate(&self) -> bool {
        self.j == 0.0
    }
}

/// XXZ exchange plus an arbitrary DM vector. Only the numeric pipeline handles this model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralHeisenbergDMParams {
    pub j: f64,
    pub delta: f64,
    pub dvec: [f64; 3],
}

impl GeneralHeisenbergDMParams {
    pub fn new(j: f64, delta: f64, dvec: [f64; 3]) -> Result<Self> {
        ensure_finite(&[j, delta, dvec[0], dvec[1], dvec[2]])?;
        Ok(GeneralHeisenbergDMParams { j, delta, dvec })
    }
}

/// Any of the supported two-qubit models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelParams {
    Xxz(XXZParams),
    Dm(DMParams),
    General(GeneralHeisenbergDMParams),
}

impl ModelParams {
    pub fn j(&self) -> f64 {
        match self {
            ModelParams::Xxz(p) => p.j,
            ModelParams::Dm(p) => p.j,
            ModelParams::General(p) => p.j,
        }
    }

    pub fn hamiltonian(&self) -> ComplexMatrix {
        match self {
            ModelParams::Xxz(p) => build_xxz(p),
            ModelParams::Dm(p) => build_dm(p),
            ModelParams::General(p) => build_general(p),
        }
    }
}

impl fmt::Display for ModelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelParams::Xxz(p) => write!(f, "xxz(J={}, delta={})", p.j, p.delta),
            ModelParams::Dm(p) => write!(f, "dm(J={}, D={})", p.j, p.d),
            ModelParams::General(p) => {
                write!(f, "general(J={}, delta={}, Dvec=({}, {}, {}))", p.j, p.delta, p.dvec[0], p.dvec[1], p.dvec[2])
            }
        }
    }
}

impl From<XXZParams> for ModelParams {
    fn from(p: XXZParams) -> Self {
        ModelParams::Xxz(p)
    }
}

impl From<DMParams> for ModelParams {
    fn from(p: DMParams) -> Self {
        ModelParams::Dm(p)
    }
}

impl From<GeneralHeisenbergDMParams> for ModelParams {
    fn from(p: GeneralHeisenbergDMParams) -> Self {
        ModelParams::General(p)
    }
}

pub fn build_xxz(p: &XXZParams) -> ComplexMatrix {
    let z = 0.5 * p.j * p.delta;
    let mut h = ComplexMatrix::from_real_diag(&[z, -z, -z, z]);
    h[(1, 2)] = Complex64::new(p.j, 0.0);
    h[(2, 1)] = Complex64::new(p.j, 0.0);
    h
}

pub fn build_dm(p: &DMParams) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(4);
    // σ1+ σ2- takes |10> to |01>.
    h[(1, 2)] = Complex64::new(p.j, p.j * p.d);
    h[(2, 1)] = Complex64::new(p.j, -p.j * p.d);
    h
}

/// `(J/2)[σ1·σ2 with Δ on zz + D·(σ1 × σ2)]`, assembled from Kronecker products.
pub fn build_general(p: &GeneralHeisenbergDMParams) -> ComplexMatrix {
    let [sx, sy, sz] = pauli::sigma_vec();
    let xx = kron(&sx, &sx);
    let yy = kron(&sy, &sy);
    let zz = kron(&sz, &sz).scale_real(p.delta);
    let mut sum = &(&xx + &yy) + &zz;

    // (σ1 × σ2)_a = ε_abc σ1b σ2c
    let cross =
        [&kron(&sy, &sz) - &kron(&sz, &sy), &kron(&sz, &sx) - &kron(&sx, &sz), &kron(&sx, &sy) - &kron(&sy, &sx)];
    for (d, term) in p.dvec.iter().zip(&cross) {
        if *d != 0.0 {
            sum = &sum + &term.scale_real(*d);
        }
    }
    sum.scale_real(0.5 * p.j)
}

/// Symbolic name of a closed-form eigenvector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LevelLabel {
    Ket00,
    Ket11,
    /// `(|01> + |10>)/√2`
    PsiPlus,
    /// `(|01> − |10>)/√2`
    PsiMinus,
    /// DM level at `+J√(1+D²)`.
    ChiralPlus,
    /// DM level at `−J√(1+D²)`.
    ChiralMinus,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Level {
    pub energy: f64,
    pub vector: [Complex64; 4],
    pub label: LevelLabel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub levels: Vec<Level>,
}

impl Spectrum {
    pub fn sorted_energies(&self) -> Vec<f64> {
        let mut e: Vec<f64> = self.levels.iter().map(|l| l.energy).collect();
        e.sort_by(f64::total_cmp);
        e
    }

    pub fn ground_energy(&self) -> f64 {
        self.levels.iter().map(|l| l.energy).fold(f64::INFINITY, f64::min)
    }

    /// Labels of every level within `tol` of the ground energy.
    pub fn ground_labels(&self, tol: f64) -> Vec<LevelLabel> {
        let e0 = self.ground_energy();
        self.levels.iter().filter(|l| l.energy - e0 <= tol).map(|l| l.label).collect()
    }

    pub fn level(&self, label: LevelLabel) -> Option<&Level> {
        self.levels.iter().find(|l| l.label == label)
    }
}

fn ket(amplitudes: [(usize, Complex64); 2]) -> [Complex64; 4] {
    let mut v = [Complex64::new(0.0, 0.0); 4];
    for (i, a) in amplitudes {
        v[i] += a;
    }
    v
}

fn basis(i: usize) -> [Complex64; 4] {
    let mut v = [Complex64::new(0.0, 0.0); 4];
    v[i] = Complex64::new(1.0, 0.0);
    v
}

pub fn closed_spectrum_xxz(p: &XXZParams) -> Spectrum {
    let half = 0.5 * p.j * p.delta;
    let r = Complex64::new(FRAC_1_SQRT_2, 0.0);
    Spectrum {
        levels: vec![
            Level { energy: half, vector: basis(0), label: LevelLabel::Ket00 },
            Level { energy: half, vector: basis(3), label: LevelLabel::Ket11 },
            Level { energy: -half + p.j, vector: ket([(1, r), (2, r)]), label: LevelLabel::PsiPlus },
            Level { energy: -half - p.j, vector: ket([(1, r), (2, -r)]), label: LevelLabel::PsiMinus },
        ],
    }
}

/// Closed-form DM spectrum. The chiral levels are `(|01> ± e^{−iθ}|10>)/√2`,
/// the phase sign following from `H[1,2] = J(1 + iD)`.
pub fn closed_spectrum_dm(p: &DMParams) -> Spectrum {
    let e = p.coupling();
    let r = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let phased = Complex64::from_polar(FRAC_1_SQRT_2, -p.theta());
    Spectrum {
        levels: vec![
            Level { energy: 0.0, vector: basis(0), label: LevelLabel::Ket00 },
            Level { energy: 0.0, vector: basis(3), label: LevelLabel::Ket11 },
            Level { energy: e, vector: ket([(1, r), (2, phased)]), label: LevelLabel::ChiralPlus },
            Level { energy: -e, vector: ket([(1, r), (2, -phased)]), label: LevelLabel::ChiralMinus },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eigen;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn xxz_xy_limit() {
        let h = build_xxz(&XXZParams::new(1.0, 0.0).unwrap());
        let mut expected = ComplexMatrix::zeros(4);
        expected[(1, 2)] = c(1.0, 0.0);
        expected[(2, 1)] = c(1.0, 0.0);
        assert_eq!(h, expected);
    }

    #[test]
    fn xxz_isotropic() {
        let h = build_xxz(&XXZParams::new(1.0, 1.0).unwrap());
        let mut expected = ComplexMatrix::from_real_diag(&[0.5, -0.5, -0.5, 0.5]);
        expected[(1, 2)] = c(1.0, 0.0);
        expected[(2, 1)] = c(1.0, 0.0);
        assert_eq!(h, expected);
    }

    #[test]
    fn xxz_zero_coupling_is_zero_matrix() {
        let p = XXZParams::new(0.0, 5.0).unwrap();
        assert!(p.is_degenerate());
        assert_eq!(build_xxz(&p).frobenius_norm(), 0.0);
    }

    #[test]
    fn dm_entries() {
        let h = build_dm(&DMParams::new(1.0, 0.0).unwrap());
        assert_eq!(h, build_xxz(&XXZParams::new(1.0, 0.0).unwrap()));

        let h = build_dm(&DMParams::new(1.0, 1.0).unwrap());
        assert_eq!(h[(1, 2)], c(1.0, 1.0));
        assert_eq!(h[(2, 1)], c(1.0, -1.0));
        let nonzero = h.as_slice().iter().filter(|z| z.norm() != 0.0).count();
        assert_eq!(nonzero, 2);

        let h = build_dm(&DMParams::new(-1.0, 2.0).unwrap());
        assert_eq!(h[(1, 2)], c(-1.0, -2.0));
    }

    #[test]
    fn dm_ladder_form_matches_builder() {
        // J[(1+iD) σ1+σ2- + (1-iD) σ1-σ2+] from Kronecker products.
        let (j, d) = (0.7, -1.3);
        let up_down = kron(&pauli::sigma_plus(), &pauli::sigma_minus());
        let down_up = kron(&pauli::sigma_minus(), &pauli::sigma_plus());
        let h = &up_down.scale(c(j, j * d)) + &down_up.scale(c(j, -j * d));
        assert!(h.max_abs_diff(&build_dm(&DMParams::new(j, d).unwrap())) < 1e-15);
    }

    #[test]
    fn general_reductions() {
        for &j in &[1.0, -2.0, 0.5] {
            for &d in &[-3.0, 0.0, 1.0, 2.5] {
                let g = build_general(&GeneralHeisenbergDMParams::new(j, 0.0, [0.0, 0.0, d]).unwrap());
                assert!(g.max_abs_diff(&build_dm(&DMParams::new(j, d).unwrap())) <= 1e-15);
            }
            for &delta in &[-2.0, 0.0, 0.5, 1.0] {
                let g = build_general(&GeneralHeisenbergDMParams::new(j, delta, [0.0; 3]).unwrap());
                assert!(g.max_abs_diff(&build_xxz(&XXZParams::new(j, delta).unwrap())) <= 1e-15);
            }
        }
    }

    #[test]
    fn general_dm_along_x() {
        // σ1y σ2z − σ1z σ2y, expanded by hand with σy = [[0,-i],[i,0]]:
        // σy⊗σz has (0,2)=-i, (1,3)=+i, (2,0)=+i, (3,1)=-i;
        // σz⊗σy has (0,1)=-i, (1,0)=+i, (2,3)=+i, (3,2)=-i.
        let g = build_general(&GeneralHeisenbergDMParams::new(1.0, 0.0, [1.0, 0.0, 0.0]).unwrap());
        let mut expected = build_xxz(&XXZParams::new(1.0, 0.0).unwrap());
        let half_i = c(0.0, 0.5);
        for &(r, col, sign) in &[
            (0, 2, -1.0),
            (1, 3, 1.0),
            (2, 0, 1.0),
            (3, 1, -1.0),
            (0, 1, 1.0),
            (1, 0, -1.0),
            (2, 3, -1.0),
            (3, 2, 1.0),
        ] {
            expected[(r, col)] += half_i * sign;
        }
        assert!(g.max_abs_diff(&expected) < 1e-15);
        assert!(g.is_hermitian(0.0));
        // Couples |00> to the single-excitation sector.
        assert!(g[(0, 1)].norm() > 0.0 && g[(0, 2)].norm() > 0.0);
        let eig = hermitian_eigen(&g).unwrap();
        assert!(eig.reconstruct().max_abs_diff(&g) < 1e-14);
    }

    #[test]
    fn built_hamiltonians_are_hermitian_and_traceless() {
        let models: Vec<ModelParams> = vec![
            XXZParams::new(1.3, -0.7).unwrap().into(),
            DMParams::new(-2.0, 1.5).unwrap().into(),
            GeneralHeisenbergDMParams::new(0.8, 0.3, [0.2, -1.1, 0.7]).unwrap().into(),
        ];
        for m in models {
            let h = m.hamiltonian();
            assert!(h.hermitian_deviation() <= 1e-15, "{m}");
            assert!(h.trace().norm() <= 1e-15, "{m}");
        }
    }

    #[test]
    fn closed_xxz_spectra() {
        let s = closed_spectrum_xxz(&XXZParams::new(1.0, 1.0).unwrap());
        assert_eq!(s.sorted_energies(), vec![-1.5, 0.5, 0.5, 0.5]);
        assert_eq!(s.ground_labels(1e-12), vec![LevelLabel::PsiMinus]);

        let s = closed_spectrum_xxz(&XXZParams::new(1.0, -2.0).unwrap());
        assert_eq!(s.ground_labels(1e-12), vec![LevelLabel::Ket00, LevelLabel::Ket11]);
        assert_eq!(s.ground_energy(), -1.0);
        assert_eq!(s.level(LevelLabel::PsiPlus).unwrap().energy, 2.0);
        assert_eq!(s.level(LevelLabel::PsiMinus).unwrap().energy, 0.0);

        let s = closed_spectrum_xxz(&XXZParams::new(-1.0, 0.0).unwrap());
        assert_eq!(s.ground_labels(1e-12), vec![LevelLabel::PsiPlus]);
        assert_eq!(s.ground_energy(), -1.0);
    }

    #[test]
    fn closed_dm_spectra() {
        let p = DMParams::new(1.0, 0.0).unwrap();
        assert_eq!(closed_spectrum_dm(&p).sorted_energies(), vec![-1.0, 0.0, 0.0, 1.0]);
        assert_eq!(p.theta(), 0.0);

        let p = DMParams::new(1.0, 1.0).unwrap();
        let e = closed_spectrum_dm(&p).sorted_energies();
        let r2 = 2f64.sqrt();
        assert!((e[0] + r2).abs() < 1e-15 && (e[3] - r2).abs() < 1e-15);
        assert!((p.theta() - std::f64::consts::FRAC_PI_4).abs() < 1e-15);

        let p = DMParams::new(2.0, -1.0).unwrap();
        let e = closed_spectrum_dm(&p).sorted_energies();
        assert!((e[0] + 2.0 * r2).abs() < 1e-14 && (e[3] - 2.0 * r2).abs() < 1e-14);
        assert!((p.theta() + std::f64::consts::FRAC_PI_4).abs() < 1e-15);
    }

    fn apply(h: &ComplexMatrix, v: &[Complex64; 4]) -> [Complex64; 4] {
        let mut out = [c(0.0, 0.0); 4];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                *o += h[(i, j)] * vj;
            }
        }
        out
    }

    fn check_spectrum(h: &ComplexMatrix, s: &Spectrum) {
        for (a, la) in s.levels.iter().enumerate() {
            let hv = apply(h, &la.vector);
            for (h, v) in hv.iter().zip(&la.vector) {
                assert!((h - v * la.energy).norm() < 1e-14, "{:?}", la.label);
            }
            for lb in &s.levels[a..] {
                let ip: Complex64 = la.vector.iter().zip(&lb.vector).map(|(x, y)| x.conj() * y).sum();
                let expected = if la.label == lb.label { 1.0 } else { 0.0 };
                assert!((ip - expected).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn closed_vectors_are_orthonormal_eigenvectors() {
        for &j in &[1.0, -1.0, 2.0, -2.0] {
            for &delta in &[-2.0, -1.0, 0.0, 0.5, 1.0, 2.0] {
                let p = XXZParams::new(j, delta).unwrap();
                check_spectrum(&build_xxz(&p), &closed_spectrum_xxz(&p));
            }
            for &d in &[-3.0, -1.0, 0.0, 1.0, 3.0] {
                let p = DMParams::new(j, d).unwrap();
                check_spectrum(&build_dm(&p), &closed_spectrum_dm(&p));
            }
        }
    }

    #[test]
    fn numeric_spectra_match_closed_forms() {
        for &j in &[1.0, -1.0, 2.0, -2.0] {
            for &delta in &[-2.0, -1.0, 0.0, 0.5, 1.0, 2.0] {
                let p = XXZParams::new(j, delta).unwrap();
                let numeric = hermitian_eigen(&build_xxz(&p)).unwrap().eigenvalues;
                for (a, b) in numeric.iter().zip(closed_spectrum_xxz(&p).sorted_energies()) {
                    assert!((a - b).abs() < 1e-12);
                }
            }
        }
        for &j in &[1.0, -1.0] {
            for &d in &[-3.0, -1.0, 0.0, 1.0, 3.0] {
                let p = DMParams::new(j, d).unwrap();
                let numeric = hermitian_eigen(&build_dm(&p)).unwrap().eigenvalues;
                for (a, b) in numeric.iter().zip(closed_spectrum_dm(&p).sorted_energies()) {
                    assert!((a - b).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn rejects_non_finite_parameters() {
        assert!(XXZParams::new(f64::NAN, 0.0).is_err());
        assert!(DMParams::new(1.0, f64::INFINITY).is_err());
        assert!(GeneralHeisenbergDMParams::new(1.0, 0.0, [0.0, f64::NAN, 0.0]).is_err());
    }
}

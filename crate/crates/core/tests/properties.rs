use num_complex::Complex64;
use proptest::prelude::*;

use thermoent::concurrence::{
    closed_concurrence, concurrence_dm, concurrence_xxz, numeric_concurrence, wootters_concurrence,
};
use thermoent::critical::{tc_dm, tc_xxz_afm, tc_xxz_fm};
use thermoent::linalg::{hermitian_eigen, kron, matexp_hermitian, psd_sqrt, ComplexMatrix};
use thermoent::models::{DMParams, ModelParams, XXZParams};
use thermoent::thermal::{closed_rho_dm, closed_rho_xxz, dm_rho_with_phase, thermal_state, Temperature};

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn square(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(complex(), n * n).prop_map(move |data| ComplexMatrix::from_vec(n, data).unwrap())
}

fn hermitian() -> impl Strategy<Value = ComplexMatrix> {
    (1usize..=8).prop_flat_map(square).prop_map(|a| (&a + &a.adjoint()).scale_real(0.5))
}

fn coupling() -> impl Strategy<Value = f64> {
    (0.2..3.0f64, any::<bool>()).prop_map(|(m, neg)| if neg { -m } else { m })
}

fn temperature() -> impl Strategy<Value = Temperature> {
    (0.05..5.0f64).prop_map(|t| Temperature::new(t).unwrap())
}

fn xxz() -> impl Strategy<Value = XXZParams> {
    (coupling(), -3.0..3.0f64).prop_map(|(j, delta)| XXZParams::new(j, delta).unwrap())
}

fn dm() -> impl Strategy<Value = DMParams> {
    (coupling(), -3.0..3.0f64).prop_map(|(j, d)| DMParams::new(j, d).unwrap())
}

fn model() -> impl Strategy<Value = ModelParams> {
    prop_oneof![xxz().prop_map(ModelParams::from), dm().prop_map(ModelParams::from)]
}

proptest! {
    #[test]
    fn eigen_reconstructs(m in hermitian()) {
        let eig = hermitian_eigen(&m).unwrap();
        prop_assert!(eig.reconstruct().max_abs_diff(&m) < 1e-12);
        prop_assert!(eig.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        let v = &eig.eigenvectors;
        let gram = &v.adjoint() * v;
        prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(m.dim())) < 1e-12);
    }

    #[test]
    fn matexp_trace(m in hermitian(), s in -2.0..2.0f64) {
        let e = matexp_hermitian(&m, s).unwrap();
        let expected: f64 = hermitian_eigen(&m).unwrap().eigenvalues.iter().map(|l| (s * l).exp()).sum();
        prop_assert!((e.trace().re - expected).abs() < 1e-11 * expected.max(1.0));
        prop_assert!(e.trace().im.abs() < 1e-12 * expected.max(1.0));
    }

    #[test]
    fn kron_associative(a in square(2), b in square(2), c in square(2)) {
        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        prop_assert!(left.max_abs_diff(&right) < 1e-15);
    }

    #[test]
    fn psd_sqrt_squares_back(a in (1usize..=6).prop_flat_map(square)) {
        let m = &a.adjoint() * &a;
        let r = psd_sqrt(&m).unwrap();
        prop_assert!((&r * &r).max_abs_diff(&m) < 1e-12 * m.frobenius_norm().max(1.0));
        prop_assert!(r.is_hermitian(1e-12));
    }

    #[test]
    fn pure_state_concurrence(amps in prop::collection::vec(complex(), 4)) {
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        prop_assume!(norm > 0.1);
        let psi: Vec<Complex64> = amps.iter().map(|a| a / norm).collect();
        let rho = ComplexMatrix::outer(&psi, &psi);
        let expected = 2.0 * (psi[0] * psi[3] - psi[1] * psi[2]).norm();
        let c = wootters_concurrence(&rho).unwrap().value;
        prop_assert!((c - expected).abs() < 1e-10, "{} vs {}", c, expected);
    }

    #[test]
    fn mixed_state_concurrence_in_unit_interval(a in square(4)) {
        let m = &a * &a.adjoint();
        let rho = m.scale_real(1.0 / m.trace().re);
        let r = wootters_concurrence(&rho).unwrap();
        prop_assert!((0.0..=1.0).contains(&r.value));
        prop_assert!(r.lambdas.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn closed_and_numeric_agree(m in model(), t in temperature()) {
        let numeric = thermal_state(&m, t).unwrap();
        let closed = match m {
            ModelParams::Xxz(p) => closed_rho_xxz(&p, t).unwrap(),
            ModelParams::Dm(p) => closed_rho_dm(&p, t).unwrap(),
            ModelParams::General(_) => unreachable!(),
        };
        prop_assert!(numeric.rho().max_abs_diff(closed.rho()) < 1e-12);
        let c = closed_concurrence(&m, t).unwrap();
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert!((c - numeric_concurrence(&m, t).unwrap().value).abs() < 1e-10);
    }

    #[test]
    fn gibbs_state_commutes_with_h(m in model(), t in temperature()) {
        let rho = thermal_state(&m, t).unwrap();
        prop_assert!(rho.rho().commutator(&m.hamiltonian()).frobenius_norm() < 1e-12);
    }

    #[test]
    fn unentangled_above_tc(p in xxz(), factor in 1.0001..4.0f64) {
        let r = if p.j > 0.0 { tc_xxz_afm(&p) } else { tc_xxz_fm(&p) }.unwrap();
        if let Some(tc) = r.tc {
            let t = Temperature::new(tc * factor).unwrap();
            prop_assert_eq!(concurrence_xxz(&p, t).unwrap(), 0.0);
            let below = Temperature::new(tc / factor).unwrap();
            prop_assert!(concurrence_xxz(&p, below).unwrap() > 0.0);
        } else {
            for t in [0.05, 0.5, 5.0] {
                prop_assert_eq!(concurrence_xxz(&p, Temperature::new(t).unwrap()).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn dm_phase_does_not_matter(p in dm(), t in temperature(), phi in -3.2..3.2f64) {
        let reference = concurrence_dm(&p, t).unwrap();
        let state = dm_rho_with_phase(&p, t, phi).unwrap();
        let c = wootters_concurrence(state.rho()).unwrap().value;
        prop_assert!((c - reference).abs() < 1e-10);
    }

    #[test]
    fn concurrence_decreases_with_t(m in model(), t in 0.05..4.0f64, dt in 0.001..1.0f64) {
        let lo = closed_concurrence(&m, Temperature::new(t).unwrap()).unwrap();
        let hi = closed_concurrence(&m, Temperature::new(t + dt).unwrap()).unwrap();
        prop_assert!(hi <= lo + 1e-15);
    }

    #[test]
    fn tc_scales_with_j(delta in -0.95..3.0f64, s in 0.1..10.0f64) {
        let base = tc_xxz_afm(&XXZParams::new(1.0, delta).unwrap()).unwrap().tc.unwrap();
        let scaled = tc_xxz_afm(&XXZParams::new(s, delta).unwrap()).unwrap().tc.unwrap();
        prop_assert!((scaled - s * base).abs() < 1e-12 * s * base);
        let fm = tc_xxz_fm(&XXZParams::new(-s, -delta).unwrap()).unwrap().tc.unwrap();
        prop_assert!((fm - scaled).abs() < 1e-12 * scaled);
    }

    #[test]
    fn xy_triple_point(j in 0.2..3.0f64) {
        let afm = tc_xxz_afm(&XXZParams::new(j, 0.0).unwrap()).unwrap().tc.unwrap();
        let fm = tc_xxz_fm(&XXZParams::new(-j, 0.0).unwrap()).unwrap().tc.unwrap();
        let dm = tc_dm(&DMParams::new(j, 0.0).unwrap()).unwrap().tc.unwrap();
        prop_assert!((afm - dm).abs() < 1e-12 * dm);
        prop_assert!((fm - dm).abs() < 1e-12 * dm);
    }
}

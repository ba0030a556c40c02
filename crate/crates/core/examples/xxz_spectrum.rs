//! Closed-form XXZ levels against exact diagonalization, and the ground state
//! on either side of the isotropic point.

use thermoent::linalg::hermitian_eigen;
use thermoent::models::{build_xxz, closed_spectrum_xxz, XXZParams};

fn main() -> thermoent::Result<()> {
    for (j, delta) in [(1.0, 1.0), (1.0, -2.0), (-1.0, 0.5), (-1.0, 2.0)] {
        let p = XXZParams::new(j, delta)?;
        let closed = closed_spectrum_xxz(&p);
        let numeric = hermitian_eigen(&build_xxz(&p))?.eigenvalues;
        let err = closed.sorted_energies().iter().zip(&numeric).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        println!(
            "J={j:>4} Δ={delta:>4}  levels {:?}  ground {:?}  max err {err:.1e}",
            closed.sorted_energies(),
            closed.ground_labels(1e-12),
        );
    }
    Ok(())
}

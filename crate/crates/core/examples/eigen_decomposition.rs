//! Diagonalize a small Hermitian matrix with the Jacobi solver and rebuild it.

use num_complex::Complex64;
use thermoent::linalg::{hermitian_eigen, matexp_hermitian, psd_sqrt, ComplexMatrix};

fn main() -> thermoent::Result<()> {
    let c = |re, im| Complex64::new(re, im);
    let m = ComplexMatrix::from_rows(&[
        [c(2.0, 0.0), c(0.5, -1.0), c(0.0, 0.0)],
        [c(0.5, 1.0), c(1.0, 0.0), c(0.0, 0.3)],
        [c(0.0, 0.0), c(0.0, -0.3), c(-1.0, 0.0)],
    ])?;

    let eig = hermitian_eigen(&m)?;
    println!("eigenvalues: {:?}", eig.eigenvalues);
    println!("reconstruction error: {:.2e}", eig.reconstruct().max_abs_diff(&m));

    let e = matexp_hermitian(&m, -1.0)?;
    let expected: f64 = eig.eigenvalues.iter().map(|l| (-l).exp()).sum();
    println!("Tr exp(-m) = {:.12} (sum of exp(-λ) = {expected:.12})", e.trace().re);

    let sq = psd_sqrt(&e)?;
    println!("|sqrt(e)^2 - e| = {:.2e}", (&sq * &sq).max_abs_diff(&e));
    Ok(())
}

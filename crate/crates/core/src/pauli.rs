//! Single-qubit Pauli matrices in the basis {|0>, |1>}, with σz|0> = |0>.

use num_complex::Complex64;

use crate::linalg::{kron, ComplexMatrix};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mat2(rows: [[Complex64; 2]; 2]) -> ComplexMatrix {
    ComplexMatrix::from_rows(&rows).expect("2x2 literal")
}

pub fn identity() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

pub fn sigma_x() -> ComplexMatrix {
    mat2([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]])
}

pub fn sigma_y() -> ComplexMatrix {
    mat2([[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]])
}

pub fn sigma_z() -> ComplexMatrix {
    mat2([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]])
}

/// `σ+ = (σx + iσy)/2 = |0><1|`.
pub fn sigma_plus() -> ComplexMatrix {
    mat2([[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]])
}

/// `σ- = (σx − iσy)/2 = |1><0|`.
pub fn sigma_minus() -> ComplexMatrix {
    mat2([[c(0.0, 0.0), c(0.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]])
}

/// `[σx, σy, σz]`.
pub fn sigma_vec() -> [ComplexMatrix; 3] {
    [sigma_x(), sigma_y(), sigma_z()]
}

/// `σy ⊗ σy`, the two-qubit spin-flip operator.
pub fn sigma_yy() -> ComplexMatrix {
    kron(&sigma_y(), &sigma_y())
}

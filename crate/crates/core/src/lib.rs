//! Thermal entanglement of two-qubit anisotropic spin models.
//!
//! The crate computes the concurrence of Gibbs states of the XXZ Heisenberg
//! model and of the Heisenberg model with a Dzyaloshinskii-Moriya (DM)
//! interaction, along two independent routes:
//!
//! * closed-form expressions for the density matrix, the `λ` spectrum and the
//!   concurrence ([`thermal::closed_rho_xxz`], [`concurrence::concurrence_xxz`], ...);
//! * a numeric pipeline that builds the Hamiltonian from Pauli matrices,
//!   diagonalizes it, forms `exp(−H/T)/Z` and evaluates the Wootters
//!   concurrence ([`concurrence::numeric_concurrence`]).
//!
//! [`critical`] solves for the temperature above which the entanglement
//! vanishes, and [`cli`] turns all of it into CSV tables.
//!
//! ```
//! use thermoent::{concurrence, models::XXZParams, thermal::Temperature};
//!
//! let p = XXZParams::new(1.0, 1.0).unwrap();
//! let t = Temperature::new(1.0).unwrap();
//! let closed = concurrence::concurrence_xxz(&p, t).unwrap();
//! let numeric = concurrence::numeric_concurrence(&p.into(), t).unwrap().value;
//! assert!((closed - numeric).abs() < 1e-10);
//! ```

pub mod cli;
pub mod concurrence;
pub mod critical;
pub mod error;
pub mod linalg;
pub mod models;
pub mod pauli;
pub mod thermal;

pub use error::{Error, Result};

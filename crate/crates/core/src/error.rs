use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |m - m^H| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("exponent {exponent} exceeds the overflow guard")]
    Overflow { exponent: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:e})")]
    NotPsd { eigenvalue: f64 },

    #[error("matrix entries must be finite and form a square array")]
    InvalidMatrix,

    #[error("model parameters must be finite")]
    NonFiniteParameter,

    #[error("temperature {value} is out of range")]
    TemperatureOutOfRange { value: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("exchange constant J = {j} has the wrong sign for the {branch} branch")]
    WrongSign { j: f64, branch: &'static str },

    #[error("degenerate model: J = 0")]
    DegenerateModel,

    #[error("no closed form exists for this model")]
    NoClosedForm,

    #[error("no sign change found while bracketing the critical temperature")]
    NoRoot,
}

pub type Result<T> = std::result::Result<T, Error>;

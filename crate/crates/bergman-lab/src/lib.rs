//! Numerical laboratory for truncated Toeplitz operators on Bergman spaces.
//!
//! The library builds orthonormal monomial bases for the Bergman space of the
//! unit disk and of an annulus, assembles truncated Toeplitz matrices
//! `T[j][k] = <phi * e_k, e_j>` from quasi-polynomial symbols, and runs
//! commutator experiments: radial symbols give diagonal matrices, analytic
//! symbols act by multiplication, and the commutator of an analytic-symbol
//! operator with a non-analytic one stays bounded away from zero at
//! truncation. Every matrix has two independent assembly routes (closed-form
//! radial integrals and two-dimensional polar quadrature) so each experiment
//! can cross-check itself.
//!
//! Modules:
//! - [`domain`]: the region (disk or annulus) and polar quadrature rules.
//! - [`symbol`]: the term algebra `c * z^m * zbar^n * r^a * log(r)^p`, its
//!   parser, evaluation, classification, and angular Fourier profiles.
//! - [`bergman`]: orthonormal bases, the Bergman projection, and the
//!   analytic/residual decomposition of a symbol.
//! - [`toeplitz`]: truncated operators, commutators, interior blocks, norms.
//! - [`lab`]: named experiments with structured pass/fail reports.
//! - [`report`], [`config`]: JSON/CSV serialization and CLI configuration.

pub mod bergman;
pub mod config;
pub mod domain;
mod gauss;
pub mod lab;
pub mod report;
pub mod symbol;
pub mod toeplitz;

use num_complex::Complex64;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid annulus inner radius {rho}: must satisfy 0 < rho < 1")]
    InvalidInnerRadius { rho: f64 },
    #[error("quadrature orders must be positive (got {n_r}x{n_theta})")]
    InvalidQuadratureOrders { n_r: usize, n_theta: usize },
    #[error("integrand is not finite at node {index} (r={r}, theta={theta})")]
    NonFiniteIntegrand { index: usize, r: f64, theta: f64 },
    #[error("symbol parse error at byte {offset}: {message}")]
    SymbolParse { offset: usize, message: String },
    #[error("basis index {index} is invalid on the disk")]
    NegativeDiskIndex { index: i64 },
    #[error("basis index {index} is outside the truncated index set of size {dim}")]
    IndexOutOfRange { index: i64, dim: usize },
    #[error("point {z} lies outside the domain")]
    PointOutsideDomain { z: Complex64 },
    #[error("point {z} is too close to the boundary for kernel projection (|z| > 0.95)")]
    PointNearBoundary { z: Complex64 },
    #[error("term {term} is not integrable on the disk")]
    NonIntegrableTerm { term: String },
    #[error("cannot evaluate a singular radial factor at z = 0")]
    SingularAtOrigin,
    #[error("operands use different domains or truncation orders")]
    IndexSetMismatch,
    #[error("coefficient vector length {len} does not match index set of size {dim}")]
    LengthMismatch { len: usize, dim: usize },
    #[error("symbol {symbol} is not radial")]
    NotRadial { symbol: String },
    #[error("symbol {symbol} is not analytic")]
    NotAnalytic { symbol: String },
    #[error("symbol {symbol} is not harmonic")]
    NotHarmonic { symbol: String },
    #[error("symbol {symbol} is constant")]
    ConstantSymbol { symbol: String },
    #[error("interior margin {margin} exhausts a matrix over {dim} basis indices")]
    MarginExhausted { margin: usize, dim: usize },
    #[error("quadrature assembly requested without a quadrature rule")]
    MissingRule,
    #[error("quadrature rule was built for a different domain")]
    RuleDomainMismatch,
    #[error("kernel projection is only available on the disk")]
    KernelRequiresDisk,
    #[error("config error at line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use domain::{build_quadrature, integrate_adaptive, AdaptiveOutcome, Domain, QuadratureRule};
pub use symbol::{ClassificationFlags, FourierProfiles, Symbol, Term};

//! Generalized su(2) Gaudin systems (coupled angular momenta) on the product
//! of two spheres: rank-0 singularity classification, linear and sixth-order
//! Hamiltonian Hopf normal forms, and momentum-map images with their
//! bifurcation events.
//!
//! The library is organized around five layers:
//!
//! * [`model`] — parameters, phase points, the integrals `J` and `H`, fixed
//!   points, and the reduction to circle-action invariants.
//! * [`polyalg`] — truncated polynomial algebra in canonical coordinates,
//!   Poisson brackets, Lie transforms, and exterior calculus for flattening
//!   the symplectic jet.
//! * [`linear`] — linearization at fixed points, eigenvalue classification,
//!   bifurcation thresholds, the Burgoyne-Cushman normalization, and the
//!   transversal unfolding.
//! * [`normal_form`] — sixth-order normal-form coefficients along two
//!   independent routes (printed closed forms and a Lie-series pipeline) and
//!   the criticality classification.
//! * [`momentum`] — momentum-map images: occupancy sampling, critical-value
//!   curves, cusp typing, and bifurcation-event detection.
//!
//! ```
//! use gaudin::model::{eval_h, eval_j, FixedPoint, ModelParams};
//!
//! let params = ModelParams::new(1.0, 2.0, 0.0, [-0.5, 0.0, 0.0, 0.5, 0.0]).unwrap();
//! let m0 = FixedPoint::M0.point();
//! assert_eq!(eval_j(&params, &m0), -1.0);
//! assert_eq!(eval_h(&params, &m0), -0.5);
//! ```

pub mod figure;
pub mod linear;
pub mod model;
pub mod momentum;
pub mod normal_form;
pub mod polyalg;
pub mod scalar;

#[cfg(doctest)]
mod book;

use thiserror::Error;

/// Errors across the analysis layers.
#[derive(Debug, Error)]
pub enum GaudinError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("point is off sphere {sphere} by {deviation:.3e}")]
    OffSphere { sphere: usize, deviation: f64 },
    #[error("operation requires t3 != 0")]
    T3Zero,
    #[error("singular configuration: denominator {0:.3e} below threshold")]
    SingularDenominator(f64),
    #[error("Lie-transform generator has degree {0} < 3; series would not terminate")]
    GeneratorDegreeTooLow(u32),
    #[error("linear system is inconsistent (residual {residual:.3e})")]
    InconsistentSystem { residual: f64 },
    #[error("invalid symplectic jet: {0}")]
    InvalidOmegaJet(String),
    #[error("characteristic polynomial is not (x^2+a^2)^2 at this point (distance {0:.3e})")]
    NotAtThreshold(f64),
    #[error("degenerate pairing in the symplectic basis search ({0:.3e})")]
    DegeneratePairing(f64),
    #[error("no unfolding branch vanishes at the threshold (best residual {0:.3e})")]
    NoVanishingBranch(f64),
    #[error("normalization left non-normal-form terms of size {0:.3e}")]
    NormalizationResidual(f64),
    #[error("{context}: {message}")]
    Domain { context: &'static str, message: String },
    #[error("exact mode requires {0} to be a rational square")]
    NotARationalSquare(&'static str),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),
}

impl GaudinError {
    pub fn domain(context: &'static str, message: impl Into<String>) -> Self {
        Self::Domain { context, message: message.into() }
    }
}

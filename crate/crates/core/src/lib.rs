//! Sharp hyperbolic-norm bounds for the Schwarzian derivative over convex
//! classes `K(φ)` defined by subordination `1 + z f''/f' ≺ φ`.
//!
//! * [`series`]: truncated complex power series and the Schwarzian operator.
//! * [`generators`]: the generators `φ` and Mocanu's order map `γ`.
//! * [`estimator`]: `A(s)`, `B(s)`, `F(s, t)`, `N(φ)` and `‖S_f‖`.
//! * [`extremal`]: functions attaining the bound, `1 + z f''/f' = φ(z^k)`.
//! * [`verify`]: numerical checks of the supporting coefficient lemmas.

pub mod coeff_io;
pub mod error;
pub mod estimator;
pub mod extremal;
pub mod generators;
pub mod numeric;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use estimator::{
    circle_sup, f_closed_form, f_sampled, f_value, hyperbolic_norm, n_phi, qc_extension_constant, CircleConfig,
    HypNormConfig, NPhiConfig, NormEstimate, RadialBound, Witness,
};
pub use extremal::{build_extremal, schwarzian_at_origin, verify_subordination_ode, ExtremalFunction};
pub use generators::{
    figure1_crossing, figure1_value, g_eval, g_series, gamma_inverse, gamma_of_beta, mocanu_qc_constant,
    phi_eval, phi_prime_eval, phi_series, GeneratorKind, GeneratorSpec, EIGHT_OVER_PI_SQ,
};
pub use num_complex::Complex64;
pub use series::ComplexSeries;
pub use verify::{Lemma, Location, VerificationReport, VerifyConfig};

/// Default truncation order for series work.
pub const DEFAULT_ORDER: usize = 96;

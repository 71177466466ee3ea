//! Linear stability toolkit for the displacement of three immiscible,
//! constant-viscosity fluids in a Hele-Shaw cell (porous media model).
//!
//! A less viscous fluid pushes a bounded middle layer which in turn pushes
//! the displaced fluid; the two planar interfaces carry surface tension.
//! The crate evaluates the quadratic dispersion relation for the growth
//! rate of a Fourier perturbation mode, reconstructs the associated
//! eigenfunction amplitudes, and checks the large-wavenumber compatibility
//! identities that force the tension-ratio restriction
//! `T_b/T_a = (mu + mu_R)/(mu_L + mu)`. On top of that sit wavenumber
//! sweeps, unstable-band extraction, and a minimax search over the middle
//! viscosity.
//!
//! All numerics are generic over the scalar type via [`Scalar`]; concrete
//! `f64` (and `f32`) aliases live at the crate root.

use std::fmt;

pub mod analysis;
pub mod compatibility;
pub mod dispersion;
pub mod eigenfunctions;
pub mod model;

/// Scalar type the whole crate is generic over: `f32` or `f64`.
pub trait Scalar:
    num_traits::Float + num_traits::FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: num_traits::Float
        + num_traits::FromPrimitive
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// Convert an `f64` literal into the working scalar type.
pub(crate) fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("scalar literal conversion")
}

pub type FlowConfig64 = model::FlowConfig<f64>;
pub type ValidatedConfig64 = model::ValidatedConfig<f64>;
pub type SpectralPoint64 = dispersion::SpectralPoint<f64>;
pub type EigenPair64 = eigenfunctions::EigenPair<f64>;
pub type CompatibilityReport64 = compatibility::CompatibilityReport<f64>;
pub type GrowthCurve64 = analysis::GrowthCurve<f64>;

pub type FlowConfig32 = model::FlowConfig<f32>;
pub type ValidatedConfig32 = model::ValidatedConfig<f32>;
pub type SpectralPoint32 = dispersion::SpectralPoint<f32>;

#[cfg(test)]
pub(crate) mod test_util {
    use crate::model::{validate, ValidatedConfig};
    use crate::FlowConfig64;
    use rand::Rng;

    /// The worked reference configuration used throughout the tests.
    pub fn cfg0() -> ValidatedConfig<f64> {
        validate(FlowConfig64 {
            mu_left: 1.0,
            mu_mid: 2.0,
            mu_right: 3.0,
            speed: 1.0,
            tension_a: 1.0,
            tension_b: 1.0,
            a: -1.0,
            b: 0.0,
            relax_ordering: false,
        })
        .unwrap()
    }

    /// The configuration satisfying the tension-ratio restriction exactly.
    pub fn cfg_compatible() -> ValidatedConfig<f64> {
        validate(FlowConfig64 {
            mu_left: 1.0,
            mu_mid: 2.0,
            mu_right: 4.0,
            speed: 1.0,
            tension_a: 1.0,
            tension_b: 2.0,
            a: -1.0,
            b: 0.0,
            relax_ordering: false,
        })
        .unwrap()
    }

    /// Draw a strictly valid configuration with a healthy spread of
    /// viscosity contrasts, tensions, and layer lengths.
    pub fn random_valid_config<R: Rng>(rng: &mut R) -> ValidatedConfig<f64> {
        let mu_left = rng.gen_range(0.1..5.0);
        let mu_mid = mu_left * rng.gen_range(1.05..4.0);
        let mu_right = mu_mid * rng.gen_range(1.05..4.0);
        let b = rng.gen_range(-1.0..0.0);
        let a = b - rng.gen_range(0.05..3.0);
        validate(FlowConfig64 {
            mu_left,
            mu_mid,
            mu_right,
            speed: rng.gen_range(0.1..5.0),
            tension_a: rng.gen_range(0.1..5.0),
            tension_b: rng.gen_range(0.1..5.0),
            a,
            b,
            relax_ordering: false,
        })
        .unwrap()
    }
}

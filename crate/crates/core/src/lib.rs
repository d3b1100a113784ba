//! Casimir forces between mirrors, computed with the scattering formalism.
//!
//! The crate covers the 1D scalar model (`casimir1d`), the electromagnetic
//! plane-plane geometry with metallic mirror models (`casimir3d`), and the
//! proximity force approximation mapping plane-plane pressures onto
//! plane-sphere experiments (`pfa`). All observables are evaluated on the
//! imaginary frequency axis, either as Matsubara sums at finite temperature
//! or as integrals at zero temperature.
//!
//! Everything is SI: angular frequencies in rad/s, distances in metres,
//! temperatures in kelvin, forces in newtons, pressures in pascals.

pub mod casimir1d;
pub mod casimir3d;
pub mod constants;
pub mod dielectric;
mod error;
pub mod pfa;
pub mod quadrature;
pub mod reflection;
pub mod thermal;

pub use error::{Error, Result};

/// Mirror separation in metres, validated strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Distance(f64);

impl Distance {
    pub fn new(meters: f64) -> Result<Self> {
        if !(meters.is_finite() && meters > 0.0) {
            return Err(Error::domain(format!(
                "separation must be a finite positive length, got {meters} m"
            )));
        }
        Ok(Distance(meters))
    }

    pub fn meters(self) -> f64 {
        self.0
    }
}

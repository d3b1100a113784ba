//! Thermal state of the field: Matsubara grid and mode occupation.

use crate::constants::{C, HBAR, KB};
use crate::{Error, Result};

/// Dimensionless crossover 2π·kB·T·L/(ħc) below which the discrete Matsubara
/// sum and the zero-temperature integral agree to better than 1e-3. Shared by
/// the 1D and 3D observables that auto-select a computational path.
pub const TAU_CROSSOVER: f64 = 1e-3;

/// Occupation exponent ħω/kBT above which the mean photon number underflows
/// to exactly zero, avoiding overflow in exp.
const OCCUPATION_UNDERFLOW: f64 = 700.0;

/// Temperature together with the Matsubara frequency grid it induces.
///
/// The grid is ξ_n = n·ξ_1 with ξ_1 = 2π·kB·T/ħ. T = 0 is permitted and
/// flags the zero-temperature (integral) computational path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalState {
    temperature: f64,
}

impl ThermalState {
    pub fn new(temperature: f64) -> Result<Self> {
        if !(temperature.is_finite() && temperature >= 0.0) {
            return Err(Error::domain(format!(
                "temperature must be finite and non-negative, got {temperature} K"
            )));
        }
        Ok(ThermalState { temperature })
    }

    pub fn temperature(self) -> f64 {
        self.temperature
    }

    pub fn is_zero(self) -> bool {
        self.temperature == 0.0
    }

    /// First Matsubara frequency ξ_1 = 2π·kB·T/ħ (rad/s).
    pub fn xi1(self) -> f64 {
        2.0 * std::f64::consts::PI * KB * self.temperature / HBAR
    }

    /// ξ_1/c (1/m).
    pub fn kappa1(self) -> f64 {
        self.xi1() / C
    }

    /// n-th Matsubara frequency (rad/s).
    pub fn xi_n(self, n: usize) -> f64 {
        n as f64 * self.xi1()
    }

    /// Dimensionless crossover parameter τ = κ_1·L for a separation L.
    pub fn tau(self, length: f64) -> f64 {
        self.kappa1() * length
    }
}

/// Mean number of photons per mode, 1/(exp(ħω/kBT) − 1).
///
/// Returns 0 at T = 0 and underflows to exactly 0 once ħω/kBT > 700.
pub fn mean_photon_number(omega: f64, temperature: f64) -> Result<f64> {
    check_mode(omega, temperature)?;
    if temperature == 0.0 {
        return Ok(0.0);
    }
    let x = HBAR * omega / (KB * temperature);
    if x > OCCUPATION_UNDERFLOW {
        return Ok(0.0);
    }
    Ok(1.0 / x.exp_m1())
}

/// Mean energy per mode, (1/2 + n̄)·ħω, equal to (ħω/2)·coth(ħω/2kBT).
///
/// Reduces to the zero-point energy ħω/2 at T = 0 and to kBT at high
/// temperature.
pub fn mean_energy_per_mode(omega: f64, temperature: f64) -> Result<f64> {
    let n = mean_photon_number(omega, temperature)?;
    Ok(HBAR * omega * (0.5 + n))
}

fn check_mode(omega: f64, temperature: f64) -> Result<()> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::domain(format!(
            "mode frequency must be finite and positive, got {omega} rad/s"
        )));
    }
    if !(temperature.is_finite() && temperature >= 0.0) {
        return Err(Error::domain(format!(
            "temperature must be finite and non-negative, got {temperature} K"
        )));
    }
    Ok(())
}

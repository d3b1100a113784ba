//! Physical constants, CODATA 2018, SI units.
//!
//! These are compiled in and never read from the environment, so results are
//! reproducible bit for bit across machines.

/// Reduced Planck constant (J·s).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Speed of light in vacuum (m/s), exact.
pub const C: f64 = 299_792_458.0;

/// Boltzmann constant (J/K), exact.
pub const KB: f64 = 1.380_649e-23;

/// Elementary charge (C), exact. Used for the eV frequency conversion.
pub const E_CHARGE: f64 = 1.602_176_634e-19;

/// Angular frequency (rad/s) of a photon with energy 1 eV.
pub const EV_TO_RAD_PER_S: f64 = E_CHARGE / HBAR;

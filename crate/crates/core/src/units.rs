//! Physical constants and the angular-frequency newtype used at every API
//! boundary.
//!
//! Internally all rates are angular (rad/s). Values that are conventionally
//! quoted as `X/2π` (Rabi frequencies, detunings, qubit splittings) enter
//! through the `from_hz` family and leave through the `hz` family.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// CODATA 2018 constants, SI units.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PhysConstants {
    /// Boltzmann constant (J/K)
    pub k_b: f64,
    /// reduced Planck constant (J s)
    pub hbar: f64,
    /// Hartree energy (J)
    pub hartree: f64,
    /// atomic unit of time, hbar / E_H (s)
    pub atomic_time: f64,
    /// Bohr magneton (J/T)
    pub bohr_magneton: f64,
    /// speed of light in vacuum (m/s)
    pub c: f64,
    /// elementary charge (C)
    pub e: f64,
    /// electron mass (kg)
    pub m_e: f64,
    /// fine-structure constant
    pub alpha: f64,
    /// atomic unit of electric polarizability (C m^2 / V)
    pub polarizability_au: f64,
    /// unified atomic mass unit (kg)
    pub amu: f64,
    /// Bohr radius (m)
    pub bohr_radius: f64,
}

const HBAR: f64 = 1.054571817e-34;
const HARTREE: f64 = 4.3597447222071e-18;

pub const CONSTANTS: PhysConstants = PhysConstants {
    k_b: 1.380649e-23,
    hbar: HBAR,
    hartree: HARTREE,
    atomic_time: HBAR / HARTREE,
    bohr_magneton: 9.2740100783e-24,
    c: 299_792_458.0,
    e: 1.602176634e-19,
    m_e: 9.1093837015e-31,
    alpha: 7.2973525693e-3,
    polarizability_au: 1.64877727436e-41,
    amu: 1.66053906660e-27,
    bohr_radius: 5.29177210903e-11,
};

/// An angular frequency in rad/s.
///
/// Signed: detunings and Förster defects carry physical sign.
#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Frequency(f64);

impl Frequency {
    pub const ZERO: Frequency = Frequency(0.0);

    /// # Panics
    /// If `omega` is not finite. Use [`Frequency::try_from_angular`] for
    /// unvalidated input.
    pub fn from_angular(omega: f64) -> Self {
        assert!(omega.is_finite(), "non-finite frequency {omega}");
        Frequency(omega)
    }

    pub fn try_from_angular(omega: f64) -> Result<Self> {
        if omega.is_finite() {
            Ok(Frequency(omega))
        } else {
            Err(Error::domain(
                "Frequency",
                format!("non-finite value {omega}"),
            ))
        }
    }

    /// Ordinary frequency `f = ω/2π` in Hz.
    pub fn from_hz(f: f64) -> Self {
        Self::from_angular(TAU * f)
    }

    pub fn try_from_hz(f: f64) -> Result<Self> {
        Self::try_from_angular(TAU * f)
    }

    pub fn from_khz(f: f64) -> Self {
        Self::from_hz(f * 1e3)
    }

    pub fn from_mhz(f: f64) -> Self {
        Self::from_hz(f * 1e6)
    }

    pub fn from_ghz(f: f64) -> Self {
        Self::from_hz(f * 1e9)
    }

    pub fn angular(self) -> f64 {
        self.0
    }

    pub fn hz(self) -> f64 {
        self.0 / TAU
    }

    pub fn khz(self) -> f64 {
        self.hz() * 1e-3
    }

    pub fn mhz(self) -> f64 {
        self.hz() * 1e-6
    }

    pub fn ghz(self) -> f64 {
        self.hz() * 1e-9
    }

    pub fn abs(self) -> Self {
        Frequency(self.0.abs())
    }

    pub fn signum(self) -> f64 {
        self.0.signum()
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2π × {} Hz", self.hz())
    }
}

impl Add for Frequency {
    type Output = Frequency;
    fn add(self, rhs: Frequency) -> Frequency {
        Frequency(self.0 + rhs.0)
    }
}

impl Sub for Frequency {
    type Output = Frequency;
    fn sub(self, rhs: Frequency) -> Frequency {
        Frequency(self.0 - rhs.0)
    }
}

impl Neg for Frequency {
    type Output = Frequency;
    fn neg(self) -> Frequency {
        Frequency(-self.0)
    }
}

impl Mul<f64> for Frequency {
    type Output = Frequency;
    fn mul(self, rhs: f64) -> Frequency {
        Frequency(self.0 * rhs)
    }
}

impl Div<f64> for Frequency {
    type Output = Frequency;
    fn div(self, rhs: f64) -> Frequency {
        Frequency(self.0 / rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn constants_match_codata() {
        let c = CONSTANTS;
        let reference = [
            (c.k_b, 1.380649e-23),
            (c.hbar, 1.054571817e-34),
            (c.hartree, 4.3597447222071e-18),
            (c.atomic_time, 2.4188843265857e-17),
            (c.bohr_magneton, 9.2740100783e-24),
            (c.c, 2.99792458e8),
            (c.e, 1.602176634e-19),
            (c.m_e, 9.1093837015e-31),
            (c.alpha, 7.2973525693e-3),
            (c.polarizability_au, 1.64877727436e-41),
        ];
        for (value, codata) in reference {
            assert!(rel(value, codata) < 1e-6, "{value} vs {codata}");
        }
        assert!(rel(c.atomic_time, c.hbar / c.hartree) < f64::EPSILON);
        // alpha = e^2 / (4 pi eps0 hbar c) and the a.u. of polarizability
        // e^2 a0^2 / E_H are tied together; check the latter independently.
        let au = c.e * c.e * c.bohr_radius * c.bohr_radius / c.hartree;
        assert!(rel(c.polarizability_au, au) < 1e-9);
    }

    #[test]
    fn hz_round_trip() {
        for x in [0.0, 1.0, 9.1926e9, 6.8347e9, 2e7, 123.456, 1e-3] {
            let back = Frequency::from_hz(x).hz();
            assert!((back - x).abs() <= f64::EPSILON * x.abs(), "{x} -> {back}");
        }
        assert_eq!(Frequency::from_mhz(20.0).mhz(), 20.0);
    }

    #[test]
    fn non_finite_rejected() {
        assert!(Frequency::try_from_hz(f64::NAN).is_err());
        assert!(Frequency::try_from_angular(f64::INFINITY).is_err());
    }
}

//! Elementary Rydberg-state and trap scaling laws.

use crate::error::{ensure, ensure_non_negative, ensure_positive, Result};
use crate::units::{Frequency, CONSTANTS};

/// Blackbody-induced depopulation rate `4α³k_BT/(3n²ħ)` in 1/s.
///
/// In atomic units the rate is `4α³ T_au / 3n²` with `T_au = k_BT/E_H`;
/// dividing by the atomic unit of time gives SI.
pub fn blackbody_rate(n: u32, temperature: f64) -> f64 {
    let c = CONSTANTS;
    let n = f64::from(n);
    let t_au = c.k_b * temperature / c.hartree;
    4.0 * c.alpha * c.alpha * c.alpha * t_au / (3.0 * n * n) / c.atomic_time
}

/// Effective lifetime `1/(1/(τ₀n³) + Γ_BBR)` of a low-ℓ Rydberg level (s).
///
/// `n` is an effective principal quantum number; quantum defects are not
/// modeled.
pub fn rydberg_lifetime(n: u32, temperature: f64, tau0: f64) -> Result<f64> {
    const OP: &str = "rydberg_lifetime";
    if n < 10 {
        return Err(crate::Error::domain(
            OP,
            format!("n = {n} (expected >= 10)"),
        ));
    }
    ensure_non_negative(OP, "temperature", temperature)?;
    ensure_positive(OP, "tau0", tau0)?;
    let radiative = tau0 * f64::from(n).powi(3);
    if temperature == 0.0 {
        return Ok(radiative);
    }
    Ok(1.0 / (1.0 / radiative + blackbody_rate(n, temperature)))
}

/// Ponderomotive polarizability `-e²/(m_e ω²)` of a free electron, in
/// atomic units.
pub fn free_electron_polarizability(omega: Frequency) -> Result<f64> {
    let c = CONSTANTS;
    let w = ensure(
        "free_electron_polarizability",
        "omega",
        omega.angular(),
        |w| w > 0.0,
        "> 0",
    )?;
    Ok(-c.e * c.e / (c.m_e * w * w) / c.polarizability_au)
}

/// Optical angular frequency `2πc/λ` of light at wavelength `lambda` (m).
pub fn optical_frequency(lambda: f64) -> Frequency {
    Frequency::from_hz(CONSTANTS.c / lambda)
}

/// Peak magnetic field (T) needed for a trap of `depth` (K) on a state with
/// magnetic moment `moment` (J/T).
pub fn magnetic_trap_field(depth: f64, moment: f64) -> Result<f64> {
    ensure_positive("magnetic_trap_field", "depth", depth)?;
    ensure_positive("magnetic_trap_field", "moment", moment)?;
    Ok(CONSTANTS.k_b * depth / moment)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_temperature_is_radiative() {
        assert_eq!(rydberg_lifetime(100, 0.0, 3.3e-9).unwrap(), 3.3e-9 * 1e6);
    }

    #[test]
    fn room_temperature_lifetime() {
        // 4 α³ k_B T / (3 n² ħ) by hand: α³ = 3.885939e-7, k_B·300/ħ = 3.927610e13 s⁻¹
        let gamma = 4.0 * 3.885_939e-7 * 3.927_610e13 / 3.0 / 1e4;
        let expected = 1.0 / (1.0 / 3.3e-3 + gamma);
        let got = rydberg_lifetime(100, 300.0, 3.3e-9).unwrap();
        assert!(
            (got - expected).abs() / expected < 1e-5,
            "{got} vs {expected}"
        );
        assert!((got - 4.27e-4).abs() < 0.01e-4);
    }

    #[test]
    fn lifetime_ordering_by_temperature() {
        let t = |temp| rydberg_lifetime(100, temp, 3.3e-9).unwrap();
        assert!(t(300.0) < t(77.0));
        assert!(t(77.0) < t(4.0));
    }

    #[test]
    fn lifetime_domain() {
        assert!(rydberg_lifetime(9, 300.0, 3.3e-9).is_err());
        assert!(rydberg_lifetime(50, -1.0, 3.3e-9).is_err());
        assert!(rydberg_lifetime(50, f64::NAN, 3.3e-9).is_err());
        assert!(rydberg_lifetime(50, 300.0, 0.0).is_err());
    }

    #[test]
    fn polarizability_at_1064() {
        // e²/(m_e ω²) / a.u. with ω = 2πc/λ, λ = 1064 nm
        let omega = 2.0 * std::f64::consts::PI * 2.997_924_58e8 / 1064e-9;
        let expected =
            -(1.602_176_634e-19_f64.powi(2)) / (9.109_383_7e-31 * omega * omega) / 1.648_777_27e-41;
        let got = free_electron_polarizability(optical_frequency(1064e-9)).unwrap();
        assert!((got - expected).abs() / expected.abs() < 1e-7);
        assert!((got + 545.0).abs() < 1.0, "{got}");
    }

    #[test]
    fn polarizability_inverse_square() {
        let w = Frequency::from_hz(3e14);
        let a1 = free_electron_polarizability(w).unwrap();
        let a2 = free_electron_polarizability(w * 2.0).unwrap();
        assert!((a2 - a1 / 4.0).abs() < 1e-14 * a1.abs());
        assert!(free_electron_polarizability(Frequency::ZERO).is_err());
    }

    #[test]
    fn magnetic_trap() {
        let mu_b = CONSTANTS.bohr_magneton;
        let b4 = magnetic_trap_field(4.0, mu_b).unwrap();
        assert!((b4 - 5.955).abs() < 0.001, "{b4}");
        let b10m = magnetic_trap_field(0.010, mu_b).unwrap();
        assert!((b10m - 0.014_887).abs() < 1e-5, "{b10m}");
        let half = magnetic_trap_field(0.010, 2.0 * mu_b).unwrap();
        assert!((half - b10m / 2.0).abs() < 1e-15);
        assert!(magnetic_trap_field(0.0, mu_b).is_err());
    }
}

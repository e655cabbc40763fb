//! Single-channel Rydberg pair interaction: resonant dipole-dipole shift,
//! its van der Waals limit, the crossover radius and the blockade radius.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{ensure_positive, Error, Result};
use crate::units::Frequency;

/// Dipole-dipole coefficient `C₃/ħ`, stored as rad/s · m³.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct C3(f64);

impl C3 {
    pub fn from_angular_m3(value: f64) -> Self {
        C3(value)
    }

    /// From the ordinary-frequency convention `C₃/h` in GHz·μm³.
    pub fn from_ghz_um3(value: f64) -> Self {
        C3(TAU * value * 1e9 * 1e-18)
    }

    pub fn angular_m3(self) -> f64 {
        self.0
    }

    pub fn ghz_um3(self) -> f64 {
        self.0 / (TAU * 1e9 * 1e-18)
    }
}

/// Angular factor for triplet `M = ±1` pairs of `ns` states coupled to
/// `np` channels, averaged over fine structure.
pub const DEFAULT_ANGULAR_FACTOR: f64 = 12.0;

/// `R_c = (4 D C₃² / ħ²δ²)^{1/6}` (m).
pub fn crossover_radius(c3: C3, defect: Frequency, angular_factor: f64) -> Result<f64> {
    const OP: &str = "crossover_radius";
    let c = c3.angular_m3();
    if c == 0.0 || defect.angular() == 0.0 || angular_factor <= 0.0 {
        return Err(Error::domain(
            OP,
            "C3, defect and angular factor must be nonzero",
        ));
    }
    let d = defect.angular();
    Ok((4.0 * angular_factor * c * c / (d * d)).powf(1.0 / 6.0))
}

/// The `C₃` that places the crossover at `radius` for the given defect.
pub fn c3_for_crossover(radius: f64, defect: Frequency, angular_factor: f64) -> Result<C3> {
    const OP: &str = "c3_for_crossover";
    ensure_positive(OP, "radius", radius)?;
    ensure_positive(OP, "angular_factor", angular_factor)?;
    let d = defect.angular();
    if d == 0.0 {
        return Err(Error::domain(OP, "defect must be nonzero"));
    }
    Ok(C3((radius.powi(6) * d * d / (4.0 * angular_factor)).sqrt()))
}

/// Förster defect, crossover radius and the channel's angular factor.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PairInteraction {
    /// signed Förster defect δ
    pub defect: Frequency,
    /// crossover radius (m)
    pub crossover: f64,
    pub angular_factor: f64,
    pub c3: Option<C3>,
}

impl PairInteraction {
    pub fn from_crossover(defect: Frequency, crossover: f64, angular_factor: f64) -> Result<Self> {
        const OP: &str = "PairInteraction";
        if defect.angular() == 0.0 {
            return Err(Error::domain(OP, "Förster defect must be nonzero"));
        }
        ensure_positive(OP, "crossover", crossover)?;
        ensure_positive(OP, "angular_factor", angular_factor)?;
        Ok(PairInteraction {
            defect,
            crossover,
            angular_factor,
            c3: None,
        })
    }

    pub fn from_c3(c3: C3, defect: Frequency, angular_factor: f64) -> Result<Self> {
        let crossover = crossover_radius(c3, defect, angular_factor)?;
        Ok(PairInteraction {
            c3: Some(c3),
            ..Self::from_crossover(defect, crossover, angular_factor)?
        })
    }

    /// Both `C₃` and `R_c` given; they must agree to 1e-6 relative.
    pub fn with_c3_and_crossover(
        c3: C3,
        defect: Frequency,
        crossover: f64,
        angular_factor: f64,
    ) -> Result<Self> {
        let derived = Self::from_c3(c3, defect, angular_factor)?;
        if ((derived.crossover - crossover) / crossover).abs() > 1e-6 {
            return Err(Error::domain(
                "PairInteraction",
                format!(
                    "crossover {crossover:e} m inconsistent with C3 (implies {:e} m)",
                    derived.crossover
                ),
            ));
        }
        Ok(PairInteraction {
            crossover,
            ..derived
        })
    }

    pub fn dipole_dipole_shift(&self, r: f64) -> Result<Frequency> {
        dipole_dipole_shift(r, self.defect, self.crossover)
    }

    pub fn vdw_shift(&self, r: f64) -> Result<Frequency> {
        vdw_shift(r, self.defect, self.crossover)
    }
}

/// `Δ_dd(R) = δ/2 - (δ/2)√(1 + (R_c/R)⁶)`.
pub fn dipole_dipole_shift(r: f64, defect: Frequency, crossover: f64) -> Result<Frequency> {
    ensure_positive("dipole_dipole_shift", "R", r)?;
    let x = (crossover / r).powi(6);
    let half = defect.angular() / 2.0;
    // δ/2 (1 - √(1+x)) = -δ/2 · x/(1 + √(1+x)), stable for x → 0
    Ok(Frequency::from_angular(
        -half * x / (1.0 + (1.0 + x).sqrt()),
    ))
}

/// Long-range limit `Δ_vdW(R) = -(δ/4)(R_c/R)⁶`.
pub fn vdw_shift(r: f64, defect: Frequency, crossover: f64) -> Result<Frequency> {
    ensure_positive("vdw_shift", "R", r)?;
    Ok(Frequency::from_angular(
        -defect.angular() / 4.0 * (crossover / r).powi(6),
    ))
}

/// Distance `R_b` at which `|Δ_dd(R_b)| = |Δ|`:
/// `R_c |δ|^{1/3} / (2^{1/3} (|Δ| |Δ+δ|)^{1/6})`.
///
/// Only same-sign detuning and defect are allowed; opposite signs put an
/// excitation resonance at finite R.
pub fn blockade_radius(detuning: Frequency, defect: Frequency, crossover: f64) -> Result<f64> {
    const OP: &str = "blockade_radius";
    check_same_sign(OP, detuning, defect)?;
    ensure_positive(OP, "crossover", crossover)?;
    let (d, delta) = (detuning.angular(), defect.angular());
    Ok(crossover * delta.abs().cbrt()
        / (2f64.cbrt() * (d.abs() * (d + delta).abs()).powf(1.0 / 6.0)))
}

pub(crate) fn check_same_sign(
    op: &'static str,
    detuning: Frequency,
    defect: Frequency,
) -> Result<()> {
    let (d, delta) = (detuning.angular(), defect.angular());
    if d == 0.0 || delta == 0.0 {
        return Err(Error::domain(
            op,
            "detuning and Förster defect must be nonzero",
        ));
    }
    if d.signum() != delta.signum() {
        return Err(Error::domain(
            op,
            format!(
                "detuning ({:+e} Hz) and Förster defect ({:+e} Hz) have opposite signs: \
                 this combination has an excitation resonance at finite R and is excluded",
                detuning.hz(),
                defect.hz()
            ),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    const RC: f64 = 8.1e-6;

    #[test]
    fn dipole_dipole_limits() {
        let delta = Frequency::from_mhz(-200.0);
        let far = dipole_dipole_shift(1e3 * RC, delta, RC).unwrap();
        assert!(far.angular().abs() < 1e-15 * delta.angular().abs());
        let at_rc = dipole_dipole_shift(RC, delta, RC).unwrap();
        let expected = delta.angular() / 2.0 * (1.0 - 2f64.sqrt());
        assert!(rel(at_rc.angular(), expected) < 1e-14);
        assert!(dipole_dipole_shift(0.0, delta, RC).is_err());
    }

    #[test]
    fn resonant_regime_is_inverse_cube() {
        let delta = Frequency::from_mhz(50.0);
        for r in [RC / 5.0, RC / 10.0, RC / 50.0] {
            let full = dipole_dipole_shift(r, delta, RC).unwrap().angular();
            let cube = -delta.angular() / 2.0 * (RC / r).powi(3);
            assert!(rel(full, cube) < 0.01, "R = {r}: {full} vs {cube}");
        }
    }

    #[test]
    fn vdw_is_long_range_limit() {
        let delta = Frequency::from_mhz(20.0);
        let ratio = vdw_shift(10.0 * RC, delta, RC).unwrap().angular()
            / dipole_dipole_shift(10.0 * RC, delta, RC).unwrap().angular();
        assert!((ratio - 1.0).abs() < 0.005);
        assert!(
            rel(
                vdw_shift(RC, delta, RC).unwrap().angular(),
                -delta.angular() / 4.0
            ) < 1e-15
        );
        assert!(vdw_shift(RC, -delta, RC).unwrap().angular() > 0.0);
    }

    #[test]
    fn crossover_scalings() {
        let c3 = C3::from_ghz_um3(10.0);
        let d = Frequency::from_mhz(200.0);
        let r = crossover_radius(c3, d, 12.0).unwrap();
        assert!(
            rel(
                crossover_radius(c3, d * 2.0, 12.0).unwrap(),
                r / 2f64.cbrt()
            ) < 1e-14
        );
        let c3x2 = C3::from_angular_m3(2.0 * c3.angular_m3());
        assert!(rel(crossover_radius(c3x2, d, 12.0).unwrap(), 2f64.cbrt() * r) < 1e-14);
    }

    #[test]
    fn crossover_round_trip_at_worked_point() {
        let d = Frequency::from_mhz(-200.0);
        let c3 = c3_for_crossover(RC, d, DEFAULT_ANGULAR_FACTOR).unwrap();
        let back = crossover_radius(c3, d, DEFAULT_ANGULAR_FACTOR).unwrap();
        assert!(rel(back, RC) < 1e-9);
        assert!(PairInteraction::with_c3_and_crossover(c3, d, RC, 12.0).is_ok());
        assert!(PairInteraction::with_c3_and_crossover(c3, d, 1.01 * RC, 12.0).is_err());
        assert!(rel(C3::from_ghz_um3(c3.ghz_um3()).angular_m3(), c3.angular_m3()) < 1e-15);
    }

    #[test]
    fn blockade_radius_identities() {
        let d = Frequency::from_mhz(100.0);
        let rb = blockade_radius(d, d, RC).unwrap();
        assert!(rel(rb, RC / 2f64.sqrt()) < 1e-12);
        let rb2 = blockade_radius(-d, -d * 2.0, RC).unwrap();
        // |δ| = 2|Δ|: R_b = R_c / 3^{1/6}
        assert!(rel(rb2, RC / 3f64.powf(1.0 / 6.0)) < 1e-14);
        assert!((rb2 * 1e6 - 6.74).abs() < 0.01);
        assert!(rel(blockade_radius(d, d, 2.0 * RC).unwrap(), 2.0 * rb) < 1e-15);
        for (det, def) in [(d, d), (-d, -d * 2.0), (d * 0.3, d * 7.0)] {
            let rb = blockade_radius(det, def, RC).unwrap();
            let shift = dipole_dipole_shift(rb, def, RC).unwrap();
            assert!(rel(shift.angular().abs(), det.angular().abs()) < 1e-9);
        }
    }

    #[test]
    fn opposite_signs_rejected() {
        let err = blockade_radius(Frequency::from_mhz(100.0), Frequency::from_mhz(-200.0), RC)
            .unwrap_err();
        assert!(err.to_string().contains("excluded"));
        assert!(blockade_radius(Frequency::ZERO, Frequency::from_mhz(1.0), RC).is_err());
    }
}

//! Normalized soft-core dressing potentials.

use serde::{Deserialize, Serialize};

use super::dressed::{dressed_ground_energy_exact, light_shift_blockaded, light_shift_separated};
use super::pair::{check_same_sign, dipole_dipole_shift, vdw_shift};
use crate::error::{ensure_positive, Result};
use crate::units::Frequency;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PotentialKind {
    /// exact dressed energy with the full dipole-dipole shift
    Full,
    /// exact dressed energy with the van der Waals shift only
    Vdw,
    /// single-term soft core `ξ⁶/(R⁶ + ξ⁶)`
    SingleTerm,
}

impl PotentialKind {
    pub const ALL: [PotentialKind; 3] = [
        PotentialKind::Full,
        PotentialKind::Vdw,
        PotentialKind::SingleTerm,
    ];
}

/// Drive and single-channel pair parameters of a dressing curve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PotentialParams {
    pub rabi: Frequency,
    pub detuning: Frequency,
    pub defect: Frequency,
    /// m (or any length unit, as long as `R` uses the same)
    pub crossover: f64,
}

impl PotentialParams {
    /// `Δ_dr(∞)`
    pub fn separated_shift(&self) -> Frequency {
        light_shift_separated(self.rabi, self.detuning)
    }

    /// `Δ_dr(0) - Δ_dr(∞)`
    pub fn depth(&self) -> Frequency {
        light_shift_blockaded(self.rabi, self.detuning) - self.separated_shift()
    }
}

/// Soft-core radius `ξ = R_c (δ/8Δ)^{1/6}` of the single-term approximation.
pub fn soft_core_radius(detuning: Frequency, defect: Frequency, crossover: f64) -> Result<f64> {
    check_same_sign("soft_core_radius", detuning, defect)?;
    Ok(crossover * (defect.angular() / (8.0 * detuning.angular())).powf(1.0 / 6.0))
}

/// `V(R) = [Δ_dr(R) - Δ_dr(∞)] / |Δ_dr(0) - Δ_dr(∞)|`.
///
/// The single-term curve carries the sign of the exact depth, so all three
/// kinds tend to the same `V(0⁺) = ±1`.
pub fn normalized_potential(r: f64, params: &PotentialParams, kind: PotentialKind) -> Result<f64> {
    ensure_positive("normalized_potential", "R", r)?;
    let depth = params.depth().angular();
    let shift = match kind {
        PotentialKind::Full => dipole_dipole_shift(r, params.defect, params.crossover)?,
        PotentialKind::Vdw => vdw_shift(r, params.defect, params.crossover)?,
        PotentialKind::SingleTerm => {
            let xi6 = soft_core_radius(params.detuning, params.defect, params.crossover)?.powi(6);
            return Ok(depth.signum() * xi6 / (r.powi(6) + xi6));
        }
    };
    let energy = dressed_ground_energy_exact(params.rabi, params.detuning, shift);
    Ok((energy - params.separated_shift()).angular() / depth.abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurvePoint {
    pub r: f64,
    pub full: f64,
    pub vdw: f64,
    pub single_term: f64,
}

/// All three normalized curves at each radius.
pub fn potential_curve(params: &PotentialParams, radii: &[f64]) -> Result<Vec<CurvePoint>> {
    radii
        .iter()
        .map(|&r| {
            Ok(CurvePoint {
                r,
                full: normalized_potential(r, params, PotentialKind::Full)?,
                vdw: normalized_potential(r, params, PotentialKind::Vdw)?,
                single_term: normalized_potential(r, params, PotentialKind::SingleTerm)?,
            })
        })
        .collect()
}

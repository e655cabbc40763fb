//! Figures of merit for dressed many-body dynamics.
//!
//! A figure of merit counts coherent interaction cycles per dressing
//! decoherence time, `|Δ_dr(0) - Δ_dr(∞)| τ_dr / 2π`, times the number of
//! lattice atoms inside a blockade region in one, two or three dimensions.
//! `F′` instead assumes avalanche depopulation shortens the coherence time
//! by `N/2`, which removes the atom count.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::dressed::{potential_depth, potential_depth_perturbative};
use super::pair::{blockade_radius, check_same_sign, PairInteraction};
use crate::error::{ensure_positive, Error, Result};
use crate::numeric::log_log_slope;
use crate::units::Frequency;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DressingParams {
    pub rabi: Frequency,
    /// signed dressing detuning Δ
    pub detuning: Frequency,
    pub pair: PairInteraction,
    /// Rydberg lifetime (s)
    pub lifetime: f64,
    /// lattice period (m)
    pub spacing: f64,
}

impl DressingParams {
    /// Rejects opposite-sign detuning and defect; reports whether the weak
    /// dressing condition `|Ω| < |Δ|` holds.
    pub fn validate(&self) -> Result<bool> {
        const OP: &str = "figures_of_merit";
        check_same_sign(OP, self.detuning, self.pair.defect)?;
        ensure_positive(OP, "|rabi|", self.rabi.angular().abs())?;
        ensure_positive(OP, "lifetime", self.lifetime)?;
        ensure_positive(OP, "spacing", self.spacing)?;
        Ok(self.rabi.angular().abs() < self.detuning.angular().abs())
    }

    /// `τ_dr = 2Δ²τ/Ω²`
    pub fn decoherence_time(&self) -> f64 {
        let (w, d) = (self.rabi.angular(), self.detuning.angular());
        2.0 * d * d / (w * w) * self.lifetime
    }

    pub fn blockade_radius(&self) -> Result<f64> {
        blockade_radius(self.detuning, self.pair.defect, self.pair.crossover)
    }

    fn raw(&self) -> RawParams {
        RawParams {
            rabi: self.rabi.angular().abs(),
            detuning: self.detuning.angular().abs(),
            defect: self.pair.defect.angular().abs(),
            detuning_plus_defect: (self.detuning + self.pair.defect).angular().abs(),
            lifetime: self.lifetime,
            crossover_over_spacing: self.pair.crossover / self.spacing,
        }
    }
}

/// Magnitudes entering the closed-form figures of merit.
#[derive(Clone, Copy, Debug)]
struct RawParams {
    rabi: f64,
    detuning: f64,
    defect: f64,
    detuning_plus_defect: f64,
    lifetime: f64,
    crossover_over_spacing: f64,
}

impl RawParams {
    fn f_closed_form(&self, dimension: u8) -> f64 {
        let w2 = self.rabi * self.rabi;
        let (d, delta, sum) = (self.detuning, self.defect, self.detuning_plus_defect);
        let (tau, x) = (self.lifetime, self.crossover_over_spacing);
        match dimension {
            1 => {
                w2 * delta.cbrt() / (d.powf(7.0 / 6.0) * sum.powf(1.0 / 6.0)) * tau * x
                    / (2f64.cbrt() * 8.0 * PI)
            }
            2 => {
                w2 * delta.powf(2.0 / 3.0) / (d.powf(4.0 / 3.0) * sum.cbrt()) * tau * x * x
                    / (2f64.powf(2.0 / 3.0) * 32.0)
            }
            3 => w2 * delta / (d.powf(1.5) * sum.sqrt()) * tau * x.powi(3) / 96.0,
            _ => unreachable!("dimension {dimension}"),
        }
    }

    /// `(2/2π) (Ω⁴/8Δ³)(2Δ²τ/Ω²) = Ω²τ/(4π|Δ|)`
    fn f_prime(&self) -> f64 {
        self.rabi * self.rabi * self.lifetime / (4.0 * PI * self.detuning)
    }

    /// `Ω²τ/(4π|δ|)`, the published simplification with `|δ|` in place of
    /// `|Δ|`.
    fn f_prime_as_printed(&self) -> f64 {
        self.rabi * self.rabi * self.lifetime / (4.0 * PI * self.defect)
    }
}

/// Lattice atoms within a blockade region of diameter `R_b`.
pub fn atoms_in_blockade(dimension: u8, blockade_radius: f64, spacing: f64) -> f64 {
    let x = blockade_radius / (2.0 * spacing);
    match dimension {
        1 => blockade_radius / spacing,
        2 => PI * x * x,
        3 => 4.0 * PI / 3.0 * x.powi(3),
        _ => panic!("dimension must be 1, 2 or 3, got {dimension}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FigureOfMerit {
    pub dimension: u8,
    /// perturbative depth `|Ω|⁴/8|Δ|³`
    pub depth: Frequency,
    /// exact `|Δ_dr(0) - Δ_dr(∞)|`
    pub exact_depth: Frequency,
    /// τ_dr (s)
    pub decoherence_time: f64,
    /// `depth · τ_dr / 2π`
    pub ops_per_atom: f64,
    pub atoms: f64,
    pub atoms_floor: u64,
    /// closed-form F
    pub f: f64,
    /// `depth · τ_dr · N / 2π`
    pub f_composed: f64,
    pub f_prime: f64,
    pub f_prime_as_printed: f64,
    pub f_prime_per_atom: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeritSummary {
    pub blockade_radius: f64,
    pub weak_dressing: bool,
    pub records: Vec<FigureOfMerit>,
}

/// Figures of merit in one, two and three dimensions.
///
/// Fails for opposite-sign detuning and defect. Outside weak dressing the
/// records are still produced, `weak_dressing` is false and a warning is
/// logged.
pub fn figures_of_merit(params: &DressingParams) -> Result<MeritSummary> {
    let weak_dressing = params.validate()?;
    if !weak_dressing {
        log::warn!(
            "figures_of_merit: |Ω| = {} Hz is not below |Δ| = {} Hz; perturbative depth is unreliable",
            params.rabi.hz().abs(),
            params.detuning.hz().abs()
        );
    }
    let depth = potential_depth_perturbative(params.rabi, params.detuning).abs();
    let exact_depth = potential_depth(params.rabi, params.detuning).abs();
    let tau_dr = params.decoherence_time();
    let ops_per_atom = depth.angular() * tau_dr / (2.0 * PI);
    let rb = params.blockade_radius()?;
    let raw = params.raw();
    let (f_prime, f_prime_as_printed) = (raw.f_prime(), raw.f_prime_as_printed());

    let records = (1..=3u8)
        .map(|dimension| {
            let atoms = atoms_in_blockade(dimension, rb, params.spacing);
            FigureOfMerit {
                dimension,
                depth,
                exact_depth,
                decoherence_time: tau_dr,
                ops_per_atom,
                atoms,
                atoms_floor: atoms.floor() as u64,
                f: raw.f_closed_form(dimension),
                f_composed: ops_per_atom * atoms,
                f_prime,
                f_prime_as_printed,
                f_prime_per_atom: f_prime / atoms,
            }
        })
        .collect();
    Ok(MeritSummary {
        blockade_radius: rb,
        weak_dressing,
        records,
    })
}

/// Power laws in the principal quantum number `n`, with unit prefactors.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticScaling {
    pub defect: f64,
    pub lifetime: f64,
    pub crossover: f64,
    pub spacing: f64,
    pub detuning: f64,
    /// Rabi frequency, held fixed
    pub rabi: f64,
}

impl Default for AsymptoticScaling {
    /// Heavy alkalis: `δ ∼ n⁻⁴`, `τ ∼ n³`, `R_c ∼ n^{8/3}`, `d ∼ n²`,
    /// `Δ ∼ n⁻³`.
    fn default() -> Self {
        AsymptoticScaling {
            defect: -4.0,
            lifetime: 3.0,
            crossover: 8.0 / 3.0,
            spacing: 2.0,
            detuning: -3.0,
            rabi: 1.0,
        }
    }
}

impl AsymptoticScaling {
    fn at(&self, n: f64) -> RawParams {
        let (detuning, defect) = (n.powf(self.detuning), n.powf(self.defect));
        RawParams {
            rabi: self.rabi,
            detuning,
            defect,
            detuning_plus_defect: detuning + defect,
            lifetime: n.powf(self.lifetime),
            crossover_over_spacing: n.powf(self.crossover - self.spacing),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MeritQuantity {
    F1D,
    F2D,
    F3D,
    FPrime,
    FPrimeAsPrinted,
}

impl MeritQuantity {
    fn evaluate(self, p: &RawParams) -> f64 {
        match self {
            MeritQuantity::F1D => p.f_closed_form(1),
            MeritQuantity::F2D => p.f_closed_form(2),
            MeritQuantity::F3D => p.f_closed_form(3),
            MeritQuantity::FPrime => p.f_prime(),
            MeritQuantity::FPrimeAsPrinted => p.f_prime_as_printed(),
        }
    }
}

/// `d ln F / d ln n` from the log-log secant between `n_lo` and `n_hi`.
pub fn scaling_exponent(
    model: &AsymptoticScaling,
    quantity: MeritQuantity,
    n_lo: f64,
    n_hi: f64,
) -> Result<f64> {
    if !(n_lo >= 50.0 && n_hi > n_lo && n_hi.is_finite()) {
        return Err(Error::domain(
            "scaling_exponent",
            format!("need n_hi > n_lo >= 50, got [{n_lo}, {n_hi}]"),
        ));
    }
    let lo = quantity.evaluate(&model.at(n_lo));
    let hi = quantity.evaluate(&model.at(n_hi));
    Ok(log_log_slope((n_lo, lo), (n_hi, hi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked() -> DressingParams {
        DressingParams {
            rabi: Frequency::from_mhz(20.0),
            detuning: Frequency::from_mhz(-100.0),
            pair: PairInteraction::from_crossover(Frequency::from_mhz(-200.0), 8.1e-6, 12.0)
                .unwrap(),
            lifetime: 320e-6,
            spacing: 1e-6,
        }
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn worked_example() {
        let s = figures_of_merit(&worked()).unwrap();
        assert!(s.weak_dressing);
        let r = &s.records;
        assert!(rel(r[0].depth.khz(), 20.0) < 1e-12);
        assert!(rel(r[0].decoherence_time, 16e-3) < 1e-12);
        assert!(rel(r[0].ops_per_atom, 320.0) < 1e-12);
        let floors: Vec<u64> = r.iter().map(|x| x.atoms_floor).collect();
        assert_eq!(floors, [6, 35, 160]);
        for (rec, expected) in r.iter().zip([2200.0, 11000.0, 51000.0]) {
            assert!(rel(rec.f, expected) < 0.05, "{}: {}", rec.dimension, rec.f);
            assert!(rel(rec.f, rec.f_composed) < 1e-12);
        }
        assert!(rel(r[0].f_prime, 640.0) < 1e-12);
        assert!(rel(r[0].f_prime_as_printed, 320.0) < 1e-12);
        for (rec, expected) in r.iter().zip([95.0, 18.0, 4.0]) {
            assert!(
                rel(rec.f_prime_per_atom, expected) < 0.1,
                "{}",
                rec.f_prime_per_atom
            );
        }
    }

    #[test]
    fn linear_in_lifetime() {
        let base = figures_of_merit(&worked()).unwrap();
        let doubled = figures_of_merit(&DressingParams {
            lifetime: 640e-6,
            ..worked()
        })
        .unwrap();
        for (a, b) in base.records.iter().zip(&doubled.records) {
            assert!(rel(b.f, 2.0 * a.f) < 1e-14);
            assert!(rel(b.f_prime, 2.0 * a.f_prime) < 1e-14);
        }
    }

    #[test]
    fn validity_checks() {
        let mut p = worked();
        p.detuning = Frequency::from_mhz(100.0);
        assert!(figures_of_merit(&p).is_err());
        let mut strong = worked();
        strong.rabi = Frequency::from_mhz(150.0);
        assert!(!figures_of_merit(&strong).unwrap().weak_dressing);
    }

    #[test]
    fn exponents() {
        let m = AsymptoticScaling::default();
        let e = |q| scaling_exponent(&m, q, 300.0, 600.0).unwrap();
        assert!((e(MeritQuantity::F1D) - 19.0 / 3.0).abs() < 0.05);
        assert!((e(MeritQuantity::F2D) - 20.0 / 3.0).abs() < 0.05);
        assert!((e(MeritQuantity::F3D) - 7.0).abs() < 0.05);
        assert!((e(MeritQuantity::FPrime) - 6.0).abs() < 1e-12);
        assert!((e(MeritQuantity::FPrimeAsPrinted) - 7.0).abs() < 1e-12);
        assert!(scaling_exponent(&m, MeritQuantity::F1D, 40.0, 600.0).is_err());
        assert!(scaling_exponent(&m, MeritQuantity::F1D, 300.0, 300.0).is_err());
    }
}

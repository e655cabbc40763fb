//! Gate-error models for Rydberg blockade, interaction and dressing gates,
//! plus the experimental budgets (Doppler dephasing, Stark detuning).
//!
//! The blockade and dressing minima are the optima of two-term cost models:
//!
//! * blockade: `E(Ω) = 7π/(4Ωτ) + Ω²/(8B²)` (spontaneous emission during
//!   the π-2π-π sequence plus blockade leakage),
//! * dressing: `E(Ω) = 8πΔ/(Ω²τ) + Ω²/Δ²`.
//!
//! The closed forms below are the analytic minima; [`blockade_error_model`]
//! and [`dressing_error_model`] expose the cost functions so a numeric
//! minimizer can check them.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{ensure, ensure_non_negative, ensure_positive, Result};
use crate::numeric;
use crate::units::{Frequency, CONSTANTS};

/// Blockade shift `B`, Rydberg lifetime and an optional operating Rabi
/// frequency.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BlockadeGateInputs {
    pub blockade: Frequency,
    pub lifetime: f64,
    pub rabi: Option<Frequency>,
}

impl BlockadeGateInputs {
    pub fn new(blockade: Frequency, lifetime: f64, rabi: Option<Frequency>) -> Result<Self> {
        const OP: &str = "BlockadeGateInputs";
        ensure_positive(OP, "blockade", blockade.angular())?;
        ensure_positive(OP, "lifetime", lifetime)?;
        if let Some(r) = rabi {
            ensure_positive(OP, "rabi", r.angular())?;
        }
        Ok(BlockadeGateInputs {
            blockade,
            lifetime,
            rabi,
        })
    }

    /// The given Rabi frequency, or the error-minimizing one.
    pub fn operating_rabi(&self) -> Frequency {
        self.rabi
            .unwrap_or_else(|| optimal_rabi(self.blockade, self.lifetime))
    }
}

/// Rabi frequency minimizing the blockade gate error,
/// `(7π)^{1/3} B^{2/3} τ^{-1/3}`.
pub fn optimal_rabi(blockade: Frequency, lifetime: f64) -> Frequency {
    let b = blockade.angular();
    Frequency::from_angular((7.0 * PI).cbrt() * (b * b / lifetime).cbrt())
}

/// Blockade gate error at Rabi frequency `rabi`: spontaneous-emission plus
/// blockade-leakage terms.
pub fn blockade_error_model(rabi: Frequency, blockade: Frequency, lifetime: f64) -> f64 {
    let (w, b) = (rabi.angular(), blockade.angular());
    7.0 * PI / (4.0 * w * lifetime) + w * w / (8.0 * b * b)
}

/// Minimum blockade gate error `(3(7π)^{2/3}/8)(Bτ)^{-2/3}`.
pub fn blockade_gate_error(blockade: Frequency, lifetime: f64) -> f64 {
    let b_tau = blockade.angular() * lifetime;
    if b_tau < 10.0 {
        log::warn!("blockade_gate_error: Bτ = {b_tau:.3} is outside the Bτ ≫ 1 regime");
    }
    3.0 * (7.0 * PI).powf(2.0 / 3.0) / 8.0 * b_tau.powf(-2.0 / 3.0)
}

/// Lower bound `2/(Bτ)` on the error of any gate that creates one unit of
/// entanglement through an interaction of strength `B`.
pub fn entanglement_error_bound(blockade: Frequency, lifetime: f64) -> f64 {
    2.0 / (blockade.angular() * lifetime)
}

/// Half the spacing of neighbouring Rydberg levels, `E_H/(2ħn³)`, the
/// largest useful blockade shift (or dressing detuning) at high `n`.
pub fn level_spacing_limit(n: u32) -> Frequency {
    let c = CONSTANTS;
    Frequency::from_angular(c.hartree / (2.0 * c.hbar * f64::from(n).powi(3)))
}

/// n-independent blockade error floor
/// `(3(14π)^{2/3}/8)(ħ/(E_H τ₀))^{2/3}` reached when `B = E_H/2ħn³` and
/// `τ = τ₀n³`.
pub fn asymptotic_blockade_floor(tau0: f64) -> Result<f64> {
    ensure_positive("asymptotic_blockade_floor", "tau0", tau0)?;
    let x = CONSTANTS.atomic_time / tau0;
    Ok(3.0 * (14.0 * PI).powf(2.0 / 3.0) / 8.0 * x.powf(2.0 / 3.0))
}

/// Error of the weak-interaction gate, `π/(V τ) + 5V/(√3 ω_q)`, at a given
/// dipolar interaction strength.
pub fn interaction_gate_error(
    v_dd: Frequency,
    lifetime: f64,
    qubit_freq: Frequency,
) -> Result<f64> {
    const OP: &str = "interaction_gate_error";
    let v = ensure_positive(OP, "v_dd", v_dd.angular())?;
    ensure_positive(OP, "lifetime", lifetime)?;
    let wq = ensure_positive(OP, "qubit_freq", qubit_freq.angular())?;
    Ok(PI / (v * lifetime) + 5.0 * v / (3f64.sqrt() * wq))
}

/// Interaction strength minimizing [`interaction_gate_error`] and the
/// resulting error `2√(5π/(√3 ω_q τ))`.
pub fn optimal_interaction_gate(lifetime: f64, qubit_freq: Frequency) -> Result<(Frequency, f64)> {
    const OP: &str = "optimal_interaction_gate";
    ensure_positive(OP, "lifetime", lifetime)?;
    let wq = ensure_positive(OP, "qubit_freq", qubit_freq.angular())?;
    let v = (PI * 3f64.sqrt() * wq / (5.0 * lifetime)).sqrt();
    let e = 2.0 * (5.0 * PI / (3f64.sqrt() * wq * lifetime)).sqrt();
    Ok((Frequency::from_angular(v), e))
}

/// Dressing-gate error at Rabi frequency `rabi` and detuning `detuning`:
/// spontaneous emission `8πΔ/(Ω²τ)` plus blockade leakage `Ω²/Δ²`.
pub fn dressing_error_model(rabi: Frequency, detuning: Frequency, lifetime: f64) -> f64 {
    let (w, d) = (rabi.angular(), detuning.angular().abs());
    8.0 * PI * d / (w * w * lifetime) + w * w / (d * d)
}

/// Rabi frequency `(8π|Δ|³/τ)^{1/4}` minimizing [`dressing_error_model`].
pub fn dressing_optimal_rabi(detuning: Frequency, lifetime: f64) -> Frequency {
    let d = detuning.angular().abs();
    Frequency::from_angular((8.0 * PI * d.powi(3) / lifetime).powf(0.25))
}

/// Minimum dressing-gate error `2^{5/2} √π / √(Δτ)`.
pub fn dressing_gate_error(detuning: Frequency, lifetime: f64) -> Result<f64> {
    const OP: &str = "dressing_gate_error";
    let d = ensure_positive(OP, "|detuning|", detuning.angular().abs())?;
    ensure_positive(OP, "lifetime", lifetime)?;
    Ok(2f64.powf(2.5) * PI.sqrt() / (d * lifetime).sqrt())
}

/// Minimum Rydberg lifetime `(7/4) t_π / ε_τ` for a spontaneous-emission
/// error of at most `eps_tau` in a blockade CNOT.
pub fn spontaneous_budget(t_pi: f64, eps_tau: f64) -> Result<f64> {
    ensure_positive("spontaneous_budget", "t_pi", t_pi)?;
    ensure_positive("spontaneous_budget", "eps_tau", eps_tau)?;
    Ok(1.75 * t_pi / eps_tau)
}

/// Thermal-motion inputs of the Doppler dephasing model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DopplerInputs {
    /// excitation wavevector magnitude (1/m)
    pub k: f64,
    /// K
    pub temperature: f64,
    /// time spent in the Rydberg state (s)
    pub time: f64,
    /// kg
    pub mass: f64,
}

impl DopplerInputs {
    pub fn new(k: f64, temperature: f64, time: f64, mass: f64) -> Result<Self> {
        const OP: &str = "DopplerInputs";
        ensure_non_negative(OP, "k", k)?;
        ensure_non_negative(OP, "temperature", temperature)?;
        ensure_non_negative(OP, "time", time)?;
        ensure_positive(OP, "mass", mass)?;
        Ok(DopplerInputs {
            k,
            temperature,
            time,
            mass,
        })
    }

    /// `k² k_B T t² / 2m`
    pub fn exponent(&self) -> f64 {
        let kt = self.k * self.time;
        kt * kt * (CONSTANTS.k_b * self.temperature) / (2.0 * self.mass)
    }

    pub fn fidelity(&self) -> f64 {
        (1.0 + (-self.exponent()).exp()) / 2.0
    }

    /// `1 - F_D`, evaluated without cancellation.
    pub fn infidelity(&self) -> f64 {
        -(-self.exponent()).exp_m1() / 2.0
    }
}

/// Doppler-limited Bell-state fidelity `(1 + e^{-k²k_BTt²/2m})/2`.
pub fn doppler_fidelity(k: f64, temperature: f64, time: f64, mass: f64) -> Result<f64> {
    Ok(DopplerInputs::new(k, temperature, time, mass)?.fidelity())
}

/// Population left behind by a π pulse of Rabi frequency `rabi` detuned by
/// `detuning`: `1 - (Ω²/Ω'²) sin²(πΩ'/2Ω)` with `Ω' = √(Ω² + Δ²)`.
pub fn detuned_pi_pulse_error(rabi: Frequency, detuning: Frequency) -> f64 {
    let s = detuning.angular() / rabi.angular();
    pi_pulse_error_ratio(s)
}

/// Same as [`detuned_pi_pulse_error`] in terms of `s = Δ/Ω`.
///
/// Written as `s²/(1+s²) + sin²(π(r-1)/2)/(1+s²)`, `r = √(1+s²)`, so that
/// small errors do not suffer from cancellation.
fn pi_pulse_error_ratio(s: f64) -> f64 {
    let s2 = s * s;
    let r_minus_1 = s2 / (1.0 + (1.0 + s2).sqrt());
    let leak = (PI * r_minus_1 / 2.0).sin();
    (s2 + leak * leak) / (1.0 + s2)
}

/// Largest detuning for which a π pulse at `rabi` leaves an excitation
/// error of at most `epsilon`. Inverts the exact Rabi formula by Brent root
/// finding on `Δ/Ω ∈ (0, √3]` (the error reaches 1 at `Δ = √3 Ω`).
pub fn detuning_budget(rabi: Frequency, epsilon: f64) -> Result<Frequency> {
    const OP: &str = "detuning_budget";
    let w = ensure_positive(OP, "|rabi|", rabi.angular().abs())?;
    ensure(OP, "epsilon", epsilon, |e| e > 0.0 && e < 1.0, "in (0, 1)")?;
    let s = numeric::find_root(
        OP,
        |s| pi_pulse_error_ratio(s) - epsilon,
        0.0,
        3f64.sqrt(),
        1e-13,
        200,
    )?;
    Ok(Frequency::from_angular(s * w))
}

/// How a static field maps onto a level shift.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarkConvention {
    /// shift = α₀ E²
    #[default]
    Full,
    /// shift = α₀ E² / 2
    Half,
}

/// Ordinary-frequency Stark shift (Hz) of a level with scalar polarizability
/// `alpha0` (GHz/(V/cm)²) in a field `field` (V/cm).
pub fn stark_shift(field: f64, alpha0: f64, convention: StarkConvention) -> f64 {
    let full = alpha0 * 1e9 * field * field;
    match convention {
        StarkConvention::Full => full,
        StarkConvention::Half => full / 2.0,
    }
}

/// Largest field (V/cm) whose Stark shift stays within `max_detuning`.
pub fn field_budget(
    max_detuning: Frequency,
    alpha0: f64,
    convention: StarkConvention,
) -> Result<f64> {
    const OP: &str = "field_budget";
    let d = ensure_positive(OP, "max_detuning", max_detuning.hz())?;
    let a = ensure(OP, "alpha0", alpha0, |a| a != 0.0, "!= 0")?.abs() * 1e9;
    Ok(match convention {
        StarkConvention::Full => (d / a).sqrt(),
        StarkConvention::Half => (2.0 * d / a).sqrt(),
    })
}

/// Detuning and field limits for a π pulse error target.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StarkBudget {
    pub rabi: Frequency,
    pub epsilon: f64,
    /// GHz/(V/cm)²
    pub alpha0: f64,
    pub convention: StarkConvention,
    pub max_detuning: Frequency,
    /// V/cm
    pub max_field: f64,
}

impl StarkBudget {
    pub fn compute(
        rabi: Frequency,
        epsilon: f64,
        alpha0: f64,
        convention: StarkConvention,
    ) -> Result<Self> {
        let max_detuning = detuning_budget(rabi, epsilon)?;
        let max_field = field_budget(max_detuning, alpha0, convention)?;
        Ok(StarkBudget {
            rabi,
            epsilon,
            alpha0,
            convention,
            max_detuning,
            max_field,
        })
    }
}

/// Stray static field acting on the Rydberg level during the gate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StrayField {
    /// V/cm
    pub field: f64,
    /// GHz/(V/cm)²
    pub alpha0: f64,
    pub convention: StarkConvention,
}

/// A total gate error together with the contributions it is built from.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GateErrorBudget {
    pub rabi: Frequency,
    pub spontaneous: f64,
    pub blockade_leakage: f64,
    pub doppler: f64,
    pub stark: f64,
    pub total: f64,
}

impl GateErrorBudget {
    /// Sums the blockade-gate cost model at the operating Rabi frequency with
    /// the Doppler infidelity and the π-pulse error caused by a stray-field
    /// Stark detuning.
    pub fn compute(
        gate: &BlockadeGateInputs,
        doppler: Option<&DopplerInputs>,
        stray: Option<&StrayField>,
    ) -> Result<Self> {
        let rabi = gate.operating_rabi();
        let w = rabi.angular();
        let b = gate.blockade.angular();
        let spontaneous = 7.0 * PI / (4.0 * w * gate.lifetime);
        let blockade_leakage = w * w / (8.0 * b * b);
        let doppler = doppler.map_or(0.0, DopplerInputs::infidelity);
        let stark = match stray {
            Some(s) => {
                ensure_non_negative("GateErrorBudget", "field", s.field)?;
                let shift = Frequency::from_hz(stark_shift(s.field, s.alpha0, s.convention));
                detuned_pi_pulse_error(rabi, shift)
            }
            None => 0.0,
        };
        Ok(GateErrorBudget {
            rabi,
            spontaneous,
            blockade_leakage,
            doppler,
            stark,
            total: spontaneous + blockade_leakage + doppler + stark,
        })
    }

    /// Name and size of the largest contribution.
    pub fn dominant(&self) -> (&'static str, f64) {
        [
            ("spontaneous", self.spontaneous),
            ("blockade_leakage", self.blockade_leakage),
            ("doppler", self.doppler),
            ("stark", self.stark),
        ]
        .into_iter()
        .fold(("spontaneous", f64::NEG_INFINITY), |best, c| {
            if c.1 > best.1 {
                c
            } else {
                best
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::Species;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    const TAU_320US: f64 = 320e-6;

    #[test]
    fn optimal_rabi_worked_point() {
        // (7π)^{1/3} (2π·5e8)^{2/3} (3.2e-4)^{-1/3} / 2π, evaluated by hand
        let b = Frequency::from_mhz(500.0);
        let w = optimal_rabi(b, TAU_320US);
        assert!((w.mhz() - 13.985).abs() < 0.01, "{}", w.mhz());
        let w8 = optimal_rabi(b * 8.0, TAU_320US);
        assert!(rel(w8.angular(), 4.0 * w.angular()) < 1e-14);
    }

    #[test]
    fn blockade_error_worked_point() {
        let b = Frequency::from_mhz(500.0);
        let e = blockade_gate_error(b, TAU_320US);
        assert!((e - 2.934e-4).abs() < 0.002e-4, "{e}");
        let ratio = blockade_gate_error(b * 4.0, TAU_320US) / e;
        assert!(rel(ratio, 4f64.powf(-2.0 / 3.0)) < 1e-14);
        // the cost model evaluated at the optimum reproduces the closed form
        let at_opt = blockade_error_model(optimal_rabi(b, TAU_320US), b, TAU_320US);
        assert!(rel(at_opt, e) < 1e-14);
    }

    #[test]
    fn bound_worked_point() {
        let b = Frequency::from_mhz(500.0);
        let bound = entanglement_error_bound(b, TAU_320US);
        assert!((bound - 1.989e-6).abs() < 0.001e-6, "{bound}");
        assert!(rel(entanglement_error_bound(b, TAU_320US / 2.0), 2.0 * bound) < 1e-15);
    }

    #[test]
    fn bound_crossover_near_a_third() {
        // 3(7π)^{2/3}/8 x^{-2/3} = 2/x  ⇒  x = (2/c)^3
        let c = 3.0 * (7.0 * PI).powf(2.0 / 3.0) / 8.0;
        let x = (2.0 / c).powi(3);
        assert!((x - 0.313).abs() < 0.001, "{x}");
        let b = Frequency::from_angular(x);
        assert!(
            rel(
                blockade_gate_error(b, 1.0),
                entanglement_error_bound(b, 1.0)
            ) < 1e-12
        );
    }

    #[test]
    fn floor_value() {
        let f = asymptotic_blockade_floor(3.3e-9).unwrap();
        assert!((f - 1.77e-5).abs() < 0.01e-5, "{f}");
        let f8 = asymptotic_blockade_floor(8.0 * 3.3e-9).unwrap();
        assert!(rel(f8, f / 4.0) < 1e-14);
        assert!(asymptotic_blockade_floor(0.0).is_err());
    }

    #[test]
    fn floor_matches_substituted_blockade_error() {
        let tau0 = 3.3e-9;
        let floor = asymptotic_blockade_floor(tau0).unwrap();
        for n in [50u32, 100, 150] {
            let e = blockade_gate_error(level_spacing_limit(n), tau0 * f64::from(n).powi(3));
            assert!(rel(e, floor) < 1e-12, "n = {n}: {e} vs {floor}");
        }
    }

    #[test]
    fn interaction_gate_worked_point() {
        let wq = Frequency::from_ghz(9.19);
        let e = interaction_gate_error(Frequency::from_mhz(1.0), TAU_320US, wq).unwrap();
        // π/(2π·1e6·3.2e-4) + 5e6/(√3·9.19e9)
        let expected = 1.0 / 640.0 + 5e6 / (3f64.sqrt() * 9.19e9);
        assert!(rel(e, expected) < 1e-12);
        assert!((e - 1.877e-3).abs() < 0.001e-3, "{e}");
        let (v, e_opt) = optimal_interaction_gate(TAU_320US, wq).unwrap();
        assert!((e_opt - 1.401e-3).abs() < 0.001e-3, "{e_opt}");
        assert!(rel(interaction_gate_error(v, TAU_320US, wq).unwrap(), e_opt) < 1e-12);
        let long = interaction_gate_error(Frequency::from_mhz(1.0), 1e30, wq).unwrap();
        assert!(
            rel(
                long,
                5.0 * Frequency::from_mhz(1.0).angular() / (3f64.sqrt() * wq.angular())
            ) < 1e-12
        );
    }

    #[test]
    fn dressing_floor() {
        let tau0 = 3.3e-9;
        let mut values = Vec::new();
        for n in [50u32, 100, 200] {
            let n3 = f64::from(n).powi(3);
            values.push(dressing_gate_error(level_spacing_limit(n), tau0 * n3).unwrap());
        }
        for v in &values {
            assert!(rel(*v, values[0]) < 1e-10);
        }
        // 8√π √(ħ/(E_H τ₀))
        let direct = 8.0 * PI.sqrt() * (CONSTANTS.atomic_time / tau0).sqrt();
        assert!(rel(values[0], direct) < 1e-12);
        assert!((values[0] - 1.214e-3).abs() < 0.001e-3, "{}", values[0]);
    }

    #[test]
    fn dressing_error_scaling_and_model() {
        let d = Frequency::from_mhz(100.0);
        let e = dressing_gate_error(d, 1e-4).unwrap();
        assert!(rel(dressing_gate_error(d * 4.0, 1e-4).unwrap(), e / 2.0) < 1e-14);
        let at_opt = dressing_error_model(dressing_optimal_rabi(d, 1e-4), d, 1e-4);
        assert!(rel(at_opt, e) < 1e-13);
    }

    #[test]
    fn spontaneous_budget_examples() {
        assert!(rel(spontaneous_budget(25e-9, 1e-4).unwrap(), 437.5e-6) < 1e-14);
        assert!(rel(spontaneous_budget(25e-9, 2e-5).unwrap(), 2.1875e-3) < 1e-14);
        assert_eq!(spontaneous_budget(1.0, 1.75).unwrap(), 1.0);
    }

    #[test]
    fn doppler_examples() {
        let m = 132.905451961 * CONSTANTS.amu;
        let k = 2.0 * PI / 319e-9;
        assert_eq!(doppler_fidelity(0.0, 5e-6, 1e-7, m).unwrap(), 1.0);
        assert_eq!(doppler_fidelity(k, 0.0, 1e-7, m).unwrap(), 1.0);
        assert_eq!(doppler_fidelity(k, 5e-6, 0.0, m).unwrap(), 1.0);
        let inputs = DopplerInputs::new(k, 5e-6, 100e-9, m).unwrap();
        // k²k_BTt²/2m = (1.96965e7)²·6.903245e-29·1e-14/(2·2.206947e-25)
        let x = 1.969_650_6e7_f64.powi(2) * 6.903_245e-29 * 1e-14 / (2.0 * 2.206_947e-25);
        assert!(rel(inputs.exponent(), x) < 1e-5);
        assert!(
            (inputs.infidelity() - 3.03e-4).abs() < 0.01e-4,
            "{}",
            inputs.infidelity()
        );
        let a = DopplerInputs::new(k, 5e-6, 200e-9, m).unwrap();
        let b = DopplerInputs::new(k, 20e-6, 100e-9, m).unwrap();
        assert_eq!(a.infidelity(), b.infidelity());
        assert!(DopplerInputs::new(k, -1.0, 1e-7, m).is_err());
    }

    #[test]
    fn detuning_budget_small_epsilon() {
        let rabi = Frequency::from_mhz(20.0);
        let d = detuning_budget(rabi, 1e-5).unwrap();
        // leading order Δ ≈ Ω√ε
        let leading = 20e6 * 1e-5f64.sqrt();
        assert!(rel(d.hz(), leading) < 1e-4, "{}", d.hz());
        assert!((d.khz() - 63.2).abs() < 0.1);
        assert!((detuned_pi_pulse_error(rabi, d) - 1e-5).abs() < 1e-9 * 1e-5);
        assert!(detuning_budget(rabi, 0.0).is_err());
        assert!(detuning_budget(rabi, 1.0).is_err());
    }

    #[test]
    fn pi_pulse_error_reaches_one_at_sqrt3() {
        assert!((pi_pulse_error_ratio(3f64.sqrt()) - 1.0).abs() < 1e-15);
        assert_eq!(pi_pulse_error_ratio(0.0), 0.0);
    }

    #[test]
    fn field_budget_examples() {
        let d = Frequency::from_khz(90.0);
        let e = field_budget(d, 205.0, StarkConvention::Full).unwrap();
        assert!((e - 6.626e-4).abs() < 0.001e-4, "{e}");
        let e4 = field_budget(d, 820.0, StarkConvention::Full).unwrap();
        assert!(rel(e4, e / 2.0) < 1e-14);
        let half = field_budget(d, 205.0, StarkConvention::Half).unwrap();
        assert!((half - 9.37e-4).abs() < 0.01e-4, "{half}");
        assert!(field_budget(d, 0.0, StarkConvention::Full).is_err());
        assert!(rel(field_budget(d, -205.0, StarkConvention::Full).unwrap(), e) < 1e-15);
        // round trip through the shift
        assert!(rel(stark_shift(e, 205.0, StarkConvention::Full), 90e3) < 1e-12);
    }

    #[test]
    fn gate_budget_sums_contributions() {
        let gate = BlockadeGateInputs::new(Frequency::from_mhz(500.0), TAU_320US, None).unwrap();
        let budget = GateErrorBudget::compute(&gate, None, None).unwrap();
        assert!(rel(budget.total, blockade_gate_error(gate.blockade, TAU_320US)) < 1e-13);
        // at the optimum the spontaneous term is twice the leakage term
        assert!(rel(budget.spontaneous, 2.0 * budget.blockade_leakage) < 1e-12);
        assert_eq!(budget.dominant().0, "spontaneous");

        let m = Species::cesium().mass;
        let doppler = DopplerInputs::new(2.0 * PI / 319e-9, 50e-6, 200e-9, m).unwrap();
        let stray = StrayField {
            field: 0.01,
            alpha0: 205.0,
            convention: StarkConvention::Full,
        };
        let with_all = GateErrorBudget::compute(&gate, Some(&doppler), Some(&stray)).unwrap();
        assert!(with_all.doppler > 0.0 && with_all.stark > 0.0);
        let sum =
            with_all.spontaneous + with_all.blockade_leakage + with_all.doppler + with_all.stark;
        assert_eq!(with_all.total, sum);
        assert_eq!(with_all.dominant().0, "stark");
    }
}

//! Atom-loss, reload-rate and measurement-crosstalk budgets for qubit arrays.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{ensure, ensure_non_negative, ensure_positive, Error, Result};

/// Parameters of the vacuum-loss budget for one error-correction block.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LossBudget {
    pub n_code: u32,
    pub n_phys: u32,
    /// QEC cycle time (s)
    pub t_qec: f64,
    pub epsilon: f64,
    /// vacuum-limited single-atom lifetime (s)
    pub tau_vac: f64,
}

impl LossBudget {
    pub fn new(n_code: u32, n_phys: u32, t_qec: f64, epsilon: f64, tau_vac: f64) -> Result<Self> {
        const OP: &str = "LossBudget";
        if n_code == 0 || n_phys == 0 {
            return Err(Error::domain(OP, "qubit counts must be >= 1"));
        }
        ensure_positive(OP, "t_qec", t_qec)?;
        ensure(OP, "epsilon", epsilon, |e| e > 0.0 && e < 1.0, "in (0, 1)")?;
        ensure_positive(OP, "tau_vac", tau_vac)?;
        Ok(LossBudget {
            n_code,
            n_phys,
            t_qec,
            epsilon,
            tau_vac,
        })
    }

    /// Default cycle time assumption: 0.1 ms per code qubit.
    pub fn default_t_qec(n_code: u32) -> f64 {
        0.1e-3 * f64::from(n_code)
    }

    pub fn required_vacuum_lifetime(&self) -> f64 {
        self.n_code as f64 * self.t_qec / self.epsilon
    }

    pub fn required_reload_rate(&self) -> f64 {
        self.n_phys as f64 / (self.tau_vac * self.epsilon)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LossEstimate {
    /// `N(1 - e^{-t/τ})`, unclamped
    pub probability: f64,
    /// `N t / τ`
    pub linearized: f64,
    /// false once the union-bound model exceeds 1 and stops being a probability
    pub valid: bool,
}

/// Probability of having lost at least one of `n_code` atoms after `t`.
pub fn loss_probability(n_code: u32, t: f64, tau_vac: f64) -> Result<LossEstimate> {
    ensure_non_negative("loss_probability", "t", t)?;
    ensure_positive("loss_probability", "tau_vac", tau_vac)?;
    let n = f64::from(n_code);
    let probability = -n * (-t / tau_vac).exp_m1();
    Ok(LossEstimate {
        probability,
        linearized: n * t / tau_vac,
        valid: probability <= 1.0,
    })
}

/// Exact complement `1 - e^{-N t/τ}` of all `n` atoms surviving.
pub fn exact_loss_probability(n_code: u32, t: f64, tau_vac: f64) -> f64 {
    -(-f64::from(n_code) * t / tau_vac).exp_m1()
}

/// Minimum vacuum lifetime keeping the per-cycle loss below `epsilon`.
pub fn required_vacuum_lifetime(n_code: u32, t_qec: f64, epsilon: f64) -> Result<f64> {
    const OP: &str = "required_vacuum_lifetime";
    if n_code == 0 {
        return Err(Error::domain(OP, "n_code must be >= 1"));
    }
    ensure_positive(OP, "t_qec", t_qec)?;
    ensure(OP, "epsilon", epsilon, |e| e > 0.0 && e <= 1.0, "in (0, 1]")?;
    Ok(f64::from(n_code) * t_qec / epsilon)
}

/// Minimum atom reload rate (1/s) for `n_phys` atoms at loss budget `epsilon`.
pub fn required_reload_rate(n_phys: u32, tau_vac: f64, epsilon: f64) -> Result<f64> {
    const OP: &str = "required_reload_rate";
    if n_phys == 0 {
        return Err(Error::domain(OP, "n_phys must be >= 1"));
    }
    ensure_positive(OP, "tau_vac", tau_vac)?;
    ensure(OP, "epsilon", epsilon, |e| e > 0.0 && e <= 1.0, "in (0, 1]")?;
    Ok(f64::from(n_phys) / (tau_vac * epsilon))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub trials: u64,
    pub losses: u64,
    pub estimate: f64,
    /// binomial standard error `sqrt(p(1-p)/trials)`
    pub std_error: f64,
}

const TRIALS_PER_CHUNK: u64 = 1 << 14;

/// Monte Carlo estimate of the loss probability.
///
/// Every atom of every trial gets an exponentially distributed lifetime with
/// mean `tau_vac`; a trial counts as a loss if any lifetime is shorter than
/// `t`. Trials are split into fixed-size chunks, each with its own ChaCha
/// stream derived from `seed`, so the result does not depend on the thread
/// count.
pub fn simulate_loss(
    n_code: u32,
    tau_vac: f64,
    t: f64,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    const OP: &str = "simulate_loss";
    if trials < 1000 {
        return Err(Error::domain(
            OP,
            format!("trials = {trials} (expected >= 1000)"),
        ));
    }
    if n_code == 0 {
        return Err(Error::domain(OP, "n_code must be >= 1"));
    }
    ensure_positive(OP, "tau_vac", tau_vac)?;
    ensure_non_negative(OP, "t", t)?;
    let lifetime = Exp::new(1.0 / tau_vac).map_err(|e| Error::domain(OP, e.to_string()))?;

    let chunks = trials.div_ceil(TRIALS_PER_CHUNK);
    let losses: u64 = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let n = TRIALS_PER_CHUNK.min(trials - chunk * TRIALS_PER_CHUNK);
            (0..n)
                .filter(|_| {
                    // draw every atom so the stream layout is independent of t
                    let mut lost = false;
                    for _ in 0..n_code {
                        lost |= rng.sample(lifetime) < t;
                    }
                    lost
                })
                .count() as u64
        })
        .sum();

    let p = losses as f64 / trials as f64;
    Ok(MonteCarloEstimate {
        trials,
        losses,
        estimate: p,
        std_error: (p * (1.0 - p) / trials as f64).sqrt(),
    })
}

/// Probability that a photon scattered by one qubit is absorbed by its
/// neighbour, relative to the probability that it is detected.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CrosstalkEstimate {
    /// m
    pub wavelength: f64,
    /// m
    pub spacing: f64,
    pub numerical_aperture: f64,
    pub efficiency: f64,
    /// resonant absorption cross section (m²)
    pub cross_section: f64,
    pub eta_abs: f64,
    pub eta_det: f64,
    pub ratio: f64,
}

pub fn measurement_crosstalk(
    wavelength: f64,
    spacing: f64,
    numerical_aperture: f64,
    efficiency: f64,
) -> Result<CrosstalkEstimate> {
    const OP: &str = "measurement_crosstalk";
    ensure_positive(OP, "wavelength", wavelength)?;
    ensure(
        OP,
        "spacing",
        spacing,
        |d| d > wavelength / 2.0,
        "> wavelength/2",
    )?;
    ensure(
        OP,
        "numerical_aperture",
        numerical_aperture,
        |na| na > 0.0 && na < 1.0,
        "in (0, 1)",
    )?;
    ensure(
        OP,
        "efficiency",
        efficiency,
        |e| e > 0.0 && e <= 1.0,
        "in (0, 1]",
    )?;

    let cross_section = 3.0 / (2.0 * PI) * wavelength * wavelength;
    let eta_abs = cross_section / (4.0 * PI * spacing * spacing);
    let eta_det = efficiency * collection_fraction(numerical_aperture);
    Ok(CrosstalkEstimate {
        wavelength,
        spacing,
        numerical_aperture,
        efficiency,
        cross_section,
        eta_abs,
        eta_det,
        ratio: eta_abs / eta_det,
    })
}

/// Solid-angle fraction `(1 - cos θ)/2` collected by a lens with `sin θ = NA`.
pub fn collection_fraction(numerical_aperture: f64) -> f64 {
    (1.0 - (1.0 - numerical_aperture * numerical_aperture).sqrt()) / 2.0
}

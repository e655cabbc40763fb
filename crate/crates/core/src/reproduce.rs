//! Reference-value report.
//!
//! Recomputes every published checkpoint and every model property the
//! library promises, and compares each against its reference with an
//! explicit tolerance. The report is deterministic: Monte Carlo and random
//! test points use fixed seeds.

use std::f64::consts::SQRT_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::array::{
    exact_loss_probability, loss_probability, measurement_crosstalk, required_reload_rate,
    required_vacuum_lifetime, simulate_loss,
};
use crate::dressing::{
    blockade_radius, dipole_dipole_shift, dressed_ground_energy_closed_form, dressed_ground_state,
    figures_of_merit, light_shift_blockaded, light_shift_separated, normalized_potential,
    scaling_exponent, soft_core_radius, AsymptoticScaling, DressingParams, MeritQuantity,
    PairInteraction, PotentialKind, PotentialParams,
};
use crate::error::Result;
use crate::gate::{
    asymptotic_blockade_floor, blockade_error_model, blockade_gate_error, dressing_error_model,
    dressing_gate_error, dressing_optimal_rabi, field_budget, level_spacing_limit, optimal_rabi,
    DopplerInputs, StarkConvention,
};
use crate::numeric::{log_log_fit, logspace, minimize};
use crate::rydberg::magnetic_trap_field;
use crate::scan::{scan, AxisSpec, FixedParams, Quantity};
use crate::species::Species;
use crate::units::{Frequency, CONSTANTS};

/// How an entry's computed value is judged against its reference.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Tolerance {
    /// bit-for-bit equality
    Exact,
    Relative {
        max: f64,
    },
    Absolute {
        max: f64,
    },
    /// inclusive range for the computed value
    Range {
        lo: f64,
        hi: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEntry {
    /// acceptance criterion the entry belongs to
    pub criterion: u8,
    pub label: String,
    pub computed: f64,
    /// published value, or the model reference for property checks
    pub paper_value: f64,
    /// `|computed - reference| / |reference|`, absolute when the reference is 0
    pub deviation: f64,
    pub tolerance: Tolerance,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReproductionReport {
    pub entries: Vec<ReportEntry>,
    pub pass: bool,
}

impl ReproductionReport {
    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    /// Entries of one criterion.
    pub fn criterion(&self, n: u8) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(move |e| e.criterion == n)
    }
}

/// Inputs the report depends on.
#[derive(Clone, Debug, PartialEq)]
pub struct ReproductionInputs {
    pub species: Species,
    /// seed for the Monte Carlo check and the random test points
    pub seed: u64,
}

impl Default for ReproductionInputs {
    fn default() -> Self {
        ReproductionInputs {
            species: Species::cesium(),
            seed: 20_160_209,
        }
    }
}

/// Blockade floor `3(14π)^{2/3}/8 · (ħ/(E_H τ₀))^{2/3}` at τ₀ = 3.3 ns.
const BLOCKADE_FLOOR_CS: f64 = 1.763_128_56e-5;

struct Builder {
    criterion: u8,
    entries: Vec<ReportEntry>,
}

impl Builder {
    fn push(
        &mut self,
        label: &str,
        computed: f64,
        reference: f64,
        tolerance: Tolerance,
    ) -> &mut ReportEntry {
        let deviation = if reference == 0.0 {
            (computed - reference).abs()
        } else {
            ((computed - reference) / reference).abs()
        };
        let pass = match tolerance {
            Tolerance::Exact => computed == reference,
            Tolerance::Relative { max } | Tolerance::Absolute { max } => deviation <= max,
            Tolerance::Range { lo, hi } => (lo..=hi).contains(&computed),
        };
        self.entries.push(ReportEntry {
            criterion: self.criterion,
            label: label.to_string(),
            computed,
            paper_value: reference,
            deviation,
            tolerance,
            pass,
            note: None,
        });
        self.entries.last_mut().expect("just pushed")
    }

    fn rel(&mut self, label: &str, computed: f64, reference: f64, max: f64) -> &mut ReportEntry {
        self.push(label, computed, reference, Tolerance::Relative { max })
    }

    fn range(
        &mut self,
        label: &str,
        computed: f64,
        reference: f64,
        lo: f64,
        hi: f64,
    ) -> &mut ReportEntry {
        self.push(label, computed, reference, Tolerance::Range { lo, hi })
    }

    /// `computed` is itself a deviation that must stay below `max`.
    fn at_most(&mut self, label: &str, computed: f64, max: f64) -> &mut ReportEntry {
        self.push(label, computed, 0.0, Tolerance::Absolute { max })
    }

    fn holds(&mut self, label: &str, ok: bool) -> &mut ReportEntry {
        self.push(label, f64::from(u8::from(ok)), 1.0, Tolerance::Exact)
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Report with the default inputs.
pub fn reproduce() -> Result<ReproductionReport> {
    reproduce_with(&ReproductionInputs::default())
}

pub fn reproduce_with(inputs: &ReproductionInputs) -> Result<ReproductionReport> {
    let mut b = Builder {
        criterion: 0,
        entries: Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(inputs.seed);
    let species = &inputs.species;

    b.criterion = 1;
    b.push(
        "vacuum lifetime, N=20, t_qec=2 ms, eps=1e-4 (s)",
        required_vacuum_lifetime(20, 2e-3, 1e-4)?,
        400.0,
        Tolerance::Exact,
    );
    b.push(
        "reload rate, N=2000, tau_vac=400 s, eps=1e-4 (1/s)",
        required_reload_rate(2000, 400.0, 1e-4)?,
        5e4,
        Tolerance::Exact,
    );

    b.criterion = 2;
    let lambda = 852e-9;
    let x = measurement_crosstalk(lambda, 5.0 * lambda, 0.5, 0.5)?;
    b.range(
        "crosstalk absorption, d=5 lambda",
        x.eta_abs,
        0.0015,
        0.0014,
        0.0016,
    );
    b.range(
        "crosstalk detection, NA=0.5, eff=0.5",
        x.eta_det,
        0.034,
        0.033,
        0.035,
    );
    b.range("crosstalk ratio", x.ratio, 0.04, 0.040, 0.050);

    b.criterion = 3;
    let tau0 = species.tau0;
    let floor = asymptotic_blockade_floor(tau0)?;
    b.range("blockade error floor", floor, 2e-5, 1.5e-5, 2.5e-5);
    b.rel(
        "blockade error floor vs closed form at tau0=3.3 ns",
        floor,
        BLOCKADE_FLOOR_CS,
        0.01,
    );
    let ns = [50u32, 100, 200];
    let n3 = |n: u32| f64::from(n).powi(3);
    let blockade: Vec<f64> = ns
        .iter()
        .map(|&n| blockade_gate_error(level_spacing_limit(n), tau0 * n3(n)))
        .collect();
    let dressing = ns
        .iter()
        .map(|&n| dressing_gate_error(level_spacing_limit(n), tau0 * n3(n)))
        .collect::<Result<Vec<f64>>>()?;
    b.range(
        "dressing gate error floor",
        dressing[1],
        1.3e-3,
        1.2e-3,
        1.4e-3,
    );
    let spread = |v: &[f64]| v.iter().map(|x| rel(*x, v[0])).fold(0.0, f64::max);
    b.at_most(
        "blockade floor spread over n = 50, 100, 200",
        spread(&blockade),
        1e-10,
    );
    b.at_most(
        "dressing floor spread over n = 50, 100, 200",
        spread(&dressing),
        1e-10,
    );
    b.at_most(
        "blockade floor vs n-substituted minimum",
        rel(blockade[0], floor),
        1e-10,
    );

    b.criterion = 4;
    let (mut rabi_dev, mut err_dev) = (0.0f64, 0.0f64);
    let (mut d_rabi_dev, mut d_err_dev) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let bl = Frequency::from_hz(10f64.powf(rng.random_range(4.0..10.0)));
        let tau = 10f64.powf(rng.random_range(-6.0..0.0));
        let guess = optimal_rabi(bl, tau).angular();
        let m = minimize_log(
            |w| blockade_error_model(Frequency::from_angular(w), bl, tau),
            guess,
        );
        rabi_dev = rabi_dev.max(rel(m.0, guess));
        err_dev = err_dev.max(rel(m.1, blockade_gate_error(bl, tau)));

        let det = Frequency::from_hz(10f64.powf(rng.random_range(5.0..11.0)));
        let guess = dressing_optimal_rabi(det, tau).angular();
        let m = minimize_log(
            |w| dressing_error_model(Frequency::from_angular(w), det, tau),
            guess,
        );
        d_rabi_dev = d_rabi_dev.max(rel(m.0, guess));
        d_err_dev = d_err_dev.max(rel(m.1, dressing_gate_error(det, tau)?));
    }
    b.at_most(
        "blockade optimal Rabi, minimizer vs closed form (max rel, 100 points)",
        rabi_dev,
        1e-6,
    );
    b.at_most(
        "blockade minimum error, minimizer vs closed form",
        err_dev,
        1e-6,
    );
    b.at_most(
        "dressing optimal Rabi, minimizer vs closed form",
        d_rabi_dev,
        1e-6,
    );
    b.at_most(
        "dressing minimum error, minimizer vs closed form",
        d_err_dev,
        1e-6,
    );

    b.criterion = 5;
    let mu = CONSTANTS.bohr_magneton;
    b.range(
        "magnetic trap field, 4 K depth (T)",
        magnetic_trap_field(4.0, mu)?,
        6.0,
        5.8,
        6.1,
    );
    b.range(
        "magnetic trap field, 10 mK depth (T)",
        magnetic_trap_field(10e-3, mu)?,
        15e-3,
        14.5e-3,
        15.2e-3,
    );

    b.criterion = 6;
    b.range(
        "stray field budget, 90 kHz, alpha0=205 GHz/(V/cm)^2 (V/cm)",
        field_budget(Frequency::from_khz(90.0), 205.0, StarkConvention::Full)?,
        6.6e-4,
        6.5e-4,
        6.7e-4,
    );

    b.criterion = 7;
    let worked = DressingParams {
        rabi: Frequency::from_mhz(20.0),
        detuning: Frequency::from_mhz(-100.0),
        pair: PairInteraction::from_crossover(Frequency::from_mhz(-200.0), 8.1e-6, 12.0)?,
        lifetime: 320e-6,
        spacing: 1e-6,
    };
    let fom = figures_of_merit(&worked)?;
    let r = &fom.records;
    b.rel("dressing depth/2pi (kHz)", r[0].depth.khz(), 20.0, 0.02).note = Some(
        "detuning and defect both taken as red (negative); the published opposite signs are excluded by the model"
            .into(),
    );
    b.rel(
        "dressing decoherence time (s)",
        r[0].decoherence_time,
        16e-3,
        0.01,
    );
    b.rel("operations per atom", r[0].ops_per_atom, 320.0, 0.03);
    for (rec, (n_paper, f_paper, per_atom)) in r.iter().zip([
        (6.0, 2200.0, 95.0),
        (35.0, 11000.0, 18.0),
        (160.0, 51000.0, 4.0),
    ]) {
        let d = rec.dimension;
        b.push(
            &format!("atoms per blockade region, {d}D"),
            rec.atoms_floor as f64,
            n_paper,
            Tolerance::Exact,
        );
        b.rel(&format!("figure of merit F, {d}D"), rec.f, f_paper, 0.05);
        b.rel(&format!("F'/N, {d}D"), rec.f_prime_per_atom, per_atom, 0.10);
    }
    b.rel("modified figure of merit F'", r[0].f_prime, 640.0, 0.02)
        .note = Some(format!(
        "the simplified expression printed with |delta| gives {:.0}",
        r[0].f_prime_as_printed
    ));

    b.criterion = 8;
    let d = Frequency::from_mhz(-100.0);
    let rc = 8.1e-6;
    let rb = blockade_radius(d, d, rc)?;
    b.rel(
        "blockade radius at Delta = delta vs R_c/sqrt2 (m)",
        rb,
        rc / SQRT_2,
        1e-12,
    );
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
        let det = Frequency::from_mhz(sign * 10f64.powf(rng.random_range(0.0..3.0)));
        let defect = Frequency::from_mhz(sign * 10f64.powf(rng.random_range(0.0..3.0)));
        let rb = blockade_radius(det, defect, rc)?;
        let shift = dipole_dipole_shift(rb, defect, rc)?;
        worst = worst.max(rel(shift.angular().abs(), det.angular().abs()));
    }
    b.at_most(
        "|shift(R_b)| = |Delta| round trip (max rel, 100 points)",
        worst,
        1e-9,
    );

    b.criterion = 9;
    let (mut worst, mut worst_limit, mut min_overlap) = (0.0f64, 0.0f64, 1.0f64);
    for _ in 0..10_000 {
        let det =
            if rng.random::<bool>() { 1.0 } else { -1.0 } * 10f64.powf(rng.random_range(-2.0..2.0));
        let w = det.abs() * rng.random_range(0.01..2.0);
        let dd = det * rng.random_range(-10.0..10.0);
        let f = Frequency::from_angular;
        let exact = dressed_ground_state(f(w), f(det), f(dd));
        let closed = dressed_ground_energy_closed_form(f(w), f(det), f(dd));
        worst = worst.max(rel(closed.energy.angular(), exact.energy.angular()));
        min_overlap = min_overlap.min(exact.ground_overlap);
    }
    for (w, det) in [(1.0f64, 10.0f64), (3.0, 2.0), (0.5, -4.0), (20.0, 100.0)] {
        let f = Frequency::from_hz;
        let free = dressed_ground_state(f(w), f(det), Frequency::ZERO).energy;
        worst_limit = worst_limit.max(rel(free.hz(), light_shift_separated(f(w), f(det)).hz()));
        let big = 1e6 * w.max(det.abs()) * -det.signum();
        let blockaded = dressed_ground_state(f(w), f(det), f(big)).energy;
        worst_limit = worst_limit.max(rel(
            blockaded.hz(),
            light_shift_blockaded(f(w), f(det)).hz(),
        ));
    }
    b.at_most(
        "closed-form vs eigensolver dressed energy (max rel, 10^4 points)",
        worst,
        1e-9,
    );
    b.at_most(
        "dressed energy at R -> 0 and R -> infinity vs closed forms",
        worst_limit,
        1e-5,
    );
    b.holds(
        "ground-state overlap above 1/sqrt3 everywhere",
        min_overlap > 1.0 / 3f64.sqrt(),
    );

    b.criterion = 10;
    let p = PotentialParams {
        rabi: Frequency::from_hz(1.0),
        detuning: Frequency::from_hz(10.0),
        defect: Frequency::from_hz(20.0),
        crossover: 1.5,
    };
    let radii = logspace(p.crossover / 100.0, p.crossover * 100.0, 400);
    let (mut v0, mut vinf, mut monotone) = (0.0f64, 0.0f64, true);
    for kind in PotentialKind::ALL {
        v0 = v0.max((normalized_potential(p.crossover / 1e3, &p, kind)?.abs() - 1.0).abs());
        vinf = vinf.max(normalized_potential(p.crossover * 1e3, &p, kind)?.abs());
        let curve = radii
            .iter()
            .map(|&r| normalized_potential(r, &p, kind))
            .collect::<Result<Vec<f64>>>()?;
        monotone &= curve.windows(2).all(|w| w[1] >= w[0]);
    }
    b.at_most("|V(R_c/1000)| - 1", v0, 1e-4);
    b.at_most("|V(1000 R_c)|", vinf, 1e-12);
    b.holds("potentials monotone in R", monotone);
    let near = logspace(p.crossover / 100.0, p.crossover / 20.0, 12);
    let slope = |kind| -> Result<f64> {
        let pts = near
            .iter()
            .map(|&r| Ok((r, 1.0 - normalized_potential(r, &p, kind)?.abs())))
            .collect::<Result<Vec<_>>>()?;
        Ok(log_log_fit(&pts))
    };
    b.push(
        "near-origin exponent, full interaction",
        slope(PotentialKind::Full)?,
        3.0,
        Tolerance::Absolute { max: 0.3 },
    );
    b.push(
        "near-origin exponent, van der Waals",
        slope(PotentialKind::Vdw)?,
        6.0,
        Tolerance::Absolute { max: 0.3 },
    );
    let xi = soft_core_radius(p.detuning, p.detuning, p.crossover)?;
    b.rel(
        "soft-core radius equals blockade radius at delta = Delta",
        xi,
        blockade_radius(p.detuning, p.detuning, p.crossover)?,
        1e-12,
    );

    b.criterion = 11;
    let model = AsymptoticScaling::default();
    let exponent = |q| scaling_exponent(&model, q, 300.0, 600.0);
    b.push(
        "F_1D exponent in n",
        exponent(MeritQuantity::F1D)?,
        19.0 / 3.0,
        Tolerance::Absolute { max: 0.05 },
    );
    b.push(
        "F_2D exponent in n",
        exponent(MeritQuantity::F2D)?,
        20.0 / 3.0,
        Tolerance::Absolute { max: 0.05 },
    );
    b.push(
        "F_3D exponent in n",
        exponent(MeritQuantity::F3D)?,
        7.0,
        Tolerance::Absolute { max: 0.05 },
    );
    b.push("F' exponent in n", exponent(MeritQuantity::FPrime)?, 6.0, Tolerance::Absolute { max: 0.05 }).note =
        Some(format!(
            "the simplified F' expression printed with |delta| scales as n^{:.2} at fixed Omega; the quoted n^6 holds for the defining form",
            exponent(MeritQuantity::FPrimeAsPrinted)?
        ));

    b.criterion = 12;
    let (n, tau, t) = (20, 1.0, 0.01);
    let mc = simulate_loss(n, tau, t, 100_000, inputs.seed)?;
    let exact = exact_loss_probability(n, t, tau);
    b.push(
        "Monte Carlo loss, N=20, t/tau=0.01, 10^5 trials (in standard errors)",
        (mc.estimate - exact).abs() / mc.std_error,
        0.0,
        Tolerance::Absolute { max: 3.0 },
    );
    let mut bounded = mc.estimate <= loss_probability(n, t, tau)?.linearized + 3.0 * mc.std_error;
    for n in [1u32, 5, 20, 100] {
        for t in [1e-4, 1e-3, 1e-2, 1e-1] {
            let est = loss_probability(n, t, tau)?;
            bounded &= est.linearized >= est.probability
                && est.probability >= exact_loss_probability(n, t, tau);
        }
    }
    b.holds("linearized loss bounds the exact loss on the grid", bounded);

    b.criterion = 13;
    let k = species
        .schemes
        .first()
        .map(|s| s.effective_k())
        .unwrap_or(0.0);
    let m = species.mass;
    let fid =
        |k, temp, time| -> Result<f64> { Ok(DopplerInputs::new(k, temp, time, m)?.fidelity()) };
    b.holds(
        "Doppler fidelity is 1 at T=0, t=0 or k=0",
        fid(k, 0.0, 1e-7)? == 1.0 && fid(k, 5e-6, 0.0)? == 1.0 && fid(0.0, 5e-6, 1e-7)? == 1.0,
    );
    let mut in_range = true;
    for temp in logspace(1e-7, 1e-3, 11) {
        for time in logspace(1e-9, 1e-6, 11) {
            let f = fid(k, temp, time)?;
            in_range &= f > 0.5 && f <= 1.0;
        }
    }
    b.holds("Doppler fidelity within (1/2, 1]", in_range);
    let a = DopplerInputs::new(k, 5e-6, 200e-9, m)?.exponent();
    let c = DopplerInputs::new(k, 20e-6, 100e-9, m)?.exponent();
    b.rel(
        "Doppler exponent, (T, 2t) vs (4T, t)",
        a,
        c,
        4.0 * f64::EPSILON,
    );
    let fixed = FixedParams {
        species: species.clone(),
        scheme: species
            .schemes
            .first()
            .map(|s| s.label.clone())
            .unwrap_or_default(),
        ..FixedParams::default()
    };
    let grid = scan(
        Quantity::Doppler,
        &AxisSpec::log(0.1, 100.0, 31),
        &AxisSpec::linear(10.0, 1000.0, 34),
        &fixed,
    )?;
    b.holds(
        "Doppler grid emitted with finite cells",
        grid.cells.len() == 31 * 34 && grid.cells.iter().all(|v| v.is_finite()),
    );

    let pass = b.entries.iter().all(|e| e.pass);
    Ok(ReproductionReport {
        entries: b.entries,
        pass,
    })
}

/// Minimizes `f` over `[guess/100, 100 guess]` in `ln x`; returns
/// `(argmin, min)`.
fn minimize_log(f: impl Fn(f64) -> f64, guess: f64) -> (f64, f64) {
    let span = 100f64.ln();
    let lg = guess.ln();
    let m = minimize(|u| f(u.exp()), lg - span, lg + span, 1e-12, 200);
    (m.x.exp(), m.value)
}

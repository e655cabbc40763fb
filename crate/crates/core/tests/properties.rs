//! Property suites over the public API.

use proptest::prelude::*;
use rydberg_budget::array::{
    collection_fraction, exact_loss_probability, loss_probability, measurement_crosstalk,
    required_reload_rate, required_vacuum_lifetime, simulate_loss,
};
use rydberg_budget::dressing::{
    blockade_radius, dipole_dipole_shift, dressed_ground_energy_closed_form, dressed_ground_state,
    normalized_potential, potential_depth, potential_depth_perturbative, PotentialKind,
    PotentialParams,
};
use rydberg_budget::gate::{
    blockade_error_model, blockade_gate_error, detuned_pi_pulse_error, detuning_budget,
    doppler_fidelity, dressing_error_model, dressing_gate_error, dressing_optimal_rabi,
    entanglement_error_bound, optimal_rabi,
};
use rydberg_budget::numeric::{logspace, minimize};
use rydberg_budget::rydberg::{free_electron_polarizability, rydberg_lifetime};
use rydberg_budget::scan::{scan, AxisSpec, FixedParams, Quantity, ScanGrid};
use rydberg_budget::{Frequency, Species};

const TAU0: f64 = 3.3e-9;
const CS_MASS: f64 = 2.2069e-25;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn ulp(x: f64) -> f64 {
    f64::from_bits(x.abs().to_bits() + 1) - x.abs()
}

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.log10()..hi.log10()).prop_map(|e| 10f64.powf(e))
}

fn signed(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (log_uniform(lo, hi), any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v })
}

proptest! {
    #[test]
    fn hz_round_trip_within_one_ulp(x in prop_oneof![0.0..1e3, log_uniform(1e-300, 1e300)]) {
        let back = Frequency::from_hz(x).hz();
        prop_assert!((back - x).abs() <= ulp(x), "{x:e} -> {back:e}");
    }

    #[test]
    fn lifetime_monotone(n in 30u32..150, ti in 0usize..2) {
        let temps = [4.0, 77.0, 300.0];
        let t = temps[ti];
        prop_assert!(rydberg_lifetime(n + 1, t, TAU0).unwrap() > rydberg_lifetime(n, t, TAU0).unwrap());
        prop_assert!(rydberg_lifetime(n, temps[ti + 1], TAU0).unwrap() < rydberg_lifetime(n, t, TAU0).unwrap());
    }

    #[test]
    fn budgets_scale_exactly(n in 1u32..10_000, t in log_uniform(1e-6, 1.0), eps in log_uniform(1e-8, 0.5), tau in log_uniform(1.0, 1e4)) {
        let base = required_vacuum_lifetime(n, t, eps).unwrap();
        prop_assert_eq!(required_vacuum_lifetime(2 * n, t, eps).unwrap(), 2.0 * base);
        prop_assert_eq!(required_vacuum_lifetime(n, 2.0 * t, eps).unwrap(), 2.0 * base);
        prop_assert!(rel(required_vacuum_lifetime(n, t, 2.0 * eps).unwrap(), base / 2.0) < 1e-15);
        let rate = required_reload_rate(n, tau, eps).unwrap();
        prop_assert_eq!(required_reload_rate(2 * n, tau, eps).unwrap(), 2.0 * rate);
        prop_assert!(rel(required_reload_rate(n, 2.0 * tau, eps).unwrap(), rate / 2.0) < 1e-15);
        prop_assert!(rel(required_reload_rate(n, tau, 2.0 * eps).unwrap(), rate / 2.0) < 1e-15);
    }

    #[test]
    fn loss_bounded_by_linearization(n in 1u32..100_000, t in log_uniform(1e-9, 1e3), tau in log_uniform(1e-3, 1e4)) {
        let est = loss_probability(n, t, tau).unwrap();
        prop_assert!(est.probability <= est.linearized);
        prop_assert!(exact_loss_probability(n, t, tau) <= est.probability);
    }

    #[test]
    fn blockade_error_decreasing(b in log_uniform(1e5, 1e11), tau in log_uniform(1e-7, 1e-1)) {
        let bf = Frequency::from_angular(b);
        let e = blockade_gate_error(bf, tau);
        prop_assert!(blockade_gate_error(Frequency::from_angular(b * 1.01), tau) < e);
        prop_assert!(blockade_gate_error(bf, tau * 1.01) < e);
    }

    #[test]
    fn bound_below_gate_error(b_tau in log_uniform(1.0, 1e14), tau in log_uniform(1e-7, 1e-1)) {
        let b = Frequency::from_angular(b_tau / tau);
        prop_assert!(blockade_gate_error(b, tau) >= entanglement_error_bound(b, tau));
    }

    #[test]
    fn minimizer_matches_closed_forms(b in log_uniform(1e5, 1e11), tau in log_uniform(1e-7, 1e-1)) {
        let bf = Frequency::from_angular(b);
        let w0 = optimal_rabi(bf, tau).angular();
        let m = minimize(|u| blockade_error_model(Frequency::from_angular(u.exp()), bf, tau), (w0 / 50.0).ln(), (w0 * 20.0).ln(), 1e-12, 500);
        prop_assert!(rel(m.x.exp(), w0) < 1e-6);
        prop_assert!(rel(m.value, blockade_gate_error(bf, tau)) < 1e-6);

        let w0 = dressing_optimal_rabi(bf, tau).angular();
        let m = minimize(|u| dressing_error_model(Frequency::from_angular(u.exp()), bf, tau), (w0 / 20.0).ln(), (w0 * 50.0).ln(), 1e-12, 500);
        prop_assert!(rel(m.x.exp(), w0) < 1e-6);
        prop_assert!(rel(m.value, dressing_gate_error(bf, tau).unwrap()) < 1e-6);
    }

    #[test]
    fn doppler_bounded_and_monotone(k in log_uniform(1e5, 1e8), t in log_uniform(1e-9, 1e-3), time in log_uniform(1e-10, 1e-6)) {
        // beyond roughly k ≥ 1e7/m, T ≥ 1 mK, t ≥ 1 μs the exponential underflows and F rounds to 1/2
        let kk = k.min(2e7);
        let f = doppler_fidelity(kk, t, time, CS_MASS).unwrap();
        prop_assert!(f > 0.5 && f <= 1.0, "{f}");
        for g in [
            doppler_fidelity(kk * 1.1, t, time, CS_MASS).unwrap(),
            doppler_fidelity(kk, t * 1.1, time, CS_MASS).unwrap(),
            doppler_fidelity(kk, t, time * 1.1, CS_MASS).unwrap(),
        ] {
            prop_assert!(g <= f);
        }
    }

    #[test]
    fn detuning_budget_increasing(w in log_uniform(1e4, 1e9), eps in log_uniform(1e-8, 0.5)) {
        let wf = Frequency::from_angular(w);
        let d = detuning_budget(wf, eps).unwrap();
        prop_assert!(detuning_budget(Frequency::from_angular(w * 1.01), eps).unwrap().angular() > d.angular());
        prop_assert!(detuning_budget(wf, eps * 1.01).unwrap().angular() > d.angular());
        prop_assert!(rel(detuned_pi_pulse_error(wf, d), eps) < 1e-9);
    }

    #[test]
    fn closed_form_matches_eigensolver(det in signed(1e-3, 1e3), w_frac in 0.01..2.0f64, dd_frac in -10.0..10.0f64) {
        let f = Frequency::from_angular;
        let (w, dd) = (det.abs() * w_frac, det * dd_frac);
        let exact = dressed_ground_state(f(w), f(det), f(dd));
        let closed = dressed_ground_energy_closed_form(f(w), f(det), f(dd));
        prop_assert!(rel(closed.energy.angular(), exact.energy.angular()) < 1e-9);
    }

    #[test]
    fn weak_dressing_overlap(det in signed(1e3, 1e9), w_frac in 0.0..0.5f64, dd_frac in signed(1e-6, 1e12)) {
        let f = Frequency::from_angular;
        let s = dressed_ground_state(f(det.abs() * w_frac), f(det), f(det.abs() * dd_frac));
        prop_assert!(s.ground_overlap > 1.0 / 3f64.sqrt(), "{s:?}");
    }

    #[test]
    fn perturbative_depth_accuracy(det in signed(1e3, 1e9), ratio in 0.01..0.3f64) {
        let (w, d) = (Frequency::from_angular(det.abs() * ratio), Frequency::from_angular(det));
        let exact = potential_depth(w, d).angular();
        let approx = potential_depth_perturbative(w, d).angular();
        prop_assert!(rel(approx, exact) < 2.0 * ratio * ratio);
    }

    #[test]
    fn blockade_radius_round_trip(det in signed(1e4, 1e10), defect_ratio in log_uniform(1e-3, 1e3), rc in log_uniform(1e-7, 1e-4)) {
        let d = Frequency::from_angular(det);
        let defect = Frequency::from_angular(det * defect_ratio);
        let rb = blockade_radius(d, defect, rc).unwrap();
        prop_assert!(rel(dipole_dipole_shift(rb, defect, rc).unwrap().angular().abs(), det.abs()) < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn dressed_energy_continuous_along_pair_shift(det in signed(1e3, 1e9), w_frac in 0.01..0.5f64) {
        let f = Frequency::from_angular;
        let w = det.abs() * w_frac;
        // physical branch: the pair shift has the opposite sign of Δ
        let dir = -det.signum() * det.abs();
        let mut prev = dressed_ground_state(f(w), f(det), Frequency::ZERO).energy.angular();
        let fine = (1..=200_000).map(|i| f64::from(i) * 1e-4);
        for u in fine.chain(logspace(20.0, 1e12, 40_000)) {
            let e = dressed_ground_state(f(w), f(det), f(u * dir)).energy.angular();
            prop_assert!((e - prev).abs() < 1e-6 * det.abs(), "jump at {u}: {prev} -> {e}");
            prev = e;
        }
    }

    #[test]
    fn csv_and_json_round_trip(lo in log_uniform(1e-2, 1.0), span in 1.5..100.0f64, nx in 1usize..6, ny in 2usize..6) {
        let x = if nx == 1 { AxisSpec::single(lo) } else { AxisSpec::log(lo, lo * span, nx) };
        let grid = scan(Quantity::Doppler, &x, &AxisSpec::linear(10.0, 500.0, ny), &FixedParams::default()).unwrap();
        let back: ScanGrid = grid.to_csv_string().parse().unwrap();
        prop_assert_eq!(&back, &grid);
        let json: ScanGrid = serde_json::from_str(&serde_json::to_string(&grid).unwrap()).unwrap();
        prop_assert_eq!(json, grid);
    }
}

#[test]
fn polarizability_times_omega_squared_is_constant() {
    let values: Vec<f64> = logspace(1e12, 1e17, 101)
        .into_iter()
        .map(|w| free_electron_polarizability(Frequency::from_angular(w)).unwrap() * w * w)
        .collect();
    let worst = values
        .iter()
        .map(|v| rel(*v, values[0]))
        .fold(0.0, f64::max);
    assert!(worst < 1e-12, "{worst}");
}

#[test]
fn monte_carlo_error_halves_with_four_times_trials() {
    for (n, t, seed) in [(20u32, 0.01, 1u64), (5, 0.05, 2), (100, 1e-3, 3)] {
        let small = simulate_loss(n, 1.0, t, 40_000, seed).unwrap();
        let large = simulate_loss(n, 1.0, t, 160_000, seed + 100).unwrap();
        let ratio = large.std_error / small.std_error;
        assert!((ratio - 0.5).abs() < 0.1, "N={n}: ratio {ratio}");
    }
}

#[test]
fn detection_fraction_is_solid_angle() {
    // the crosstalk estimate itself rejects NA >= 1; the solid-angle factor is defined up to it
    assert_eq!(collection_fraction(1.0), 0.5);
    for na in [0.1, 0.5, 0.7, 0.9] {
        let theta = f64::asin(na);
        assert!(rel(collection_fraction(na), (1.0 - theta.cos()) / 2.0) < 1e-12);
        let x = measurement_crosstalk(780e-9, 3.9e-6, na, 1.0).unwrap();
        assert_eq!(x.eta_det, collection_fraction(na));
    }
    assert!(measurement_crosstalk(780e-9, 3.9e-6, 1.0, 1.0).is_err());
}

#[test]
fn doppler_fidelity_approaches_half() {
    let k = Species::cesium()
        .scheme("one-photon")
        .unwrap()
        .effective_k();
    let mut last = 1.0;
    for temp in logspace(1e-6, 1e-2, 9) {
        let f = doppler_fidelity(k, temp, 1e-6, CS_MASS).unwrap();
        assert!(f >= 0.5 && f <= last);
        last = f;
    }
    assert!(last - 0.5 < 1e-12, "{last}");
}

#[test]
fn potential_monotone_for_single_channel_curve() {
    let p = PotentialParams {
        rabi: Frequency::from_mhz(2.0),
        detuning: Frequency::from_mhz(-20.0),
        defect: Frequency::from_mhz(-40.0),
        crossover: 8.1,
    };
    let radii = logspace(0.1, 50.0, 2000);
    for kind in PotentialKind::ALL {
        let v: Vec<f64> = radii
            .iter()
            .map(|&r| normalized_potential(r, &p, kind).unwrap())
            .collect();
        let slopes: Vec<f64> = v
            .windows(2)
            .map(|w| w[1] - w[0])
            .filter(|s| *s != 0.0)
            .collect();
        assert!(
            slopes.iter().all(|s| s.signum() == slopes[0].signum()),
            "{kind:?}"
        );
    }
}

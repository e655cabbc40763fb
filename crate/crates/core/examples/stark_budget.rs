//! Detuning and stray-field tolerances for a π pulse.

use rydberg_budget::gate::{detuned_pi_pulse_error, StarkBudget, StarkConvention};
use rydberg_budget::{Frequency, Species};

fn main() -> rydberg_budget::Result<()> {
    let rabi = Frequency::from_mhz(20.0);
    let alpha0 = Species::cesium()
        .polarizability("100p3/2")
        .map(|p| p.alpha0)
        .unwrap_or(205.0);
    for eps in [1e-3, 1e-4, 1e-5] {
        let full = StarkBudget::compute(rabi, eps, alpha0, StarkConvention::Full)?;
        let half = StarkBudget::compute(rabi, eps, alpha0, StarkConvention::Half)?;
        println!(
            "eps {eps:.0e}: detuning {:7.2} kHz, field {:.3e} V/cm (half convention {:.3e})",
            full.max_detuning.khz(),
            full.max_field,
            half.max_field
        );
        assert!(detuned_pi_pulse_error(rabi, full.max_detuning) <= eps * (1.0 + 1e-9));
    }
    Ok(())
}

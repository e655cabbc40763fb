//! Doppler-limited Bell fidelity, and a log10(1 - F) grid over atom
//! temperature and Rydberg time written as CSV.
//!
//! `cargo run --example doppler_grid > doppler.csv`

use rydberg_budget::gate::DopplerInputs;
use rydberg_budget::scan::{scan, AxisSpec, FixedParams, Quantity};
use rydberg_budget::Species;

fn main() -> rydberg_budget::Result<()> {
    let cs = Species::cesium();
    for scheme in &cs.schemes {
        let d = DopplerInputs::new(scheme.effective_k(), 5e-6, 100e-9, cs.mass)?;
        eprintln!(
            "{:<18} k = {:.3e} /m, 1 - F = {:.3e}",
            scheme.label,
            scheme.effective_k(),
            d.infidelity()
        );
    }

    let grid = scan(
        Quantity::Doppler,
        &AxisSpec::log(0.1, 100.0, 31),
        &AxisSpec::linear(10.0, 1000.0, 100),
        &FixedParams::default(),
    )?;
    grid.write_csv(std::io::stdout().lock())
}

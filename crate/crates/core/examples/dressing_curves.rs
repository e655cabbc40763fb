//! Normalized dressing potentials: full dipole-dipole, van der Waals only,
//! and the single-term soft core, as CSV.

use rydberg_budget::dressing::{potential_curve, soft_core_radius, PotentialParams};
use rydberg_budget::numeric::logspace;
use rydberg_budget::Frequency;

fn main() -> rydberg_budget::Result<()> {
    let params = PotentialParams {
        rabi: Frequency::from_mhz(1.0),
        detuning: Frequency::from_mhz(10.0),
        defect: Frequency::from_mhz(20.0),
        crossover: 1.0,
    };
    let xi = soft_core_radius(params.detuning, params.defect, params.crossover)?;
    eprintln!(
        "depth/2pi = {:.3} kHz, xi/R_c = {xi:.4}",
        params.depth().khz()
    );

    println!("r_over_rc,v_full,v_vdw,v_single");
    for p in potential_curve(&params, &logspace(0.05, 5.0, 60))? {
        println!("{:.6},{:.8},{:.8},{:.8}", p.r, p.full, p.vdw, p.single_term);
    }
    Ok(())
}

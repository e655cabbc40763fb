//! Dressed two-atom ground-state energy from the eigensolver and from the
//! closed-form cubic root.

use rydberg_budget::dressing::{
    dipole_dipole_shift, dressed_ground_energy_closed_form, dressed_ground_state,
};
use rydberg_budget::Frequency;

fn main() -> rydberg_budget::Result<()> {
    let rabi = Frequency::from_mhz(20.0);
    let detuning = Frequency::from_mhz(-100.0);
    let defect = Frequency::from_mhz(-200.0);
    let rc = 8.1e-6;
    println!(
        "{:>6} {:>14} {:>16} {:>16} {:>8}",
        "R (um)", "shift (MHz)", "eigen (kHz)", "closed (kHz)", "overlap"
    );
    for r_um in [1.0, 3.0, 5.0, 6.745, 8.0, 12.0, 20.0] {
        let shift = dipole_dipole_shift(r_um * 1e-6, defect, rc)?;
        let exact = dressed_ground_state(rabi, detuning, shift);
        let closed = dressed_ground_energy_closed_form(rabi, detuning, shift);
        println!(
            "{r_um:>6.2} {:>14.3} {:>16.6} {:>16.6} {:>8.5}",
            shift.mhz(),
            exact.energy.khz(),
            closed.energy.khz(),
            exact.ground_overlap
        );
    }
    Ok(())
}

//! Photon-scattering crosstalk between neighbouring qubits during readout.

use rydberg_budget::array::measurement_crosstalk;

fn main() -> rydberg_budget::Result<()> {
    let lambda = 852e-9;
    println!(
        "{:>8} {:>10} {:>10} {:>8}",
        "d/lambda", "eta_abs", "eta_det", "ratio"
    );
    for spacing in [3.0, 5.0, 10.0, 20.0] {
        let x = measurement_crosstalk(lambda, spacing * lambda, 0.5, 0.5)?;
        println!(
            "{spacing:>8.0} {:>10.2e} {:>10.4} {:>8.4}",
            x.eta_abs, x.eta_det, x.ratio
        );
    }
    Ok(())
}

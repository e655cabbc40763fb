//! Blockade, interaction and dressing gate-error minima and their
//! large-n floors.

use rydberg_budget::gate;
use rydberg_budget::{Frequency, Species};

fn main() -> rydberg_budget::Result<()> {
    let b = Frequency::from_mhz(500.0);
    let tau = 320e-6;
    println!("B/2pi = 500 MHz, tau = 320 us");
    println!(
        "  optimal Omega/2pi  {:.3} MHz",
        gate::optimal_rabi(b, tau).mhz()
    );
    println!(
        "  minimum error      {:.3e}",
        gate::blockade_gate_error(b, tau)
    );
    println!(
        "  entanglement bound {:.3e}",
        gate::entanglement_error_bound(b, tau)
    );

    let cs = Species::cesium();
    let (v, e) = gate::optimal_interaction_gate(tau, cs.qubit_freq)?;
    println!(
        "\ninteraction gate: V/2pi = {:.3} MHz, error {:.3e}",
        v.mhz(),
        e
    );

    println!("\n{:>5} {:>12} {:>12}", "n", "blockade", "dressing");
    for n in [50u32, 100, 200, 400] {
        let spacing = gate::level_spacing_limit(n);
        let lifetime = cs.tau0 * f64::from(n).powi(3);
        println!(
            "{n:>5} {:>12.4e} {:>12.4e}",
            gate::blockade_gate_error(spacing, lifetime),
            gate::dressing_gate_error(spacing, lifetime)?
        );
    }
    println!(
        "asymptotic blockade floor {:.4e}",
        gate::asymptotic_blockade_floor(cs.tau0)?
    );
    Ok(())
}

//! Rydberg lifetimes with blackbody depopulation, free-electron
//! polarizability and magnetic trap fields.

use rydberg_budget::rydberg::{
    free_electron_polarizability, magnetic_trap_field, optical_frequency, rydberg_lifetime,
};
use rydberg_budget::{Species, CONSTANTS};

fn main() -> rydberg_budget::Result<()> {
    let cs = Species::cesium();
    println!(
        "{:>5} {:>12} {:>12} {:>12}",
        "n", "0 K (us)", "77 K (us)", "300 K (us)"
    );
    for n in [30u32, 50, 70, 100, 150] {
        let t = |temp| rydberg_lifetime(n, temp, cs.tau0).map(|s| s * 1e6);
        println!(
            "{n:>5} {:>12.1} {:>12.1} {:>12.1}",
            t(0.0)?,
            t(77.0)?,
            t(300.0)?
        );
    }

    for nm in [532.0, 1064.0, 1550.0] {
        let alpha = free_electron_polarizability(optical_frequency(nm * 1e-9))?;
        println!("free-electron polarizability at {nm} nm: {alpha:.1} a.u.");
    }

    for depth in [4.0, 10e-3] {
        let b = magnetic_trap_field(depth, CONSTANTS.bohr_magneton)?;
        println!("trap depth {depth} K needs {b:.4} T for one Bohr magneton");
    }
    Ok(())
}

//! Loading atomic species from TOML and using them in a budget.

use rydberg_budget::gate::DopplerInputs;
use rydberg_budget::rydberg::rydberg_lifetime;
use rydberg_budget::species::parse_species;

const CONFIG: &str = r#"
[[species]]
name = "Cs-ladder"
mass_kg = 2.2069e-25
tau0_ns = 3.3
qubit_freq_ghz = 9.1926

# counterpropagating ladder through 6p3/2
[[species.schemes]]
label = "two-photon-6p3/2"
wavelengths_nm = [852.35, 508.3]
signs = [1, -1]

[[species.schemes]]
label = "co-propagating"
wavelengths_nm = [852.35, 508.3]

[[species.polarizabilities]]
state = "100p3/2"
alpha0 = 205.0
alpha2 = -17.8
"#;

fn main() -> rydberg_budget::Result<()> {
    for s in parse_species(CONFIG)? {
        println!(
            "{}: tau(100, 300 K) = {:.1} us",
            s.name,
            rydberg_lifetime(100, 300.0, s.tau0)? * 1e6
        );
        for scheme in &s.schemes {
            let d = DopplerInputs::new(scheme.effective_k(), 10e-6, 200e-9, s.mass)?;
            println!(
                "  {}: k = {:.4e} /m, 1 - F = {:.3e}",
                scheme.label,
                scheme.effective_k(),
                d.infidelity()
            );
        }
    }
    Ok(())
}

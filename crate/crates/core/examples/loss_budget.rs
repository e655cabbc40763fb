//! Vacuum-lifetime and reload-rate requirements for a surface-code array,
//! with a Monte Carlo check of the loss model.

use rydberg_budget::array::{self, LossBudget};

fn main() -> rydberg_budget::Result<()> {
    let eps = 1e-4;
    println!("{:>7} {:>10} {:>12}", "N_code", "t_qec (ms)", "tau_vac (s)");
    for n in [4, 10, 20, 50, 100] {
        let t_qec = LossBudget::default_t_qec(n);
        let tau = array::required_vacuum_lifetime(n, t_qec, eps)?;
        println!("{n:>7} {:>10.1} {tau:>12.1}", t_qec * 1e3);
    }

    let budget = LossBudget::new(20, 2000, 2e-3, eps, 400.0)?;
    println!(
        "\nN_phys = 2000, tau_vac = 400 s: reload {:.0} atoms/s",
        budget.required_reload_rate()
    );

    let (n, t, tau) = (20, 0.5, 400.0);
    let model = array::loss_probability(n, t, tau)?;
    let mc = array::simulate_loss(n, tau, t, 200_000, 1)?;
    println!(
        "\nloss in {t} s: model {:.5}, linearized {:.5}, exact {:.5}, Monte Carlo {:.5} ± {:.5}",
        model.probability,
        model.linearized,
        array::exact_loss_probability(n, t, tau),
        mc.estimate,
        mc.std_error
    );
    Ok(())
}

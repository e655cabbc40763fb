//! Figures of merit for dressed many-body dynamics at a Cs n = 100 point,
//! and their large-n scaling.

use rydberg_budget::dressing::{
    figures_of_merit, scaling_exponent, AsymptoticScaling, DressingParams, MeritQuantity,
    PairInteraction,
};
use rydberg_budget::Frequency;

fn main() -> rydberg_budget::Result<()> {
    let params = DressingParams {
        rabi: Frequency::from_mhz(20.0),
        detuning: Frequency::from_mhz(-100.0),
        pair: PairInteraction::from_crossover(Frequency::from_mhz(-200.0), 8.1e-6, 12.0)?,
        lifetime: 320e-6,
        spacing: 1e-6,
    };
    let s = figures_of_merit(&params)?;
    let r0 = &s.records[0];
    println!("R_b = {:.3} um", s.blockade_radius * 1e6);
    println!(
        "depth/2pi = {:.2} kHz (exact {:.2} kHz), tau_dr = {:.1} ms, {:.0} operations per atom",
        r0.depth.khz(),
        r0.exact_depth.khz(),
        r0.decoherence_time * 1e3,
        r0.ops_per_atom
    );
    println!("F' = {:.0}", r0.f_prime);
    println!("{:>4} {:>6} {:>10} {:>8}", "dim", "N", "F", "F'/N");
    for r in &s.records {
        println!(
            "{:>4} {:>6} {:>10.0} {:>8.2}",
            r.dimension, r.atoms_floor, r.f, r.f_prime_per_atom
        );
    }

    let model = AsymptoticScaling::default();
    println!("\nscaling with n (secant over 300..600):");
    for q in [
        MeritQuantity::F1D,
        MeritQuantity::F2D,
        MeritQuantity::F3D,
        MeritQuantity::FPrime,
        MeritQuantity::FPrimeAsPrinted,
    ] {
        println!(
            "  {q:?}: n^{:.3}",
            scaling_exponent(&model, q, 300.0, 600.0)?
        );
    }
    Ok(())
}

//! Dressed ground-state energy of two atoms driven off-resonantly to a
//! Rydberg level.
//!
//! In the symmetric basis `{|gg⟩, (|gr⟩+|rg⟩)/√2, |rr⟩}` the Hamiltonian is
//!
//! ```text
//! H/ħ = | 0      Ω/√2   0          |
//!       | Ω/√2   -Δ     Ω/√2       |
//!       | 0      Ω/√2   -2Δ + Δ_dd |
//! ```
//!
//! The dressed ground state is the eigenvector with the largest `|gg⟩`
//! weight. Two independent routes are provided: a numerical symmetric
//! eigensolver and the Cardano closed form of the characteristic cubic.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::{Complex, Matrix3, SymmetricEigen};
use serde::Serialize;

use crate::units::Frequency;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DressedGroundState {
    pub energy: Frequency,
    /// `|⟨gg|ψ⟩|`
    pub ground_overlap: f64,
}

/// Characteristic function divided through by `(d - λ)`, with `a = Ω/√2`
/// and `d = -2Δ + Δ_dd`. Well conditioned when `|d|` is large.
fn secular(lambda: f64, a2: f64, detuning: f64, d: f64) -> (f64, f64) {
    let gap = d - lambda;
    let value = lambda * (lambda + detuning) - a2 + lambda * a2 / gap;
    let slope = 2.0 * lambda + detuning + a2 * d / (gap * gap);
    (value, slope)
}

/// Dressed ground state from the 3×3 symmetric eigenproblem.
///
/// The eigenvalue with maximal `|gg⟩` overlap is selected and then polished
/// by Newton steps on the secular equation, which keeps full relative
/// precision when `|Δ_dd|` is many orders of magnitude above `Ω` and `Δ`.
pub fn dressed_ground_state(
    rabi: Frequency,
    detuning: Frequency,
    shift: Frequency,
) -> DressedGroundState {
    let (w, det, dd) = (rabi.angular().abs(), detuning.angular(), shift.angular());
    if w == 0.0 {
        return DressedGroundState {
            energy: Frequency::ZERO,
            ground_overlap: 1.0,
        };
    }
    let a = w * FRAC_1_SQRT_2;
    let d = -2.0 * det + dd;
    #[rustfmt::skip]
    let h = Matrix3::new(
        0.0, a,    0.0,
        a,   -det, a,
        0.0, a,    d,
    );
    let (mut lambda, overlap) = if d.abs() > 1e3 * w.max(det.abs()) {
        // |rr⟩ far off: seed from the 2×2 block with |rr⟩ eliminated at λ = 0
        let m = -det - a * a / (det + d);
        let root = -2.0 * a * a / (m + m.signum() * (m * m + 4.0 * a * a).sqrt());
        (root, ground_weight(root, a, d).sqrt())
    } else {
        let eig = SymmetricEigen::new(h);
        let (idx, overlap) = (0..3)
            .map(|i| (i, eig.eigenvectors[(0, i)].abs()))
            .fold((0, -1.0), |best, c| if c.1 > best.1 { c } else { best });
        (eig.eigenvalues[idx], overlap)
    };
    let scale = w.max(det.abs()).max(dd.abs());
    let a2 = a * a;
    let (mut residual, _) = secular(lambda, a2, det, d);
    for _ in 0..8 {
        let (value, slope) = secular(lambda, a2, det, d);
        if value == 0.0 || slope == 0.0 {
            break;
        }
        let step = value / slope;
        let candidate = lambda - step;
        let (next, _) = secular(candidate, a2, det, d);
        if step.abs() > 1e-6 * scale || next.abs() > residual.abs() {
            break;
        }
        lambda = candidate;
        residual = next;
        if step.abs() <= 1e-17 * scale {
            break;
        }
    }
    DressedGroundState {
        energy: Frequency::from_angular(lambda),
        ground_overlap: overlap,
    }
}

/// Dressed ground-state energy from the numerical eigensolver.
pub fn dressed_ground_energy_exact(
    rabi: Frequency,
    detuning: Frequency,
    shift: Frequency,
) -> Frequency {
    dressed_ground_state(rabi, detuning, shift).energy
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClosedFormEnergy {
    pub energy: Frequency,
    /// imaginary part left over on the selected cube-root branch
    pub imaginary_residue: f64,
    /// false when the residue exceeds 1e-9 of the result
    pub branch_ok: bool,
}

/// `|gg⟩` weight of the eigenvector belonging to eigenvalue `lambda`,
/// written down from the tridiagonal structure of `H`.
fn ground_weight(lambda: f64, a: f64, d: f64) -> f64 {
    let b = lambda / a;
    let c = -a * b / (d - lambda);
    let norm = 1.0 + b * b + c * c;
    if norm.is_finite() {
        1.0 / norm
    } else {
        0.0
    }
}

/// Dressed ground-state energy from the closed-form root of the cubic:
///
/// ```text
/// Δ_dr = -Δ + Δ_dd/3 + 2^{2/3}(Δ² - ΔΔ_dd + Δ_dd²/3 + Ω²)/f + 2^{1/3} f/6
/// f³   = 18ΔΔ_dd(Δ-Δ_dd) + 4Δ_dd³ - 9Δ_ddΩ²
///        + √(Δ_dd²(18Δ² - 18ΔΔ_dd + 4Δ_dd² - 9Ω²)² - 16(3Δ² - 3ΔΔ_dd + Δ_dd² + 3Ω²)³)
/// ```
///
/// The three cube roots of `f³` yield the three eigenvalues. The branch is
/// picked by the same criterion as the eigensolver (largest `|gg⟩` weight),
/// evaluated from the analytic eigenvector, so no branch is guessed.
///
/// Cancellation inside `f` limits this route to `|Δ_dd| ≲ 10³ max(|Δ|, Ω)`;
/// use [`dressed_ground_state`] beyond that.
pub fn dressed_ground_energy_closed_form(
    rabi: Frequency,
    detuning: Frequency,
    shift: Frequency,
) -> ClosedFormEnergy {
    let (w, det, dd) = (rabi.angular().abs(), detuning.angular(), shift.angular());
    if w == 0.0 {
        return ClosedFormEnergy {
            energy: Frequency::ZERO,
            imaginary_residue: 0.0,
            branch_ok: true,
        };
    }
    let w2 = w * w;
    let a0 = 18.0 * det * dd * (det - dd) + 4.0 * dd.powi(3) - 9.0 * dd * w2;
    let inner = 18.0 * det * det - 18.0 * det * dd + 4.0 * dd * dd - 9.0 * w2;
    let outer = 3.0 * det * det - 3.0 * det * dd + dd * dd + 3.0 * w2;
    let discriminant = dd * dd * inner * inner - 16.0 * outer.powi(3);
    let root = Complex::new(discriminant, 0.0).sqrt();
    let f0 = (Complex::new(a0, 0.0) + root).cbrt();
    let q = det * det - det * dd + dd * dd / 3.0 + w2;

    let unit = Complex::from_polar(1.0, std::f64::consts::TAU / 3.0);
    let a = w * FRAC_1_SQRT_2;
    let d = -2.0 * det + dd;
    let mut best: Option<(f64, Complex<f64>)> = None;
    let mut f = f0;
    for _ in 0..3 {
        let value = Complex::new(-det + dd / 3.0, 0.0)
            + Complex::new(2f64.powf(2.0 / 3.0) * q, 0.0) / f
            + f * (2f64.cbrt() / 6.0);
        let weight = ground_weight(value.re, a, d);
        if best.is_none_or(|(bw, _)| weight > bw) {
            best = Some((weight, value));
        }
        f *= unit;
    }
    let (_, value) = best.expect("three branches evaluated");
    let residue = value.im.abs();
    ClosedFormEnergy {
        energy: Frequency::from_angular(value.re),
        imaginary_residue: residue,
        branch_ok: residue.is_finite() && residue <= 1e-9 * value.re.abs().max(f64::MIN_POSITIVE),
    }
}

/// Light shift of two non-interacting atoms, `-Δ + sgn(Δ)√(Δ² + Ω²)`.
pub fn light_shift_separated(rabi: Frequency, detuning: Frequency) -> Frequency {
    Frequency::from_angular(half_root_shift(rabi.angular().powi(2), detuning.angular()) * 2.0)
}

/// One-atom light shift of the blockaded pair, `-Δ/2 + sgn(Δ)√(Δ² + 2Ω²)/2`.
pub fn light_shift_blockaded(rabi: Frequency, detuning: Frequency) -> Frequency {
    Frequency::from_angular(half_root_shift(
        2.0 * rabi.angular().powi(2),
        detuning.angular(),
    ))
}

/// `(-Δ + sgn(Δ)√(Δ² + x))/2`, the branch connected to the bare ground
/// state, written without cancellation.
fn half_root_shift(x: f64, detuning: f64) -> f64 {
    let r = (detuning * detuning + x).sqrt();
    if detuning >= 0.0 {
        x / (2.0 * (detuning + r))
    } else {
        x / (2.0 * (detuning - r))
    }
}

/// `Δ_dr(0) - Δ_dr(∞)`, the depth of the soft-core potential.
pub fn potential_depth(rabi: Frequency, detuning: Frequency) -> Frequency {
    light_shift_blockaded(rabi, detuning) - light_shift_separated(rabi, detuning)
}

/// Weak-dressing limit of [`potential_depth`], `-Ω⁴/(8Δ³)`.
pub fn potential_depth_perturbative(rabi: Frequency, detuning: Frequency) -> Frequency {
    Frequency::from_angular(-rabi.angular().powi(4) / (8.0 * detuning.angular().powi(3)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn hz(x: f64) -> Frequency {
        Frequency::from_hz(x)
    }

    #[test]
    fn huge_pair_shift_reaches_blockaded_limit() {
        let (w, d) = (Frequency::from_mhz(2.0), Frequency::from_mhz(-30.0));
        let limit = light_shift_blockaded(w, d).angular();
        for dd in [1e15, 1e20, 1e26, -1e26] {
            let s = dressed_ground_state(w, d, Frequency::from_angular(dd));
            assert!(
                ((s.energy.angular() - limit) / limit).abs() < 1e-6,
                "{dd:e}: {:?}",
                s
            );
            assert!(s.ground_overlap > 0.99);
        }
    }

    #[test]
    fn no_interaction_gives_separated_light_shift() {
        for (w, d) in [(1.0f64, 10.0f64), (3.0, 2.0), (0.5, -4.0), (20.0, 100.0)] {
            let exact = dressed_ground_energy_exact(hz(w), hz(d), Frequency::ZERO);
            let expected = -d + d.signum() * (d * d + w * w).sqrt();
            assert!(
                rel(exact.hz(), expected) < 1e-12,
                "{w} {d}: {} vs {expected}",
                exact.hz()
            );
            assert!(rel(light_shift_separated(hz(w), hz(d)).hz(), expected) < 1e-12);
        }
    }

    #[test]
    fn strong_interaction_gives_blockaded_light_shift() {
        for (w, d) in [(1.0f64, 10.0f64), (3.0, 2.0), (0.5, -4.0)] {
            let big = 1e6 * w.max(d.abs());
            let exact = dressed_ground_energy_exact(hz(w), hz(d), hz(big.copysign(-d)));
            let expected = -d / 2.0 + d.signum() * (d * d + 2.0 * w * w).sqrt() / 2.0;
            assert!(rel(exact.hz(), expected) < 1e-5, "{w} {d}");
            assert!(rel(light_shift_blockaded(hz(w), hz(d)).hz(), expected) < 1e-12);
        }
    }

    #[test]
    fn zero_rabi_is_bare_ground() {
        assert_eq!(
            dressed_ground_energy_exact(Frequency::ZERO, hz(10.0), hz(3.0)),
            Frequency::ZERO
        );
        assert_eq!(
            dressed_ground_energy_closed_form(Frequency::ZERO, hz(10.0), hz(3.0)).energy,
            Frequency::ZERO
        );
    }

    #[test]
    fn closed_form_matches_reference_points() {
        // reference eigenvalues from an independent dense eigensolver
        let cases = [
            ((1.0, 10.0, -3.0), 0.049_859_558_327_461_22),
            ((1.0, 10.0, 0.0), 0.049_875_621_120_890_265),
            ((0.5, 1.0, 5.0), 0.108_529_541_523_969_47),
            ((2.0, 1.0, -7.0), 1.069_193_838_563_629),
        ];
        for ((w, d, v), expected) in cases {
            let cf = dressed_ground_energy_closed_form(hz(w), hz(d), hz(v));
            assert!(cf.branch_ok);
            assert!(rel(cf.energy.hz(), expected) < 1e-12, "{cf:?}");
            let ex = dressed_ground_energy_exact(hz(w), hz(d), hz(v));
            assert!(rel(ex.hz(), expected) < 1e-12);
        }
    }

    #[test]
    fn depth_and_perturbative_limit() {
        let (w, d) = (hz(20e6), hz(100e6));
        let exact = potential_depth(w, d);
        let pert = potential_depth_perturbative(w, d);
        assert!(rel(pert.khz(), -20.0) < 1e-12);
        let err = rel(exact.angular(), pert.angular());
        assert!(err < 2.0 * 0.04 && err > 0.05, "{err}");
    }
}

//! Rydberg dressing: pair potentials, dressed energies, soft-core curves and
//! figures of merit.

pub mod dressed;
pub mod merit;
pub mod pair;
pub mod potential;

pub use dressed::{
    dressed_ground_energy_closed_form, dressed_ground_energy_exact, dressed_ground_state,
    light_shift_blockaded, light_shift_separated, potential_depth, potential_depth_perturbative,
    ClosedFormEnergy, DressedGroundState,
};
pub use merit::{
    atoms_in_blockade, figures_of_merit, scaling_exponent, AsymptoticScaling, DressingParams,
    FigureOfMerit, MeritQuantity, MeritSummary,
};
pub use pair::{
    blockade_radius, c3_for_crossover, crossover_radius, dipole_dipole_shift, vdw_shift,
    PairInteraction, C3, DEFAULT_ANGULAR_FACTOR,
};
pub use potential::{
    normalized_potential, potential_curve, soft_core_radius, CurvePoint, PotentialKind,
    PotentialParams,
};

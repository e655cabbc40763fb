//! Error budgets and interaction models for neutral-atom qubit arrays with
//! Rydberg-mediated gates.
//!
//! * [`rydberg`] and [`species`]: lifetimes, polarizabilities, trap fields,
//!   atomic data.
//! * [`array`]: vacuum-loss, reload-rate and crosstalk budgets, with a Monte
//!   Carlo check of the loss model.
//! * [`gate`]: blockade, interaction and dressing gate-error minima, the
//!   entanglement bound, Doppler and Stark budgets.
//! * [`dressing`]: pair potentials, dressed ground-state energies, soft-core
//!   curves and figures of merit for dressed many-body dynamics.
//! * [`scan`] and [`reproduce`]: parameter grids with CSV output and the
//!   reference-value report.

pub mod array;
pub mod dressing;
pub mod error;
pub mod gate;
pub mod numeric;
pub mod reproduce;
pub mod rydberg;
pub mod scan;
pub mod species;
pub mod units;

pub use error::{Error, Result};
pub use species::{ExcitationScheme, Species};
pub use units::{Frequency, PhysConstants, CONSTANTS};

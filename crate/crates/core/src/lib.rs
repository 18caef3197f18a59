//! Parameter-space geometry of slowly driven oscillators.
//!
//! The classical side builds the metric `g_ij = ⟨G_i G_j⟩ - ⟨G_i⟩⟨G_j⟩` and the
//! Hannay connection/curvature from the generators `G_i` of parameter
//! displacements at fixed action-angle variables. The quantum side provides the
//! quantum metric tensor and Berry connection/curvature. Three models are
//! covered: the generalized harmonic oscillator, the same oscillator with a
//! linear term, and the quartic anharmonic oscillator (perturbatively).

pub mod closed;
pub mod error;
pub mod geometry;
pub mod models;
pub mod oracle;
pub mod quantum;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};

//! Exact trigonometric-series algebra and the quartic-oscillator perturbation theory.

pub mod dump;
pub mod perturbation;
pub mod poly;
pub mod quartic;
pub mod reference;
pub mod trig;

pub use perturbation::PerturbationSeries;
pub use poly::{CoefficientPoly, Monomial, Param};
pub use quartic::{quartic_pipeline, QuarticSeries};
pub use trig::{Trig, TrigSeries};

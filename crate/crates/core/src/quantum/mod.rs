//! Quantum metric tensors and Berry connections/curvatures.
//!
//! Tensors on the quantum side carry the Bohr–Sommerfeld action `(n + ½)ħ` as
//! their action tag.

pub mod overlap;
pub mod quartic;

use crate::closed;
use crate::error::{Error, Result};
use crate::geometry::{MetricTensor, OneForm, TwoForm};
use crate::models::{square, GhoLinPoint, GhoPoint};

pub use overlap::{
    berry_connection_numeric, quantum_metric_numeric, GhoLinSampler, GhoSampler, QuarticSampler,
    WavefunctionSampler,
};
pub use quartic::{
    identification_table, quartic_ground_state, quartic_quantum_metric_closed, quartic_quantum_series,
    Identification, QuarticGroundState, QuarticPoint,
};

/// Energy level `n` and the value of `ħ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumLevel {
    n: u32,
    hbar: f64,
}

impl QuantumLevel {
    pub fn new(n: u32, hbar: f64) -> Result<Self> {
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::Domain(format!("hbar = {hbar} must be positive")));
        }
        Ok(Self { n, hbar })
    }

    pub fn ground() -> Self {
        Self { n: 0, hbar: 1.0 }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// `(n + ½)ħ`.
    pub fn bohr_sommerfeld_action(&self) -> f64 {
        (self.n as f64 + 0.5) * self.hbar
    }
}

impl Default for QuantumLevel {
    fn default() -> Self {
        Self::ground()
    }
}

pub fn gho_quantum_metric(level: QuantumLevel, x: &GhoPoint) -> Result<MetricTensor> {
    let g = closed::gho_quantum_metric(&x.params(), &(level.n as f64));
    MetricTensor::new(square(g), x.point(), level.bohr_sommerfeld_action())
}

pub fn gho_berry(level: QuantumLevel, x: &GhoPoint) -> Result<(OneForm, TwoForm)> {
    let (a, f) = closed::gho_berry(&x.params(), &(level.n as f64));
    let action = level.bohr_sommerfeld_action();
    Ok((OneForm::new(a.to_vec(), x.point(), action)?, TwoForm::new(square(f), x.point(), action)?))
}

pub fn gholin_quantum_metric(level: QuantumLevel, x: &GhoLinPoint) -> Result<MetricTensor> {
    let g = closed::gholin_quantum_metric(&x.params(), &(level.n as f64), &level.hbar);
    MetricTensor::new(square(g), x.point(), level.bohr_sommerfeld_action())
}

pub fn gholin_berry(level: QuantumLevel, x: &GhoLinPoint) -> Result<(OneForm, TwoForm)> {
    let (a, f) = closed::gholin_berry(&x.params(), &(level.n as f64), &level.hbar);
    let action = level.bohr_sommerfeld_action();
    Ok((OneForm::new(a.to_vec(), x.point(), action)?, TwoForm::new(square(f), x.point(), action)?))
}

/// Metric `Re(⟨ĜᵢĜⱼ⟩ - ⟨Ĝᵢ⟩⟨Ĝⱼ⟩)/ħ²` and connection `⟨Ĝᵢ⟩/ħ` from the
/// generator operators of the GHO with a linear term.
pub fn operator_metric_and_connection(level: QuantumLevel, x: &GhoLinPoint) -> Result<(MetricTensor, OneForm)> {
    let (g, a) = closed::operator_metric_and_connection(&x.params(), &(level.n as f64), &level.hbar);
    let action = level.bohr_sommerfeld_action();
    Ok((MetricTensor::new(square(g), x.point(), action)?, OneForm::new(a.to_vec(), x.point(), action)?))
}

//! Exactly solvable models: the generalized harmonic oscillator and the
//! generalized harmonic oscillator with a linear term.

pub mod gho;
pub mod gho_linear;

use nalgebra::DMatrix;

use crate::error::Result;
use crate::geometry::{Domain, MetricTensor, OneForm, ParameterPoint, TwoForm};

pub use gho::{Gho, GhoPoint};
pub use gho_linear::{GhoLinPoint, GhoLinear};

/// Canonical coordinate and momentum of a one-degree-of-freedom system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseState {
    pub q: f64,
    pub p: f64,
}

impl PhaseState {
    pub fn new(q: f64, p: f64) -> Self {
        Self { q, p }
    }

    pub fn is_finite(&self) -> bool {
        self.q.is_finite() && self.p.is_finite()
    }
}

/// Integrable one-degree-of-freedom model with closed-form action-angle variables.
///
/// Parameter vectors are passed as slices in the order of [`param_names`](Self::param_names).
/// The slice-based methods do not re-validate their input; callers go through
/// [`validate`](Self::validate) or a typed point first.
pub trait ClassicalModel: Send + Sync {
    fn name(&self) -> &'static str;

    fn domain(&self) -> Domain;

    fn param_names(&self) -> &'static [&'static str] {
        self.domain().param_names().unwrap_or(&[])
    }

    fn n_params(&self) -> usize {
        self.param_names().len()
    }

    /// Conventional label of parameter 0 when printing component indices.
    fn index_base(&self) -> usize;

    fn validate(&self, x: &[f64]) -> Result<()> {
        self.domain().check(x)
    }

    fn point(&self, x: &[f64]) -> Result<ParameterPoint> {
        ParameterPoint::for_domain(self.domain(), x)
    }

    fn frequency(&self, x: &[f64]) -> f64;

    fn hamiltonian(&self, s: PhaseState, x: &[f64]) -> f64;

    /// `(∂H/∂q, ∂H/∂p)`.
    fn hamiltonian_gradient(&self, s: PhaseState, x: &[f64]) -> (f64, f64);

    /// `(φ, I) ↦ (q, p)`.
    fn to_phase(&self, angle: f64, action: f64, x: &[f64]) -> PhaseState;

    /// `(q, p) ↦ (φ, I)` with `φ ∈ [0, 2π)`.
    fn to_action_angle(&self, s: PhaseState, x: &[f64]) -> (f64, f64);

    /// Single-valued generating function `S(φ, I; x)`.
    fn generating_function(&self, angle: f64, action: f64, x: &[f64]) -> f64;

    /// Generators `G_i(φ, I; x)`.
    fn generators(&self, angle: f64, action: f64, x: &[f64]) -> Vec<f64>;

    /// `G_i` as functions on phase space, `G_i(q, p; x)`.
    fn generators_at(&self, s: PhaseState, x: &[f64]) -> Vec<f64> {
        let (angle, action) = self.to_action_angle(s, x);
        self.generators(angle, action, x)
    }

    /// Action of the orbit with energy `E`.
    fn action_from_energy(&self, energy: f64, x: &[f64]) -> f64;

    fn metric_closed(&self, action: f64, x: &[f64]) -> Result<MetricTensor>;

    fn hannay_closed(&self, action: f64, x: &[f64]) -> Result<(OneForm, TwoForm)>;
}

pub(crate) fn square<const N: usize>(m: [[f64; N]; N]) -> DMatrix<f64> {
    DMatrix::from_fn(N, N, |i, j| m[i][j])
}

/// Wraps `atan2` into `[0, 2π)`.
pub(crate) fn wrap_angle(a: f64) -> f64 {
    let t = a.rem_euclid(std::f64::consts::TAU);
    if t >= std::f64::consts::TAU { 0.0 } else { t }
}

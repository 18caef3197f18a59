//! Angle-origin gauge shifts `φ' = φ + ∂λ/∂I`, `G'ᵢ = Gᵢ - ∂ᵢλ`.

use crate::error::{Error, Result};
use crate::geometry::{metric_from_generators, raw_second_moment, GeneratorSamples};
use crate::models::ClassicalModel;

/// `λ(I; x) = c₁ I² + c₂ I xⁱ` with `i = index`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugeShift {
    pub c1: f64,
    pub c2: f64,
    pub index: usize,
}

impl GaugeShift {
    pub fn new(c1: f64, c2: f64, index: usize) -> Result<Self> {
        if !(c1.is_finite() && c2.is_finite()) {
            return Err(Error::Domain(format!("gauge coefficients ({c1}, {c2}) must be finite")));
        }
        Ok(Self { c1, c2, index })
    }

    pub fn zero() -> Self {
        Self { c1: 0.0, c2: 0.0, index: 0 }
    }

    /// `∂λ/∂I`.
    pub fn angle_shift(&self, action: f64, x: &[f64]) -> f64 {
        2.0 * self.c1 * action + self.c2 * x[self.index]
    }

    /// `∂ᵢλ`.
    pub fn gradient(&self, action: f64, n: usize) -> Vec<f64> {
        (0..n).map(|i| if i == self.index { self.c2 * action } else { 0.0 }).collect()
    }
}

/// Recomputes the metric from shifted generators sampled on the new angle grid.
///
/// Returns `(max|g' - g|, max|⟨G'ᵢG'ⱼ⟩ - ⟨GᵢGⱼ⟩|)`.
pub fn gauge_invariance_experiment(
    model: &dyn ClassicalModel,
    shift: &GaugeShift,
    action: f64,
    x: &[f64],
    grid: usize,
) -> Result<(f64, f64)> {
    model.validate(x)?;
    if shift.index >= x.len() {
        return Err(Error::IndexOutOfRange { index: shift.index, dim: x.len() });
    }
    let n = x.len();
    let delta = shift.angle_shift(action, x);
    let dl = shift.gradient(action, n);
    let old = GeneratorSamples::sample(n, grid, |phi| model.generators(phi, action, x))?;
    let new = GeneratorSamples::sample(n, grid, |phi_new| {
        let g = model.generators(phi_new - delta, action, x);
        g.iter().zip(&dl).map(|(g, d)| g - d).collect()
    })?;
    let point = model.point(x)?;
    let g = metric_from_generators(&old, point.clone(), action)?;
    let g2 = metric_from_generators(&new, point, action)?;
    let raw = (raw_second_moment(&new)? - raw_second_moment(&old)?).amax();
    Ok((g2.max_deviation(g.components()), raw))
}

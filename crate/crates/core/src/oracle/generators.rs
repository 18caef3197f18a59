//! Brute-force checks of the generators and of the sampled metric.

use crate::error::{Error, Result};
use crate::geometry::{
    metric_from_generators, metric_from_weighted_generators, GeneratorSamples, MetricTensor, OneForm,
};
use crate::models::{ClassicalModel, PhaseState};
use crate::quantum::QuarticPoint;
use crate::series::quartic::{QuarticSeries, METRIC_ORDER};

/// Parameter step of the displacement check.
pub const PARAMETER_STEP: f64 = 1e-5;
/// Phase-space step used to differentiate the generators.
pub const PHASE_STEP: f64 = 1e-5;

fn stencil_points(model: &dyn ClassicalModel, x: &[f64], i: usize, h: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut up = x.to_vec();
    let mut down = x.to_vec();
    up[i] += h;
    down[i] -= h;
    model.validate(&up)?;
    model.validate(&down)?;
    Ok((up, down))
}

/// `(∂ᵢq, ∂ᵢp)` at fixed `(φ, I)` by central differences, for every parameter.
///
/// A stencil point outside the domain shrinks the step tenfold once.
pub fn phase_space_derivatives(
    model: &dyn ClassicalModel,
    angle: f64,
    action: f64,
    x: &[f64],
) -> Result<Vec<(f64, f64)>> {
    model.validate(x)?;
    (0..x.len())
        .map(|i| {
            let h = PARAMETER_STEP * (1.0 + x[i].abs());
            let (h, (up, down)) = match stencil_points(model, x, i, h) {
                Ok(p) => (h, p),
                Err(_) => (h / 10.0, stencil_points(model, x, i, h / 10.0)?),
            };
            let a = model.to_phase(angle, action, &up);
            let b = model.to_phase(angle, action, &down);
            Ok(((a.q - b.q) / (2.0 * h), (a.p - b.p) / (2.0 * h)))
        })
        .collect()
}

/// `(∂Gᵢ/∂p, -∂Gᵢ/∂q)` at a phase-space point, by central differences.
pub fn generator_flow(model: &dyn ClassicalModel, s: PhaseState, x: &[f64]) -> Vec<(f64, f64)> {
    let hq = PHASE_STEP * (1.0 + s.q.abs());
    let hp = PHASE_STEP * (1.0 + s.p.abs());
    let gp = model.generators_at(PhaseState::new(s.q, s.p + hp), x);
    let gm = model.generators_at(PhaseState::new(s.q, s.p - hp), x);
    let gqp = model.generators_at(PhaseState::new(s.q + hq, s.p), x);
    let gqm = model.generators_at(PhaseState::new(s.q - hq, s.p), x);
    (0..x.len())
        .map(|i| ((gp[i] - gm[i]) / (2.0 * hp), -(gqp[i] - gqm[i]) / (2.0 * hq)))
        .collect()
}

/// Worst absolute mismatch between `(∂ᵢq, ∂ᵢp)_{φ,I}` and `(∂Gᵢ/∂p, -∂Gᵢ/∂q)`
/// over all parameter indices.
pub fn generator_displacement_check(model: &dyn ClassicalModel, angle: f64, action: f64, x: &[f64]) -> Result<f64> {
    if !(action.is_finite() && action > 0.0) {
        return Err(Error::Domain(format!("action {action} must be positive")));
    }
    let displacement = phase_space_derivatives(model, angle, action, x)?;
    let flow = generator_flow(model, model.to_phase(angle, action, x), x);
    let err = displacement
        .iter()
        .zip(&flow)
        .map(|(d, f)| (d.0 - f.0).abs().max((d.1 - f.1).abs()))
        .fold(0.0, f64::max);
    Ok(err)
}

/// Samples `G_i(φ, I; x)` on `grid` angles.
pub fn sample_generators(model: &dyn ClassicalModel, action: f64, x: &[f64], grid: usize) -> Result<GeneratorSamples> {
    model.validate(x)?;
    GeneratorSamples::sample(x.len(), grid, |phi| model.generators(phi, action, x))
}

/// Metric from generators sampled on `grid` angles.
pub fn numeric_metric(model: &dyn ClassicalModel, action: f64, x: &[f64], grid: usize) -> Result<MetricTensor> {
    let gs = sample_generators(model, action, x, grid)?;
    metric_from_generators(&gs, model.point(x)?, action)
}

fn quartic_samples(series: &QuarticSeries, action: f64, x: &QuarticPoint, grid: usize) -> Result<(GeneratorSamples, Vec<f64>)> {
    let (m, k, l) = (x.m(), x.k(), x.lambda());
    let gs = GeneratorSamples::sample(3, grid, |phi| {
        series.generators.iter().map(|g| g.eval(l, phi, action, m, k)).collect()
    })?;
    let jac = series.jacobian.truncate(METRIC_ORDER)?;
    let weights = (0..grid).map(|n| jac.eval(l, gs.angle(n), action, m, k)).collect();
    Ok((gs, weights))
}

/// Quartic metric from the series generators sampled in `φ₀`, weighted by `∂φ/∂φ₀`
/// (both truncated at `λ²`).
pub fn quartic_numeric_metric(series: &QuarticSeries, action: f64, x: &QuarticPoint, grid: usize) -> Result<MetricTensor> {
    let (gs, w) = quartic_samples(series, action, x, grid)?;
    metric_from_weighted_generators(&gs, &w, x.point(), action)
}

/// Quartic connection `⟨G_i⟩` from the same samples.
pub fn quartic_numeric_connection(series: &QuarticSeries, action: f64, x: &QuarticPoint, grid: usize) -> Result<OneForm> {
    let (gs, w) = quartic_samples(series, action, x, grid)?;
    let a = (0..3)
        .map(|i| crate::geometry::weighted_angle_average(&gs.row(i), &w))
        .collect::<Result<Vec<_>>>()?;
    OneForm::new(a, x.point(), action)
}

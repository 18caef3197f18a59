//! Fixed-step RK4 integration of Hamilton's equations under a slow parameter ramp.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geometry::ParameterPoint;
use crate::models::{ClassicalModel, PhaseState};

/// Steps per shortest oscillation period.
pub const STEPS_PER_PERIOD: f64 = 200.0;

/// Smoothstep interpolation `x(t) = x₀ + (x₁ - x₀)(3u² - 2u³)`, `u = t/T`.
#[derive(Debug, Clone, PartialEq)]
pub struct RampSchedule {
    start: ParameterPoint,
    end: ParameterPoint,
    total_time: f64,
}

impl RampSchedule {
    pub fn new(start: ParameterPoint, end: ParameterPoint, total_time: f64) -> Result<Self> {
        if !(total_time.is_finite() && total_time > 0.0) {
            return Err(Error::Domain(format!("ramp time {total_time} must be positive")));
        }
        if start.domain() != end.domain() || start.names() != end.names() {
            return Err(Error::ShapeMismatch("ramp endpoints live in different parameter spaces".into()));
        }
        Ok(Self { start, end, total_time })
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    pub fn start(&self) -> &ParameterPoint {
        &self.start
    }

    pub fn end(&self) -> &ParameterPoint {
        &self.end
    }

    pub fn at(&self, t: f64) -> Vec<f64> {
        let u = (t / self.total_time).clamp(0.0, 1.0);
        let s = u * u * (3.0 - 2.0 * u);
        self.start.values().iter().zip(self.end.values()).map(|(a, b)| a + (b - a) * s).collect()
    }
}

fn flow(model: &dyn ClassicalModel, s: PhaseState, x: &[f64]) -> (f64, f64) {
    let (hq, hp) = model.hamiltonian_gradient(s, x);
    (hp, -hq)
}

/// One RK4 step of `q̇ = ∂H/∂p`, `ṗ = -∂H/∂q` with parameters `x(t)`.
pub fn rk4_step<F>(model: &dyn ClassicalModel, s: PhaseState, t: f64, dt: f64, params: F) -> PhaseState
where
    F: Fn(f64) -> Vec<f64>,
{
    let x0 = params(t);
    let xh = params(t + dt / 2.0);
    let x1 = params(t + dt);
    let k1 = flow(model, s, &x0);
    let k2 = flow(model, PhaseState::new(s.q + dt / 2.0 * k1.0, s.p + dt / 2.0 * k1.1), &xh);
    let k3 = flow(model, PhaseState::new(s.q + dt / 2.0 * k2.0, s.p + dt / 2.0 * k2.1), &xh);
    let k4 = flow(model, PhaseState::new(s.q + dt * k3.0, s.p + dt * k3.1), &x1);
    PhaseState::new(
        s.q + dt / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
        s.p + dt / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
    )
}

/// Integrates at frozen parameters and returns the worst phase-space and
/// relative energy errors against the exact orbit.
pub fn frozen_errors(model: &dyn ClassicalModel, x: &[f64], s0: PhaseState, dt: f64, total: f64) -> Result<(f64, f64)> {
    model.validate(x)?;
    let (angle0, action) = model.to_action_angle(s0, x);
    let omega = model.frequency(x);
    let e0 = model.hamiltonian(s0, x);
    let steps = (total / dt).round() as usize;
    let (mut s, mut state_err, mut energy_err) = (s0, 0.0f64, 0.0f64);
    for n in 1..=steps {
        s = rk4_step(model, s, 0.0, dt, |_| x.to_vec());
        let exact = model.to_phase(angle0 + omega * dt * n as f64, action, x);
        state_err = state_err.max((s.q - exact.q).hypot(s.p - exact.p));
        energy_err = energy_err.max(((model.hamiltonian(s, x) - e0) / e0).abs());
    }
    Ok((state_err, energy_err))
}

/// Step size for a ramp: `(2π/ω_max)/steps_per_period`, with `ω_max` over 101 ramp samples.
pub fn ramp_step(model: &dyn ClassicalModel, ramp: &RampSchedule, steps_per_period: f64) -> Result<f64> {
    let mut omega_max = 0.0f64;
    for n in 0..=100 {
        let x = ramp.at(ramp.total_time * n as f64 / 100.0);
        model.validate(&x)?;
        omega_max = omega_max.max(model.frequency(&x));
    }
    Ok(TAU / omega_max / steps_per_period)
}

/// `max_t |I(t) - I(0)| / I(0)`, with `I(t)` from the instantaneous energy.
pub fn adiabatic_action_drift(model: &dyn ClassicalModel, ramp: &RampSchedule, initial: PhaseState) -> Result<f64> {
    adiabatic_action_drift_with(model, ramp, initial, STEPS_PER_PERIOD)
}

/// [`adiabatic_action_drift`] with a finer step; `steps_per_period` must be at least 200.
pub fn adiabatic_action_drift_with(
    model: &dyn ClassicalModel,
    ramp: &RampSchedule,
    initial: PhaseState,
    steps_per_period: f64,
) -> Result<f64> {
    if !(steps_per_period >= STEPS_PER_PERIOD) {
        return Err(Error::Domain(format!("{steps_per_period} steps per period is too coarse")));
    }
    if ramp.start.domain() != model.domain() {
        return Err(Error::ShapeMismatch(format!("ramp is not over {} parameters", model.name())));
    }
    let x0 = ramp.at(0.0);
    model.validate(&x0)?;
    let dt_max = ramp_step(model, ramp, steps_per_period)?;
    let steps = (ramp.total_time / dt_max).ceil() as usize;
    let dt = ramp.total_time / steps as f64;
    let i0 = model.action_from_energy(model.hamiltonian(initial, &x0), &x0);
    if !(i0 > 0.0) {
        return Err(Error::Domain("initial state sits at the equilibrium".into()));
    }
    let mut s = initial;
    let mut drift = 0.0f64;
    for n in 0..steps {
        let t = n as f64 * dt;
        s = rk4_step(model, s, t, dt, |t| ramp.at(t));
        let x = ramp.at(t + dt);
        model.validate(&x)?;
        let i = model.action_from_energy(model.hamiltonian(s, &x), &x);
        drift = drift.max((i - i0).abs() / i0);
    }
    Ok(drift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::Gho;

    fn ramp(x_end: f64, t: f64) -> RampSchedule {
        let a = Gho.point(&[1.0, 0.0, 1.0]).unwrap();
        let b = Gho.point(&[x_end, 0.0, 1.0]).unwrap();
        RampSchedule::new(a, b, t).unwrap()
    }

    #[test]
    fn smoothstep_endpoints() {
        let r = ramp(2.0, 10.0);
        assert_eq!(r.at(0.0), vec![1.0, 0.0, 1.0]);
        assert_eq!(r.at(10.0), vec![2.0, 0.0, 1.0]);
        assert_eq!(r.at(5.0)[0], 1.5);
    }

    #[test]
    fn frozen_ramp_keeps_action() {
        let s0 = Gho.to_phase(0.3, 1.0, &[1.0, 0.0, 1.0]);
        let d = adiabatic_action_drift_with(&Gho, &ramp(1.0, 50.0), s0, 2000.0).unwrap();
        assert!(d < 1e-10, "{d}");
        let coarse = adiabatic_action_drift(&Gho, &ramp(1.0, 50.0), s0).unwrap();
        assert!(coarse > d && coarse < 1e-6);
    }

    #[test]
    fn rk4_global_error_is_fourth_order() {
        let x = [1.0, 0.0, 1.0];
        let s0 = Gho.to_phase(0.0, 1.0, &x);
        let (e1, h1) = frozen_errors(&Gho, &x, s0, 0.1, 20.0).unwrap();
        let (e2, h2) = frozen_errors(&Gho, &x, s0, 0.05, 20.0).unwrap();
        assert!((e1 / e2 - 16.0).abs() < 3.2, "{}", e1 / e2);
        assert!(h1 / h2 > 16.0);
    }

    #[test]
    fn rejects_bad_time() {
        let a = Gho.point(&[1.0, 0.0, 1.0]).unwrap();
        assert!(RampSchedule::new(a.clone(), a, 0.0).is_err());
    }
}

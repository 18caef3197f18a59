//! Generalized harmonic oscillator `H = (Xq² + 2Yqp + Zp²)/2`.

use crate::closed::{self, GhoParams};
use crate::error::{Error, Result};
use crate::geometry::{Domain, MetricTensor, OneForm, ParameterPoint, TwoForm};
use crate::models::{square, wrap_angle, ClassicalModel, PhaseState};

/// Validated `(X, Y, Z)` with `XZ - Y² > 0` and `Z > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhoPoint {
    x: f64,
    y: f64,
    z: f64,
}

impl GhoPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Domain::Gho.check(&[x, y, z])?;
        Ok(Self { x, y, z })
    }

    pub fn from_slice(v: &[f64]) -> Result<Self> {
        Domain::Gho.check(v)?;
        Ok(Self { x: v[0], y: v[1], z: v[2] })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn omega(&self) -> f64 {
        (self.x * self.z - self.y * self.y).sqrt()
    }

    pub fn values(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn point(&self) -> ParameterPoint {
        ParameterPoint::for_domain(Domain::Gho, &self.values()).expect("validated at construction")
    }

    pub(crate) fn params(&self) -> GhoParams<f64> {
        GhoParams { x: self.x, y: self.y, z: self.z, omega: self.omega() }
    }
}

pub(crate) fn check_action(action: f64) -> Result<()> {
    if action.is_finite() && action > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("action I = {action} must be positive")))
    }
}

pub fn hamiltonian(s: PhaseState, x: &GhoPoint) -> f64 {
    0.5 * (x.x * s.q * s.q + 2.0 * x.y * s.q * s.p + x.z * s.p * s.p)
}

/// `q = (2ZI/ω)^{1/2} sin φ`, `p = (2ZI/ω)^{1/2} (-(Y/Z) sin φ + (ω/Z) cos φ)`.
pub fn action_angle_map(angle: f64, action: f64, x: &GhoPoint) -> Result<PhaseState> {
    check_action(action)?;
    Ok(map_unchecked(angle, action, x))
}

fn map_unchecked(angle: f64, action: f64, x: &GhoPoint) -> PhaseState {
    let w = x.omega();
    let amp = (2.0 * x.z * action / w).sqrt();
    let (s, c) = angle.sin_cos();
    PhaseState { q: amp * s, p: amp * (-(x.y / x.z) * s + (w / x.z) * c) }
}

/// Inverse of [`action_angle_map`]: `I = H/ω`.
pub fn inverse_map(s: PhaseState, x: &GhoPoint) -> (f64, f64) {
    let w = x.omega();
    let cos_part = (x.z * s.p + x.y * s.q) / w;
    let angle = wrap_angle(s.q.atan2(cos_part));
    (angle, hamiltonian(s, x) / w)
}

/// `S(φ, I) = -(YI/ω) sin²φ + I(φ + sin φ cos φ)`.
pub fn generating_function(angle: f64, action: f64, x: &GhoPoint) -> Result<f64> {
    check_action(action)?;
    Ok(generating_unchecked(angle, action, x))
}

fn generating_unchecked(angle: f64, action: f64, x: &GhoPoint) -> f64 {
    let (s, c) = angle.sin_cos();
    -(x.y * action / x.omega()) * s * s + action * (angle + s * c)
}

/// Generators `(G_X, G_Y, G_Z)` at `(φ, I)`.
pub fn generators(angle: f64, action: f64, x: &GhoPoint) -> Result<[f64; 3]> {
    check_action(action)?;
    Ok(generators_unchecked(angle, action, x))
}

fn generators_unchecked(angle: f64, action: f64, x: &GhoPoint) -> [f64; 3] {
    let w = x.omega();
    let w2 = w * w;
    let (s, c) = angle.sin_cos();
    [
        -(x.z * action / (2.0 * w2)) * s * c,
        (action * s / w2) * (x.y * c + w * s),
        (action * s / (2.0 * x.z * w2)) * ((x.x * x.z - 2.0 * x.y * x.y) * c - 2.0 * x.y * w * s),
    ]
}

pub fn metric_closed(action: f64, x: &GhoPoint) -> Result<MetricTensor> {
    check_action(action)?;
    MetricTensor::new(square(closed::gho_metric(&x.params(), &action)), x.point(), action)
}

/// Hannay connection and curvature.
pub fn hannay(action: f64, x: &GhoPoint) -> Result<(OneForm, TwoForm)> {
    check_action(action)?;
    let (a, f) = closed::gho_hannay(&x.params(), &action);
    Ok((OneForm::new(a.to_vec(), x.point(), action)?, TwoForm::new(square(f), x.point(), action)?))
}

/// Slice-based adapter used by the numeric oracles.
#[derive(Debug, Clone, Copy, Default)]
pub struct Gho;

fn pt(x: &[f64]) -> GhoPoint {
    GhoPoint { x: x[0], y: x[1], z: x[2] }
}

impl ClassicalModel for Gho {
    fn name(&self) -> &'static str {
        "gho"
    }

    fn domain(&self) -> Domain {
        Domain::Gho
    }

    fn index_base(&self) -> usize {
        1
    }

    fn frequency(&self, x: &[f64]) -> f64 {
        pt(x).omega()
    }

    fn hamiltonian(&self, s: PhaseState, x: &[f64]) -> f64 {
        hamiltonian(s, &pt(x))
    }

    fn hamiltonian_gradient(&self, s: PhaseState, x: &[f64]) -> (f64, f64) {
        (x[0] * s.q + x[1] * s.p, x[1] * s.q + x[2] * s.p)
    }

    fn to_phase(&self, angle: f64, action: f64, x: &[f64]) -> PhaseState {
        map_unchecked(angle, action, &pt(x))
    }

    fn to_action_angle(&self, s: PhaseState, x: &[f64]) -> (f64, f64) {
        inverse_map(s, &pt(x))
    }

    fn generating_function(&self, angle: f64, action: f64, x: &[f64]) -> f64 {
        generating_unchecked(angle, action, &pt(x))
    }

    fn generators(&self, angle: f64, action: f64, x: &[f64]) -> Vec<f64> {
        generators_unchecked(angle, action, &pt(x)).to_vec()
    }

    fn action_from_energy(&self, energy: f64, x: &[f64]) -> f64 {
        energy / pt(x).omega()
    }

    fn metric_closed(&self, action: f64, x: &[f64]) -> Result<MetricTensor> {
        metric_closed(action, &GhoPoint::from_slice(x)?)
    }

    fn hannay_closed(&self, action: f64, x: &[f64]) -> Result<(OneForm, TwoForm)> {
        hannay(action, &GhoPoint::from_slice(x)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

    fn unit() -> GhoPoint {
        GhoPoint::new(1.0, 0.0, 1.0).unwrap()
    }

    #[test]
    fn map_at_quarter_period() {
        let s = action_angle_map(FRAC_PI_2, 1.0, &unit()).unwrap();
        assert!((s.q - 2f64.sqrt()).abs() < 1e-15);
        assert!(s.p.abs() < 1e-15);
        let x = GhoPoint::new(2.0, 0.7, 1.3).unwrap();
        assert_eq!(action_angle_map(0.0, 3.0, &x).unwrap().q, 0.0);
    }

    #[test]
    fn energy_is_omega_times_action_and_inverse_round_trips() {
        let x = GhoPoint::new(2.0, -0.7, 1.3).unwrap();
        for k in 0..16 {
            let angle = 0.37 * k as f64;
            let s = action_angle_map(angle, 1.7, &x).unwrap();
            assert!((hamiltonian(s, &x) - x.omega() * 1.7).abs() < 1e-13);
            let (a, i) = inverse_map(s, &x);
            assert!((i - 1.7).abs() < 1e-13);
            assert!((a - angle.rem_euclid(TAU)).abs() < 1e-12);
        }
    }

    #[test]
    fn generating_function_values() {
        let x = unit();
        assert_eq!(generating_function(0.0, 1.0, &x).unwrap(), 0.0);
        assert!((generating_function(FRAC_PI_2, 1.0, &x).unwrap() - FRAC_PI_2).abs() < 1e-15);
        let y = GhoPoint::new(2.0, 0.4, 0.9).unwrap();
        let jump = generating_function(1.1 + TAU, 1.5, &y).unwrap() - generating_function(1.1, 1.5, &y).unwrap();
        assert!((jump - TAU * 1.5).abs() < 1e-12);
    }

    #[test]
    fn generator_values() {
        let g = generators(FRAC_PI_4, 1.0, &unit()).unwrap();
        assert!((g[0] + 0.25).abs() < 1e-15);
        assert_eq!(generators(0.0, 2.0, &GhoPoint::new(3.0, 1.0, 2.0).unwrap()).unwrap(), [0.0; 3]);
        assert!(generators(PI, 0.0, &unit()).is_err());
    }

    #[test]
    fn closed_metric_values() {
        let g = metric_closed(1.0, &unit()).unwrap();
        assert_eq!(g.get(0, 0), 1.0 / 32.0);
        assert_eq!(g.get(1, 1), 1.0 / 8.0);
        assert_eq!(g.get(2, 2), 1.0 / 32.0);
        assert_eq!(g.get(0, 2), -1.0 / 32.0);
        assert_eq!(g.get(0, 1), 0.0);
        let x = GhoPoint::new(2.0, 0.3, 1.1).unwrap();
        let g1 = metric_closed(1.0, &x).unwrap();
        let g2 = metric_closed(2.0, &x).unwrap();
        assert!(g2.max_deviation(&(g1.components() * 4.0)) < 1e-15);
    }

    #[test]
    fn hannay_values() {
        let (a, f) = hannay(1.0, &unit()).unwrap();
        assert_eq!(a.components(), &[0.0, 0.5, 0.0]);
        assert_eq!(f.get(0, 1), -0.25);
        assert_eq!(f.get(0, 2), 0.0);
        assert_eq!(f.get(1, 2), -0.25);
        assert_eq!(f.get(1, 0), 0.25);
    }

    #[test]
    fn domain_is_enforced() {
        assert!(GhoPoint::new(0.0, 1.0, 1.0).is_err());
        assert!(GhoPoint::new(-2.0, 0.0, -1.0).is_err());
        assert!(metric_closed(-1.0, &unit()).is_err());
    }
}

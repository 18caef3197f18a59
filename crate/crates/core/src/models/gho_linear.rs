//! Generalized harmonic oscillator with a linear term, `H = (Xq² + 2Yqp + Zp²)/2 + Wq`.

use crate::closed::{self, GhoLinParams};
use crate::error::Result;
use crate::geometry::{Domain, MetricTensor, OneForm, ParameterPoint, TwoForm};
use crate::models::gho::check_action;
use crate::models::{square, wrap_angle, ClassicalModel, PhaseState};

/// Validated `(W, X, Y, Z)` with `XZ - Y² > 0` and `Z > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhoLinPoint {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl GhoLinPoint {
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        Domain::GhoLinear.check(&[w, x, y, z])?;
        Ok(Self { w, x, y, z })
    }

    pub fn from_slice(v: &[f64]) -> Result<Self> {
        Domain::GhoLinear.check(v)?;
        Ok(Self { w: v[0], x: v[1], y: v[2], z: v[3] })
    }

    pub fn w(&self) -> f64 {
        self.w
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

    pub fn values(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn point(&self) -> ParameterPoint {
        ParameterPoint::for_domain(Domain::GhoLinear, &self.values()).expect("validated at construction")
    }

    /// Equilibrium `(q*, p*) = (-WZ/ω², WY/ω²)`.
    pub fn equilibrium(&self) -> PhaseState {
        let w2 = self.omega().powi(2);
        PhaseState { q: -self.w * self.z / w2, p: self.w * self.y / w2 }
    }

    pub(crate) fn params(&self) -> GhoLinParams<f64> {
        GhoLinParams { w: self.w, x: self.x, y: self.y, z: self.z, omega: self.omega() }
    }
}

pub fn hamiltonian(s: PhaseState, x: &GhoLinPoint) -> f64 {
    0.5 * (x.x * s.q * s.q + 2.0 * x.y * s.q * s.p + x.z * s.p * s.p) + x.w * s.q
}

/// The GHO map shifted to the equilibrium `(-WZ/ω², WY/ω²)`.
pub fn action_angle_map(angle: f64, action: f64, x: &GhoLinPoint) -> Result<PhaseState> {
    check_action(action)?;
    Ok(map_unchecked(angle, action, x))
}

fn map_unchecked(angle: f64, action: f64, x: &GhoLinPoint) -> PhaseState {
    let w = x.omega();
    let amp = (2.0 * x.z * action / w).sqrt();
    let (s, c) = angle.sin_cos();
    let eq = x.equilibrium();
    PhaseState {
        q: amp * s + eq.q,
        p: amp * (-(x.y / x.z) * s + (w / x.z) * c) + eq.p,
    }
}

/// Inverse map; `I = (H + W²Z/2ω²)/ω`.
pub fn inverse_map(s: PhaseState, x: &GhoLinPoint) -> (f64, f64) {
    let w = x.omega();
    let eq = x.equilibrium();
    let (dq, dp) = (s.q - eq.q, s.p - eq.p);
    let angle = wrap_angle(dq.atan2((x.z * dp + x.y * dq) / w));
    (angle, action_from_energy(hamiltonian(s, x), x))
}

pub fn action_from_energy(energy: f64, x: &GhoLinPoint) -> f64 {
    let w = x.omega();
    (energy + x.w * x.w * x.z / (2.0 * w * w)) / w
}

/// `S(φ, I) = -(Y/2Z) q(φ, I)² + I(φ + sin φ cos φ)`.
pub fn generating_function(angle: f64, action: f64, x: &GhoLinPoint) -> Result<f64> {
    check_action(action)?;
    Ok(generating_unchecked(angle, action, x))
}

fn generating_unchecked(angle: f64, action: f64, x: &GhoLinPoint) -> f64 {
    let q = map_unchecked(angle, action, x).q;
    let (s, c) = angle.sin_cos();
    -(x.y / (2.0 * x.z)) * q * q + action * (angle + s * c)
}

/// Generators `(G_W, G_X, G_Y, G_Z)` on phase space.
pub fn generators_at(s: PhaseState, x: &GhoLinPoint) -> [f64; 4] {
    let c = closed::gholin_generator_coefficients(&x.params());
    let lin = s.p + (x.y / x.z) * s.q;
    std::array::from_fn(|i| c.f[i] * s.q * s.p + c.g[i] * s.q * s.q + c.h[i] * lin)
}

/// Generators `(G_W, G_X, G_Y, G_Z)` at `(φ, I)`.
pub fn generators(angle: f64, action: f64, x: &GhoLinPoint) -> Result<[f64; 4]> {
    check_action(action)?;
    Ok(generators_at(map_unchecked(angle, action, x), x))
}

pub fn metric_closed(action: f64, x: &GhoLinPoint) -> Result<MetricTensor> {
    check_action(action)?;
    MetricTensor::new(square(closed::gholin_metric(&x.params(), &action)), x.point(), action)
}

pub fn hannay(action: f64, x: &GhoLinPoint) -> Result<(OneForm, TwoForm)> {
    check_action(action)?;
    let (a, f) = closed::gholin_hannay(&x.params(), &action);
    Ok((OneForm::new(a.to_vec(), x.point(), action)?, TwoForm::new(square(f), x.point(), action)?))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GhoLinear;

fn pt(x: &[f64]) -> GhoLinPoint {
    GhoLinPoint { w: x[0], x: x[1], y: x[2], z: x[3] }
}

impl ClassicalModel for GhoLinear {
    fn name(&self) -> &'static str {
        "gholin"
    }

    fn domain(&self) -> Domain {
        Domain::GhoLinear
    }

    fn index_base(&self) -> usize {
        0
    }

    fn frequency(&self, x: &[f64]) -> f64 {
        pt(x).omega()
    }

    fn hamiltonian(&self, s: PhaseState, x: &[f64]) -> f64 {
        hamiltonian(s, &pt(x))
    }

    fn hamiltonian_gradient(&self, s: PhaseState, x: &[f64]) -> (f64, f64) {
        (x[1] * s.q + x[2] * s.p + x[0], x[2] * s.q + x[3] * s.p)
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
        let p = pt(x);
        generators_at(map_unchecked(angle, action, &p), &p).to_vec()
    }

    fn generators_at(&self, s: PhaseState, x: &[f64]) -> Vec<f64> {
        generators_at(s, &pt(x)).to_vec()
    }

    fn action_from_energy(&self, energy: f64, x: &[f64]) -> f64 {
        action_from_energy(energy, &pt(x))
    }

    fn metric_closed(&self, action: f64, x: &[f64]) -> Result<MetricTensor> {
        metric_closed(action, &GhoLinPoint::from_slice(x)?)
    }

    fn hannay_closed(&self, action: f64, x: &[f64]) -> Result<(OneForm, TwoForm)> {
        hannay(action, &GhoLinPoint::from_slice(x)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::gho::{self, GhoPoint};

    fn sample() -> GhoLinPoint {
        GhoLinPoint::new(1.0, 1.0, 0.0, 1.0).unwrap()
    }

    #[test]
    fn map_reduces_to_gho_without_linear_term() {
        let x = GhoLinPoint::new(0.0, 2.0, 0.4, 1.2).unwrap();
        let y = GhoPoint::new(2.0, 0.4, 1.2).unwrap();
        for k in 0..8 {
            let a = 0.8 * k as f64;
            assert_eq!(action_angle_map(a, 1.3, &x).unwrap(), gho::action_angle_map(a, 1.3, &y).unwrap());
        }
    }

    #[test]
    fn map_at_zero_angle() {
        let s = action_angle_map(0.0, 1.0, &sample()).unwrap();
        assert!((s.q + 1.0).abs() < 1e-15);
        assert!((s.p - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn energy_is_angle_independent() {
        let x = GhoLinPoint::new(0.7, 2.0, -0.5, 1.4).unwrap();
        let w = x.omega();
        let expected = w * 0.9 - x.w() * x.w() * x.z() / (2.0 * w * w);
        for k in 0..16 {
            let s = action_angle_map(0.41 * k as f64, 0.9, &x).unwrap();
            assert!((hamiltonian(s, &x) - expected).abs() < 1e-13);
            let (_, i) = inverse_map(s, &x);
            assert!((i - 0.9).abs() < 1e-12);
        }
    }

    #[test]
    fn generators_reduce_to_gho() {
        let x = GhoLinPoint::new(0.0, 2.0, 0.4, 1.2).unwrap();
        let y = GhoPoint::new(2.0, 0.4, 1.2).unwrap();
        let w2 = y.omega().powi(2);
        for k in 0..8 {
            let a = 0.77 * k as f64;
            let g = generators(a, 1.3, &x).unwrap();
            let h = gho::generators(a, 1.3, &y).unwrap();
            for i in 0..3 {
                assert!((g[i + 1] - h[i]).abs() < 1e-14);
            }
            let s = action_angle_map(a, 1.3, &x).unwrap();
            let g0 = -(y.z() / w2) * (s.p + (y.y() / y.z()) * s.q);
            assert!((g[0] - g0).abs() < 1e-14);
        }
    }

    #[test]
    fn closed_metric_and_connection_values() {
        let g = metric_closed(1.0, &sample()).unwrap();
        assert_eq!(g.get(0, 0), 1.0);
        assert_eq!(g.get(0, 1), -1.0);
        let (a, f) = hannay(1.0, &sample()).unwrap();
        assert_eq!(a.get(2), 1.0);
        assert_eq!(a.get(0), 0.0);
        assert_eq!(f.get(0, 2), 1.0);
    }

    #[test]
    fn zero_linear_term_embeds_gho_metric() {
        let x = GhoLinPoint::new(0.0, 1.5, -0.2, 0.8).unwrap();
        let y = GhoPoint::new(1.5, -0.2, 0.8).unwrap();
        let g = metric_closed(1.7, &x).unwrap();
        let h = gho::metric_closed(1.7, &y).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((g.get(i + 1, j + 1) - h.get(i, j)).abs() < 1e-15);
            }
            assert_eq!(g.get(0, i + 1), 0.0);
        }
        let w = y.omega();
        assert!((g.get(0, 0) - 1.7 * 0.8 / w.powi(3)).abs() < 1e-14);
        let (a, f) = hannay(1.7, &x).unwrap();
        let (b, e) = gho::hannay(1.7, &y).unwrap();
        for i in 0..3 {
            assert!((a.get(i + 1) - b.get(i)).abs() < 1e-15);
            for j in 0..3 {
                assert!((f.get(i + 1, j + 1) - e.get(i, j)).abs() < 1e-15);
            }
        }
    }
}

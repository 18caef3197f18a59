//! Action of a bound orbit of `H = p²/2m + V(q)` by quadrature.

use std::f64::consts::{FRAC_PI_2, PI};
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;

use crate::error::{Error, Result};

/// Gauss–Legendre nodes per half-interval.
pub const QUADRATURE_NODES: usize = 64;
/// Relative tolerance of the turning-point bisection.
pub const TURNING_TOL: f64 = 1e-12;

/// Confining one-dimensional mechanical Hamiltonian.
pub struct MechanicalHamiltonian<'a> {
    pub mass: f64,
    pub potential: &'a dyn Fn(f64) -> f64,
    /// Location of the potential minimum.
    pub minimum: f64,
}

impl MechanicalHamiltonian<'_> {
    /// Turning point on the side `dir = ±1` of the minimum.
    fn turning_point(&self, energy: f64, dir: f64) -> Result<f64> {
        let v = self.potential;
        let mut step = 1.0;
        let mut outer = self.minimum + dir * step;
        let mut tries = 0;
        while v(outer) < energy {
            step *= 2.0;
            outer = self.minimum + dir * step;
            tries += 1;
            if tries > 60 || !outer.is_finite() {
                return Err(Error::NoTurningPoints(energy));
            }
        }
        let (mut lo, mut hi) = (self.minimum, outer);
        while (hi - lo).abs() > TURNING_TOL * hi.abs().max(lo.abs()).max(1e-300) {
            let mid = 0.5 * (lo + hi);
            if v(mid) < energy {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    fn momentum(&self, q: f64, energy: f64) -> f64 {
        (2.0 * self.mass * (energy - (self.potential)(q))).max(0.0).sqrt()
    }
}

/// `I(E) = (1/π) ∫ p(q; E) dq` between the turning points.
///
/// Each half-interval `[q_min, q_turn]` is mapped by `q = q_min + (q_turn - q_min) sin θ`,
/// which removes the square-root behaviour at the turning point.
pub fn numeric_action_of_energy(h: &MechanicalHamiltonian, energy: f64) -> Result<f64> {
    if !(h.mass.is_finite() && h.mass > 0.0) {
        return Err(Error::Domain(format!("mass {} must be positive", h.mass)));
    }
    if !energy.is_finite() {
        return Err(Error::NoTurningPoints(energy));
    }
    if energy <= (h.potential)(h.minimum) {
        return Ok(0.0);
    }
    let quad = GaussLegendre::new(NonZeroUsize::new(QUADRATURE_NODES).expect("nonzero"));
    let mut total = 0.0;
    for dir in [-1.0, 1.0] {
        let turn = h.turning_point(energy, dir)?;
        let span = turn - h.minimum;
        total += quad.integrate(0.0, FRAC_PI_2, |t| {
            h.momentum(h.minimum + span * t.sin(), energy) * span * t.cos()
        })
        .abs();
    }
    Ok(total / PI)
}

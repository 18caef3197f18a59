//! Canonical perturbation theory for `H = p²/2m + kq²/2 + λq⁴/24` to third order.
//!
//! Conventions: `ω₀ = (k/m)^{1/2}` is eliminated in favour of `m^{-1/2} k^{1/2}`;
//! the reduced variables `q̃ = q/√2 = I₀^{1/2}(mk)^{-1/4} sin φ₀` and
//! `p̃ = p/√2 = I₀^{1/2}(mk)^{1/4} cos φ₀` keep every coefficient rational, with
//! `p ∂q = 2 p̃ ∂q̃`.

use std::sync::OnceLock;

use nalgebra::DMatrix;

use crate::error::Result;
use crate::geometry::{Domain, MetricTensor, ParameterPoint};
use crate::scalar::rational;
use crate::series::perturbation::PerturbationSeries;
use crate::series::poly::{CoefficientPoly, Monomial, Param};
use crate::series::trig::{sin_power, TrigSeries};

/// Order of the generating function `W`.
pub const ORDER: usize = 3;
/// Order kept in the generators and the metric.
pub const METRIC_ORDER: usize = 2;

/// Upper-triangle component order of the 3×3 metric `(m, k, λ)`.
pub const COMPONENTS: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

#[derive(Debug, Clone, PartialEq)]
pub struct QuarticSeries {
    /// `Σ_μ λ^μ W_μ(φ₀, I)`, without the `φ₀ I` term.
    pub w: PerturbationSeries,
    /// `⟨Φ_μ⟩`, so that `E(I) = Σ λ^μ energy[μ]`.
    pub energy: Vec<CoefficientPoly>,
    /// `I₀(φ₀, I)`.
    pub action0: PerturbationSeries,
    /// `φ - φ₀ = Σ λ^μ ∂W_μ/∂I`.
    pub angle_shift: PerturbationSeries,
    /// `∂φ/∂φ₀`.
    pub jacobian: PerturbationSeries,
    /// `q̃(φ₀, I)` and `p̃(φ₀, I)`.
    pub q_reduced: PerturbationSeries,
    pub p_reduced: PerturbationSeries,
    /// `G_m, G_k, G_λ` as functions of `(φ₀, I)`, to `λ²`.
    pub generators: [PerturbationSeries; 3],
    /// Metric components in [`COMPONENTS`] order, to `λ²`.
    pub metric: [PerturbationSeries; 6],
}

impl QuarticSeries {
    /// Component `g_ij` (0-based indices).
    pub fn metric_component(&self, i: usize, j: usize) -> &PerturbationSeries {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        let n = COMPONENTS.iter().position(|&c| c == (a, b)).expect("indices below 3");
        &self.metric[n]
    }

    /// `W_μ` for `μ = 1..=3`.
    pub fn w_term(&self, mu: usize) -> &TrigSeries {
        self.w.term(mu)
    }

    /// Truncated metric series evaluated at `(I; m, k, λ)`.
    pub fn metric_at(&self, action: f64, m: f64, k: f64, lambda: f64) -> Result<MetricTensor> {
        let point = ParameterPoint::for_domain(Domain::Quartic, &[m, k, lambda])?;
        let g = DMatrix::from_fn(3, 3, |i, j| self.metric_component(i, j).eval(lambda, 0.0, action, m, k));
        MetricTensor::new(g, point, action)
    }

    /// Energy `E(I)` at the given point.
    pub fn energy_at(&self, action: f64, m: f64, k: f64, lambda: f64) -> f64 {
        self.energy.iter().rev().fold(0.0, |acc, c| acc * lambda + c.eval(action, m, k))
    }

    /// Metric built from the truncated generators and Jacobian without the final
    /// truncation, i.e. exactly what sampling those series on a grid computes.
    pub fn metric_untruncated(&self, i: usize, j: usize) -> Result<PerturbationSeries> {
        let jac = self.jacobian.truncate(METRIC_ORDER)?;
        let gi = &self.generators[i];
        let gj = &self.generators[j];
        let second = gi.product_untruncated(gj).product_untruncated(&jac).average_series();
        let mi = gi.product_untruncated(&jac).average_series();
        let mj = gj.product_untruncated(&jac).average_series();
        let prod = mi.product_untruncated(&mj);
        let order = second.order().max(prod.order());
        Ok(&second.padded(order) - &prod.padded(order))
    }
}

/// `λ H₁ = λ q⁴/24 = λ I₀² sin⁴φ₀ / (6mk)`: the coefficient of `I₀²`.
fn perturbation() -> TrigSeries {
    sin_power(4).times_poly(&CoefficientPoly::term(rational(1, 6), Monomial::halves(0, -2, -2)))
}

fn action_monomial() -> CoefficientPoly {
    CoefficientPoly::term(rational(1, 1), Monomial::halves(2, 0, 0))
}

/// Solves the homological equations for `W₁ … W_order`.
pub fn generating_function(order: usize) -> Result<(PerturbationSeries, Vec<CoefficientPoly>)> {
    let omega = Monomial::omega0();
    let h1 = perturbation();
    let mut w = PerturbationSeries::zero(order);
    let mut energy = vec![CoefficientPoly::term(rational(1, 1), Monomial::halves(2, -1, 1))];
    for mu in 1..=order {
        // Φ_μ is the λ^{μ-1} part of H₁(I + Σ_{ν<μ} λ^ν ∂W_ν/∂φ₀).
        let known = w.truncate(mu - 1)?;
        let i0 = &PerturbationSeries::constant(mu - 1, TrigSeries::constant(action_monomial()))
            + &known.angle_derivative();
        let sq = i0.product(&i0)?;
        let phi = &h1 * sq.term(mu - 1);
        energy.push(phi.average());
        let wmu = phi.solve_homological(omega)?;
        let mut terms = w.terms().to_vec();
        terms[mu] = wmu;
        w = PerturbationSeries::from_terms(terms)?;
    }
    Ok((w, energy))
}

fn compute() -> Result<QuarticSeries> {
    let n = ORDER;
    let (w, energy) = generating_function(n)?;
    let action = PerturbationSeries::constant(n, TrigSeries::constant(action_monomial()));
    let dw = w.angle_derivative();
    let action0 = &action + &dw;
    let u = dw.times_monomial(Monomial::halves(-2, 0, 0));
    let sqrt_i0 = PerturbationSeries::action_power(&u, &rational(1, 2))?;
    let sin = TrigSeries::sin(1);
    let cos = TrigSeries::cos(1);
    let q_reduced = sqrt_i0.map(|t| t * &sin).times_monomial(Monomial::quarters(0, -1, -1));
    let p_reduced = sqrt_i0.map(|t| t * &cos).times_monomial(Monomial::quarters(0, 1, 1));
    let angle_shift = w.param_derivative(Param::Action);
    let jacobian = &PerturbationSeries::one(n) + &angle_shift.angle_derivative();
    let jinv = jacobian.reciprocal()?;

    // Periodic part of S(φ₀, I) = I₀ sin φ₀ cos φ₀ + φ₀ I + Σ λ^μ W_μ.
    let half_sin2 = TrigSeries::sin(2).scale(&rational(1, 2));
    let s_periodic = &action0.map(|t| t * &half_sin2) + &w;

    let generator = |p: Param| -> Result<PerturbationSeries> {
        let dq = q_reduced.chain_derivative(p, &angle_shift)?;
        let ds = s_periodic.chain_derivative(p, &angle_shift)?;
        let dshift = angle_shift.param_derivative(p);
        let ord = dq.order().min(ds.order()).min(dshift.order());
        // The φ₀ I term has no explicit parameter dependence; only its chain correction survives.
        let ds_linear = jinv.product_to(&dshift, ord).map(|t| t.times_poly(&action_monomial()));
        let ds_total = &ds - &ds_linear;
        let g = &p_reduced.product_to(&dq, ord).scale(&rational(2, 1)) - &ds_total;
        g.truncate(METRIC_ORDER)
    };
    let generators = [generator(Param::Mass)?, generator(Param::Stiffness)?, generator(Param::Coupling)?];

    let jac = jacobian.truncate(METRIC_ORDER)?;
    let means: Vec<PerturbationSeries> =
        generators.iter().map(|g| g.product(&jac).map(|x| x.average_series())).collect::<Result<_>>()?;
    let component = |i: usize, j: usize| -> Result<PerturbationSeries> {
        let second = generators[i].product(&generators[j])?.product(&jac)?.average_series();
        Ok(&second - &means[i].product(&means[j])?)
    };
    let metric = [
        component(0, 0)?,
        component(0, 1)?,
        component(0, 2)?,
        component(1, 1)?,
        component(1, 2)?,
        component(2, 2)?,
    ];

    Ok(QuarticSeries { w, energy, action0, angle_shift, jacobian, q_reduced, p_reduced, generators, metric })
}

/// The third-order pipeline, computed once per process.
pub fn quartic_pipeline() -> Result<&'static QuarticSeries> {
    static CACHE: OnceLock<Result<QuarticSeries>> = OnceLock::new();
    CACHE.get_or_init(compute).as_ref().map_err(Clone::clone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::trig::Trig;

    #[test]
    fn first_order_energy_and_generating_function() {
        let (w, e) = generating_function(1).unwrap();
        // ⟨Φ₁⟩ = I²/(16 mk)
        assert_eq!(e[1], CoefficientPoly::term(rational(1, 16), Monomial::halves(4, -2, -2)));
        // W₁ = I²/(192 m² ω₀³)(8 sin2φ₀ - sin4φ₀), m²ω₀³ = m^{1/2} k^{3/2}
        let mono = Monomial::halves(4, -1, -3);
        assert_eq!(w.term(1).coefficient(2, Trig::Sin), CoefficientPoly::term(rational(8, 192), mono));
        assert_eq!(w.term(1).coefficient(4, Trig::Sin), CoefficientPoly::term(rational(-1, 192), mono));
        assert!(w.term(1).average().is_zero());
    }

    #[test]
    fn lowest_order_generators() {
        let s = quartic_pipeline().unwrap();
        let g1 = s.generators[0].term(0);
        assert_eq!(g1.coefficient(2, Trig::Sin), CoefficientPoly::term(rational(-1, 4), Monomial::halves(2, -2, 0)));
        let g2 = s.generators[1].term(0);
        assert_eq!(g2.coefficient(2, Trig::Sin), CoefficientPoly::term(rational(-1, 4), Monomial::halves(2, 0, -2)));
    }

    #[test]
    fn hamiltonian_is_angle_independent_through_third_order() {
        let s = quartic_pipeline().unwrap();
        // H = p̃²/m + k q̃² + λ q̃⁴/6
        let p2 = s.p_reduced.product(&s.p_reduced).unwrap().times_monomial(Monomial::halves(0, -2, 0));
        let q2 = s.q_reduced.product(&s.q_reduced).unwrap();
        let kq2 = q2.times_monomial(Monomial::halves(0, 0, 2));
        let q4 = q2.product(&q2).unwrap().scale(&rational(1, 6)).shift_up(1);
        let h = &(&p2 + &kq2) + &q4;
        for n in 0..=ORDER {
            assert!(h.term(n).oscillating().is_zero(), "order {n}: {}", h.term(n));
            assert_eq!(h.term(n).average(), s.energy[n]);
        }
    }
}

//! Perturbative ground state of the quantum quartic oscillator
//! `Ĥ = p̂²/2m + kq̂²/2 + λq̂⁴/24`.

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::geometry::{Domain, MetricTensor, ParameterPoint};
use crate::quantum::overlap::QuarticSampler;
use crate::scalar::rational;
use crate::series::perturbation::PerturbationSeries;
use crate::series::poly::{CoefficientPoly, Monomial};
use crate::series::quartic::{quartic_pipeline, COMPONENTS, METRIC_ORDER};
use crate::series::trig::TrigSeries;

/// Dimensionless coupling above which the truncated expansion is not trusted.
pub const PERTURBATIVE_LIMIT: f64 = 0.1;

/// Validated `(m, k, λ)` with `m, k > 0` and `λ ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticPoint {
    m: f64,
    k: f64,
    lambda: f64,
}

impl QuarticPoint {
    pub fn new(m: f64, k: f64, lambda: f64) -> Result<Self> {
        Domain::Quartic.check(&[m, k, lambda])?;
        Ok(Self { m, k, lambda })
    }

    pub fn from_slice(v: &[f64]) -> Result<Self> {
        Domain::Quartic.check(v)?;
        Ok(Self { m: v[0], k: v[1], lambda: v[2] })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `ω₀ = (k/m)^{1/2}`.
    pub fn omega0(&self) -> f64 {
        (self.k / self.m).sqrt()
    }

    pub fn values(&self) -> [f64; 3] {
        [self.m, self.k, self.lambda]
    }

    pub fn point(&self) -> ParameterPoint {
        ParameterPoint::for_domain(Domain::Quartic, &self.values()).expect("validated at construction")
    }

    /// `Λ = ħλ / (12 m² ω₀³)`.
    pub fn dimensionless_coupling(&self, hbar: f64) -> f64 {
        hbar * self.lambda / (12.0 * self.m * self.m * self.omega0().powi(3))
    }
}

/// `E₀ = ħω₀/2 + ħ²λ/32m²ω₀² - 7ħ³λ²/1536m⁴ω₀⁵ + 37ħ⁴λ³/24576m⁶ω₀⁸`.
pub fn ground_energy(x: &QuarticPoint, hbar: f64) -> f64 {
    let (m, l, w) = (x.m, x.lambda, x.omega0());
    hbar * w / 2.0 + hbar.powi(2) * l / (32.0 * m * m * w * w)
        - 7.0 * hbar.powi(3) * l * l / (1536.0 * m.powi(4) * w.powi(5))
        + 37.0 * hbar.powi(4) * l.powi(3) / (24576.0 * m.powi(6) * w.powi(8))
}

/// `ε = 1 + 3Λ/4 - 21Λ²/16 + 333Λ³/64`, with `E = ħω₀ε/2`.
pub fn dimensionless_energy(coupling: f64) -> f64 {
    let l = coupling;
    1.0 + 0.75 * l - 21.0 / 16.0 * l * l + 333.0 / 64.0 * l.powi(3)
}

/// Unnormalized ground state of `-ψ'' + Q²ψ + ΛQ⁴ψ = εψ` to third order in `Λ`.
pub fn dimensionless_wavefunction(q: f64, coupling: f64) -> f64 {
    let (l, q2) = (coupling, q * q);
    let p1 = q2 * (q2 + 3.0) / 8.0;
    let p2 = q2 * (((3.0 * q2 + 26.0) * q2 + 93.0) * q2 + 252.0) / 384.0;
    let p3 = q2 * (((((q2 + 17.0) * q2 + 141.0) * q2 + 813.0) * q2 + 2916.0) * q2 + 7992.0) / 3072.0;
    (-q2 / 2.0).exp() * (1.0 - l * p1 + l * l * p2 - l.powi(3) * p3)
}

/// Ground state `ψ₀(q)` in physical units with the `P₁, P₂, P₃` corrections.
/// Normalized only through `O(λ)`; the numeric overlap oracle renormalizes.
pub fn ground_wavefunction(q: f64, m: f64, k: f64, lambda: f64, hbar: f64) -> f64 {
    let w = (k / m).sqrt();
    let a = m * w;
    let (h, q2) = (hbar, q * q);
    let pi = std::f64::consts::PI;
    let root = |pm: f64, pw: f64, ph: f64| (pi.powf(-0.25)) * m.powf(-pm / 4.0) * w.powf(-pw / 4.0) * h.powf(-ph / 4.0);
    let p1 = 4.0 * a * a * q2 * q2 + 12.0 * h * a * q2 - 9.0 * h * h;
    let p2 = 48.0 * a.powi(4) * q2.powi(4) + 416.0 * h * a.powi(3) * q2.powi(3) + 1272.0 * h * h * a * a * q2 * q2
        + 3384.0 * h.powi(3) * a * q2
        - 4677.0 * h.powi(4);
    let p3 = 64.0 * a.powi(6) * q2.powi(6)
        + 1088.0 * h * a.powi(5) * q2.powi(5)
        + 8592.0 * h * h * a.powi(4) * q2.powi(4)
        + 48288.0 * h.powi(3) * a.powi(3) * q2.powi(3)
        + 154524.0 * h.powi(4) * a * a * q2 * q2
        + 419076.0 * h.powi(5) * a * q2
        - 729153.0 * h.powi(6);
    let lead = (a / (pi * h)).powf(0.25);
    let bracket = lead - lambda * p1 / 384.0 * root(7.0, 11.0, 5.0)
        + lambda * lambda * p2 / 884736.0 * root(15.0, 23.0, 9.0)
        - lambda.powi(3) * p3 / 339738624.0 * root(23.0, 35.0, 13.0);
    (-a * q2 / (2.0 * h)).exp() * bracket
}

#[derive(Debug, Clone)]
pub struct QuarticGroundState {
    pub sampler: QuarticSampler,
    pub energy: f64,
    /// `Λ = ħλ / 12m²ω₀³`.
    pub coupling: f64,
    /// Set when `Λ` exceeds [`PERTURBATIVE_LIMIT`].
    pub warning: Option<String>,
}

pub fn quartic_ground_state(x: &QuarticPoint, hbar: f64) -> Result<QuarticGroundState> {
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::Domain(format!("hbar = {hbar} must be positive")));
    }
    let coupling = x.dimensionless_coupling(hbar);
    let warning = (coupling > PERTURBATIVE_LIMIT)
        .then(|| format!("perturbative regime exceeded: Λ = {coupling:.4} > {PERTURBATIVE_LIMIT}"));
    Ok(QuarticGroundState { sampler: QuarticSampler, energy: ground_energy(x, hbar), coupling, warning })
}

/// Ground-state quantum metric components in `(11, 12, 13, 22, 23, 33)` order,
/// to `λ²`. The action slot of each monomial carries the power of `ħ`.
pub fn quartic_quantum_series() -> [PerturbationSeries; 6] {
    let h = Monomial::halves;
    let row = |t: [(i64, i64, Monomial); 3]| {
        let terms = t
            .iter()
            .map(|&(n, d, mono)| TrigSeries::constant(CoefficientPoly::term(rational(n, d), mono)))
            .collect();
        PerturbationSeries::from_terms(terms).expect("three orders")
    };
    [
        row([(1, 32, h(0, -4, 0)), (-3, 512, h(2, -5, -3)), (59, 16384, h(4, -6, -6))]),
        row([(1, 32, h(0, -2, -2)), (-7, 512, h(2, -3, -5)), (143, 16384, h(4, -4, -8))]),
        row([(1, 128, h(2, -3, -3)), (-21, 4096, h(4, -4, -6)), (2353, 589824, h(6, -5, -9))]),
        row([(1, 32, h(0, 0, -4)), (-11, 512, h(2, -1, -7)), (785, 49152, h(4, -2, -10))]),
        row([(1, 128, h(2, -1, -5)), (-89, 12288, h(4, -2, -8)), (3841, 589824, h(6, -3, -11))]),
        row([(13, 6144, h(4, -2, -6)), (-31, 12288, h(6, -3, -9)), (57227, 21233664, h(8, -4, -12))]),
    ]
}

/// Quantum metric of the ground state, truncated at `λ²`.
pub fn quartic_quantum_metric_closed(x: &QuarticPoint, hbar: f64) -> Result<MetricTensor> {
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::Domain(format!("hbar = {hbar} must be positive")));
    }
    let series = quartic_quantum_series();
    let mut g = nalgebra::DMatrix::zeros(3, 3);
    for (s, &(i, j)) in series.iter().zip(COMPONENTS.iter()) {
        g[(i, j)] = s.eval(x.lambda, 0.0, hbar, x.m, x.k);
    }
    MetricTensor::new(g, x.point(), 0.5 * hbar)
}

/// Matching `g⁽⁰⁾ = g/ħ²` term by term: the term `c I^p` of the classical metric
/// and `c' ħ^{p-2}` of the quantum metric give `I^p = (c'/c) ħ^p`.
#[derive(Debug, Clone, PartialEq)]
pub struct Identification {
    /// 0-based component indices.
    pub component: (usize, usize),
    pub order: usize,
    pub power: i32,
    pub ratio: BigRational,
}

impl Identification {
    pub fn ratio_f64(&self) -> f64 {
        self.ratio.to_f64().unwrap_or(f64::NAN)
    }
}

fn single_term(p: &CoefficientPoly) -> Result<(Monomial, BigRational)> {
    let mut it = p.terms();
    match (it.next(), it.next()) {
        (Some((m, c)), None) => Ok((*m, c.clone())),
        _ => Err(Error::Series(format!("expected a single monomial, got {p}"))),
    }
}

/// One entry per component and order (18 in total).
pub fn identification_table() -> Result<Vec<Identification>> {
    let classical = &quartic_pipeline()?.metric;
    let quantum = quartic_quantum_series();
    let mut out = Vec::new();
    for (n, &component) in COMPONENTS.iter().enumerate() {
        for order in 0..=METRIC_ORDER {
            let (mc, cc) = single_term(&classical[n].term(order).average())?;
            let (mq, cq) = single_term(&quantum[n].term(order).average())?;
            if mc.m != mq.m || mc.k != mq.k || mq.i != mc.i - 8 || mc.i % 4 != 0 {
                return Err(Error::Series(format!(
                    "component {component:?} order {order}: parameter dependence differs ({mc} vs {mq})"
                )));
            }
            out.push(Identification { component, order, power: mc.i / 4, ratio: cq / cc });
        }
    }
    Ok(out)
}

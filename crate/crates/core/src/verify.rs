//! Verification suites behind `adiageo verify`.
//!
//! Each suite returns one [`Check`] per claim, with the measured error and the
//! bound it is held to. Random points come from fixed seeds, so reports are
//! reproducible.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed::{self, GhoLinParams, GhoParams};
use crate::error::Result;
use crate::geometry::{matrix_rank, restrict_metric, DEFAULT_GRID, RANK_REL_TOL};
use crate::models::{ClassicalModel, Gho, GhoLinear};
use crate::oracle::{
    adiabatic_action_drift, frozen_errors, gauge_invariance_experiment, generator_displacement_check,
    numeric_action_of_energy, numeric_metric, quartic_numeric_metric, GaugeShift, MechanicalHamiltonian,
    RampSchedule,
};
use crate::quantum::quartic::{dimensionless_energy, ground_energy};
use crate::quantum::{
    identification_table, quantum_metric_numeric, quartic_quantum_metric_closed, QuarticPoint, QuarticSampler,
};
use crate::scalar::rational;
use crate::series::dump::{dump, to_json, DumpTarget};
use crate::series::{quartic_pipeline, reference};

/// How a measured value is compared with its tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// `measured ≤ tolerance`.
    AtMost,
    /// `measured < tolerance`.
    Below,
    /// `measured > tolerance`.
    Above,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub bound: Bound,
    /// Error raised while computing the check, if any.
    pub error: Option<String>,
}

impl Check {
    fn new(suite: Suite, name: impl Into<String>, measured: f64, tolerance: f64, bound: Bound) -> Self {
        Self { suite: suite.name(), name: name.into(), measured, tolerance, bound, error: None }
    }

    fn from_result(suite: Suite, name: impl Into<String>, r: Result<f64>, tolerance: f64, bound: Bound) -> Self {
        match r {
            Ok(v) => Self::new(suite, name, v, tolerance, bound),
            Err(e) => Self { error: Some(e.to_string()), ..Self::new(suite, name, f64::NAN, tolerance, bound) },
        }
    }

    pub fn passed(&self) -> bool {
        self.error.is_none()
            && match self.bound {
                Bound::AtMost => self.measured <= self.tolerance,
                Bound::Below => self.measured < self.tolerance,
                Bound::Above => self.measured > self.tolerance,
            }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let op = match self.bound {
            Bound::AtMost => "<=",
            Bound::Below => "<",
            Bound::Above => ">",
        };
        write!(f, "{status} {}/{}: {:.3e} {op} {:.1e}", self.suite, self.name, self.measured, self.tolerance)?;
        if let Some(e) = &self.error {
            write!(f, " ({e})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Gauge,
    Generators,
    GammaBeta,
    RankDet,
    QuarticSeries,
    QuarticQuantum,
    Adiabatic,
    OracleMetric,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Gauge,
        Suite::Generators,
        Suite::GammaBeta,
        Suite::RankDet,
        Suite::QuarticSeries,
        Suite::QuarticQuantum,
        Suite::Adiabatic,
        Suite::OracleMetric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gauge => "gauge",
            Suite::Generators => "generators",
            Suite::GammaBeta => "gamma-beta",
            Suite::RankDet => "rank-det",
            Suite::QuarticSeries => "quartic-series",
            Suite::QuarticQuantum => "quartic-quantum",
            Suite::Adiabatic => "adiabatic",
            Suite::OracleMetric => "oracle-metric",
        }
    }

    pub fn run(self) -> Vec<Check> {
        match self {
            Suite::Gauge => gauge(),
            Suite::Generators => generators(),
            Suite::GammaBeta => gamma_beta(),
            Suite::RankDet => rank_det(),
            Suite::QuarticSeries => quartic_series(),
            Suite::QuarticQuantum => quartic_quantum(),
            Suite::Adiabatic => adiabatic(),
            Suite::OracleMetric => oracle_metric(),
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|v| v.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|v| v.name()).collect();
            format!("unknown suite `{s}` (expected {} or all)", names.join(", "))
        })
    }
}

/// `all` or a single suite name.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>, String> {
    if s == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![s.parse()?])
    }
}

/// Seeded generators of valid parameter points.
pub mod points {
    use super::*;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// `(X, Y, Z)` with `ω ∈ [0.7, 1.5]`, `Y ∈ [-1, 1]`, `Z ∈ [0.5, 2]`.
    pub fn gho(r: &mut ChaCha8Rng) -> [f64; 3] {
        let omega: f64 = r.random_range(0.7..1.5);
        let y: f64 = r.random_range(-1.0..1.0);
        let z: f64 = r.random_range(0.5..2.0);
        [(omega * omega + y * y) / z, y, z]
    }

    /// `(W, X, Y, Z)` with `W ∈ [-1, 1]` and `(X, Y, Z)` as in [`gho`].
    pub fn gholin(r: &mut ChaCha8Rng) -> [f64; 4] {
        let w: f64 = r.random_range(-1.0..1.0);
        let [x, y, z] = gho(r);
        [w, x, y, z]
    }

    fn small_rational(r: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> BigRational {
        rational(r.random_range(lo..=hi), den)
    }

    /// Exact GHO point with rational `ω`: `X = (ω² + Y²)/Z`.
    pub fn gho_exact(r: &mut ChaCha8Rng) -> GhoParams<BigRational> {
        let omega = small_rational(r, 3, 17, 8);
        let y = small_rational(r, -9, 9, 7);
        let z = small_rational(r, 2, 19, 6);
        let x = (&omega * &omega + &y * &y) / &z;
        GhoParams { x, y, z, omega }
    }

    pub fn gholin_exact(r: &mut ChaCha8Rng) -> GhoLinParams<BigRational> {
        let w = small_rational(r, -9, 9, 5);
        let p = gho_exact(r);
        GhoLinParams { w, x: p.x, y: p.y, z: p.z, omega: p.omega }
    }

    pub fn action(r: &mut ChaCha8Rng) -> f64 {
        r.random_range(0.5..2.0)
    }

    pub fn action_exact(r: &mut ChaCha8Rng) -> BigRational {
        small_rational(r, 1, 40, 9)
    }

    pub fn hbar_exact(r: &mut ChaCha8Rng) -> BigRational {
        small_rational(r, 1, 20, 7)
    }
}

fn worst(values: impl IntoIterator<Item = Result<f64>>) -> Result<f64> {
    values.into_iter().try_fold(0.0f64, |acc, v| Ok(acc.max(v?)))
}

fn gauge() -> Vec<Check> {
    let s = Suite::Gauge;
    let mut r = points::rng(11);
    let mut out = Vec::new();
    let models: [(&dyn ClassicalModel, usize); 2] = [(&Gho, 3), (&GhoLinear, 4)];
    for (model, n) in models {
        let mut metric_dev = 0.0f64;
        let mut min_raw = f64::INFINITY;
        for _ in 0..20 {
            let x: Vec<f64> = if n == 3 { points::gho(&mut r).to_vec() } else { points::gholin(&mut r).to_vec() };
            let action = points::action(&mut r);
            let c1 = r.random_range(-2.0..2.0);
            let c2 = r.random_range(0.5..2.0) * if r.random_bool(0.5) { 1.0 } else { -1.0 };
            let shift = GaugeShift::new(c1, c2, r.random_range(0..n)).expect("finite");
            match gauge_invariance_experiment(model, &shift, action, &x, DEFAULT_GRID) {
                Ok((dg, raw)) => {
                    metric_dev = metric_dev.max(dg);
                    min_raw = min_raw.min(raw);
                }
                Err(e) => {
                    out.push(Check::from_result(s, format!("{} experiment", model.name()), Err(e), 0.0, Bound::AtMost));
                }
            }
        }
        out.push(Check::new(s, format!("{} metric invariance", model.name()), metric_dev, 1e-10, Bound::Below));
        out.push(Check::new(s, format!("{} raw moment shift (min)", model.name()), min_raw, 1e-3, Bound::Above));
    }
    out
}

fn generators() -> Vec<Check> {
    let s = Suite::Generators;
    let mut r = points::rng(12);
    let gho = worst((0..100).map(|_| {
        let x = points::gho(&mut r);
        let (angle, action) = (r.random_range(0.0..std::f64::consts::TAU), points::action(&mut r));
        generator_displacement_check(&Gho, angle, action, &x)
    }));
    let lin = worst((0..100).map(|_| {
        let x = points::gholin(&mut r);
        let (angle, action) = (r.random_range(0.0..std::f64::consts::TAU), points::action(&mut r));
        generator_displacement_check(&GhoLinear, angle, action, &x)
    }));
    vec![
        Check::from_result(s, "gho displacement", gho, 1e-6, Bound::Below),
        Check::from_result(s, "gholin displacement", lin, 1e-6, Bound::Below),
    ]
}

fn diff<const N: usize>(a: &[[BigRational; N]; N], b: &[[BigRational; N]; N]) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(u, v)| (u - v).abs().to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}

fn diff_vec(a: &[BigRational], b: &[BigRational]) -> f64 {
    a.iter().zip(b).map(|(u, v)| (u - v).abs().to_f64().unwrap_or(f64::INFINITY)).fold(0.0, f64::max)
}

fn scale<const N: usize>(s: &BigRational, m: [[BigRational; N]; N]) -> [[BigRational; N]; N] {
    m.map(|row| row.map(|v| s * v))
}

fn sub<const N: usize>(a: [[BigRational; N]; N], b: [[BigRational; N]; N]) -> [[BigRational; N]; N] {
    let mut out = a;
    for (ro, rb) in out.iter_mut().zip(b) {
        for (o, v) in ro.iter_mut().zip(rb) {
            *o = &*o - v;
        }
    }
    out
}

/// `γ`, `β` and `∂ₙg⁽ⁿ⁾ = ħ⁻¹ ∂_I g` in exact arithmetic, plus the operator form.
fn gamma_beta() -> Vec<Check> {
    let s = Suite::GammaBeta;
    let mut r = points::rng(13);
    let half = rational(1, 2);
    let two = rational(2, 1);
    let one = rational(1, 1);
    let (mut gamma, mut beta_gho, mut deriv_gho) = (0.0f64, 0.0f64, 0.0f64);
    let (mut beta_lin, mut deriv_lin, mut w_free) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..20 {
        let p = points::gho_exact(&mut r);
        let pl = points::gholin_exact(&mut r);
        let action = points::action_exact(&mut r);
        let hbar = points::hbar_exact(&mut r);
        for n in 0..=5i64 {
            let nr = rational(n, 1);
            // Arbitrary action.
            let g = closed::gho_metric(&p, &action);
            let gq = closed::gho_quantum_metric(&p, &nr);
            let gam = (&nr * &nr + &nr + &one) / (&action * &action);
            gamma = gamma.max(diff(&gq, &scale(&gam, g)));
            let beta = (&nr + &half) / &action;
            let (a, f) = closed::gho_hannay(&p, &action);
            let (aq, fq) = closed::gho_berry(&p, &nr);
            let a_scaled: Vec<_> = a.iter().map(|v| &beta * v).collect();
            beta_gho = beta_gho.max(diff_vec(&aq, &a_scaled)).max(diff(&fq, &scale(&beta, f)));

            // Bohr–Sommerfeld action.
            let bs = (&nr + &half) * &hbar;
            let inv_h = &one / &hbar;
            let dn = scale(
                &(&one / &two),
                sub(closed::gho_quantum_metric(&p, &(&nr + &one)), closed::gho_quantum_metric(&p, &(&nr - &one))),
            );
            let di = scale(
                &(&inv_h / (&two * &hbar)),
                sub(closed::gho_metric(&p, &(&bs + &hbar)), closed::gho_metric(&p, &(&bs - &hbar))),
            );
            deriv_gho = deriv_gho.max(diff(&dn, &di));

            let dn = scale(
                &(&one / &two),
                sub(
                    closed::gholin_quantum_metric(&pl, &(&nr + &one), &hbar),
                    closed::gholin_quantum_metric(&pl, &(&nr - &one), &hbar),
                ),
            );
            let di = scale(
                &(&inv_h / (&two * &hbar)),
                sub(closed::gholin_metric(&pl, &(&bs + &hbar)), closed::gholin_metric(&pl, &(&bs - &hbar))),
            );
            deriv_lin = deriv_lin.max(diff(&dn, &di));

            let (a, f) = closed::gholin_hannay(&pl, &bs);
            let (aq, fq) = closed::gholin_berry(&pl, &nr, &hbar);
            let a_scaled: Vec<_> = a.iter().map(|v| &inv_h * v).collect();
            beta_lin = beta_lin.max(diff_vec(&aq, &a_scaled)).max(diff(&fq, &scale(&inv_h, f)));

            // At W = 0 the (X, Y, Z) block obeys γ exactly.
            let p0 = GhoLinParams { w: BigRational::zero(), ..pl.clone() };
            let g = closed::gholin_metric(&p0, &action);
            let gq = closed::gholin_quantum_metric(&p0, &nr, &hbar);
            let gam = (&nr * &nr + &nr + &one) / (&action * &action);
            for i in 1..4 {
                for j in 1..4 {
                    let d = (&gq[i][j] - &gam * &g[i][j]).abs().to_f64().unwrap_or(f64::INFINITY);
                    w_free = w_free.max(d);
                }
            }
        }
    }
    let mut operator = 0.0f64;
    for _ in 0..100 {
        let pl = points::gholin_exact(&mut r);
        let n = rational(r.random_range(0..=5), 1);
        let hbar = points::hbar_exact(&mut r);
        let (g, a) = closed::operator_metric_and_connection(&pl, &n, &hbar);
        let (ab, _) = closed::gholin_berry(&pl, &n, &hbar);
        operator = operator.max(diff(&g, &closed::gholin_quantum_metric(&pl, &n, &hbar))).max(diff_vec(&a, &ab));
    }
    vec![
        Check::new(s, "gho metric gamma", gamma, 0.0, Bound::AtMost),
        Check::new(s, "gho connection/curvature beta", beta_gho, 0.0, Bound::AtMost),
        Check::new(s, "gho dn g = dI g / hbar", deriv_gho, 0.0, Bound::AtMost),
        Check::new(s, "gholin connection/curvature beta", beta_lin, 0.0, Bound::AtMost),
        Check::new(s, "gholin dn g = dI g / hbar", deriv_lin, 0.0, Bound::AtMost),
        Check::new(s, "gholin W=0 block gamma", w_free, 0.0, Bound::AtMost),
        Check::new(s, "gholin operator form", operator, 0.0, Bound::AtMost),
    ]
}

/// `det g_(X,Y) = Z²I⁴/256ω⁶`.
pub fn gho_restricted_det(action: f64, x: &[f64]) -> f64 {
    let omega = (x[0] * x[2] - x[1] * x[1]).sqrt();
    x[2].powi(2) * action.powi(4) / (256.0 * omega.powi(6))
}

/// `det g_(W,X,Y) = Z³I⁴(Iω³ + 8W²Z)/256ω¹²`.
pub fn gholin_restricted_det(action: f64, x: &[f64]) -> f64 {
    let omega = (x[1] * x[3] - x[2] * x[2]).sqrt();
    let (w, z) = (x[0], x[3]);
    z.powi(3) * action.powi(4) * (action * omega.powi(3) + 8.0 * w * w * z) / (256.0 * omega.powi(12))
}

fn rank_det() -> Vec<Check> {
    let s = Suite::RankDet;
    let mut r = points::rng(14);
    let mut run = |lin: bool| -> Result<(f64, f64)> {
        let (mut rank_err, mut det_err) = (0.0f64, 0.0f64);
        for _ in 0..50 {
            let action = points::action(&mut r);
            let (g, expected_rank, kept, det) = if lin {
                let x = points::gholin(&mut r);
                (numeric_metric(&GhoLinear, action, &x, DEFAULT_GRID)?, 3, vec![0, 1, 2], gholin_restricted_det(action, &x))
            } else {
                let x = points::gho(&mut r);
                (numeric_metric(&Gho, action, &x, DEFAULT_GRID)?, 2, vec![0, 1], gho_restricted_det(action, &x))
            };
            rank_err = rank_err.max((matrix_rank(&g, RANK_REL_TOL) as f64 - expected_rank as f64).abs());
            let sub = restrict_metric(&g, &kept)?;
            det_err = det_err.max((sub.determinant() - det).abs() / det.abs());
        }
        Ok((rank_err, det_err))
    };
    let mut out = Vec::new();
    for (lin, name, rank) in [(false, "gho", 2), (true, "gholin", 3)] {
        match run(lin) {
            Ok((re, de)) => {
                out.push(Check::new(s, format!("{name} rank {rank}"), re, 0.0, Bound::AtMost));
                out.push(Check::new(s, format!("{name} restricted determinant (rel)"), de, 1e-10, Bound::AtMost));
            }
            Err(e) => out.push(Check::from_result(s, name, Err(e), 0.0, Bound::AtMost)),
        }
    }
    out
}

fn count_mismatches<T: PartialEq>(a: &[T], b: &[T]) -> f64 {
    a.iter().zip(b).filter(|(u, v)| u != v).count() as f64 + a.len().abs_diff(b.len()) as f64
}

fn quartic_series() -> Vec<Check> {
    let s = Suite::QuarticSeries;
    let series = match quartic_pipeline() {
        Ok(v) => v,
        Err(e) => return vec![Check::from_result(s, "pipeline", Err(e), 0.0, Bound::AtMost)],
    };
    let mut out = vec![
        Check::new(s, "W1..W3 exact", count_mismatches(&[series.w.clone()], &[reference::w()]), 0.0, Bound::AtMost),
        Check::new(s, "alpha exact", count_mismatches(&series.generators, &reference::generators()), 0.0, Bound::AtMost),
        Check::new(s, "metric exact", count_mismatches(&series.metric, &reference::metric()), 0.0, Bound::AtMost),
    ];
    let stable = (|| -> Result<f64> {
        let mut bad = 0.0;
        for t in [DumpTarget::W, DumpTarget::G, DumpTarget::Metric] {
            if to_json(&dump(series, t)?)? != to_json(&dump(series, t)?)? {
                bad += 1.0;
            }
        }
        Ok(bad)
    })();
    out.push(Check::from_result(s, "dump byte stability", stable, 0.0, Bound::AtMost));
    out
}

fn quartic_quantum() -> Vec<Check> {
    let s = Suite::QuarticQuantum;
    let mut out = Vec::new();
    for lambda in [0.0, 0.005, 0.01] {
        let r = (|| -> Result<f64> {
            let x = QuarticPoint::new(1.0, 1.0, lambda)?;
            let closed = quartic_quantum_metric_closed(&x, 1.0)?;
            let numeric = quantum_metric_numeric(&QuarticSampler, &x.values(), 1.0, None)?;
            Ok(numeric.max_deviation(closed.components()))
        })();
        out.push(Check::from_result(s, format!("metric vs overlaps at lambda={lambda}"), r, 1e-5, Bound::AtMost));
    }
    let energy = worst([(1.0, 1.0, 0.01, 1.0), (2.0, 0.7, 0.03, 0.5), (0.6, 3.0, 0.05, 1.3)].map(|(m, k, l, h)| {
        let x = QuarticPoint::new(m, k, l)?;
        let e = 0.5 * h * x.omega0() * dimensionless_energy(x.dimensionless_coupling(h));
        Ok((e - ground_energy(&x, h)).abs())
    }));
    out.push(Check::from_result(s, "ground energy", energy, 1e-12, Bound::AtMost));
    match identification_table() {
        Ok(table) => {
            let exact = |p: i32| -> Option<BigRational> {
                match p {
                    2 => Some(rational(1, 1)),
                    3 => Some(rational(3, 2)),
                    6 => Some(rational(1030086, 130621)),
                    _ => None,
                }
            };
            let mut mismatch = 0.0;
            let (mut out4, mut out5) = (0.0f64, 0.0f64);
            for row in &table {
                let v = row.ratio_f64();
                match row.power {
                    4 => out4 = out4.max((2.39 - v).max(v - 2.52).max(0.0)),
                    5 => out5 = out5.max((4.17 - v).max(v - 4.36).max(0.0)),
                    p => {
                        if exact(p).as_ref() != Some(&row.ratio) {
                            mismatch += 1.0;
                        }
                    }
                }
            }
            out.push(Check::new(s, "exact ratios I^2, I^3, I^6", mismatch, 0.0, Bound::AtMost));
            out.push(Check::new(s, "I^4 ratios outside [2.39, 2.52]", out4, 0.0, Bound::AtMost));
            out.push(Check::new(s, "I^5 ratios outside [4.17, 4.36]", out5, 0.0, Bound::AtMost));
        }
        Err(e) => out.push(Check::from_result(s, "identification", Err(e), 0.0, Bound::AtMost)),
    }
    out
}

/// Drift of the GHO ramp `X: 1 → 2` over time `t`, starting at `I = 1`.
pub fn gho_ramp_drift(t: f64) -> Result<f64> {
    let a = [1.0, 0.0, 1.0];
    let ramp = RampSchedule::new(Gho.point(&a)?, Gho.point(&[2.0, 0.0, 1.0])?, t)?;
    adiabatic_action_drift(&Gho, &ramp, Gho.to_phase(0.0, 1.0, &a))
}

fn adiabatic() -> Vec<Check> {
    let s = Suite::Adiabatic;
    let mut out = Vec::new();
    let drifts: Result<Vec<f64>> = [250.0, 1000.0, 4000.0].into_iter().map(gho_ramp_drift).collect();
    match drifts {
        Ok(d) => {
            out.push(Check::new(s, "drift at T=1000", d[1], 1e-2, Bound::Below));
            out.push(Check::new(s, "drift ratio T=1000/T=250", d[1] / d[0], 1.0, Bound::Below));
            out.push(Check::new(s, "drift ratio T=4000/T=1000", d[2] / d[1], 1.0, Bound::Below));
        }
        Err(e) => out.push(Check::from_result(s, "ramp", Err(e), 1e-2, Bound::Below)),
    }
    let order = (|| -> Result<f64> {
        let x = [1.0, 0.0, 1.0];
        let s0 = Gho.to_phase(0.0, 1.0, &x);
        let (e1, _) = frozen_errors(&Gho, &x, s0, 0.1, 20.0)?;
        let (e2, _) = frozen_errors(&Gho, &x, s0, 0.05, 20.0)?;
        Ok((e1 / e2 / 16.0 - 1.0).abs())
    })();
    out.push(Check::from_result(s, "rk4 error ratio vs 16 (rel)", order, 0.2, Bound::AtMost));
    out
}

fn oracle_metric() -> Vec<Check> {
    let s = Suite::OracleMetric;
    let mut r = points::rng(15);
    let gho = worst((0..100).map(|_| {
        let x = points::gho(&mut r);
        let action = points::action(&mut r);
        let g = numeric_metric(&Gho, action, &x, DEFAULT_GRID)?;
        Ok(g.max_deviation(Gho.metric_closed(action, &x)?.components()))
    }));
    let lin = worst((0..100).map(|_| {
        let x = points::gholin(&mut r);
        let action = points::action(&mut r);
        let g = numeric_metric(&GhoLinear, action, &x, DEFAULT_GRID)?;
        Ok(g.max_deviation(GhoLinear.metric_closed(action, &x)?.components()))
    }));
    let quartic = (|| -> Result<f64> {
        let series = quartic_pipeline()?;
        let x = QuarticPoint::new(1.0, 1.0, 0.01)?;
        let g = quartic_numeric_metric(series, 1.0, &x, DEFAULT_GRID)?;
        let mut dev = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let exact = series.metric_untruncated(i, j)?.eval(0.01, 0.0, 1.0, 1.0, 1.0);
                dev = dev.max((g.get(i, j) - exact).abs());
            }
        }
        Ok(dev)
    })();
    let action = (|| -> Result<f64> {
        let lambda = 0.01;
        let v = move |q: f64| 0.5 * q * q + lambda * q.powi(4) / 24.0;
        let h = MechanicalHamiltonian { mass: 1.0, potential: &v, minimum: 0.0 };
        let e = quartic_pipeline()?.energy_at(1.0, 1.0, 1.0, lambda);
        Ok((numeric_action_of_energy(&h, e)? - 1.0).abs())
    })();
    vec![
        Check::from_result(s, "gho sampled vs closed", gho, 1e-13, Bound::AtMost),
        Check::from_result(s, "gholin sampled vs closed", lin, 1e-13, Bound::AtMost),
        Check::from_result(s, "quartic sampled vs series", quartic, 1e-10, Bound::AtMost),
        Check::from_result(s, "quartic action of energy", action, 1e-6, Bound::AtMost),
    ]
}

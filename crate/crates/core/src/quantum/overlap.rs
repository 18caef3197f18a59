//! Quantum metric and Berry connection from wavefunction overlaps, by quadrature
//! in `q` and central differences in the parameters.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{Domain, MetricTensor, OneForm, ParameterPoint};
use crate::quantum::quartic::ground_wavefunction;

/// Simpson nodes across the quadrature window.
pub const DEFAULT_NODES: usize = 2001;
/// Window half-width in units of the oscillator length.
pub const WINDOW_WIDTHS: f64 = 12.0;
/// Tolerated relative change of the norm when the window is widened by half.
pub const WINDOW_TOL: f64 = 1e-8;

/// A parameter-dependent wavefunction `ψ(q; x, ħ)`.
///
/// `psi` must accept parameter values slightly outside the model domain, since
/// the difference stencil can step across a boundary such as `λ = 0`.
pub trait WavefunctionSampler: Send + Sync {
    fn domain(&self) -> Domain;

    fn level(&self) -> u32;

    fn psi(&self, q: f64, x: &[f64], hbar: f64) -> Complex64;

    /// `(center, half_width)` of the recommended quadrature window.
    fn window(&self, x: &[f64], hbar: f64) -> (f64, f64);

    fn nodes(&self) -> usize {
        DEFAULT_NODES
    }
}

/// Hermite function `χ_n(ξ)` by the three-term recurrence.
pub fn hermite_function(n: u32, xi: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = std::f64::consts::PI.powf(-0.25) * (-xi * xi / 2.0).exp();
    for j in 0..n {
        let j = j as f64;
        let next = (2.0 / (j + 1.0)).sqrt() * xi * cur - (j / (j + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn gho_psi(n: u32, q: f64, shift: f64, x: f64, y: f64, z: f64, hbar: f64) -> Complex64 {
    let w = (x * z - y * y).sqrt();
    let s = (w / (z * hbar)).sqrt();
    let amp = s.sqrt() * hermite_function(n, (q + shift) * s);
    Complex64::from_polar(amp, -y * q * q / (2.0 * z * hbar))
}

/// Eigenstate `n` of the generalized harmonic oscillator, parameters `(X, Y, Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GhoSampler {
    pub n: u32,
}

impl WavefunctionSampler for GhoSampler {
    fn domain(&self) -> Domain {
        Domain::Gho
    }

    fn level(&self) -> u32 {
        self.n
    }

    fn psi(&self, q: f64, x: &[f64], hbar: f64) -> Complex64 {
        gho_psi(self.n, q, 0.0, x[0], x[1], x[2], hbar)
    }

    fn window(&self, x: &[f64], hbar: f64) -> (f64, f64) {
        let w = (x[0] * x[2] - x[1] * x[1]).sqrt();
        let len = (x[2] * hbar / w).sqrt();
        (0.0, WINDOW_WIDTHS * len * (2.0 * self.n as f64 + 1.0).sqrt())
    }
}

/// Eigenstate `n` of the oscillator with a linear term, parameters `(W, X, Y, Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GhoLinSampler {
    pub n: u32,
}

impl WavefunctionSampler for GhoLinSampler {
    fn domain(&self) -> Domain {
        Domain::GhoLinear
    }

    fn level(&self) -> u32 {
        self.n
    }

    fn psi(&self, q: f64, x: &[f64], hbar: f64) -> Complex64 {
        let w2 = x[1] * x[3] - x[2] * x[2];
        gho_psi(self.n, q, x[0] * x[3] / w2, x[1], x[2], x[3], hbar)
    }

    fn window(&self, x: &[f64], hbar: f64) -> (f64, f64) {
        let w2 = x[1] * x[3] - x[2] * x[2];
        let len = (x[3] * hbar / w2.sqrt()).sqrt();
        (-x[0] * x[3] / w2, WINDOW_WIDTHS * len * (2.0 * self.n as f64 + 1.0).sqrt())
    }
}

/// Perturbative ground state of the quartic oscillator, parameters `(m, k, λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QuarticSampler;

impl WavefunctionSampler for QuarticSampler {
    fn domain(&self) -> Domain {
        Domain::Quartic
    }

    fn level(&self) -> u32 {
        0
    }

    fn psi(&self, q: f64, x: &[f64], hbar: f64) -> Complex64 {
        Complex64::new(ground_wavefunction(q, x[0], x[1], x[2], hbar), 0.0)
    }

    fn window(&self, x: &[f64], hbar: f64) -> (f64, f64) {
        let len = (hbar / (x[0] * x[1]).sqrt()).sqrt();
        (0.0, WINDOW_WIDTHS * len)
    }
}

struct Grid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Grid {
    fn simpson(center: f64, half: f64, n: usize) -> Self {
        let n = if n % 2 == 0 { n + 1 } else { n.max(3) };
        let h = 2.0 * half / (n - 1) as f64;
        let nodes = (0..n).map(|j| center - half + j as f64 * h).collect();
        let weights = (0..n)
            .map(|j| {
                let c = if j == 0 || j == n - 1 {
                    1.0
                } else if j % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                c * h / 3.0
            })
            .collect();
        Self { nodes, weights }
    }

    fn sample(&self, s: &dyn WavefunctionSampler, x: &[f64], hbar: f64) -> Vec<Complex64> {
        self.nodes.iter().map(|&q| s.psi(q, x, hbar)).collect()
    }

    fn inner(&self, a: &[Complex64], b: &[Complex64]) -> Complex64 {
        self.weights.iter().zip(a.iter().zip(b)).map(|(w, (u, v))| u.conj() * v * *w).sum()
    }

    fn norm2(&self, a: &[Complex64]) -> f64 {
        self.weights.iter().zip(a).map(|(w, u)| u.norm_sqr() * w).sum()
    }
}

/// Default difference steps `h_i = 1e-4 (1 + |x_i|)`.
pub fn default_steps(x: &[f64]) -> Vec<f64> {
    x.iter().map(|v| 1e-4 * (1.0 + v.abs())).collect()
}

struct Stencil {
    center: Vec<Complex64>,
    derivatives: Vec<Vec<Complex64>>,
    grid: Grid,
}

fn stencil(s: &dyn WavefunctionSampler, x: &[f64], hbar: f64, steps: Option<&[f64]>) -> Result<Stencil> {
    s.domain().check(x)?;
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::Domain(format!("hbar = {hbar} must be positive")));
    }
    let steps = match steps {
        Some(h) if h.len() == x.len() => h.to_vec(),
        Some(h) => return Err(Error::ShapeMismatch(format!("{} steps for {} parameters", h.len(), x.len()))),
        None => default_steps(x),
    };
    let (center, half) = s.window(x, hbar);
    let n = s.nodes();
    let grid = Grid::simpson(center, half, n);
    let wide = Grid::simpson(center, 1.5 * half, n + n / 2);
    let normalized = |p: &[f64]| -> Result<Vec<Complex64>> {
        let v = grid.sample(s, p, hbar);
        let n2 = grid.norm2(&v);
        let wide2 = wide.norm2(&wide.sample(s, p, hbar));
        let drift = (wide2 - n2).abs() / wide2;
        if !(drift <= WINDOW_TOL) {
            return Err(Error::WindowTooSmall(drift));
        }
        let inv = 1.0 / n2.sqrt();
        Ok(v.into_iter().map(|c| c * inv).collect())
    };
    let psi0 = normalized(x)?;
    let mut derivatives = Vec::with_capacity(x.len());
    for (i, h) in steps.iter().enumerate() {
        let mut up = x.to_vec();
        let mut down = x.to_vec();
        up[i] += h;
        down[i] -= h;
        let (a, b) = (normalized(&up)?, normalized(&down)?);
        derivatives.push(a.iter().zip(&b).map(|(u, d)| (u - d) / (2.0 * h)).collect());
    }
    Ok(Stencil { center: psi0, derivatives, grid })
}

fn tag(s: &dyn WavefunctionSampler, x: &[f64], hbar: f64) -> Result<(ParameterPoint, f64)> {
    Ok((ParameterPoint::for_domain(s.domain(), x)?, (s.level() as f64 + 0.5) * hbar))
}

/// `g_ij = Re(⟨∂ᵢn|∂ⱼn⟩ - ⟨∂ᵢn|n⟩⟨n|∂ⱼn⟩)`, symmetrized.
pub fn quantum_metric_numeric(
    s: &dyn WavefunctionSampler,
    x: &[f64],
    hbar: f64,
    steps: Option<&[f64]>,
) -> Result<MetricTensor> {
    let st = stencil(s, x, hbar, steps)?;
    let n = x.len();
    let overlaps: Vec<Complex64> = st.derivatives.iter().map(|d| st.grid.inner(d, &st.center)).collect();
    let mut g = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let dd = st.grid.inner(&st.derivatives[i], &st.derivatives[j]);
            let v = (dd - overlaps[i] * overlaps[j].conj()).re;
            g[(i, j)] = v;
            g[(j, i)] = v;
        }
    }
    let (point, action) = tag(s, x, hbar)?;
    MetricTensor::new(g, point, action)
}

/// `A_i = -Im⟨n|∂ᵢn⟩`.
pub fn berry_connection_numeric(
    s: &dyn WavefunctionSampler,
    x: &[f64],
    hbar: f64,
    steps: Option<&[f64]>,
) -> Result<OneForm> {
    let st = stencil(s, x, hbar, steps)?;
    let a = st.derivatives.iter().map(|d| -st.grid.inner(&st.center, d).im).collect();
    let (point, action) = tag(s, x, hbar)?;
    OneForm::new(a, point, action)
}

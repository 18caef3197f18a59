//! Metrics, connections and curvatures assembled from angle-sampled generators.
//!
//! Every average over the fast angle is the uniform rectangle rule on
//! `M` nodes `2πm/M`, which is exact for trigonometric polynomials whose
//! highest harmonic is below `M`.

use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Default number of angle nodes.
pub const DEFAULT_GRID: usize = 64;
/// Largest change tolerated when the angle grid is doubled.
pub const ALIASING_TOL: f64 = 1e-10;
/// Relative eigenvalue floor for positive semidefiniteness.
pub const PSD_REL_TOL: f64 = 1e-12;
/// Relative singular value threshold used by [`matrix_rank`].
pub const RANK_REL_TOL: f64 = 1e-10;

/// Constraint set attached to a parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// `(X, Y, Z)` with `XZ - Y² > 0` and `Z > 0`.
    Gho,
    /// `(W, X, Y, Z)` with `XZ - Y² > 0` and `Z > 0`.
    GhoLinear,
    /// `(m, k, λ)` with `m > 0`, `k > 0`, `λ ≥ 0`.
    Quartic,
    /// Any finite vector.
    Unconstrained,
}

impl Domain {
    pub fn param_names(self) -> Option<&'static [&'static str]> {
        match self {
            Domain::Gho => Some(&["X", "Y", "Z"]),
            Domain::GhoLinear => Some(&["W", "X", "Y", "Z"]),
            Domain::Quartic => Some(&["m", "k", "lambda"]),
            Domain::Unconstrained => None,
        }
    }

    /// Checks the domain predicate on a value vector in canonical order.
    pub fn check(self, values: &[f64]) -> Result<()> {
        if let Some(names) = self.param_names() {
            if names.len() != values.len() {
                return Err(Error::ShapeMismatch(format!(
                    "expected {} parameters, got {}",
                    names.len(),
                    values.len()
                )));
            }
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("non-finite parameter value {v}")));
        }
        match self {
            Domain::Gho | Domain::GhoLinear => {
                let off = usize::from(self == Domain::GhoLinear);
                let (x, y, z) = (values[off], values[off + 1], values[off + 2]);
                let disc = x * z - y * y;
                if !(disc > 0.0) {
                    return Err(Error::Domain(format!(
                        "XZ - Y^2 = {disc} must be positive (X={x}, Y={y}, Z={z})"
                    )));
                }
                if !(z > 0.0) {
                    return Err(Error::Domain(format!("Z = {z} must be positive")));
                }
                Ok(())
            }
            Domain::Quartic => {
                let (m, k, lambda) = (values[0], values[1], values[2]);
                if !(m > 0.0 && k > 0.0) {
                    return Err(Error::Domain(format!("m = {m} and k = {k} must be positive")));
                }
                if !(lambda >= 0.0) {
                    return Err(Error::Domain(format!("lambda = {lambda} must be nonnegative")));
                }
                Ok(())
            }
            Domain::Unconstrained => Ok(()),
        }
    }
}

/// Named point on the parameter manifold.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterPoint {
    names: Vec<String>,
    values: Vec<f64>,
    domain: Domain,
}

impl ParameterPoint {
    pub fn new(names: Vec<String>, values: Vec<f64>, domain: Domain) -> Result<Self> {
        if names.len() != values.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} names for {} values",
                names.len(),
                values.len()
            )));
        }
        if let Some(expected) = domain.param_names() {
            if names.iter().map(String::as_str).ne(expected.iter().copied()) {
                return Err(Error::ShapeMismatch(format!(
                    "parameter names {names:?} do not match {expected:?}"
                )));
            }
        }
        domain.check(&values)?;
        Ok(Self { names, values, domain })
    }

    /// Point of a model domain with its canonical parameter names.
    pub fn for_domain(domain: Domain, values: &[f64]) -> Result<Self> {
        let names = match domain.param_names() {
            Some(n) => n.iter().map(|s| s.to_string()).collect(),
            None => (0..values.len()).map(|i| format!("x{i}")).collect(),
        };
        Self::new(names, values.to_vec(), domain)
    }

    pub fn unconstrained(names: Vec<String>, values: Vec<f64>) -> Result<Self> {
        Self::new(names, values, Domain::Unconstrained)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.names.iter().position(|n| n == name).map(|i| self.values[i])
    }
}

/// Values of `N` generators on a uniform grid of `M` angles in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSamples {
    values: DMatrix<f64>,
}

impl GeneratorSamples {
    /// Wraps an `N × M` matrix whose column `m` holds the generators at angle `2πm/M`.
    pub fn from_matrix(values: DMatrix<f64>) -> Result<Self> {
        if values.ncols() == 0 {
            return Err(Error::EmptyGrid);
        }
        Ok(Self { values })
    }

    /// Samples `f(φ)` (returning all `n_params` generators) on `grid` nodes.
    pub fn sample<F>(n_params: usize, grid: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Vec<f64>,
    {
        if grid == 0 {
            return Err(Error::EmptyGrid);
        }
        let mut values = DMatrix::zeros(n_params, grid);
        for m in 0..grid {
            let g = f(grid_angle(m, grid));
            if g.len() != n_params {
                return Err(Error::ShapeMismatch(format!(
                    "sampler returned {} generators, expected {n_params}",
                    g.len()
                )));
            }
            values.set_column(m, &DVector::from_vec(g));
        }
        Ok(Self { values })
    }

    pub fn n_params(&self) -> usize {
        self.values.nrows()
    }

    pub fn grid_len(&self) -> usize {
        self.values.ncols()
    }

    pub fn angle(&self, m: usize) -> f64 {
        grid_angle(m, self.grid_len())
    }

    pub fn values(&self) -> &DMatrix<f64> {
        &self.values
    }

    pub fn row(&self, i: usize) -> Vec<f64> {
        self.values.row(i).iter().copied().collect()
    }
}

/// Angle of node `m` on an `M`-point grid.
pub fn grid_angle(m: usize, grid: usize) -> f64 {
    TAU * m as f64 / grid as f64
}

/// Symmetric metric on parameter space at fixed action.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricTensor {
    components: DMatrix<f64>,
    point: ParameterPoint,
    action: f64,
}

impl MetricTensor {
    /// Builds a metric from its upper triangle; the lower triangle is mirrored.
    pub fn new(components: DMatrix<f64>, point: ParameterPoint, action: f64) -> Result<Self> {
        let n = point.len();
        if components.nrows() != n || components.ncols() != n {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} components for {n} parameters",
                components.nrows(),
                components.ncols()
            )));
        }
        check_action(action)?;
        let mut c = components;
        for i in 0..n {
            for j in 0..i {
                c[(i, j)] = c[(j, i)];
            }
        }
        Ok(Self { components: c, point, action })
    }

    pub fn components(&self) -> &DMatrix<f64> {
        &self.components
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.components[(i, j)]
    }

    pub fn point(&self) -> &ParameterPoint {
        &self.point
    }

    pub fn action(&self) -> f64 {
        self.action
    }

    pub fn dim(&self) -> usize {
        self.components.nrows()
    }

    pub fn max_abs(&self) -> f64 {
        self.components.amax()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self.components.clone().symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// True when every eigenvalue is at least `-PSD_REL_TOL · max|g|`.
    pub fn is_positive_semidefinite(&self) -> bool {
        let floor = -PSD_REL_TOL * self.max_abs();
        self.eigenvalues().iter().all(|&e| e >= floor)
    }

    pub fn determinant(&self) -> f64 {
        self.components.determinant()
    }

    /// Largest absolute componentwise difference to another matrix.
    pub fn max_deviation(&self, other: &DMatrix<f64>) -> f64 {
        (&self.components - other).amax()
    }
}

/// Connection components `A_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct OneForm {
    components: Vec<f64>,
    point: ParameterPoint,
    action: f64,
}

impl OneForm {
    pub fn new(components: Vec<f64>, point: ParameterPoint, action: f64) -> Result<Self> {
        if components.len() != point.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} components for {} parameters",
                components.len(),
                point.len()
            )));
        }
        check_action(action)?;
        Ok(Self { components, point, action })
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn get(&self, i: usize) -> f64 {
        self.components[i]
    }

    pub fn point(&self) -> &ParameterPoint {
        &self.point
    }

    pub fn action(&self) -> f64 {
        self.action
    }
}

/// Antisymmetric curvature components `F_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoForm {
    components: DMatrix<f64>,
    point: ParameterPoint,
    action: f64,
}

impl TwoForm {
    /// Builds a two-form from its strict upper triangle; the rest is filled by antisymmetry.
    pub fn new(components: DMatrix<f64>, point: ParameterPoint, action: f64) -> Result<Self> {
        let n = point.len();
        if components.nrows() != n || components.ncols() != n {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} components for {n} parameters",
                components.nrows(),
                components.ncols()
            )));
        }
        check_action(action)?;
        let mut c = components;
        for i in 0..n {
            c[(i, i)] = 0.0;
            for j in 0..i {
                c[(i, j)] = -c[(j, i)];
            }
        }
        Ok(Self { components: c, point, action })
    }

    pub fn components(&self) -> &DMatrix<f64> {
        &self.components
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.components[(i, j)]
    }

    pub fn point(&self) -> &ParameterPoint {
        &self.point
    }

    pub fn action(&self) -> f64 {
        self.action
    }
}

fn check_action(action: f64) -> Result<()> {
    if action.is_finite() && action > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("action I = {action} must be positive")))
    }
}

/// Mean over a uniform grid covering one full period.
pub fn angle_average(samples: &[f64]) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::EmptyGrid);
    }
    Ok(samples.iter().sum::<f64>() / samples.len() as f64)
}

/// Weighted mean `(1/M) Σ w_m f_m`; the weights carry a change of angle variable.
pub fn weighted_angle_average(samples: &[f64], weights: &[f64]) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if samples.len() != weights.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} samples, {} weights",
            samples.len(),
            weights.len()
        )));
    }
    let s: f64 = samples.iter().zip(weights).map(|(f, w)| f * w).sum();
    Ok(s / samples.len() as f64)
}

/// `g_ij = <G_i G_j> - <G_i><G_j>`.
pub fn metric_from_generators(
    gs: &GeneratorSamples,
    point: ParameterPoint,
    action: f64,
) -> Result<MetricTensor> {
    let weights = vec![1.0; gs.grid_len()];
    metric_from_weighted_generators(gs, &weights, point, action)
}

/// Metric with the average taken against `weights` (the Jacobian of an angle change).
pub fn metric_from_weighted_generators(
    gs: &GeneratorSamples,
    weights: &[f64],
    point: ParameterPoint,
    action: f64,
) -> Result<MetricTensor> {
    check_sample_shape(gs, &point)?;
    let n = gs.n_params();
    let rows: Vec<Vec<f64>> = (0..n).map(|i| gs.row(i)).collect();
    let means = rows
        .iter()
        .map(|r| weighted_angle_average(r, weights))
        .collect::<Result<Vec<_>>>()?;
    let mut g = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let prod: Vec<f64> = rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b).collect();
            g[(i, j)] = weighted_angle_average(&prod, weights)? - means[i] * means[j];
        }
    }
    MetricTensor::new(g, point, action)
}

/// `<G_i G_j>` alone, which is not gauge invariant.
pub fn raw_second_moment(gs: &GeneratorSamples) -> Result<DMatrix<f64>> {
    let n = gs.n_params();
    let rows: Vec<Vec<f64>> = (0..n).map(|i| gs.row(i)).collect();
    let mut g = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let prod: Vec<f64> = rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b).collect();
            g[(i, j)] = angle_average(&prod)?;
            g[(j, i)] = g[(i, j)];
        }
    }
    Ok(g)
}

/// Samples generators on `grid` and `2·grid` nodes and returns the coarse metric
/// if both agree to [`ALIASING_TOL`] (relative to the largest component, floor 1).
pub fn sampled_metric<F>(
    grid: usize,
    mut sampler: F,
    point: ParameterPoint,
    action: f64,
) -> Result<MetricTensor>
where
    F: FnMut(f64) -> Vec<f64>,
{
    let n = point.len();
    let coarse = GeneratorSamples::sample(n, grid, &mut sampler)?;
    let fine = GeneratorSamples::sample(n, 2 * grid, &mut sampler)?;
    let g = metric_from_generators(&coarse, point.clone(), action)?;
    let g2 = metric_from_generators(&fine, point, action)?;
    let deviation = g.max_deviation(g2.components());
    if deviation > ALIASING_TOL * g.max_abs().max(1.0) {
        return Err(Error::Aliasing { grid, deviation });
    }
    Ok(g)
}

/// `A_i = <G_i>`.
pub fn connection_from_generators(
    gs: &GeneratorSamples,
    point: ParameterPoint,
    action: f64,
) -> Result<OneForm> {
    check_sample_shape(gs, &point)?;
    let a = (0..gs.n_params())
        .map(|i| angle_average(&gs.row(i)))
        .collect::<Result<Vec<_>>>()?;
    OneForm::new(a, point, action)
}

/// `F_ij = <(∂_i p)(∂_j q) - (∂_j p)(∂_i q)>` from `N × M` derivative samples
/// taken at fixed action-angle variables.
pub fn curvature_from_phase_space_derivatives(
    dp: &DMatrix<f64>,
    dq: &DMatrix<f64>,
    point: ParameterPoint,
    action: f64,
) -> Result<TwoForm> {
    if dp.shape() != dq.shape() {
        return Err(Error::ShapeMismatch(format!(
            "dp is {:?}, dq is {:?}",
            dp.shape(),
            dq.shape()
        )));
    }
    if dp.nrows() != point.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} derivative rows for {} parameters",
            dp.nrows(),
            point.len()
        )));
    }
    if dp.ncols() == 0 {
        return Err(Error::EmptyGrid);
    }
    let n = dp.nrows();
    let mut f = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let s: Vec<f64> = (0..dp.ncols())
                .map(|m| dp[(i, m)] * dq[(j, m)] - dp[(j, m)] * dq[(i, m)])
                .collect();
            f[(i, j)] = angle_average(&s)?;
        }
    }
    TwoForm::new(f, point, action)
}

/// Pulls the metric back along `x = x(y)`: `g'_ij = (∂x^k/∂y^i)(∂x^l/∂y^j) g_kl`.
///
/// `jacobian[(k, i)]` is `∂x^k/∂y^i`; `new_point` is the same point in `y` coordinates.
pub fn transform_metric(
    g: &MetricTensor,
    jacobian: &DMatrix<f64>,
    new_point: ParameterPoint,
) -> Result<MetricTensor> {
    let n = g.dim();
    if jacobian.nrows() != n || jacobian.ncols() != new_point.len() || new_point.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "jacobian {:?} for a {n}-dimensional metric",
            jacobian.shape()
        )));
    }
    let det = jacobian.determinant();
    let scale = jacobian.amax().powi(n as i32).max(f64::MIN_POSITIVE);
    if !(det.abs() >= 1e-14 * scale) {
        return Err(Error::SingularJacobian(det.abs()));
    }
    let c = jacobian.transpose() * g.components() * jacobian;
    MetricTensor::new(c, new_point, g.action())
}

/// Principal submatrix on `kept` (in the given order).
pub fn restrict_metric(g: &MetricTensor, kept: &[usize]) -> Result<MetricTensor> {
    if kept.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let n = g.dim();
    for (pos, &k) in kept.iter().enumerate() {
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, dim: n });
        }
        if kept[..pos].contains(&k) {
            return Err(Error::DuplicateIndex(k));
        }
    }
    let c = DMatrix::from_fn(kept.len(), kept.len(), |a, b| g.get(kept[a], kept[b]));
    let point = if kept.len() == n && kept.iter().enumerate().all(|(a, &k)| a == k) {
        g.point().clone()
    } else {
        let names = kept.iter().map(|&k| g.point().names()[k].clone()).collect();
        let values = kept.iter().map(|&k| g.point().values()[k]).collect();
        ParameterPoint::unconstrained(names, values)?
    };
    MetricTensor::new(c, point, g.action())
}

/// Number of singular values above `rel_tol` times the largest.
pub fn matrix_rank(g: &MetricTensor, rel_tol: f64) -> usize {
    let sv = g.components().clone().singular_values();
    let max = sv.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * max).count()
}

fn check_sample_shape(gs: &GeneratorSamples, point: &ParameterPoint) -> Result<()> {
    if gs.n_params() != point.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} generator rows for {} parameters",
            gs.n_params(),
            point.len()
        )));
    }
    if gs.grid_len() == 0 {
        return Err(Error::EmptyGrid);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_point(n: usize) -> ParameterPoint {
        ParameterPoint::unconstrained((0..n).map(|i| format!("x{i}")).collect(), vec![0.0; n]).unwrap()
    }

    fn on_grid(m: usize, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..m).map(|i| f(grid_angle(i, m))).collect()
    }

    #[test]
    fn averages_of_trig_polynomials() {
        let s = on_grid(8, |p| p.sin().powi(2));
        assert!((angle_average(&s).unwrap() - 0.5).abs() < 1e-15);
        let c = on_grid(8, |p| (3.0 * p).cos());
        assert!(angle_average(&c).unwrap().abs() < 1e-15);
        assert_eq!(angle_average(&[]), Err(Error::EmptyGrid));
    }

    #[test]
    fn zero_generators_give_zero_metric_and_connection() {
        let gs = GeneratorSamples::from_matrix(DMatrix::zeros(3, 16)).unwrap();
        let g = metric_from_generators(&gs, free_point(3), 1.0).unwrap();
        assert_eq!(g.max_abs(), 0.0);
        assert_eq!(matrix_rank(&g, RANK_REL_TOL), 0);
        let a = connection_from_generators(&gs, free_point(3), 1.0).unwrap();
        assert!(a.components().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn metric_is_covariance() {
        let gs = GeneratorSamples::sample(2, 16, |p| vec![1.0 + p.cos(), 2.0 * p.cos()]).unwrap();
        let g = metric_from_generators(&gs, free_point(2), 1.0).unwrap();
        assert!((g.get(0, 0) - 0.5).abs() < 1e-15);
        assert!((g.get(0, 1) - 1.0).abs() < 1e-15);
        assert!((g.get(1, 1) - 2.0).abs() < 1e-15);
        assert_eq!(g.get(0, 1), g.get(1, 0));
        assert_eq!(matrix_rank(&g, RANK_REL_TOL), 1);
        let raw = raw_second_moment(&gs).unwrap();
        assert!((raw[(0, 0)] - 1.5).abs() < 1e-15);
    }

    #[test]
    fn aliasing_is_detected() {
        let err = sampled_metric(8, |p| vec![(8.0 * p).cos()], free_point(1), 1.0).unwrap_err();
        assert!(matches!(err, Error::Aliasing { grid: 8, .. }));
        assert!(sampled_metric(32, |p| vec![(8.0 * p).cos()], free_point(1), 1.0).is_ok());
    }

    #[test]
    fn curvature_diagonal_vanishes_and_shapes_are_checked() {
        let dp = DMatrix::from_fn(2, 8, |i, m| (i + m) as f64);
        let dq = DMatrix::from_fn(2, 8, |i, m| (i * m) as f64 + 1.0);
        let f = curvature_from_phase_space_derivatives(&dp, &dq, free_point(2), 1.0).unwrap();
        assert_eq!(f.get(0, 0), 0.0);
        assert_eq!(f.get(1, 1), 0.0);
        assert_eq!(f.get(0, 1), -f.get(1, 0));
        let same = curvature_from_phase_space_derivatives(&dp, &dp, free_point(2), 1.0).unwrap();
        assert_eq!(same.get(0, 1), 0.0);
        let bad = DMatrix::zeros(2, 7);
        assert!(matches!(
            curvature_from_phase_space_derivatives(&dp, &bad, free_point(2), 1.0),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn transform_identity_and_scaling() {
        let c = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 3.0]);
        let g = MetricTensor::new(c.clone(), free_point(2), 1.0).unwrap();
        let same = transform_metric(&g, &DMatrix::identity(2, 2), free_point(2)).unwrap();
        assert_eq!(same.components(), &c);
        let half = transform_metric(&g, &(DMatrix::identity(2, 2) * 0.5), free_point(2)).unwrap();
        assert_eq!(half.components(), &(c * 0.25));
        let singular = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert!(matches!(
            transform_metric(&g, &singular, free_point(2)),
            Err(Error::SingularJacobian(_))
        ));
    }

    #[test]
    fn restriction_rules() {
        let c = DMatrix::from_fn(3, 3, |i, j| (i + j) as f64);
        let g = MetricTensor::new(c, free_point(3), 1.0).unwrap();
        assert_eq!(restrict_metric(&g, &[0, 1, 2]).unwrap(), g);
        let r = restrict_metric(&g, &[2, 0]).unwrap();
        assert_eq!(r.get(0, 0), 4.0);
        assert_eq!(r.get(0, 1), 2.0);
        assert_eq!(r.point().names(), &["x2".to_string(), "x0".to_string()]);
        assert_eq!(restrict_metric(&g, &[]), Err(Error::EmptyIndexSet));
        assert_eq!(restrict_metric(&g, &[1, 1]), Err(Error::DuplicateIndex(1)));
        assert_eq!(restrict_metric(&g, &[3]), Err(Error::IndexOutOfRange { index: 3, dim: 3 }));
    }

    #[test]
    fn domain_predicates() {
        assert!(ParameterPoint::for_domain(Domain::Gho, &[1.0, 0.0, 1.0]).is_ok());
        assert!(ParameterPoint::for_domain(Domain::Gho, &[0.0, 1.0, 1.0]).is_err());
        assert!(ParameterPoint::for_domain(Domain::Gho, &[-1.0, 0.0, -1.0]).is_err());
        assert!(ParameterPoint::for_domain(Domain::GhoLinear, &[5.0, 1.0, 0.5, 1.0]).is_ok());
        assert!(ParameterPoint::for_domain(Domain::Quartic, &[1.0, 1.0, 0.0]).is_ok());
        assert!(ParameterPoint::for_domain(Domain::Quartic, &[1.0, 1.0, -0.1]).is_err());
        assert!(ParameterPoint::for_domain(Domain::Gho, &[f64::NAN, 0.0, 1.0]).is_err());
        assert!(MetricTensor::new(DMatrix::zeros(3, 3), free_point(3), 0.0).is_err());
    }
}

//! Evaluation of one quantity at one grid point, and row formatting.

use adiageo::geometry::{matrix_rank, restrict_metric, Domain, MetricTensor, OneForm, RANK_REL_TOL};
use adiageo::models::{ClassicalModel, Gho, GhoLinPoint, GhoLinear, GhoPoint};
use adiageo::oracle::quartic_numeric_connection;
use adiageo::quantum::{self, QuantumLevel, QuarticPoint};
use adiageo::series::quartic_pipeline;
use adiageo::{Error, Result};
use clap::ValueEnum;
use nalgebra::DMatrix;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Gho,
    Gholin,
    Quartic,
}

impl Model {
    pub fn domain(self) -> Domain {
        match self {
            Model::Gho => Domain::Gho,
            Model::Gholin => Domain::GhoLinear,
            Model::Quartic => Domain::Quartic,
        }
    }

    pub fn names(self) -> &'static [&'static str] {
        self.domain().param_names().expect("models have named parameters")
    }

    /// Label of parameter 0 in printed indices.
    pub fn index_base(self) -> usize {
        match self {
            Model::Gho => Gho.index_base(),
            Model::Gholin => GhoLinear.index_base(),
            Model::Quartic => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Metric,
    Connection,
    Curvature,
    Det,
    Rank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Classical,
    Quantum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct Settings {
    pub model: Model,
    pub quantity: Quantity,
    pub side: Side,
    pub action: f64,
    pub level: QuantumLevel,
    /// Indices kept for `det` and `rank`; all when empty.
    pub keep: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub params: Vec<f64>,
    pub quantity: &'static str,
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub value: f64,
}

fn metric(s: &Settings, x: &[f64]) -> Result<MetricTensor> {
    match (s.model, s.side) {
        (Model::Gho, Side::Classical) => Gho.metric_closed(s.action, x),
        (Model::Gholin, Side::Classical) => GhoLinear.metric_closed(s.action, x),
        (Model::Quartic, Side::Classical) => quartic_pipeline()?.metric_at(s.action, x[0], x[1], x[2]),
        (Model::Gho, Side::Quantum) => quantum::gho_quantum_metric(s.level, &GhoPoint::from_slice(x)?),
        (Model::Gholin, Side::Quantum) => quantum::gholin_quantum_metric(s.level, &GhoLinPoint::from_slice(x)?),
        (Model::Quartic, Side::Quantum) => {
            quantum::quartic_quantum_metric_closed(&QuarticPoint::from_slice(x)?, s.level.hbar())
        }
    }
}

/// Connection and curvature. For the quartic model the generators and the
/// ground state are odd in the angle / real, so both forms vanish; the
/// connection is still sampled rather than assumed.
fn forms(s: &Settings, x: &[f64]) -> Result<(OneForm, DMatrix<f64>)> {
    let (a, f) = match (s.model, s.side) {
        (Model::Gho, Side::Classical) => Gho.hannay_closed(s.action, x)?,
        (Model::Gholin, Side::Classical) => GhoLinear.hannay_closed(s.action, x)?,
        (Model::Gho, Side::Quantum) => quantum::gho_berry(s.level, &GhoPoint::from_slice(x)?)?,
        (Model::Gholin, Side::Quantum) => quantum::gholin_berry(s.level, &GhoLinPoint::from_slice(x)?)?,
        (Model::Quartic, Side::Classical) => {
            let p = QuarticPoint::from_slice(x)?;
            let a = quartic_numeric_connection(quartic_pipeline()?, s.action, &p, adiageo::geometry::DEFAULT_GRID)?;
            return Ok((a, DMatrix::zeros(3, 3)));
        }
        (Model::Quartic, Side::Quantum) => {
            let a = quantum::berry_connection_numeric(&quantum::QuarticSampler, x, s.level.hbar(), None)?;
            return Ok((a, DMatrix::zeros(3, 3)));
        }
    };
    Ok((a, f.components().clone()))
}

/// Rows for one grid point, components in lexicographic `(i, j)` order.
pub fn evaluate(s: &Settings, x: &[f64]) -> Result<Vec<ResultRow>> {
    let base = s.model.index_base();
    let row = |quantity, i: Option<usize>, j: Option<usize>, value: f64| ResultRow {
        params: x.to_vec(),
        quantity,
        i: i.map(|v| v + base),
        j: j.map(|v| v + base),
        value,
    };
    let n = x.len();
    let rows = match s.quantity {
        Quantity::Metric => {
            let g = metric(s, x)?;
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| row("g", Some(i), Some(j), g.get(i, j))).collect()
        }
        Quantity::Connection => {
            let (a, _) = forms(s, x)?;
            (0..n).map(|i| row("A", Some(i), None, a.get(i))).collect()
        }
        Quantity::Curvature => {
            let (_, f) = forms(s, x)?;
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| row("F", Some(i), Some(j), f[(i, j)])).collect()
        }
        Quantity::Det | Quantity::Rank => {
            let g = metric(s, x)?;
            let g = if s.keep.is_empty() { g } else { restrict_metric(&g, &s.keep)? };
            let v = match s.quantity {
                Quantity::Det => g.determinant(),
                _ => matrix_rank(&g, RANK_REL_TOL) as f64,
            };
            vec![row(if s.quantity == Quantity::Det { "det" } else { "rank" }, None, None, v)]
        }
    };
    for r in &rows {
        if !r.value.is_finite() {
            return Err(Error::Internal(format!("non-finite {} value", r.quantity)));
        }
    }
    Ok(rows)
}

/// Fixed float format: 17 significant digits, lowercase exponent.
/// Negative zero prints as zero.
pub fn fmt_float(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

pub fn csv_header(names: &[&str]) -> String {
    let mut cols: Vec<String> = names.iter().map(|n| format!("param:{n}")).collect();
    cols.extend(["quantity", "i", "j", "value"].map(String::from));
    cols.join(",")
}

pub fn csv_line(r: &ResultRow) -> String {
    let mut cols: Vec<String> = r.params.iter().map(|&v| fmt_float(v)).collect();
    cols.push(r.quantity.to_string());
    cols.push(r.i.map(|v| v.to_string()).unwrap_or_default());
    cols.push(r.j.map(|v| v.to_string()).unwrap_or_default());
    cols.push(fmt_float(r.value));
    cols.join(",")
}

pub fn json_rows(names: &[&str], rows: &[ResultRow]) -> String {
    let array: Vec<Value> = rows
        .iter()
        .map(|r| {
            let mut m = Map::new();
            for (n, v) in names.iter().zip(&r.params) {
                m.insert(format!("param:{n}"), Value::from(*v));
            }
            m.insert("quantity".into(), Value::from(r.quantity));
            m.insert("i".into(), r.i.map_or(Value::Null, Value::from));
            m.insert("j".into(), r.j.map_or(Value::Null, Value::from));
            m.insert("value".into(), Value::from(r.value));
            Value::Object(m)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&Value::Array(array)).expect("rows serialize");
    s.push('\n');
    s
}

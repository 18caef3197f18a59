//! Stable JSON form of perturbation series.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::perturbation::PerturbationSeries;
use crate::series::poly::{CoefficientPoly, Monomial};
use crate::series::quartic::{QuarticSeries, COMPONENTS};
use crate::series::trig::{Trig, TrigSeries};

/// One `coefficient · I^{e2_I/2} m^{e2_m/2} k^{e2_k/2} · trig(harmonic φ₀)` term at `λ^order`.
/// Fields are declared in alphabetical order so that serialization is key-sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DumpEntry {
    pub den: i64,
    #[serde(rename = "e2_I")]
    pub e2_i: i32,
    pub e2_k: i32,
    pub e2_m: i32,
    pub harmonic: u32,
    pub num: i64,
    pub order: usize,
    pub trig: Trig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DumpTarget {
    W,
    G,
    Metric,
}

impl std::str::FromStr for DumpTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "W" | "w" => Ok(DumpTarget::W),
            "G" | "g" => Ok(DumpTarget::G),
            "metric" => Ok(DumpTarget::Metric),
            other => Err(Error::Series(format!("unknown dump target `{other}`"))),
        }
    }
}

fn small(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::Series(format!("coefficient {v} does not fit in 64 bits")))
}

/// Entries sorted by `(order, harmonic, trig, exponents)`.
pub fn series_entries(s: &PerturbationSeries) -> Result<Vec<DumpEntry>> {
    let mut out = Vec::new();
    for (order, t) in s.terms().iter().enumerate() {
        for (&(harmonic, trig), poly) in t.terms() {
            for (mono, c) in poly.terms() {
                let (e2_i, e2_m, e2_k) = mono.doubled()?;
                out.push(DumpEntry {
                    den: small(c.denom())?,
                    e2_i,
                    e2_k,
                    e2_m,
                    harmonic,
                    num: small(c.numer())?,
                    order,
                    trig,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        (a.order, a.harmonic, a.trig, a.e2_i, a.e2_m, a.e2_k).cmp(&(b.order, b.harmonic, b.trig, b.e2_i, b.e2_m, b.e2_k))
    });
    Ok(out)
}

/// Rebuilds a series of the given order from dump entries.
pub fn series_from_entries(entries: &[DumpEntry], order: usize) -> Result<PerturbationSeries> {
    let mut terms = vec![TrigSeries::zero(); order + 1];
    for e in entries {
        if e.order > order {
            return Err(Error::OrderMismatch(e.order, order));
        }
        if e.den == 0 {
            return Err(Error::Series("zero denominator".into()));
        }
        let c = BigRational::new(e.num.into(), e.den.into());
        let mono = Monomial::halves(e.e2_i, e.e2_m, e.e2_k);
        let t = TrigSeries::single(e.harmonic, e.trig, CoefficientPoly::term(c, mono));
        terms[e.order] = &terms[e.order] + &t;
    }
    PerturbationSeries::from_terms(terms)
}

pub type Dump = BTreeMap<String, Vec<DumpEntry>>;

/// Metric component label `g11`…`g33` (1-based).
pub fn component_label(i: usize, j: usize) -> String {
    format!("g{}{}", i + 1, j + 1)
}

pub fn dump(series: &QuarticSeries, target: DumpTarget) -> Result<Dump> {
    let mut map = Dump::new();
    match target {
        DumpTarget::W => {
            map.insert("W".into(), series_entries(&series.w)?);
        }
        DumpTarget::G => {
            for (i, g) in series.generators.iter().enumerate() {
                map.insert(format!("G{}", i + 1), series_entries(g)?);
            }
        }
        DumpTarget::Metric => {
            for (n, &(i, j)) in COMPONENTS.iter().enumerate() {
                map.insert(component_label(i, j), series_entries(&series.metric[n])?);
            }
        }
    }
    Ok(map)
}

/// Pretty JSON with a trailing newline; byte-stable for equal inputs.
pub fn to_json(d: &Dump) -> Result<String> {
    let mut s = serde_json::to_string_pretty(d).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(s: &str) -> Result<Dump> {
    serde_json::from_str(s).map_err(|e| Error::Series(format!("malformed dump: {e}")))
}

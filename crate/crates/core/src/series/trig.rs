//! Finite Fourier series in one angle with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::poly::{CoefficientPoly, Monomial, Param};
use crate::scalar::rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Trig {
    Cos,
    Sin,
}

/// `Σ_k c_k cos kφ + s_k sin kφ`. Harmonic 0 has no sine part; zero entries are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrigSeries {
    terms: BTreeMap<(u32, Trig), CoefficientPoly>,
}

impl TrigSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(p: CoefficientPoly) -> Self {
        Self::single(0, Trig::Cos, p)
    }

    pub fn one() -> Self {
        Self::constant(CoefficientPoly::one())
    }

    pub fn single(harmonic: u32, trig: Trig, p: CoefficientPoly) -> Self {
        let mut s = Self::zero();
        s.push_term(harmonic as i64, trig, &p);
        s
    }

    pub fn sin(harmonic: u32) -> Self {
        Self::single(harmonic, Trig::Sin, CoefficientPoly::one())
    }

    pub fn cos(harmonic: u32) -> Self {
        Self::single(harmonic, Trig::Cos, CoefficientPoly::one())
    }

    /// Builds `prefactor · Σ_h c_h trig(hφ)` from integer coefficients.
    pub fn from_coefficients(
        trig: Trig,
        prefactor: BigRational,
        mono: Monomial,
        coefficients: &[(u32, i64)],
    ) -> Self {
        let mut s = Self::zero();
        for &(h, c) in coefficients {
            let p = CoefficientPoly::term(&prefactor * rational(c, 1), mono);
            s.push_term(h as i64, trig, &p);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Trig), &CoefficientPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, harmonic: u32, trig: Trig) -> CoefficientPoly {
        self.terms.get(&(harmonic, trig)).cloned().unwrap_or_default()
    }

    pub fn max_harmonic(&self) -> u32 {
        self.terms.keys().map(|(h, _)| *h).max().unwrap_or(0)
    }

    /// Adds `p · trig(hφ)` for a possibly negative harmonic `h`.
    fn push_term(&mut self, h: i64, trig: Trig, p: &CoefficientPoly) {
        if p.is_zero() {
            return;
        }
        let (h, sign) = match (trig, h < 0) {
            (Trig::Sin, true) => (-h, -1),
            (_, true) => (-h, 1),
            _ => (h, 1),
        };
        if trig == Trig::Sin && h == 0 {
            return;
        }
        let key = (h as u32, trig);
        let entry = self.terms.entry(key).or_default();
        if sign > 0 {
            *entry += p;
        } else {
            *entry = &*entry - p;
        }
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Angle average: the harmonic-0 part.
    pub fn average(&self) -> CoefficientPoly {
        self.coefficient(0, Trig::Cos)
    }

    /// Zero-mean part.
    pub fn oscillating(&self) -> Self {
        let mut s = self.clone();
        s.terms.remove(&(0, Trig::Cos));
        s
    }

    pub fn map_coefficients(&self, f: impl Fn(&CoefficientPoly) -> CoefficientPoly) -> Self {
        let mut s = Self::zero();
        for (&(h, t), p) in &self.terms {
            s.push_term(h as i64, t, &f(p));
        }
        s
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map_coefficients(|p| p.scale(c))
    }

    pub fn times_poly(&self, q: &CoefficientPoly) -> Self {
        self.map_coefficients(|p| p * q)
    }

    pub fn times_monomial(&self, mono: Monomial) -> Self {
        self.map_coefficients(|p| p.times_monomial(mono))
    }

    /// `∂/∂φ`.
    pub fn angle_derivative(&self) -> Self {
        let mut s = Self::zero();
        for (&(h, t), p) in &self.terms {
            let c = rational(h as i64, 1);
            match t {
                Trig::Cos => s.push_term(h as i64, Trig::Sin, &p.scale(&-c)),
                Trig::Sin => s.push_term(h as i64, Trig::Cos, &p.scale(&c)),
            }
        }
        s
    }

    pub fn param_derivative(&self, p: Param) -> Self {
        self.map_coefficients(|c| c.derivative(p))
    }

    /// Solves `ω ∂W/∂φ = ⟨Φ⟩ - Φ` with `⟨W⟩ = 0`, where `ω` is a monomial.
    pub fn solve_homological(&self, omega: Monomial) -> Result<Self> {
        let inv = omega.inverse();
        let mut w = Self::zero();
        for (&(h, t), p) in &self.terms {
            if h == 0 {
                continue;
            }
            let c = rational(1, h as i64);
            match t {
                Trig::Cos => w.push_term(h as i64, Trig::Sin, &p.times_monomial(inv).scale(&-c)),
                Trig::Sin => w.push_term(h as i64, Trig::Cos, &p.times_monomial(inv).scale(&c)),
            }
        }
        // The residue check: ω ∂W/∂φ + Φ must be the constant ⟨Φ⟩.
        let residue = &w.angle_derivative().times_monomial(omega) + self;
        if !residue.oscillating().is_zero() {
            return Err(Error::Internal("homological equation left a nonzero residue".into()));
        }
        Ok(w)
    }

    pub fn eval(&self, angle: f64, action: f64, m: f64, k: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(h, t), p)| {
                let a = h as f64 * angle;
                let trig = match t {
                    Trig::Cos => a.cos(),
                    Trig::Sin => a.sin(),
                };
                p.eval(action, m, k) * trig
            })
            .sum()
    }
}

impl Add for &TrigSeries {
    type Output = TrigSeries;

    fn add(self, o: &TrigSeries) -> TrigSeries {
        let mut s = self.clone();
        for (&(h, t), p) in &o.terms {
            s.push_term(h as i64, t, p);
        }
        s
    }
}

impl Sub for &TrigSeries {
    type Output = TrigSeries;

    fn sub(self, o: &TrigSeries) -> TrigSeries {
        self + &(-o)
    }
}

impl Neg for &TrigSeries {
    type Output = TrigSeries;

    fn neg(self) -> TrigSeries {
        self.map_coefficients(|p| -p)
    }
}

impl Mul for &TrigSeries {
    type Output = TrigSeries;

    /// Product with product-to-sum linearization.
    fn mul(self, o: &TrigSeries) -> TrigSeries {
        let half = rational(1, 2);
        let mut s = TrigSeries::zero();
        for (&(a, ta), pa) in &self.terms {
            for (&(b, tb), pb) in &o.terms {
                let c = (pa * pb).scale(&half);
                if c.is_zero() {
                    continue;
                }
                let (a, b) = (a as i64, b as i64);
                match (ta, tb) {
                    (Trig::Cos, Trig::Cos) => {
                        s.push_term(a - b, Trig::Cos, &c);
                        s.push_term(a + b, Trig::Cos, &c);
                    }
                    (Trig::Sin, Trig::Sin) => {
                        s.push_term(a - b, Trig::Cos, &c);
                        s.push_term(a + b, Trig::Cos, &-&c);
                    }
                    (Trig::Sin, Trig::Cos) => {
                        s.push_term(a + b, Trig::Sin, &c);
                        s.push_term(a - b, Trig::Sin, &c);
                    }
                    (Trig::Cos, Trig::Sin) => {
                        s.push_term(a + b, Trig::Sin, &c);
                        s.push_term(b - a, Trig::Sin, &c);
                    }
                }
            }
        }
        s
    }
}

impl fmt::Display for TrigSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(h, t), p)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let name = match t {
                Trig::Cos => "cos",
                Trig::Sin => "sin",
            };
            if h == 0 {
                write!(f, "[{p}]")?;
            } else {
                write!(f, "[{p}] {name}({h}φ)")?;
            }
        }
        Ok(())
    }
}

/// `sin^n φ` expanded into harmonics.
pub fn sin_power(n: u32) -> TrigSeries {
    let s = TrigSeries::sin(1);
    (0..n).fold(TrigSeries::one(), |acc, _| &acc * &s)
}

//! Rational polynomials in `I`, `m`, `k` with fractional exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponent denominator: all exponents are stored as multiples of 1/4.
pub const EXPONENT_UNIT: i32 = 4;

/// Differentiation variables of the quartic oscillator plus the action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    Mass,
    Stiffness,
    Coupling,
    Action,
}

impl Param {
    /// The three adiabatic parameters `(m, k, λ)` in index order.
    pub const ADIABATIC: [Param; 3] = [Param::Mass, Param::Stiffness, Param::Coupling];

    pub fn label(self) -> &'static str {
        match self {
            Param::Mass => "m",
            Param::Stiffness => "k",
            Param::Coupling => "lambda",
            Param::Action => "I",
        }
    }
}

/// `I^{i/4} m^{m/4} k^{k/4}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub i: i32,
    pub m: i32,
    pub k: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, m: 0, k: 0 };

    /// Exponents given in quarter units.
    pub const fn quarters(i: i32, m: i32, k: i32) -> Self {
        Self { i, m, k }
    }

    /// Exponents given in half units (the doubled-integer convention).
    pub const fn halves(i: i32, m: i32, k: i32) -> Self {
        Self { i: 2 * i, m: 2 * m, k: 2 * k }
    }

    /// `ω₀ = m^{-1/2} k^{1/2}`.
    pub const fn omega0() -> Self {
        Self::halves(0, -1, 1)
    }

    pub fn inverse(self) -> Self {
        Self { i: -self.i, m: -self.m, k: -self.k }
    }

    pub fn pow(self, n: i32) -> Self {
        Self { i: n * self.i, m: n * self.m, k: n * self.k }
    }

    /// Exponent of the given variable in quarter units; `λ` never appears here.
    pub fn exponent(&self, p: Param) -> i32 {
        match p {
            Param::Mass => self.m,
            Param::Stiffness => self.k,
            Param::Action => self.i,
            Param::Coupling => 0,
        }
    }

    fn lowered(mut self, p: Param) -> Self {
        match p {
            Param::Mass => self.m -= EXPONENT_UNIT,
            Param::Stiffness => self.k -= EXPONENT_UNIT,
            Param::Action => self.i -= EXPONENT_UNIT,
            Param::Coupling => {}
        }
        self
    }

    /// Doubled exponents `(2e_I, 2e_m, 2e_k)`, if all are half-integers.
    pub fn doubled(&self) -> Result<(i32, i32, i32)> {
        let h = |e: i32| {
            if e % 2 == 0 {
                Ok(e / 2)
            } else {
                Err(Error::Series(format!("exponent {e}/4 is not a half-integer")))
            }
        };
        Ok((h(self.i)?, h(self.m)?, h(self.k)?))
    }

    pub fn eval(&self, action: f64, m: f64, k: f64) -> f64 {
        let f = |base: f64, e: i32| match e {
            0 => 1.0,
            e if e % EXPONENT_UNIT == 0 => base.powi(e / EXPONENT_UNIT),
            e => base.powf(e as f64 / EXPONENT_UNIT as f64),
        };
        f(action, self.i) * f(m, self.m) * f(k, self.k)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, o: Monomial) -> Monomial {
        Monomial { i: self.i + o.i, m: self.m + o.m, k: self.k + o.k }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, e) in [("I", self.i), ("m", self.m), ("k", self.k)] {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "·")?;
            }
            first = false;
            let r = BigRational::new(e.into(), EXPONENT_UNIT.into());
            if r.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^({r})")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Finite sum of rational multiples of monomials. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoefficientPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl CoefficientPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn term(c: BigRational, mono: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Constant term, if this polynomial is a pure constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, mono: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn times_monomial(&self, mono: Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(m, v)| (*m * mono, v.clone())).collect() }
    }

    /// Partial derivative; `λ` does not appear in a coefficient, so `Coupling` gives zero.
    pub fn derivative(&self, p: Param) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let e = mono.exponent(p);
            if e != 0 {
                out.add_term(mono.lowered(p), c * BigRational::new(e.into(), EXPONENT_UNIT.into()));
            }
        }
        out
    }

    pub fn eval(&self, action: f64, m: f64, k: f64) -> f64 {
        self.terms
            .iter()
            .map(|(mono, c)| c.to_f64().unwrap_or(f64::NAN) * mono.eval(action, m, k))
            .sum()
    }

    pub fn max_abs_coefficient(&self) -> BigRational {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero)
    }
}

impl Add for &CoefficientPoly {
    type Output = CoefficientPoly;

    fn add(self, o: &CoefficientPoly) -> CoefficientPoly {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl AddAssign<&CoefficientPoly> for CoefficientPoly {
    fn add_assign(&mut self, o: &CoefficientPoly) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub for &CoefficientPoly {
    type Output = CoefficientPoly;

    fn sub(self, o: &CoefficientPoly) -> CoefficientPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &CoefficientPoly {
    type Output = CoefficientPoly;

    fn neg(self) -> CoefficientPoly {
        CoefficientPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &CoefficientPoly {
    type Output = CoefficientPoly;

    fn mul(self, o: &CoefficientPoly) -> CoefficientPoly {
        let mut out = CoefficientPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for CoefficientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (mono, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{mono}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    #[test]
    fn derivative_lowers_fractional_exponent() {
        // ∂/∂m m^{-1/2} = -1/2 m^{-3/2}
        let p = CoefficientPoly::term(rational(1, 1), Monomial::halves(0, -1, 0));
        let d = p.derivative(Param::Mass);
        assert_eq!(d, CoefficientPoly::term(rational(-1, 2), Monomial::halves(0, -3, 0)));
        assert!(p.derivative(Param::Coupling).is_zero());
        assert!(CoefficientPoly::one().derivative(Param::Stiffness).is_zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = CoefficientPoly::term(rational(3, 7), Monomial::quarters(1, 2, 3));
        assert!((&a - &a).is_zero());
        assert_eq!((&a + &a).len(), 1);
    }

    #[test]
    fn product_and_eval() {
        let a = CoefficientPoly::term(rational(1, 2), Monomial::quarters(2, -1, 0));
        let b = CoefficientPoly::term(rational(4, 1), Monomial::quarters(2, 1, 4));
        let c = &a * &b;
        assert_eq!(c, CoefficientPoly::term(rational(2, 1), Monomial::quarters(4, 0, 4)));
        assert!((c.eval(3.0, 5.0, 2.0) - 12.0).abs() < 1e-14);
        assert!((a.eval(4.0, 16.0, 1.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn doubled_rejects_quarter_exponents() {
        assert_eq!(Monomial::quarters(2, -4, 6).doubled().unwrap(), (1, -2, 3));
        assert!(Monomial::quarters(1, 0, 0).doubled().is_err());
    }
}

//! Truncated power series in `λ` whose coefficients are [`TrigSeries`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::poly::{CoefficientPoly, Monomial, Param, EXPONENT_UNIT};
use crate::series::trig::TrigSeries;

/// `Σ_{n=0}^{N} λⁿ T_n(φ)`, with everything above `λ^N` unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbationSeries {
    terms: Vec<TrigSeries>,
}

impl PerturbationSeries {
    pub fn zero(order: usize) -> Self {
        Self { terms: vec![TrigSeries::zero(); order + 1] }
    }

    pub fn constant(order: usize, t: TrigSeries) -> Self {
        let mut s = Self::zero(order);
        s.terms[0] = t;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, TrigSeries::one())
    }

    /// Builds a series from its coefficients `[T_0, T_1, ...]`; the order is `len - 1`.
    pub fn from_terms(terms: Vec<TrigSeries>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Series("a series needs at least the λ⁰ term".into()));
        }
        Ok(Self { terms })
    }

    /// `λ^power · t`, truncated at `order`.
    pub fn monomial(order: usize, power: usize, t: TrigSeries) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.terms[power] = t;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, n: usize) -> &TrigSeries {
        &self.terms[n]
    }

    pub fn terms(&self) -> &[TrigSeries] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(TrigSeries::is_zero)
    }

    /// Drops everything above `λ^order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch(order, self.order()));
        }
        Ok(Self { terms: self.terms[..=order].to_vec() })
    }

    /// Raises the nominal order by appending zero terms. Only meaningful when the
    /// series is known to be exact (a polynomial in `λ`).
    pub fn padded(&self, order: usize) -> Self {
        let mut s = self.clone();
        while s.terms.len() < order + 1 {
            s.terms.push(TrigSeries::zero());
        }
        s
    }

    pub fn map(&self, f: impl Fn(&TrigSeries) -> TrigSeries) -> Self {
        Self { terms: self.terms.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map(|t| t.scale(c))
    }

    pub fn times_monomial(&self, mono: Monomial) -> Self {
        self.map(|t| t.times_monomial(mono))
    }

    /// `λ^k · self`, truncated at the same order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order());
        for n in 0..self.terms.len() {
            if n + k <= self.order() {
                s.terms[n + k] = self.terms[n].clone();
            }
        }
        s
    }

    pub fn angle_derivative(&self) -> Self {
        self.map(TrigSeries::angle_derivative)
    }

    /// Partial derivative at fixed angle. For `λ` the known order drops by one.
    pub fn param_derivative(&self, p: Param) -> Self {
        match p {
            Param::Coupling => {
                if self.order() == 0 {
                    return Self::zero(0);
                }
                let terms = (1..self.terms.len())
                    .map(|n| self.terms[n].scale(&BigRational::from_integer(n.into())))
                    .collect();
                Self { terms }
            }
            _ => self.map(|t| t.param_derivative(p)),
        }
    }

    /// Product truncated at the common order; orders must match.
    pub fn product(&self, o: &Self) -> Result<Self> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch(self.order(), o.order()));
        }
        Ok(self.product_to(o, self.order()))
    }

    /// Product keeping terms up to `λ^order`. Terms of the inputs above their own
    /// orders are treated as zero.
    pub fn product_to(&self, o: &Self, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, a) in self.terms.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.terms.iter().enumerate() {
                if i + j > order || b.is_zero() {
                    continue;
                }
                s.terms[i + j] = &s.terms[i + j] + &(a * b);
            }
        }
        s
    }

    /// Exact product of two series regarded as polynomials in `λ`.
    pub fn product_untruncated(&self, o: &Self) -> Self {
        self.product_to(o, self.order() + o.order())
    }

    /// Angle average at every order.
    pub fn average(&self) -> Vec<CoefficientPoly> {
        self.terms.iter().map(TrigSeries::average).collect()
    }

    /// Angle average as a (φ-independent) series.
    pub fn average_series(&self) -> Self {
        self.map(|t| TrigSeries::constant(t.average()))
    }

    /// `1/a` for `a = 1 + O(λ)`, by the geometric series in `1 - a`.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.terms[0] != TrigSeries::one() {
            return Err(Error::Series("reciprocal needs a unit λ⁰ term".into()));
        }
        let n = self.order();
        let d = &Self::one(n) - self;
        let mut out = Self::one(n);
        let mut power = Self::one(n);
        for _ in 0..n {
            power = power.product_to(&d, n);
            out = &out + &power;
        }
        Ok(out)
    }

    /// `I^r (1 + u)^r = I^r Σ_j binom(r, j) u^j` for `u = O(λ)`.
    pub fn action_power(u: &Self, r: &BigRational) -> Result<Self> {
        if !u.terms[0].is_zero() {
            return Err(Error::Series("binomial expansion needs u = O(λ)".into()));
        }
        let quarters = r * BigRational::from_integer(EXPONENT_UNIT.into());
        if !quarters.is_integer() {
            return Err(Error::Series(format!("exponent {r} is not a multiple of 1/{EXPONENT_UNIT}")));
        }
        let e: i32 = quarters
            .to_integer()
            .try_into()
            .map_err(|_| Error::Series(format!("exponent {r} out of range")))?;
        let n = u.order();
        let mut out = Self::one(n);
        let mut power = Self::one(n);
        let mut binom = BigRational::one();
        for j in 1..=n {
            binom = binom * (r - BigRational::from_integer((j - 1).into()))
                / BigRational::from_integer(j.into());
            power = power.product_to(u, n);
            if binom.is_zero() {
                break;
            }
            out = &out + &power.scale(&binom);
        }
        Ok(out.times_monomial(Monomial::quarters(e, 0, 0)))
    }

    /// `(∂_p F)_{φ,I}` for `F(φ₀, I)` where `φ = φ₀ + δφ(φ₀, I)`:
    /// `∂_p F - (∂F/∂φ₀) / (∂φ/∂φ₀) · ∂_p δφ`.
    pub fn chain_derivative(&self, p: Param, shift: &Self) -> Result<Self> {
        let order = self.order().min(shift.order());
        let f = self.truncate(order)?;
        let shift = shift.truncate(order)?;
        let jac = &Self::one(order) + &shift.angle_derivative();
        let jinv = jac.reciprocal()?;
        let direct = f.param_derivative(p);
        let dshift = shift.param_derivative(p);
        let out_order = direct.order().min(dshift.order());
        let correction = f
            .angle_derivative()
            .product_to(&jinv, out_order)
            .product_to(&dshift, out_order);
        Ok(&direct.truncate(out_order)? - &correction)
    }

    pub fn eval(&self, lambda: f64, angle: f64, action: f64, m: f64, k: f64) -> f64 {
        let mut acc = 0.0;
        for t in self.terms.iter().rev() {
            acc = acc * lambda + t.eval(angle, action, m, k);
        }
        acc
    }

    /// Coefficient of `λⁿ` evaluated at a point.
    pub fn eval_order(&self, n: usize, angle: f64, action: f64, m: f64, k: f64) -> f64 {
        self.terms.get(n).map_or(0.0, |t| t.eval(angle, action, m, k))
    }

    pub fn max_abs_coefficient(&self) -> BigRational {
        self.terms
            .iter()
            .flat_map(|t| t.terms().map(|(_, p)| p.max_abs_coefficient()).collect::<Vec<_>>())
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

fn combine(a: &PerturbationSeries, b: &PerturbationSeries, f: impl Fn(&TrigSeries, &TrigSeries) -> TrigSeries) -> PerturbationSeries {
    let order = a.order().min(b.order());
    PerturbationSeries { terms: (0..=order).map(|n| f(&a.terms[n], &b.terms[n])).collect() }
}

impl Add for &PerturbationSeries {
    type Output = PerturbationSeries;

    /// Sum, known up to the smaller of the two orders.
    fn add(self, o: &PerturbationSeries) -> PerturbationSeries {
        combine(self, o, |a, b| a + b)
    }
}

impl Sub for &PerturbationSeries {
    type Output = PerturbationSeries;

    fn sub(self, o: &PerturbationSeries) -> PerturbationSeries {
        combine(self, o, |a, b| a - b)
    }
}

impl Neg for &PerturbationSeries {
    type Output = PerturbationSeries;

    fn neg(self) -> PerturbationSeries {
        self.map(|t| -t)
    }
}

impl fmt::Display for PerturbationSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, t) in self.terms.iter().enumerate() {
            writeln!(f, "λ^{n}: {t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;
    use crate::series::trig::Trig;

    #[test]
    fn reciprocal_of_one_plus_cosine() {
        let a = &PerturbationSeries::one(2) + &PerturbationSeries::monomial(2, 1, TrigSeries::cos(2));
        let b = a.reciprocal().unwrap();
        let cos2 = TrigSeries::cos(2);
        assert_eq!(b.term(1), &-&cos2);
        assert_eq!(b.term(2), &(&cos2 * &cos2));
        assert_eq!(a.product(&b).unwrap(), PerturbationSeries::one(2));
        assert!(PerturbationSeries::constant(2, TrigSeries::cos(1)).reciprocal().is_err());
    }

    #[test]
    fn square_root_expansion() {
        // u = λ a sin2φ, r = 1/2 → I^{1/2}(1 + λa/2 sin2φ - λ²a²/8 sin²2φ)
        let a = rational(3, 1);
        let u = PerturbationSeries::monomial(2, 1, TrigSeries::sin(2).scale(&a));
        let got = PerturbationSeries::action_power(&u, &rational(1, 2)).unwrap();
        let half_i = Monomial::quarters(2, 0, 0);
        assert_eq!(got.term(0), &TrigSeries::one().times_monomial(half_i));
        assert_eq!(got.term(1), &TrigSeries::sin(2).scale(&rational(3, 2)).times_monomial(half_i));
        let s2 = &TrigSeries::sin(2) * &TrigSeries::sin(2);
        assert_eq!(got.term(2), &s2.scale(&rational(-9, 8)).times_monomial(half_i));
        let zero = PerturbationSeries::zero(3);
        assert_eq!(
            PerturbationSeries::action_power(&zero, &rational(1, 2)).unwrap(),
            PerturbationSeries::constant(3, TrigSeries::constant(CoefficientPoly::term(rational(1, 1), half_i)))
        );
        assert!(PerturbationSeries::action_power(&PerturbationSeries::one(2), &rational(1, 2)).is_err());
    }

    #[test]
    fn coupling_derivative_lowers_order() {
        let t = TrigSeries::sin(3);
        let s = PerturbationSeries::monomial(3, 2, t.clone());
        let d = s.param_derivative(Param::Coupling);
        assert_eq!(d.order(), 2);
        assert_eq!(d.term(1), &t.scale(&rational(2, 1)));
    }

    #[test]
    fn product_orders_must_agree() {
        let a = PerturbationSeries::one(2);
        let b = PerturbationSeries::one(3);
        assert_eq!(a.product(&b), Err(Error::OrderMismatch(2, 3)));
        assert!(a.product(&PerturbationSeries::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn chain_rule_reduces_without_shift() {
        let f = PerturbationSeries::constant(2, TrigSeries::single(1, Trig::Sin, CoefficientPoly::term(rational(1, 1), Monomial::quarters(2, -1, -1))));
        let d = f.chain_derivative(Param::Mass, &PerturbationSeries::zero(2)).unwrap();
        assert_eq!(d, f.param_derivative(Param::Mass));
        assert_eq!(d.term(0).coefficient(1, Trig::Sin), CoefficientPoly::term(rational(-1, 4), Monomial::quarters(2, -5, -1)));
    }
}

//! Published closed forms of the quartic-oscillator series, transcribed term by
//! term. The pipeline in [`super::quartic`] must reproduce these exactly.

use crate::scalar::rational;
use crate::series::perturbation::PerturbationSeries;
use crate::series::poly::{CoefficientPoly, Monomial};
use crate::series::quartic::{METRIC_ORDER, ORDER};
use crate::series::trig::{Trig, TrigSeries};

fn sines(num: i64, den: i64, mono: Monomial, coefficients: &[(u32, i64)]) -> TrigSeries {
    TrigSeries::from_coefficients(Trig::Sin, rational(num, den), mono, coefficients)
}

fn constant(num: i64, den: i64, mono: Monomial) -> TrigSeries {
    TrigSeries::constant(CoefficientPoly::term(rational(num, den), mono))
}

fn series(order: usize, terms: Vec<TrigSeries>) -> PerturbationSeries {
    PerturbationSeries::from_terms(terms).expect("nonempty").padded(order)
}

/// `W = λW₁ + λ²W₂ + λ³W₃` (exponents as halves of `(I, m, k)`).
pub fn w() -> PerturbationSeries {
    // I²/(192 m²ω₀³), I³/(55296 m⁴ω₀⁶), I⁴/(5308416 m⁶ω₀⁹)
    let w1 = sines(1, 192, Monomial::halves(4, -1, -3), &[(2, 8), (4, -1)]);
    let w2 = sines(1, 55296, Monomial::halves(6, -2, -6), &[(2, -384), (4, 132), (6, -32), (8, 3)]);
    let w3 = sines(
        1,
        5308416,
        Monomial::halves(8, -3, -9),
        &[(2, 9264), (4, -4101), (6, 1624), (8, -441), (10, 72), (12, -5)],
    );
    series(ORDER, vec![TrigSeries::zero(), w1, w2, w3])
}

/// `G_i = α_{i0} + α_{i1} λ + α_{i2} λ²` for `i = m, k, λ`.
pub fn generators() -> [PerturbationSeries; 3] {
    let a10 = sines(-1, 4, Monomial::halves(2, -2, 0), &[(2, 1)]);
    // -(I² sin³φ₀ / 48 (km)^{3/2}) (cos 3φ₀ - 2 cos φ₀)
    let sin3 = crate::series::trig::sin_power(3);
    let bracket = &TrigSeries::cos(3) - &TrigSeries::cos(1).scale(&rational(2, 1));
    let a11 = (&sin3 * &bracket).times_poly(&CoefficientPoly::term(rational(-1, 48), Monomial::halves(4, -3, -3)));
    let a12 = sines(-1, 55296, Monomial::halves(6, -4, -6), &[(2, 318), (4, -204), (6, 95), (8, -27), (10, 3)]);

    let a20 = sines(-1, 4, Monomial::halves(2, 0, -2), &[(2, 1)]);
    let a21 = sines(1, 384, Monomial::halves(4, -1, -5), &[(2, 23), (4, -7), (6, 1)]);
    let a22 = sines(-1, 18432, Monomial::halves(6, -2, -8), &[(2, 362), (4, -156), (6, 53), (8, -11), (10, 1)]);

    let a30 = sines(1, 192, Monomial::halves(4, -1, -3), &[(2, -8), (4, 1)]);
    let a31 = sines(1, 27648, Monomial::halves(6, -2, -6), &[(2, 384), (4, -132), (6, 32), (8, -3)]);
    let a32 = sines(
        1,
        1769472,
        Monomial::halves(8, -3, -9),
        &[(2, -9264), (4, 4101), (6, -1624), (8, 441), (10, -72), (12, 5)],
    );
    [
        series(METRIC_ORDER, vec![a10, a11, a12]),
        series(METRIC_ORDER, vec![a20, a21, a22]),
        series(METRIC_ORDER, vec![a30, a31, a32]),
    ]
}

/// Classical metric components in `(11, 12, 13, 22, 23, 33)` order.
pub fn metric() -> [PerturbationSeries; 6] {
    let h = Monomial::halves;
    let row = |t: [(i64, i64, Monomial); 3]| {
        series(METRIC_ORDER, t.iter().map(|&(n, d, m)| constant(n, d, m)).collect())
    };
    [
        row([(1, 32, h(4, -4, 0)), (-1, 256, h(6, -5, -3)), (47, 32768, h(8, -6, -6))]),
        row([(1, 32, h(4, -2, -2)), (-7, 768, h(6, -3, -5)), (347, 98304, h(8, -4, -8))]),
        row([(1, 192, h(6, -3, -3)), (-103, 49152, h(8, -4, -6)), (15, 16384, h(10, -5, -9))]),
        row([(1, 32, h(4, 0, -4)), (-11, 768, h(6, -1, -7)), (1919, 294912, h(8, -2, -10))]),
        row([(1, 192, h(6, -1, -5)), (-439, 147456, h(8, -2, -8)), (7, 4608, h(10, -3, -11))]),
        row([(65, 73728, h(8, -2, -6)), (-89, 147456, h(10, -3, -9)), (130621, 382205952, h(12, -4, -12))]),
    ]
}

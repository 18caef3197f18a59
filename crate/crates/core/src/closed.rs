//! Closed-form metrics, connections and curvatures of the generalized harmonic
//! oscillator (GHO) and the GHO with a linear term, generic over [`Scalar`].
//!
//! Every function takes the frequency `ω = (XZ - Y²)^{1/2}` as an input so that
//! exact evaluation is possible at rational points where `ω` is rational.

use crate::scalar::Scalar;

/// GHO parameters together with their frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct GhoParams<T> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub omega: T,
}

/// GHO-with-linear-term parameters together with their frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct GhoLinParams<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
    pub omega: T,
}

impl<T: Scalar> GhoLinParams<T> {
    pub fn without_linear(&self) -> GhoParams<T> {
        GhoParams { x: self.x.clone(), y: self.y.clone(), z: self.z.clone(), omega: self.omega.clone() }
    }
}

pub type Mat3<T> = [[T; 3]; 3];
pub type Mat4<T> = [[T; 4]; 4];

fn scale3<T: Scalar>(s: &T, m: Mat3<T>) -> Mat3<T> {
    m.map(|row| row.map(|v| s.clone() * v))
}

fn scale4<T: Scalar>(s: &T, m: Mat4<T>) -> Mat4<T> {
    m.map(|row| row.map(|v| s.clone() * v))
}

fn add4<T: Scalar>(a: Mat4<T>, b: Mat4<T>) -> Mat4<T> {
    let mut out = a;
    for (ro, rb) in out.iter_mut().zip(b) {
        for (o, v) in ro.iter_mut().zip(rb) {
            *o = o.clone() + v;
        }
    }
    out
}

/// Parameter matrix shared by the classical and quantum GHO metrics.
pub fn gho_shape<T: Scalar>(p: &GhoParams<T>) -> Mat3<T> {
    let (x, y, z) = (p.x.clone(), p.y.clone(), p.z.clone());
    let two = T::int(2);
    let xz = x.clone() * z.clone();
    let c13 = two.clone() * y.clone() * y.clone() - xz.clone();
    let c12 = -(two.clone() * y.clone() * z.clone());
    let c23 = -(two * x.clone() * y.clone());
    [
        [z.clone() * z, c12.clone(), c13.clone()],
        [c12, T::int(4) * xz, c23.clone()],
        [c13, c23, x.clone() * x],
    ]
}

/// Lower-right block of the GHO-with-linear-term metrics.
fn embed_shape<T: Scalar>(m: Mat3<T>) -> Mat4<T> {
    let mut out: Mat4<T> = std::array::from_fn(|_| std::array::from_fn(|_| T::zero()));
    for (i, row) in m.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            out[i + 1][j + 1] = v;
        }
    }
    out
}

/// The `W`-dependent matrix multiplying `I/ω⁷` (classically) or `(n+½)/ħω⁷` (quantum).
pub fn gholin_linear_shape<T: Scalar>(p: &GhoLinParams<T>) -> Mat4<T> {
    let (w, x, y, z) = (p.w.clone(), p.x.clone(), p.y.clone(), p.z.clone());
    let o2 = p.omega.clone() * p.omega.clone();
    let o4 = o2.clone() * o2.clone();
    let w2 = w.clone() * w.clone();
    let y2 = y.clone() * y.clone();
    let z2 = z.clone() * z.clone();
    let two = T::int(2);
    let a01 = -(w.clone() * z2.clone() * o2.clone());
    let a02 = two.clone() * w.clone() * y.clone() * z.clone() * o2.clone();
    let a03 = -(w.clone() * y2.clone() * o2);
    let a12 = -(two * w2.clone() * y.clone() * z2.clone());
    let a13 = w2.clone() * y2.clone() * z.clone();
    let a23 = -(w2.clone() * y.clone() * (y2.clone() + x.clone() * z.clone()));
    [
        [z.clone() * o4, a01.clone(), a02.clone(), a03.clone()],
        [a01, w2.clone() * z2.clone() * z.clone(), a12.clone(), a13.clone()],
        [a02, a12, w2.clone() * z.clone() * (T::int(3) * y2.clone() + x.clone() * z), a23.clone()],
        [a03, a13, a23, w2 * x * y2],
    ]
}

/// Classical GHO metric `(I²/32ω⁴)·shape`.
pub fn gho_metric<T: Scalar>(p: &GhoParams<T>, action: &T) -> Mat3<T> {
    let s = action.clone() * action.clone() / (T::int(32) * p.omega.powi(4));
    scale3(&s, gho_shape(p))
}

/// Quantum GHO metric `((n²+n+1)/32ω⁴)·shape`; `n` may be any scalar.
pub fn gho_quantum_metric<T: Scalar>(p: &GhoParams<T>, n: &T) -> Mat3<T> {
    let s = (n.clone() * n.clone() + n.clone() + T::one()) / (T::int(32) * p.omega.powi(4));
    scale3(&s, gho_shape(p))
}

/// Hannay connection `A` and curvature `F` of the GHO at action `I`.
pub fn gho_hannay<T: Scalar>(p: &GhoParams<T>, action: &T) -> ([T; 3], Mat3<T>) {
    gho_forms(p, action)
}

/// Berry connection and curvature of GHO level `n`: Hannay's forms with `I → n + ½`.
pub fn gho_berry<T: Scalar>(p: &GhoParams<T>, n: &T) -> ([T; 3], Mat3<T>) {
    gho_forms(p, &(n.clone() + T::ratio(1, 2)))
}

fn gho_forms<T: Scalar>(p: &GhoParams<T>, c: &T) -> ([T; 3], Mat3<T>) {
    let w = p.omega.clone();
    let two = T::int(2);
    let four = T::int(4);
    let a = [
        T::zero(),
        c.clone() / (two.clone() * w.clone()),
        -(c.clone() * p.y.clone() / (two * p.z.clone() * w.clone())),
    ];
    let d = four * w.powi(3);
    let f12 = -(c.clone() * p.z.clone() / d.clone());
    let f13 = c.clone() * p.y.clone() / d.clone();
    let f23 = -(c.clone() * p.x.clone() / d);
    let f = [
        [T::zero(), f12.clone(), f13.clone()],
        [-f12, T::zero(), f23.clone()],
        [-f13, -f23, T::zero()],
    ];
    (a, f)
}

/// Classical metric of the GHO with linear term: `(I²/32ω⁴)·shape ⊕ (I/ω⁷)·linear_shape`.
pub fn gholin_metric<T: Scalar>(p: &GhoLinParams<T>, action: &T) -> Mat4<T> {
    let first = scale4(
        &(action.clone() * action.clone() / (T::int(32) * p.omega.powi(4))),
        embed_shape(gho_shape(&p.without_linear())),
    );
    let second = scale4(&(action.clone() / p.omega.powi(7)), gholin_linear_shape(p));
    add4(first, second)
}

/// Quantum metric of the GHO with linear term at level `n`.
pub fn gholin_quantum_metric<T: Scalar>(p: &GhoLinParams<T>, n: &T, hbar: &T) -> Mat4<T> {
    let first = scale4(
        &((n.clone() * n.clone() + n.clone() + T::one()) / (T::int(32) * p.omega.powi(4))),
        embed_shape(gho_shape(&p.without_linear())),
    );
    let half = n.clone() + T::ratio(1, 2);
    let second = scale4(&(half / (hbar.clone() * p.omega.powi(7))), gholin_linear_shape(p));
    add4(first, second)
}

/// Connection components of the GHO with linear term. `c` multiplies the `W`-free
/// part and `d` the `W²` part: classically `c = I, d = 1`; quantum `c = n+½, d = 1/ħ`.
fn gholin_connection<T: Scalar>(p: &GhoLinParams<T>, c: &T, d: &T) -> [T; 4] {
    let w = p.omega.clone();
    let two = T::int(2);
    let w2 = p.w.clone() * p.w.clone();
    let o4 = w.powi(4);
    [
        T::zero(),
        T::zero(),
        c.clone() / (two.clone() * w.clone())
            + d.clone() * w2.clone() * p.z.clone() / (two.clone() * o4.clone()),
        -(c.clone() * p.y.clone() / (two.clone() * p.z.clone() * w))
            - d.clone() * w2 * p.y.clone() / (two * o4),
    ]
}

fn gholin_curvature<T: Scalar>(p: &GhoLinParams<T>, c: &T, d: &T) -> Mat4<T> {
    let (w, x, y, z) = (p.w.clone(), p.x.clone(), p.y.clone(), p.z.clone());
    let o2 = p.omega.clone() * p.omega.clone();
    let s1 = c.clone() / (T::int(4) * p.omega.powi(3));
    let s2 = d.clone() / p.omega.powi(6);
    let w2 = w.clone() * w.clone();
    let mut upper: Mat4<T> = std::array::from_fn(|_| std::array::from_fn(|_| T::zero()));
    upper[1][2] = -(s1.clone() * z.clone()) - s2.clone() * w2.clone() * z.clone() * z.clone();
    upper[1][3] = s1.clone() * y.clone() + s2.clone() * w2.clone() * y.clone() * z.clone();
    upper[2][3] = -(s1 * x) - s2.clone() * w2 * y.clone() * y.clone();
    upper[0][2] = s2.clone() * w.clone() * z * o2.clone();
    upper[0][3] = -(s2 * w * y * o2);
    let mut f = upper.clone();
    for i in 0..4 {
        for j in 0..i {
            f[i][j] = -upper[j][i].clone();
        }
    }
    f
}

pub fn gholin_hannay<T: Scalar>(p: &GhoLinParams<T>, action: &T) -> ([T; 4], Mat4<T>) {
    (gholin_connection(p, action, &T::one()), gholin_curvature(p, action, &T::one()))
}

pub fn gholin_berry<T: Scalar>(p: &GhoLinParams<T>, n: &T, hbar: &T) -> ([T; 4], Mat4<T>) {
    let c = n.clone() + T::ratio(1, 2);
    let d = T::one() / hbar.clone();
    (gholin_connection(p, &c, &d), gholin_curvature(p, &c, &d))
}

/// Coefficient functions `(f_i, g_i, h_i)` of the generators
/// `G_i = f_i qp + g_i q² + h_i (p + (Y/Z) q)`, index order `(W, X, Y, Z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorCoefficients<T> {
    pub f: [T; 4],
    pub g: [T; 4],
    pub h: [T; 4],
}

pub fn gholin_generator_coefficients<T: Scalar>(p: &GhoLinParams<T>) -> GeneratorCoefficients<T> {
    let (w, x, y, z) = (p.w.clone(), p.x.clone(), p.y.clone(), p.z.clone());
    let om = p.omega.clone();
    let o2 = om.clone() * om.clone();
    let o3 = o2.clone() * om.clone();
    let o4 = o2.clone() * o2.clone();
    let two = T::int(2);
    let four = T::int(4);
    let xz_2y2 = x.clone() * z.clone() - two.clone() * y.clone() * y.clone();

    let f = [
        T::zero(),
        -(z.clone() / (four.clone() * o2.clone())),
        y.clone() / (two.clone() * o2.clone()),
        xz_2y2.clone() / (four * z.clone() * o2.clone()),
    ];
    // ∂_i (Y/Z)
    let d_yz = [T::zero(), T::zero(), T::one() / z.clone(), -(y.clone() / (z.clone() * z.clone()))];
    let y_over_z = y.clone() / z.clone();
    let g: [T; 4] = std::array::from_fn(|i| {
        y_over_z.clone() * f[i].clone() + d_yz[i].clone() / two.clone()
    });
    // ∂_i (Z/ω)
    let d_zw = [
        T::zero(),
        -(z.clone() * z.clone() / (two.clone() * o3.clone())),
        z.clone() * y.clone() / o3.clone(),
        xz_2y2 / (two.clone() * o3),
    ];
    // ∂_i (WZ/ω²)
    let d_wzw = [
        z.clone() / o2,
        -(w.clone() * z.clone() * z.clone() / o4.clone()),
        two.clone() * w.clone() * y.clone() * z / o4.clone(),
        -(w.clone() * y.clone() * y / o4),
    ];
    let h: [T; 4] = std::array::from_fn(|i| {
        w.clone() / (two.clone() * om.clone()) * d_zw[i].clone() - d_wzw[i].clone()
    });
    GeneratorCoefficients { f, g, h }
}

/// Quantum metric and Berry connection from the expectation values of the
/// symmetrized generator operators `Ĝ_i`, expressed through `f_i`,
/// `l_i = g_i - (Y/Z) f_i` and `m_i = h_i - (WZ/ω²) f_i`.
pub fn operator_metric_and_connection<T: Scalar>(
    p: &GhoLinParams<T>,
    n: &T,
    hbar: &T,
) -> (Mat4<T>, [T; 4]) {
    let c = gholin_generator_coefficients(p);
    let (w, y, z) = (p.w.clone(), p.y.clone(), p.z.clone());
    let om = p.omega.clone();
    let o2 = om.clone() * om.clone();
    let y_over_z = y / z.clone();
    let shift = w.clone() * z.clone() / o2.clone();
    let l: [T; 4] = std::array::from_fn(|i| c.g[i].clone() - y_over_z.clone() * c.f[i].clone());
    let m: [T; 4] = std::array::from_fn(|i| c.h[i].clone() - shift.clone() * c.f[i].clone());

    let half = n.clone() + T::ratio(1, 2);
    let quad = (T::one() + n.clone() + n.clone() * n.clone()) / T::int(2);
    let z2_o2 = z.clone() * z.clone() / o2.clone();
    let lin = half.clone() * om.clone() / (hbar.clone() * z.clone());
    let w2 = w.clone() * w;
    let ll_lin = T::int(4) * w2.clone() * z.powi(4) / o2.powi(3);

    let g: Mat4<T> = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let ll = l[i].clone() * l[j].clone();
            quad.clone() * (c.f[i].clone() * c.f[j].clone() + z2_o2.clone() * ll.clone())
                + lin.clone() * (ll_lin.clone() * ll + m[i].clone() * m[j].clone())
        })
    });
    let weight = half * z.clone() / om + w2 * z.clone() * z / (hbar.clone() * o2.powi(2));
    let a: [T; 4] = std::array::from_fn(|i| l[i].clone() * weight.clone());
    (g, a)
}

//! Arithmetic for sl(2,C) and SL(2,C).
//!
//! An algebra element is stored as the real 6-vector of rotation
//! coordinates `alpha` and boost coordinates `beta`,
//!
//! ```text
//! A = alpha_r M_r + beta_r L_r ,    r = 1, 2, 3,
//! ```
//!
//! with the matrix realization `L_r = sigma_r` (Pauli), `M_r = -i sigma_r`.
//! The bracket follows the structure constants
//!
//! ```text
//! [M_r, M_s] = eps_rst M_t,   [M_r, L_s] = eps_rst L_t,   [L_r, L_s] = -eps_rst M_t,
//! ```
//!
//! which in coordinates is the complex cross product of `w = alpha + i beta`.
//! With the Pauli realization above the matrix commutator equals *twice*
//! this bracket (`sigma_r sigma_s - sigma_s sigma_r = 2 i eps_rst sigma_t`),
//! a relation pinned down by tests rather than assumed.
//!
//! The orbit invariants are `c1 = |alpha|^2 - |beta|^2` and
//! `c2 = alpha . beta`; they tie to the matrix picture through
//! `det(to_matrix(A)) = c1 + 2 i c2`.

use num_traits::Float;

use crate::error::Error;
use crate::tol::Tolerances;
use crate::Complex;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);
const I: Complex = Complex::new(0.0, 1.0);

/// Complex 2x2 matrix, row-major: `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub d: Complex,
}

impl Mat2 {
    pub const fn new(a: Complex, b: Complex, c: Complex, d: Complex) -> Mat2 {
        Mat2 { a, b, c, d }
    }

    pub const IDENTITY: Mat2 = Mat2::new(ONE, ZERO, ZERO, ONE);
    pub const ZERO: Mat2 = Mat2::new(ZERO, ZERO, ZERO, ZERO);

    pub fn from_rows(rows: [[Complex; 2]; 2]) -> Mat2 {
        Mat2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn rows(&self) -> [[Complex; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn det(&self) -> Complex {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex {
        self.a + self.d
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }

    pub fn add(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)
    }

    pub fn sub(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c, self.d - rhs.d)
    }

    pub fn scale(&self, s: Complex) -> Mat2 {
        Mat2::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn neg(&self) -> Mat2 {
        self.scale(Complex::new(-1.0, 0.0))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Mat2 {
        Mat2::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    /// Inverse of a unimodular matrix (`det = 1` assumed; no division).
    pub fn inv_unimodular(&self) -> Mat2 {
        Mat2::new(self.d, -self.b, -self.c, self.a)
    }

    /// General inverse. `None` when the determinant is negligible.
    pub fn inv(&self) -> Option<Mat2> {
        let det = self.det();
        if det.norm() < 1e-300 {
            return None;
        }
        Some(Mat2::new(self.d / det, -self.b / det, -self.c / det, self.a / det))
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()).sqrt()
    }

    pub fn approx_eq(&self, rhs: &Mat2, tol: f64) -> bool {
        self.sub(rhs).norm() <= tol
    }

    pub fn is_finite(&self) -> bool {
        [self.a, self.b, self.c, self.d]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Apply to a column spinor.
    pub fn apply(&self, v: [Complex; 2]) -> [Complex; 2] {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }

    /// Exponential of a *traceless* matrix in closed form.
    ///
    /// Cayley-Hamilton gives `m^2 = -det(m) I`, so with `delta^2 = -det(m)`
    ///
    /// ```text
    /// exp(m) = cosh(delta) I + sinh(delta)/delta m .
    /// ```
    ///
    /// Both factors are even in `delta`, so the branch of the square root is
    /// irrelevant; a short series takes over near `delta = 0`.
    pub fn exp_traceless(&self) -> Mat2 {
        let delta_sq = -self.det();
        let (ch, f) = if delta_sq.norm() < 1e-8 {
            let d2 = delta_sq;
            let d4 = d2 * d2;
            let d6 = d4 * d2;
            (
                ONE + d2 / 2.0 + d4 / 24.0 + d6 / 720.0,
                ONE + d2 / 6.0 + d4 / 120.0 + d6 / 5040.0,
            )
        } else {
            let delta = delta_sq.sqrt();
            (delta.cosh(), delta.sinh() / delta)
        };
        Mat2::new(ch + f * self.a, f * self.b, f * self.c, ch + f * self.d)
    }
}

/// The six basis elements of sl(2,C): rotations `M_r`, boosts `L_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisElement {
    M1,
    M2,
    M3,
    L1,
    L2,
    L3,
}

impl BasisElement {
    pub const ALL: [BasisElement; 6] = [
        BasisElement::M1,
        BasisElement::M2,
        BasisElement::M3,
        BasisElement::L1,
        BasisElement::L2,
        BasisElement::L3,
    ];

    /// Matrix realization: `L_r = sigma_r`, `M_r = -i sigma_r`.
    pub fn matrix(self) -> Mat2 {
        self.algebra().to_matrix()
    }

    pub fn algebra(self) -> AlgebraElement {
        let mut alpha = [0.0; 3];
        let mut beta = [0.0; 3];
        match self {
            BasisElement::M1 => alpha[0] = 1.0,
            BasisElement::M2 => alpha[1] = 1.0,
            BasisElement::M3 => alpha[2] = 1.0,
            BasisElement::L1 => beta[0] = 1.0,
            BasisElement::L2 => beta[1] = 1.0,
            BasisElement::L3 => beta[2] = 1.0,
        }
        AlgebraElement { alpha, beta }
    }
}

/// The full basis as `(label, matrix)` pairs, in the order `M1..M3, L1..L3`.
pub fn basis() -> [(BasisElement, Mat2); 6] {
    let mut out = [(BasisElement::M1, Mat2::ZERO); 6];
    for (slot, b) in out.iter_mut().zip(BasisElement::ALL) {
        *slot = (b, b.matrix());
    }
    out
}

/// Orbit invariants, constant under the adjoint action.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Invariants {
    /// `|alpha|^2 - |beta|^2`
    pub c1: f64,
    /// `alpha . beta`
    pub c2: f64,
}

/// Element of sl(2,C) in rotation/boost coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraElement {
    pub alpha: [f64; 3],
    pub beta: [f64; 3],
}

fn cross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn dot(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

impl AlgebraElement {
    pub const ZERO: AlgebraElement = AlgebraElement {
        alpha: [0.0; 3],
        beta: [0.0; 3],
    };

    pub fn new(alpha: [f64; 3], beta: [f64; 3]) -> AlgebraElement {
        AlgebraElement { alpha, beta }
    }

    /// `mu M3 + nu L3`, the canonical semisimple direction.
    pub fn canonical_semisimple(mu: f64, nu: f64) -> AlgebraElement {
        AlgebraElement::new([0.0, 0.0, mu], [0.0, 0.0, nu])
    }

    /// `M1 + L2`, the canonical nilpotent element.
    pub fn canonical_nilpotent() -> AlgebraElement {
        AlgebraElement::new([1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
    }

    /// Coordinates as a 6-vector in the order `M1..M3, L1..L3`.
    pub fn coords(&self) -> [f64; 6] {
        [
            self.alpha[0],
            self.alpha[1],
            self.alpha[2],
            self.beta[0],
            self.beta[1],
            self.beta[2],
        ]
    }

    pub fn from_coords(v: [f64; 6]) -> AlgebraElement {
        AlgebraElement::new([v[0], v[1], v[2]], [v[3], v[4], v[5]])
    }

    /// Euclidean norm of the 6-vector `(alpha, beta)`.
    pub fn norm(&self) -> f64 {
        (dot(self.alpha, self.alpha) + dot(self.beta, self.beta)).sqrt()
    }

    pub fn scale(&self, s: f64) -> AlgebraElement {
        AlgebraElement::new(
            [self.alpha[0] * s, self.alpha[1] * s, self.alpha[2] * s],
            [self.beta[0] * s, self.beta[1] * s, self.beta[2] * s],
        )
    }

    pub fn add(&self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(
            [
                self.alpha[0] + rhs.alpha[0],
                self.alpha[1] + rhs.alpha[1],
                self.alpha[2] + rhs.alpha[2],
            ],
            [
                self.beta[0] + rhs.beta[0],
                self.beta[1] + rhs.beta[1],
                self.beta[2] + rhs.beta[2],
            ],
        )
    }

    pub fn sub(&self, rhs: &AlgebraElement) -> AlgebraElement {
        self.add(&rhs.scale(-1.0))
    }

    pub fn is_finite(&self) -> bool {
        self.coords().iter().all(|x| x.is_finite())
    }

    /// Matrix realization `sum_r (beta_r - i alpha_r) sigma_r`; traceless by
    /// construction and real-linear in `(alpha, beta)`.
    pub fn to_matrix(&self) -> Mat2 {
        let w = [
            Complex::new(self.alpha[0], self.beta[0]),
            Complex::new(self.alpha[1], self.beta[1]),
            Complex::new(self.alpha[2], self.beta[2]),
        ];
        // coefficient of sigma_r is -i w_r
        let c = [-I * w[0], -I * w[1], -I * w[2]];
        Mat2::new(
            c[2],
            c[0] - I * c[1],
            c[0] + I * c[1],
            -c[2],
        )
    }

    /// Inverse of [`to_matrix`](Self::to_matrix).
    pub fn from_matrix(m: &Mat2, tols: &Tolerances) -> Result<AlgebraElement, Error> {
        let tr = m.trace().norm();
        if tr > tols.tol_alg * (1.0 + m.norm()) {
            return Err(Error::NonTraceless { trace_norm: tr });
        }
        Ok(AlgebraElement::decompose(m))
    }

    /// Projection onto the sigma basis, discarding any residual trace.
    pub(crate) fn decompose(m: &Mat2) -> AlgebraElement {
        let half_tr = m.trace() / 2.0;
        let c3 = m.a - half_tr;
        let c1 = (m.b + m.c) / 2.0;
        let c2 = (m.b - m.c) * I / 2.0;
        let w = [I * c1, I * c2, I * c3];
        AlgebraElement::new(
            [w[0].re, w[1].re, w[2].re],
            [w[0].im, w[1].im, w[2].im],
        )
    }

    /// Lie bracket with the structure constants above. In coordinates this is
    /// the cross product of `w = alpha + i beta`:
    /// `alpha'' = alpha x alpha' - beta x beta'`,
    /// `beta'' = alpha x beta' + beta x alpha'`.
    pub fn bracket(&self, rhs: &AlgebraElement) -> AlgebraElement {
        let aa = cross(self.alpha, rhs.alpha);
        let bb = cross(self.beta, rhs.beta);
        let ab = cross(self.alpha, rhs.beta);
        let ba = cross(self.beta, rhs.alpha);
        AlgebraElement::new(
            [aa[0] - bb[0], aa[1] - bb[1], aa[2] - bb[2]],
            [ab[0] + ba[0], ab[1] + ba[1], ab[2] + ba[2]],
        )
    }

    /// Orbit invariants `c1 = |alpha|^2 - |beta|^2`, `c2 = alpha . beta`.
    pub fn invariants(&self) -> Invariants {
        Invariants {
            c1: dot(self.alpha, self.alpha) - dot(self.beta, self.beta),
            c2: dot(self.alpha, self.beta),
        }
    }

    /// `det(to_matrix(A))` as a complex number; equals `c1 + 2 i c2`.
    pub fn matrix_det(&self) -> Complex {
        self.to_matrix().det()
    }

    /// Matrix of `B -> [A, B]` in the basis `(M1..M3, L1..L3)`, row-major.
    pub fn ad_operator(&self) -> [[f64; 6]; 6] {
        let mut out = [[0.0; 6]; 6];
        let ca = cross_matrix(self.alpha);
        let cb = cross_matrix(self.beta);
        for r in 0..3 {
            for s in 0..3 {
                out[r][s] = ca[r][s];
                out[r][s + 3] = -cb[r][s];
                out[r + 3][s] = cb[r][s];
                out[r + 3][s + 3] = ca[r][s];
            }
        }
        out
    }

    /// Group element `exp(to_matrix(A))`; always unimodular.
    pub fn exp(&self) -> GroupElement {
        GroupElement {
            m: self.to_matrix().exp_traceless(),
        }
    }
}

fn cross_matrix(v: [f64; 3]) -> [[f64; 3]; 3] {
    [
        [0.0, -v[2], v[1]],
        [v[2], 0.0, -v[0]],
        [-v[1], v[0], 0.0],
    ]
}

/// Unimodular complex 2x2 matrix: a member of SL(2,C).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    m: Mat2,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { m: Mat2::IDENTITY };

    /// `-e`, the nontrivial central element.
    pub fn minus_identity() -> GroupElement {
        GroupElement {
            m: Mat2::IDENTITY.neg(),
        }
    }

    /// Checked constructor: `|det - 1| <= tol_det`.
    pub fn new(m: Mat2, tols: &Tolerances) -> Result<GroupElement, Error> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let err = (m.det() - ONE).norm();
        if err > tols.tol_det {
            return Err(Error::NonUnimodular { det_error: err });
        }
        Ok(GroupElement { m })
    }

    /// Unchecked constructor for matrices unimodular by construction.
    pub(crate) fn from_unimodular(m: Mat2) -> GroupElement {
        GroupElement { m }
    }

    /// Rescale an invertible matrix to determinant one.
    pub fn normalize(m: Mat2) -> Result<GroupElement, Error> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let det = m.det();
        if det.norm() < 1e-100 {
            return Err(Error::NonUnimodular { det_error: 1.0 });
        }
        let s = det.sqrt();
        Ok(GroupElement {
            m: m.scale(ONE / s),
        })
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn mul(&self, rhs: &GroupElement) -> GroupElement {
        GroupElement {
            m: self.m.mul(&rhs.m),
        }
    }

    pub fn inv(&self) -> GroupElement {
        GroupElement {
            m: self.m.inv_unimodular(),
        }
    }

    pub fn norm(&self) -> f64 {
        self.m.norm()
    }

    pub fn approx_eq(&self, rhs: &GroupElement, tol: f64) -> bool {
        self.m.approx_eq(&rhs.m, tol)
    }

    /// Adjoint action `A -> g A g^{-1}` pulled back to coordinates.
    pub fn adjoint(&self, a: &AlgebraElement) -> AlgebraElement {
        let m = self.m.mul(&a.to_matrix()).mul(&self.m.inv_unimodular());
        // conjugation preserves the trace; decompose directly
        AlgebraElement::decompose(&m)
    }
}

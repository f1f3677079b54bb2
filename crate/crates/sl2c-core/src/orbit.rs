//! Adjoint orbits of nonzero algebra elements and explicit conjugators onto
//! the canonical representatives.
//!
//! Every nonzero element lands, up to conjugation, on exactly one of
//!
//! ```text
//! mu M3 + nu L3   (mu > 0, nu != 0)      c1 = mu^2 - nu^2, c2 = mu nu
//! mu M3           (mu > 0)               c1 = mu^2,        c2 = 0
//! nu L3           (nu > 0)               c1 = -nu^2,       c2 = 0
//! M1 + L2                                c1 = c2 = 0   ("nilpotent")
//! ```
//!
//! The pair `(mu, nu)` is recovered deterministically from the identity
//! `det(to_matrix(A)) = c1 + 2 i c2 = (mu + i nu)^2` with the branch fixed
//! by `mu > 0`, falling back to `nu > 0` when `mu` vanishes.

use num_traits::Float;

use crate::algebra::{AlgebraElement, GroupElement, Mat2};
use crate::error::Error;
use crate::tol::Tolerances;
use crate::Complex;

/// Orbit of a single algebra element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ElementClass {
    Zero,
    Rotation { mu: f64 },
    Boost { nu: f64 },
    Mixed { mu: f64, nu: f64 },
    Nilpotent,
}

impl ElementClass {
    pub fn is_semisimple(&self) -> bool {
        matches!(
            self,
            ElementClass::Rotation { .. } | ElementClass::Boost { .. } | ElementClass::Mixed { .. }
        )
    }

    /// `(mu, nu)` of the canonical representative, when semisimple.
    pub fn mu_nu(&self) -> Option<(f64, f64)> {
        match *self {
            ElementClass::Rotation { mu } => Some((mu, 0.0)),
            ElementClass::Boost { nu } => Some((0.0, nu)),
            ElementClass::Mixed { mu, nu } => Some((mu, nu)),
            _ => None,
        }
    }

    /// Same orbit tag, with `(mu, nu)` compared to `tol`.
    pub fn approx_eq(&self, rhs: &ElementClass, tol: f64) -> bool {
        match (self, rhs) {
            (ElementClass::Zero, ElementClass::Zero) => true,
            (ElementClass::Nilpotent, ElementClass::Nilpotent) => true,
            (ElementClass::Rotation { mu: a }, ElementClass::Rotation { mu: b }) => {
                (a - b).abs() <= tol
            }
            (ElementClass::Boost { nu: a }, ElementClass::Boost { nu: b }) => (a - b).abs() <= tol,
            (
                ElementClass::Mixed { mu: a, nu: b },
                ElementClass::Mixed { mu: c, nu: d },
            ) => (a - c).abs() <= tol && (b - d).abs() <= tol,
            _ => false,
        }
    }
}

/// Classification result with the conjugator witness.
#[derive(Debug, Clone, Copy)]
pub struct OrbitReport {
    pub element_class: ElementClass,
    pub representative: AlgebraElement,
    /// `adjoint(conjugator, input) = representative` up to tolerance.
    pub conjugator: GroupElement,
}

/// Sort a nonzero element into its orbit.
pub fn classify_element(a: &AlgebraElement, tols: &Tolerances) -> ElementClass {
    let n = a.norm();
    if n <= tols.tol_cls {
        return ElementClass::Zero;
    }
    let inv = a.invariants();
    let scale = 1.0 + n * n;
    if inv.c1.abs() <= tols.tol_cls * scale && inv.c2.abs() <= tols.tol_cls * scale {
        return ElementClass::Nilpotent;
    }
    let root = Complex::new(inv.c1, 2.0 * inv.c2).sqrt();
    // principal branch has Re >= 0 already; tighten to mu > 0 or nu > 0
    let (mu, nu) = (root.re, root.im);
    let branch_tol = tols.tol_cls * (1.0 + n);
    if mu.abs() <= branch_tol {
        ElementClass::Boost { nu: nu.abs() }
    } else if nu.abs() <= branch_tol {
        ElementClass::Rotation { mu }
    } else {
        ElementClass::Mixed { mu, nu }
    }
}

/// Canonical representative of the class.
pub fn representative_of(class: &ElementClass) -> Option<AlgebraElement> {
    match *class {
        ElementClass::Zero => None,
        ElementClass::Rotation { mu } => Some(AlgebraElement::canonical_semisimple(mu, 0.0)),
        ElementClass::Boost { nu } => Some(AlgebraElement::canonical_semisimple(0.0, nu)),
        ElementClass::Mixed { mu, nu } => Some(AlgebraElement::canonical_semisimple(mu, nu)),
        ElementClass::Nilpotent => Some(AlgebraElement::canonical_nilpotent()),
    }
}

/// Classify and build an explicit conjugator onto the representative.
///
/// Semisimple inputs are reduced by diagonalizing the 2x2 matrix image;
/// nilpotent inputs by mapping the kernel line to `(1, 0)` and rescaling the
/// off-diagonal entry to `-2i`. Sign and phase ambiguities of the conjugator
/// are allowed; correctness is the post-condition
/// `adjoint(conjugator, a) = representative`.
pub fn canonical_form(a: &AlgebraElement, tols: &Tolerances) -> Result<OrbitReport, Error> {
    let class = classify_element(a, tols);
    let rep = representative_of(&class).ok_or(Error::ZeroElement)?;
    if a.sub(&rep).norm() <= tols.tol_cls * (1.0 + a.norm()) {
        return Ok(OrbitReport {
            element_class: class,
            representative: rep,
            conjugator: GroupElement::IDENTITY,
        });
    }
    let m = a.to_matrix();
    let p = match class {
        ElementClass::Nilpotent => nilpotent_frame(&m),
        _ => {
            let (mu, nu) = class.mu_nu().expect("semisimple");
            // target diagonal entry of the representative matrix
            let lambda = Complex::new(nu, -mu);
            let vp = eigenvector_2x2(&m, lambda);
            let vm = eigenvector_2x2(&m, -lambda);
            columns_to_sl2(vp, vm)?
        }
    };
    let conjugator = p.inv();
    Ok(OrbitReport {
        element_class: class,
        representative: rep,
        conjugator,
    })
}

/// Kernel-aligned frame for a rank-one nilpotent matrix image: columns
/// `(m w / -2i, w)` so that `P^{-1} m P = [[0, -2i], [0, 0]]`.
fn nilpotent_frame(m: &Mat2) -> GroupElement {
    // kernel direction: (b, -a) and (d, -c) both lie in it; take the larger
    let k1 = [m.b, -m.a];
    let k2 = [m.d, -m.c];
    let k = if k1[0].norm_sqr() + k1[1].norm_sqr() >= k2[0].norm_sqr() + k2[1].norm_sqr() {
        k1
    } else {
        k2
    };
    // any vector off the kernel; the orthogonal complement is safest
    let w = [-k[1].conj(), k[0].conj()];
    let mw = m.apply(w);
    let scale = Complex::new(0.0, -2.0);
    let kcol = [mw[0] / scale, mw[1] / scale];
    columns_to_sl2(kcol, w).expect("nilpotent frame is nonsingular")
}

/// Eigenvector of a 2x2 matrix for a known eigenvalue, from whichever row of
/// `m - lambda` is better conditioned.
fn eigenvector_2x2(m: &Mat2, lambda: Complex) -> [Complex; 2] {
    let r1 = [m.a - lambda, m.b];
    let r2 = [m.c, m.d - lambda];
    let n1 = r1[0].norm_sqr() + r1[1].norm_sqr();
    let n2 = r2[0].norm_sqr() + r2[1].norm_sqr();
    let row = if n1 >= n2 { r1 } else { r2 };
    let v = [row[1], -row[0]];
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / n, v[1] / n]
}

/// Matrix with the given columns, rescaled to determinant one.
fn columns_to_sl2(c1: [Complex; 2], c2: [Complex; 2]) -> Result<GroupElement, Error> {
    let m = Mat2::new(c1[0], c2[0], c1[1], c2[1]);
    GroupElement::normalize(m)
}

/// The six eigenpairs of `ad(mu M3 + nu L3)` on the complexified algebra.
///
/// Eigenvalues `{0, 0, i mu + nu, -i mu + nu, i mu - nu, -i mu - nu}` with
/// eigenvectors, in coordinates `(M1, M2, M3, L1, L2, L3)`:
/// `M3`, `L3`, `M1 + L2 - i M2 + i L1` and its three sign/conjugate variants.
pub fn adjoint_spectrum(
    mu: f64,
    nu: f64,
) -> Result<[(Complex, [Complex; 6]); 6], Error> {
    if mu == 0.0 && nu == 0.0 {
        return Err(Error::DegenerateInput);
    }
    let o = Complex::new(0.0, 0.0);
    let one = Complex::new(1.0, 0.0);
    let i = Complex::new(0.0, 1.0);
    Ok([
        (o, [o, o, one, o, o, o]),
        (o, [o, o, o, o, o, one]),
        (Complex::new(nu, mu), [one, -i, o, i, one, o]),
        (Complex::new(nu, -mu), [one, i, o, -i, one, o]),
        (Complex::new(-nu, mu), [one, -i, o, -i, -one, o]),
        (Complex::new(-nu, -mu), [one, i, o, i, -one, o]),
    ])
}

/// Apply a real 6x6 operator to a complex 6-vector.
pub fn apply_ad(op: &[[f64; 6]; 6], v: &[Complex; 6]) -> [Complex; 6] {
    let mut out = [Complex::new(0.0, 0.0); 6];
    for r in 0..6 {
        for k in 0..6 {
            out[r] += v[k] * op[r][k];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasisElement;

    fn tols() -> Tolerances {
        Tolerances::DEFAULT
    }

    #[test]
    fn classify_examples() {
        let t = tols();
        assert_eq!(
            classify_element(&AlgebraElement::canonical_nilpotent(), &t),
            ElementClass::Nilpotent
        );
        assert_eq!(classify_element(&AlgebraElement::ZERO, &t), ElementClass::Zero);
        match classify_element(&AlgebraElement::canonical_semisimple(1.0, 2.0), &t) {
            ElementClass::Mixed { mu, nu } => {
                assert!((mu - 1.0).abs() < 1e-12 && (nu - 2.0).abs() < 1e-12);
            }
            other => panic!("expected mixed, got {other:?}"),
        }
        match classify_element(&BasisElement::M3.algebra(), &t) {
            ElementClass::Rotation { mu } => assert!((mu - 1.0).abs() < 1e-12),
            other => panic!("expected rotation, got {other:?}"),
        }
        match classify_element(&BasisElement::L3.algebra(), &t) {
            ElementClass::Boost { nu } => assert!((nu - 1.0).abs() < 1e-12),
            other => panic!("expected boost, got {other:?}"),
        }
    }

    #[test]
    fn classify_stable_under_conjugation() {
        let t = tols();
        let g = AlgebraElement::new([0.4, -0.9, 0.3], [1.1, 0.2, -0.5]).exp();
        let moved = g.adjoint(&BasisElement::L3.algebra());
        match classify_element(&moved, &t) {
            ElementClass::Boost { nu } => assert!((nu - 1.0).abs() < 1e-9),
            other => panic!("expected boost, got {other:?}"),
        }
    }

    #[test]
    fn canonical_form_on_canonical_input_is_identity() {
        let rep = BasisElement::M3.algebra();
        let r = canonical_form(&rep, &tols()).unwrap();
        assert!(r.conjugator.approx_eq(&GroupElement::IDENTITY, 1e-12));
        assert!(r.representative.sub(&rep).norm() < 1e-12);
    }

    #[test]
    fn canonical_form_rotation_axis_swap() {
        // M2 is on the orbit of M3
        let a = BasisElement::M2.algebra();
        let r = canonical_form(&a, &tols()).unwrap();
        let moved = r.conjugator.adjoint(&a);
        assert!(moved.sub(&r.representative).norm() < 1e-10);
        assert!(r.representative.sub(&BasisElement::M3.algebra()).norm() < 1e-12);
    }

    #[test]
    fn canonical_form_nilpotent() {
        // M2 - L1 has c1 = c2 = 0
        let a = BasisElement::M2.algebra().sub(&BasisElement::L1.algebra());
        let r = canonical_form(&a, &tols()).unwrap();
        assert_eq!(r.element_class, ElementClass::Nilpotent);
        let moved = r.conjugator.adjoint(&a);
        assert!(moved.sub(&AlgebraElement::canonical_nilpotent()).norm() < 1e-10);
    }

    #[test]
    fn canonical_form_rejects_zero() {
        assert!(matches!(
            canonical_form(&AlgebraElement::ZERO, &tols()),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn spectrum_matches_ad_operator() {
        let (mu, nu) = (1.0, 0.7);
        let op = AlgebraElement::canonical_semisimple(mu, nu).ad_operator();
        for (ev, vec) in adjoint_spectrum(mu, nu).unwrap() {
            let image = apply_ad(&op, &vec);
            for k in 0..6 {
                assert!((image[k] - ev * vec[k]).norm() < 1e-13);
            }
        }
        assert!(matches!(adjoint_spectrum(0.0, 0.0), Err(Error::DegenerateInput)));
    }

    #[test]
    fn spectrum_boost_eigenvalues_real() {
        for (ev, _) in adjoint_spectrum(0.0, 1.0).unwrap() {
            assert!(ev.im.abs() < 1e-15);
        }
    }
}

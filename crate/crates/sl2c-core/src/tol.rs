//! Tolerance knobs for classification and membership decisions.
//!
//! All catalogs are low-dimensional and well-conditioned at unit scale, so a
//! single set of absolute tolerances with scale-aware weighting is enough;
//! exact rational arithmetic would buy nothing here.

/// Tolerances used by constructors, classifiers and membership predicates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Unimodularity check at `GroupElement` construction: `|det g - 1|`.
    pub tol_det: f64,
    /// Algebra identities (tracelessness, closure residuals, membership
    /// residuals of matrix entries).
    pub tol_alg: f64,
    /// Orbit classification: an element is nilpotent when
    /// `|c1|, |c2| <= tol_cls * (1 + |A|^2)`.
    pub tol_cls: f64,
    /// Rank decisions in span-growth: singular values below
    /// `tol_rank * largest` are treated as zero.
    pub tol_rank: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        tol_det: 1e-9,
        tol_alg: 1e-9,
        tol_cls: 1e-9,
        tol_rank: 1e-8,
    };

    /// Uniform override: every knob set to `tol` except the rank threshold,
    /// which is kept one order looser (it guards an O(1)-conditioned
    /// orthonormalization, not an identity check).
    pub fn uniform(tol: f64) -> Tolerances {
        Tolerances {
            tol_det: tol,
            tol_alg: tol,
            tol_cls: tol,
            tol_rank: tol * 10.0,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::DEFAULT
    }
}

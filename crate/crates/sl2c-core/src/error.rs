//! Error values shared by the library modules.

use core::fmt;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A matrix handed to `AlgebraElement::from_matrix` has `|trace| > tol`.
    NonTraceless { trace_norm: f64 },
    /// A matrix handed to `GroupElement::new` has `|det - 1| > tol`.
    NonUnimodular { det_error: f64 },
    /// The zero element has no orbit representative.
    ZeroElement,
    /// The zero four-vector has no orbit.
    ZeroVector,
    /// The zero spinor has no ray.
    ZeroSpinor,
    /// `adjoint_spectrum` needs `(mu, nu) != (0, 0)`.
    DegenerateInput,
    /// The input basis is not closed under the bracket.
    NotASubalgebra { residual: f64 },
    /// Numerical rank came out as five, which no subalgebra attains.
    UnclassifiableDimension,
    /// The group element is not a member of the descriptor's subgroup.
    NotMember,
    /// An element has a nonzero lower-left entry.
    NotTriangular,
    /// The requested computation is not available for this descriptor.
    Unsupported,
    /// A descriptor parameter is outside its admissible domain.
    InvalidParameter { what: &'static str },
    /// A value that must be finite is NaN or infinite.
    NonFinite,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonTraceless { trace_norm } => {
                write!(f, "matrix is not traceless (|trace| = {trace_norm:.3e})")
            }
            Error::NonUnimodular { det_error } => {
                write!(f, "matrix is not unimodular (|det - 1| = {det_error:.3e})")
            }
            Error::ZeroElement => write!(f, "the zero algebra element has no orbit"),
            Error::ZeroVector => write!(f, "the zero four-vector has no orbit"),
            Error::ZeroSpinor => write!(f, "the zero spinor has no ray"),
            Error::DegenerateInput => write!(f, "(mu, nu) must not both vanish"),
            Error::NotASubalgebra { residual } => {
                write!(f, "basis is not bracket-closed (residual {residual:.3e})")
            }
            Error::UnclassifiableDimension => {
                write!(f, "numerical rank 5: no subalgebra has dimension five")
            }
            Error::NotMember => write!(f, "element is not a member of the subgroup"),
            Error::NotTriangular => write!(f, "element is not upper triangular"),
            Error::Unsupported => write!(f, "not available for this descriptor"),
            Error::InvalidParameter { what } => write!(f, "invalid parameter: {what}"),
            Error::NonFinite => write!(f, "value is not finite"),
        }
    }
}

//! Computational catalogs for the real Lie group SL(2,C) and its Lie algebra
//! sl(2,C), the double cover of the proper orthochronous Lorentz group.
//!
//! The crate classifies:
//!
//! - nonzero algebra elements into their adjoint orbits, with an explicit
//!   conjugator to the canonical representative ([`orbit`]);
//! - generator sets into the fifteen conjugacy classes of subalgebras,
//!   together with the inclusion order between classes ([`subalgebra`]);
//! - matrices against the catalog of closed subgroups, including the
//!   non-connected families, their normalizers and connected components
//!   ([`subgroup`]);
//! - four-vectors, velocity rays and spinors into orbits of the low
//!   dimensional homogeneous spaces, and pairs of spaces by whether a
//!   covariant mapping between them exists ([`homspace`]).
//!
//! Everything is computed in `f64` with scale-aware tolerances
//! ([`tol::Tolerances`]); the catalogs are low-dimensional and
//! well-conditioned at unit scale. All values are immutable after
//! construction and every operation is a pure function, so the whole crate
//! is safe to use from multiple threads.
//!
//! The crate is `no_std` (with `alloc`); IO and the command-line front end
//! live in the companion `sl2c-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod homspace;
mod linalg;
pub mod orbit;
pub mod subalgebra;
pub mod subgroup;
pub mod tol;

pub use algebra::{AlgebraElement, BasisElement, GroupElement, Invariants, Mat2};
pub use error::Error;
pub use orbit::{ElementClass, OrbitReport};
pub use tol::Tolerances;

/// Complex scalar used throughout: `re` and `im` are IEEE-754 doubles.
pub type Complex = num_complex::Complex<f64>;

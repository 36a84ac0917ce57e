//! Exact computations on Legendrian projective varieties.
//!
//! The crate is `no_std` and only needs an allocator. It contains:
//!
//! * [`exactalg`]: rationals, sparse multivariate polynomials, resultants,
//!   rational linear algebra and reduction to prime fields;
//! * [`chowring`]: truncated graded-commutative algebras with intersection
//!   tables, where all Chern class identities are evaluated;
//! * [`contact`]: Legendrian checks on polynomial charts, discovery of
//!   compatible symplectic forms, Pfaff graphs and fundamental forms;
//! * [`bryant`]: the birational contactomorphism between the point/hyperplane
//!   flag variety and odd-dimensional projective space, conormal lifts and
//!   the parametrization attached to a homogeneous polynomial;
//! * [`chern`]: the Chern class obstructions and the numerology built on them;
//! * [`roots`]: root systems, parabolic subsets and index computations.
#![no_std]
// Matrix code reads more clearly with explicit indices.
#![allow(clippy::needless_range_loop)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bryant;
pub mod chern;
pub mod chowring;
pub mod contact;
mod error;
pub mod exactalg;
pub mod roots;

pub use error::{Error, Result};
pub use exactalg::{MultiPoly, Rational};

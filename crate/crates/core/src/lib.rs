//! Exact computation of n-Schur functions.
//!
//! The crate builds the truncated matrices `M_S` indexed by Maya sequences,
//! evaluates `f_S^n = det(M_S) / det(H_0)^N` with fraction-free elimination,
//! models finitely supported points of the grassmannian `Gr^n` with their
//! Plücker coordinates, and checks that the frame determinant `<0|g|W>`
//! expands as `sum_S <S|W> f_S^n`. The [`kp`] module specializes the
//! coefficients to time variables for tau-function quotients.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod grassmann;
pub mod kp;
pub mod maya;
pub mod nschur;

pub use error::{Error, Result};
pub use exactalg::{Polynomial, Rational, RationalFunction, Variable};
pub use maya::{MayaSequence, Partition};

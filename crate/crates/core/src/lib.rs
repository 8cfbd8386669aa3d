//! Exact arithmetic in truncated rings of arithmetic functions under
//! Dirichlet convolution, plus a small analyzer for the divisor lattices
//! of positive integers.
//!
//! An [`ArithFunc`] holds the values `α(1), …, α(N)` of an arithmetic
//! function in one of two coefficient domains: the rationals or the
//! integers. Because `(α∗β)(n)` only reads indices dividing `n`, every
//! ring operation is exact and closed at the truncation bound `N`, and
//! every verdict the library returns (divisibility, associates, units)
//! is a statement "at bound N".
//!
//! ```
//! use liouville::{classical::{self, NamedFunction}, ArithFunc};
//!
//! let mu = classical::build(NamedFunction::Mobius, 100).unwrap();
//! let one = classical::build(NamedFunction::One, 100).unwrap();
//! let eps = ArithFunc::epsilon(100, mu.domain()).unwrap();
//! assert_eq!(mu.convolve(&one).unwrap(), eps);
//! ```

pub mod classical;
mod coefficient;
mod error;
pub mod factorization;
pub mod io;
mod kernel;
pub mod lattice;
mod ring;

pub use coefficient::{Coefficient, Domain};
pub use error::{Error, Result};
pub use ring::{ArithFunc, DivisionVerdict, Rank};

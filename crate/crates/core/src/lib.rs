//! Exact arithmetic for Lascoux coefficients, Lascoux polynomials and the
//! ML-degree polynomials of generic linear concentration models.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is computed over
//! arbitrary-precision integers and rationals; nothing is ever rounded.
//!
//! ```
//! use lascoux_core::{Engine, Rational};
//!
//! let mut engine = Engine::new();
//! let phi = engine.phi_poly(3).unwrap();
//! // phi(n, 3) = (n - 1)^2
//! assert_eq!(phi.phi.eval_int(4), Rational::from_integer(9.into()));
//! ```

#![no_std]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod identities;
pub mod index_set;
pub mod lascoux;
pub mod ml_degree;
pub mod psi;

mod engine;

pub use arith::{Polynomial, Rational};
pub use engine::Engine;
pub use error::{Error, Result};
pub use index_set::IndexSet;
pub use lascoux::{LascouxPolynomial, Route};
pub use ml_degree::PhiResult;
pub use psi::{PsiSource, PsiTable};

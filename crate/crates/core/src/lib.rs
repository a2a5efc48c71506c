//! Exact computations with finitely presented groups.
//!
//! The crate covers the algebra needed to go from a group presentation to
//! homology of its abelian covers:
//!
//! * [`word`] and [`presentation`]: free-group words, Tietze moves and
//!   abelianization.
//! * [`snf`]: Smith normal form over arbitrary-precision integers and the
//!   [`AbelianGroup`] type every homology computation returns.
//! * [`laurent`]: multivariable integer Laurent polynomials with exact
//!   determinants, gcds and cyclotomic helpers.
//! * [`fox`]: Fox free differential calculus and Alexander polynomials.
//! * [`cover`]: Reidemeister–Schreier presentations of finite cyclic covers,
//!   transfers and Dehn fillings.
//! * [`branched`]: Betti numbers of branched covers via shared roots with
//!   `1 + t + ... + t^(n-1)`.
//!
//! Everything is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod branched;
pub mod cover;
mod error;
pub mod fox;
pub mod laurent;
pub mod presentation;
pub mod snf;
pub mod word;

pub use branched::{branched_betti, mutation_invariance_check, BettiNumber};
pub use cover::{CoverPresentation, CyclicQuotientMap, FillingSpec};
pub use error::{Error, Result};
pub use fox::{alexander_matrix, alexander_poly, fox_derivative, AbelianizationMap, AlexanderMatrix};
pub use laurent::{LaurentMatrix, LaurentPoly, RootCount, SignedMonomial, Vars};
pub use presentation::Presentation;
pub use snf::{AbelianGroup, IntegerMatrix, SmithForm};
pub use word::{Letter, Word};

pub use num_bigint::BigInt;

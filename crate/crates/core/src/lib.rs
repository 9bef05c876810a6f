//! Exact computational commutative algebra for deciding the containment of
//! the symbolic cube in the ordinary square, `I^(3) ⊆ I^2`, for 3-generated
//! ideals of reduced points in the projective plane.
//!
//! The engine decides the containment two independent ways: a homological
//! criterion driven by the Hilbert-Burch presentation of the ideal (a module
//! membership test against the transpose of the last map in the minimal free
//! resolution of `I^3`), and a brute-force oracle that saturates `I^3` and
//! reduces its generators against a Groebner basis of `I^2`. Built-in Fermat,
//! Klein and star point configurations exercise both paths.

pub mod configs;
pub mod criterion;
pub mod driver;
mod engine;
pub mod error;
pub mod field;
pub mod groebner;
mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod resolve;
pub mod syzygy;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Ring};

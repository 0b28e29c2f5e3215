//! Exact arithmetic for the recurrence `w_0 = w_1 = 1`,
//! `w_n = (x - 2) w_{n-1} - w_{n-2}`, its factorization into shifted
//! real-cyclotomic polynomials `Ω_d`, and the monogenicity and Galois
//! cyclicity checks built on top of it.
//!
//! All integer polynomial arithmetic is exact over [`num_bigint::BigInt`].
//! Randomized finite-field factoring is seeded, so every result is
//! reproducible.

pub mod cyclotomic;
pub mod error;
pub mod fppoly;
pub mod galois;
pub mod intpoly;
pub mod monogenicity;
pub mod numtheory;
pub mod oracle;
pub mod sequences;
pub mod verify;

pub use cyclotomic::{factor_w, omega, primitive_divisor, OmegaFactor, WFactorization};
pub use error::{Error, Result};
pub use fppoly::FpPoly;
pub use galois::{condition_c, ConditionCVerdict, QuarticClass};
pub use intpoly::IntPoly;
pub use monogenicity::{monogenic_verdict, MonogenicReport, Verdict};
pub use sequences::{term, SeqKind};

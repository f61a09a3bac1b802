//! Exact rational and cyclotomic arithmetic.

pub mod field;
pub mod galois;
pub mod matrix;
pub mod number;
pub mod poly;
pub mod sign;
pub mod sqrt;

pub type Rational = num_rational::BigRational;

pub use galois::{apply_galois, GaloisAutomorphism};
pub use matrix::CycMatrix;
pub use number::CycNumber;
pub use poly::cyclotomic_polynomial;
pub use sign::sign_of_real;
pub use sqrt::{sqrt_integer, sqrt_rational};

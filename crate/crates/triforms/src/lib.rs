//! Exact computation with q-series of triangular, square and hexagonal forms.
//!
//! Everything runs over arbitrary-precision rationals; there is no floating
//! point anywhere. Series live on the q^(1/24) exponent grid so that the eta
//! prefactor q^(1/24) and the triangular prefactor q^(h/8) share one exponent
//! convention.

pub mod arith;
pub mod basis;
pub mod descriptor;
pub mod eisenstein;
pub mod etaq;
pub mod forms;
pub mod identities;
pub mod qseries;
pub mod solve;

pub use qseries::Series24;

/// Rational scalar used throughout.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for integers as rationals.
pub fn int(n: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::from_integer(BigInt::from(n))
}

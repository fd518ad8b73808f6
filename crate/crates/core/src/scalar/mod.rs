//! Exact scalars: rationals and the cyclotomic field Q(ζ₁₂).

mod cyclotomic;
mod rational;

pub use cyclotomic::CycScalar;
pub use rational::Rational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> CycScalar {
    CycScalar::from_int(n)
}

/// Shorthand for a rational scalar `n/d`.
pub fn frac(n: i64, d: i64) -> CycScalar {
    CycScalar::frac(n, d)
}

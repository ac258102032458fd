//! Exact arithmetic: unbounded rationals, polynomials, rational functions,
//! and linear solving over the rational-function field.
//!
//! Scalars are [`num::BigRational`]; the polynomial and rational-function
//! layers are local.

mod func;
mod poly;
mod solve;

pub use func::RationalFunction;
pub use poly::Poly;
pub use solve::solve_linear_system;

use num::{BigInt, BigRational, One, Signed};

/// Exact rational scalar used across the crate.
pub type Rational = BigRational;

/// Render a rational as `a/b`, or plain `a` when integral.
pub fn rational_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `a/b` or `a` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// 12-significant-digit decimal rendering, for the `--decimal` CLI flag.
pub fn decimal_string(x: &BigRational) -> String {
    let sign = if x.is_negative() { "-" } else { "" };
    let abs = x.abs();
    let scale = BigInt::from(10u64).pow(12);
    let scaled = (abs.numer() * &scale) / abs.denom();
    let digits = scaled.to_string();
    if digits == "0" {
        return "0".to_string();
    }
    let int_len = digits.len().saturating_sub(12);
    if int_len == 0 {
        let frac = format!("{digits:0>12}");
        format!("{sign}0.{}", frac.trim_end_matches('0'))
            .trim_end_matches('.')
            .to_string()
    } else {
        let (int_part, frac_part) = digits.split_at(int_len);
        let frac = frac_part.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

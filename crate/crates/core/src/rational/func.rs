//! Rational functions in one variable over exact rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigRational, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// A reduced ratio of polynomials.
///
/// Invariants after normalization: `den` is nonzero with integer
/// coefficients of content 1 and positive lowest nonzero coefficient, and
/// `gcd(num, den) = 1`. This makes equality structural and prints
/// denominators the way generating functions are usually written
/// (e.g. `1 - z - z^2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut num = num;
        let mut den = den;
        if num.is_zero() {
            return RationalFunction {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        if !g.is_zero() && g.degree() != Some(0) {
            num = num.div_rem(&g).0;
            den = den.div_rem(&g).0;
        }
        let scale = den.content().recip();
        RationalFunction {
            num: num.scale(&scale),
            den: den.scale(&scale),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact value at `x`; error if `x` is a pole.
    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational> {
        let den = self.den.evaluate(x);
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.evaluate(x) / den)
    }

    /// Formal derivative via the quotient rule, reduced.
    pub fn differentiate(&self) -> RationalFunction {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(num, &self.den * &self.den)
    }

    /// First `n + 1` Taylor coefficients at 0 via the recurrence induced by
    /// the denominator; error if the denominator vanishes at 0.
    pub fn series_coefficients(&self, n: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(self.den.coeffs().len().saturating_sub(1)) {
                let prev: &BigRational = &out[k - j];
                acc -= self.den.coeff(j) * prev;
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    pub fn reciprocal(&self) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(RationalFunction::new(self.den.clone(), self.num.clone()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let strings = |p: &Poly| -> Vec<String> {
            p.coeffs().iter().map(super::rational_string).collect()
        };
        serde_json::json!({ "num": strings(&self.num), "den": strings(&self.den) })
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_integers(num), Poly::from_integers(den))
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn reduction_is_canonical() {
        // (z^2 - 1) / (z + 1) reduces to z - 1.
        assert_eq!(rf(&[-1, 0, 1], &[1, 1]), rf(&[-1, 1], &[1]));
        // Denominator scaling is normalized away.
        assert_eq!(rf(&[2, 2], &[-2, 2]), rf(&[-1, -1], &[1, -1]));
    }

    #[test]
    fn field_identities() {
        let f = rf(&[1, 2], &[1, 0, 3]);
        let g = rf(&[0, 5], &[2, 1]);
        assert_eq!(&(&f + &g) - &g, f);
        assert_eq!(&(&f * &g) / &g, f);
    }

    #[test]
    fn series_of_fibonacci_like() {
        // z^2 / (1 - z - z^2): Fibonacci recurrence.
        let f = rf(&[0, 0, 1], &[1, -1, -1]);
        let coeffs = f.series_coefficients(8).unwrap();
        let expect: Vec<BigRational> = [0, 0, 1, 1, 2, 3, 5, 8, 13]
            .iter()
            .map(|&n| BigRational::from_integer(n.into()))
            .collect();
        assert_eq!(coeffs, expect);
    }

    #[test]
    fn series_examples_exact() {
        let f = rf(&[1, 1, 2], &[1, -2, -1]);
        let series = f.series_coefficients(6).unwrap();
        let expect: Vec<BigRational> = [1, 3, 9, 21, 51, 123, 297]
            .iter()
            .map(|&n| BigRational::from_integer(n.into()))
            .collect();
        assert_eq!(series, expect);

        let f = rf(&[0, 0, 0, 6], &[1, -2, -1]);
        let series = f.series_coefficients(8).unwrap();
        let expect: Vec<BigRational> = [0, 0, 0, 6, 12, 30, 72, 174, 420]
            .iter()
            .map(|&n| BigRational::from_integer(n.into()))
            .collect();
        assert_eq!(series, expect);
    }

    #[test]
    fn series_pole_at_zero_rejected() {
        let f = rf(&[1], &[0, 1]);
        assert_eq!(f.series_coefficients(3).unwrap_err(), Error::PoleAtZero);
    }

    #[test]
    fn evaluate_examples() {
        let f = rf(&[1, 1], &[1, -1, -1]);
        assert_eq!(f.evaluate(&q(0, 1)).unwrap(), q(1, 1));
        assert!(rf(&[1], &[1, -1]).evaluate(&q(1, 1)).is_err());

        // Total first-occurrence probability of a single word is 1:
        // z^4 / (z^4 + (1 - 2z)(1 + z^2)) at z = 1/2.
        let den = &Poly::from_integers(&[0, 0, 0, 0, 1])
            + &(&Poly::from_integers(&[1, -2]) * &Poly::from_integers(&[1, 0, 1]));
        let f = RationalFunction::new(Poly::from_integers(&[0, 0, 0, 0, 1]), den);
        assert_eq!(f.evaluate(&q(1, 2)).unwrap(), q(1, 1));
    }

    #[test]
    fn differentiate_examples() {
        assert!(rf(&[7], &[1]).differentiate().is_zero());
        assert_eq!(rf(&[0, 0, 0, 1], &[1]).differentiate(), rf(&[0, 0, 3], &[1]));
        // Wait time for HTHT: z * G'(z) at 1/2 where G = z^4/(z^4 + (1-2z)(1+z^2)).
        let den = &Poly::from_integers(&[0, 0, 0, 0, 1])
            + &(&Poly::from_integers(&[1, -2]) * &Poly::from_integers(&[1, 0, 1]));
        let g = RationalFunction::new(Poly::from_integers(&[0, 0, 0, 0, 1]), den);
        let wait = g.differentiate().evaluate(&q(1, 2)).unwrap() * q(1, 2);
        assert_eq!(wait, q(20, 1));
    }

    #[test]
    fn series_agrees_with_long_division() {
        let f = rf(&[1, 1, 2], &[1, -2, -1]);
        let n = 10;
        let series = f.series_coefficients(n).unwrap();
        // Reference: multiply back and compare against the numerator mod z^(n+1).
        let series_poly = Poly::new(series.clone());
        let product = &series_poly * f.den();
        for k in 0..=n {
            assert_eq!(product.coeff(k), f.num().coeff(k), "coefficient {k}");
        }
    }
}

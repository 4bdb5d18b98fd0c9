//! Exact-when-possible scalar arithmetic.
//!
//! Parameters like β, δ and q enter from the CLI as rationals (`3/2` or
//! a decimal with at most six fractional digits). Keeping them rational
//! makes threshold computations such as `⌊δ·t⌋` and
//! `⌈((β−α)/(δ−α))·k⌉` exact, so floor/ceil never flips on a float
//! representation error. Values that are inherently irrational (a δ*
//! found by binary search) degrade to `f64`, and any mixed operation
//! degrades with them.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

/// Largest denominator accepted when converting a decimal literal.
pub const DECIMAL_DENOMINATOR_CAP: i128 = 1_000_000;

/// A number that is either an exact rational or a binary64 real.
#[derive(Debug, Clone, Copy)]
pub enum Scalar {
    Rat(Ratio<i128>),
    Real(f64),
}

impl Scalar {
    pub fn from_int(v: i128) -> Self {
        Scalar::Rat(Ratio::from_integer(v))
    }

    pub fn from_ratio(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::Input("ratio with zero denominator".into()));
        }
        Ok(Scalar::Rat(Ratio::new(num, den)))
    }

    pub fn rat(r: Ratio<i128>) -> Self {
        Scalar::Rat(r)
    }

    /// Parses `p/q`, an integer, or a decimal. Decimals are converted
    /// exactly when they have at most six fractional digits; longer
    /// ones are rounded to the nearest multiple of 1e-6.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |m: &str| Error::Config(format!("cannot parse number `{s}`: {m}"));
        if let Some((num, den)) = s.split_once('/') {
            let n: i128 = num.trim().parse().map_err(|_| bad("bad numerator"))?;
            let d: i128 = den.trim().parse().map_err(|_| bad("bad denominator"))?;
            if d == 0 {
                return Err(bad("zero denominator"));
            }
            return Ok(Scalar::Rat(Ratio::new(n, d)));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let sign = if int.trim_start().starts_with('-') { -1i128 } else { 1 };
            let ip: i128 = if int.is_empty() || int == "-" {
                0
            } else {
                int.parse().map_err(|_| bad("bad integer part"))?
            };
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("bad fractional part"));
            }
            if frac.len() <= 6 {
                let den = 10i128.pow(frac.len() as u32);
                let fp: i128 = frac.parse().map_err(|_| bad("bad fractional part"))?;
                return Ok(Scalar::Rat(Ratio::new(ip * den + sign * fp, den)));
            }
            // Round to the documented denominator cap.
            let x: f64 = s.parse().map_err(|_| bad("not a number"))?;
            let num = (x * DECIMAL_DENOMINATOR_CAP as f64).round() as i128;
            return Ok(Scalar::Rat(Ratio::new(num, DECIMAL_DENOMINATOR_CAP)));
        }
        let n: i128 = s.parse().map_err(|_| bad("not a number"))?;
        Ok(Scalar::from_int(n))
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Real(x) => *x,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    /// Exact for rationals; `f64::floor` otherwise.
    pub fn floor(&self) -> i128 {
        match self {
            Scalar::Rat(r) => r.floor().to_integer(),
            Scalar::Real(x) => x.floor() as i128,
        }
    }

    /// Exact for rationals; `f64::ceil` otherwise.
    pub fn ceil(&self) -> i128 {
        match self {
            Scalar::Rat(r) => r.ceil().to_integer(),
            Scalar::Real(x) => x.ceil() as i128,
        }
    }

    /// `⌊self · t⌋` with `t` a non-negative integer.
    pub fn floor_mul(&self, t: u64) -> i128 {
        (*self * Scalar::from_int(t as i128)).floor()
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Real(x) => *x < 0.0,
        }
    }

    pub fn zero() -> Self {
        Scalar::Rat(Ratio::zero())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) if r.is_integer() => write!(f, "{}", r.to_integer()),
            Scalar::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Real(x) => write!(f, "{x}"),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            _ => self.as_f64() == other.as_f64(),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.partial_cmp(b),
            _ => self.as_f64().partial_cmp(&other.as_f64()),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.$method(b)),
                    (a, b) => Scalar::Real(a.as_f64().$method(b.as_f64())),
                }
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_and_decimal() {
        assert_eq!(Scalar::parse("3/2").unwrap(), Scalar::from_ratio(3, 2).unwrap());
        assert_eq!(Scalar::parse("1.5").unwrap(), Scalar::from_ratio(3, 2).unwrap());
        assert_eq!(Scalar::parse("2").unwrap(), Scalar::from_int(2));
        assert_eq!(Scalar::parse("0.25").unwrap(), Scalar::from_ratio(1, 4).unwrap());
        assert_eq!(Scalar::parse("-0.5").unwrap(), Scalar::from_ratio(-1, 2).unwrap());
    }

    #[test]
    fn long_decimals_round_to_cap() {
        let x = Scalar::parse("0.3333333333").unwrap();
        assert_eq!(x, Scalar::from_ratio(333_333, 1_000_000).unwrap());
    }

    #[test]
    fn rejects_garbage() {
        assert!(Scalar::parse("1/0").is_err());
        assert!(Scalar::parse("abc").is_err());
        assert!(Scalar::parse("1.2.3").is_err());
    }

    #[test]
    fn exact_floor_at_boundary() {
        // 0.3 * 10 must floor to exactly 3 (a float path can give 2).
        let x = Scalar::parse("0.3").unwrap();
        assert_eq!(x.floor_mul(10), 3);
        let y = Scalar::parse("1/3").unwrap();
        assert_eq!(y.floor_mul(6), 2);
    }

    #[test]
    fn mixed_arithmetic_degrades_to_real() {
        let e = Scalar::Rat(Ratio::new(1, 2)) + Scalar::Real(0.25);
        assert!(!e.is_rational());
        assert!((e.as_f64() - 0.75).abs() < 1e-15);
    }
}

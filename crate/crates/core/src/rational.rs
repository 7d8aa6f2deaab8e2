//! Arbitrary-precision rationals and the handful of helpers shared across
//! modules.

use alloc::format;
use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or a bare integer. Whitespace around the token is ignored.
pub fn parse(text: &str) -> Result<Rational> {
    let token = text.trim();
    let bad = |offset: usize| Error::Parse {
        offset,
        message: format!("malformed rational `{token}`"),
    };
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (token, None),
    };
    let num = BigInt::from_str(num).map_err(|_| bad(0))?;
    let den = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| bad(num.to_string().len() + 1))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad(token.len().saturating_sub(1)));
    }
    Ok(Rational::new(num, den))
}

/// Always `num/den`, including a `/1` for integers.
pub fn to_fraction_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// `x^k` for a non-negative exponent.
pub fn pow(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// `n (n-1) ... (n-k+1)`; zero as soon as a factor hits zero.
pub fn falling_factorial(n: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..i64::from(k) {
        acc *= BigInt::from(n - i);
    }
    acc
}

/// Approximate value, for display and tolerance checks only.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

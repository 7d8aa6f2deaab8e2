//! Closed forms for cycles and the infinite line.

use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleForms {
    pub z: Rational,
    pub u: Rational,
}

/// `Z = (q-1)(lam-1)^n + (lam+q-1)^n`, and `U` from its logarithmic
/// derivative. At `lam = 1` the energy is `1/q`.
pub fn cycle_closed_forms(n: usize, q: u32, lam: &Rational) -> Result<CycleForms> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    if q < 1 {
        return Err(Error::TooFewColors(q));
    }
    let one = Rational::one();
    let qr = rational::int(i64::from(q));
    let n32 = n as u32;
    let z = (&qr - &one) * rational::pow(&(lam - &one), n32)
        + rational::pow(&(lam + &qr - &one), n32);
    if lam.is_one() {
        return Ok(CycleForms { z, u: one / qr });
    }
    // x = 1 + q/(lam - 1)
    let x = &one + &qr / (lam - &one);
    let num = rational::pow(&x, n32 - 1) + &qr - &one;
    let den = rational::pow(&x, n32) + &qr - &one;
    if den.is_zero() {
        return Err(Error::Undefined("cycle energy denominator vanishes"));
    }
    let u = lam / (lam - &one) * num / den;
    Ok(CycleForms { z, u })
}

/// `lam / (lam + q - 1)`, the `n -> infinity` limit of the cycle energy.
pub fn line_energy(q: u32, lam: &Rational) -> Result<Rational> {
    let den = lam + rational::int(i64::from(q) - 1);
    if den.is_zero() {
        return Err(Error::Undefined("line energy is 0/0"));
    }
    Ok(lam / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio, to_f64};

    #[test]
    fn triangle_example() {
        assert_eq!(cycle_closed_forms(3, 2, &ratio(1, 2)).unwrap().z, ratio(13, 4));
    }

    #[test]
    fn infinite_temperature_energy() {
        for n in 3..9 {
            assert_eq!(cycle_closed_forms(n, 4, &int(1)).unwrap().u, ratio(1, 4));
        }
    }

    #[test]
    fn line_limit() {
        assert_eq!(line_energy(2, &int(1)).unwrap(), ratio(1, 2));
        assert_eq!(line_energy(3, &ratio(1, 2)).unwrap(), ratio(1, 5));
        assert!(line_energy(1, &int(0)).is_err());
        let u40 = cycle_closed_forms(40, 2, &ratio(1, 2)).unwrap().u;
        assert!((to_f64(&u40) - 1.0 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn short_cycles_rejected() {
        assert_eq!(cycle_closed_forms(2, 2, &int(1)), Err(Error::CycleTooShort(2)));
    }
}

//! Exact scalars, integer polynomials and real-root isolation.
//!
//! All spectral data in this crate is carried as [`Rational`] (arbitrary
//! precision, always in lowest terms). Eigenvalues come from the
//! characteristic polynomial of the tridiagonal intersection matrix and are
//! exact whenever they are rational.

mod poly;
mod roots;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use poly::{charpoly_tridiagonal, IntegerPolynomial};
pub use roots::{real_roots, root_multiplicity, Eigenvalue, BISECTION_WIDTH_EXP};

/// Exact rational scalar backed by arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, `p/q` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    // numerator/denominator may exceed f64 range individually
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// `p/q` with a short decimal echo when the value is not an integer,
/// e.g. `112/5 (22.4)`.
pub fn display_with_decimal(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("{} ({})", r, trim_decimal(to_f64(r)))
    }
}

fn trim_decimal(x: f64) -> String {
    let s = format!("{:.6}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

/// `[i]_b = 1 + b + ... + b^(i-1)`, with `[0]_b = 0`.
pub fn gaussian_bracket(i: u32, b: i64) -> Result<BigInt> {
    if b == 0 {
        return Err(Error::ZeroBase);
    }
    let base = BigInt::from(b);
    let mut acc = BigInt::zero();
    let mut pow = BigInt::one();
    for _ in 0..i {
        acc += &pow;
        pow *= &base;
    }
    Ok(acc)
}

pub(crate) fn rational_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bracket_values() {
        assert_eq!(gaussian_bracket(0, -2).unwrap(), BigInt::from(0));
        assert_eq!(gaussian_bracket(3, -2).unwrap(), BigInt::from(3));
        assert_eq!(gaussian_bracket(4, -2).unwrap(), BigInt::from(-5));
        assert_eq!(gaussian_bracket(1, 7).unwrap(), BigInt::from(1));
        assert_eq!(gaussian_bracket(3, 0), Err(Error::ZeroBase));
    }

    #[test]
    fn bracket_recurrence() {
        for b in (-5i64..=5).filter(|&b| b != 0) {
            for i in 0..=12u32 {
                let lhs = gaussian_bracket(i + 1, b).unwrap();
                let rhs = BigInt::one() + BigInt::from(b) * gaussian_bracket(i, b).unwrap();
                assert_eq!(lhs, rhs, "i={i} b={b}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_rational("-18"), Some(int(-18)));
        assert_eq!(parse_rational("112/5"), Some(ratio(112, 5)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(display_with_decimal(&ratio(112, 5)), "112/5 (22.4)");
        assert_eq!(display_with_decimal(&int(22)), "22");
    }

    proptest! {
        #[test]
        fn add_sub_round_trip(p in -10_000i64..10_000, q in 1i64..10_000, r in -10_000i64..10_000, s in 1i64..10_000) {
            let x = ratio(p, q);
            let y = ratio(r, s);
            prop_assert_eq!((&x + &y) - &y, x.clone());
            prop_assert!(x.denom() > &BigInt::zero());
        }
    }
}

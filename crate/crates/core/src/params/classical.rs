use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntersectionArray;
use crate::error::{Error, Result};
use crate::exact_math::{gaussian_bracket, Rational};

/// Classical parameters `(D, b, alpha, sigma)`.
///
/// `sigma_cl` is the classical `sigma`, not to be confused with the cosine
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassicalParameters {
    pub d: usize,
    pub b: i64,
    pub alpha: Rational,
    pub sigma_cl: Rational,
}

impl ClassicalParameters {
    pub fn new(d: usize, b: i64, alpha: Rational, sigma_cl: Rational) -> Self {
        Self { d, b, alpha, sigma_cl }
    }

    pub fn from_ints(d: usize, b: i64, alpha: i64, sigma_cl: i64) -> Self {
        Self::new(d, b, int(alpha), int(sigma_cl))
    }

    fn bracket(&self, i: usize) -> Rational {
        Rational::from_integer(gaussian_bracket(i as u32, self.b).expect("b != 0 checked"))
    }

    fn check(&self) -> Result<()> {
        if self.d == 0 || self.b == 0 || self.b == -1 {
            return Err(Error::InvalidClassicalParameters);
        }
        Ok(())
    }

    /// `c_i = [i](1 + alpha [i-1])`.
    pub fn c(&self, i: usize) -> Rational {
        let prev = if i == 0 { Rational::zero() } else { self.bracket(i - 1) };
        self.bracket(i) * (Rational::one() + &self.alpha * prev)
    }

    /// `b_i = ([D] - [i])(sigma - alpha [i])`.
    pub fn b_i(&self, i: usize) -> Rational {
        (self.bracket(self.d) - self.bracket(i)) * (&self.sigma_cl - &self.alpha * self.bracket(i))
    }
}

impl fmt::Display for ClassicalParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.d, self.b, self.alpha, self.sigma_cl)
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn to_i64(name: &'static str, index: usize, v: &Rational) -> Result<i64> {
    if !v.is_integer() {
        return Err(Error::NonIntegralClassical { name, index, value: v.clone() });
    }
    i64::try_from(v.to_integer()).map_err(|_| Error::Overflow)
}

/// The intersection array produced by the classical formulas, validated.
pub fn classical_array(cp: &ClassicalParameters) -> Result<IntersectionArray> {
    cp.check()?;
    let b: Vec<i64> = (0..cp.d).map(|i| to_i64("b", i, &cp.b_i(i))).collect::<Result<_>>()?;
    let c: Vec<i64> = (1..=cp.d).map(|i| to_i64("c", i, &cp.c(i))).collect::<Result<_>>()?;
    IntersectionArray::validate(&b, &c)
}

/// All classical parameter sets with integer `b` in `[-k, k] \ {0, -1}`
/// that reproduce `arr` exactly.
///
/// `alpha` is solved from `c_2 = (1 + b)(1 + alpha)` and `sigma` from
/// `b_0 = [D] sigma`; all `2(D+1)` formulas are then verified. Diameter-1
/// arrays leave `alpha` undetermined and yield no fit.
pub fn classical_fit(arr: &IntersectionArray) -> Vec<ClassicalParameters> {
    let d = arr.diameter();
    if d < 2 {
        return Vec::new();
    }
    let k = arr.valency();
    let mut fits = Vec::new();
    for b in (-k..=k).filter(|&b| b != 0 && b != -1) {
        let alpha = int(arr.c(2)) / int(1 + b) - Rational::one();
        let top = Rational::from_integer(gaussian_bracket(d as u32, b).expect("b != 0"));
        if top.is_zero() {
            continue;
        }
        let sigma_cl = int(k) / top;
        let cp = ClassicalParameters { d, b, alpha, sigma_cl };
        let reproduces = (0..=d).all(|i| cp.c(i) == int(arr.c(i)) && cp.b_i(i) == int(arr.b(i)));
        if reproduces {
            fits.push(cp);
        }
    }
    fits
}

/// `theta_i = b_i / b^i - [i]` for `0 <= i <= D`, in the Q-polynomial order
/// attached to the classical parameters.
pub fn classical_eigenvalues(cp: &ClassicalParameters) -> Result<Vec<Rational>> {
    cp.check()?;
    let base = int(cp.b);
    let mut pow = Rational::one();
    let mut out = Vec::with_capacity(cp.d + 1);
    for i in 0..=cp.d {
        out.push(cp.b_i(i) / &pow - cp.bracket(i));
        pow *= &base;
    }
    Ok(out)
}

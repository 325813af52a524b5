use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Polynomial with integer coefficients, lowest degree first.
///
/// The leading coefficient is nonzero unless the polynomial is zero (empty
/// coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Clears denominators of a rational polynomial and divides out the
    /// content, keeping the leading coefficient positive.
    pub fn primitive_from_rational(coeffs: &[Rational]) -> Self {
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut p = Self::new(ints);
        let content = p.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() {
            for c in &mut p.coeffs {
                *c /= &content;
            }
        }
        if p.leading().is_some_and(|l| l.is_negative()) {
            for c in &mut p.coeffs {
                *c = -c.clone();
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|l| l.is_one())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub(crate) fn to_rational(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let show_coeff = !mag.is_one() || deg == 0;
            match (show_coeff, deg) {
                (true, 0) => write!(f, "{}", mag)?,
                (true, 1) => write!(f, "{}x", mag)?,
                (true, _) => write!(f, "{}x^{}", mag, deg)?,
                (false, 1) => write!(f, "x")?,
                (false, _) => write!(f, "x^{}", deg)?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI - L)` of the tridiagonal matrix with
/// diagonal `a` (length N), superdiagonal `b` (length N-1, entry (i, i+1))
/// and subdiagonal `c` (length N-1, entry (i+1, i)).
///
/// For an intersection array this is called with `a = a_0..a_D`,
/// `b = b_0..b_{D-1}` and `c = c_1..c_D`.
pub fn charpoly_tridiagonal(
    c: &[Rational],
    a: &[Rational],
    b: &[Rational],
) -> Result<IntegerPolynomial> {
    let n = a.len();
    if n == 0 || b.len() + 1 != n || c.len() + 1 != n {
        return Err(Error::DimensionMismatch(format!(
            "diagonal {}, super {}, sub {}",
            a.len(),
            b.len(),
            c.len()
        )));
    }
    // leading principal minors: p_i = (x - a_i) p_{i-1} - b_{i-1} c_i p_{i-2}
    let mut prev = QPoly::new(vec![Rational::one()]);
    let mut cur = QPoly::new(vec![-a[0].clone(), Rational::one()]);
    for i in 1..n {
        let lin = QPoly::new(vec![-a[i].clone(), Rational::one()]);
        let next = lin.mul(&cur).sub(&prev.scale(&(&b[i - 1] * &c[i - 1])));
        prev = cur;
        cur = next;
    }
    let mut ints = Vec::with_capacity(cur.coeffs.len());
    for coef in cur.coeffs {
        if !coef.is_integer() {
            return Err(Error::NonIntegralCoefficient(coef));
        }
        ints.push(coef.to_integer());
    }
    Ok(IntegerPolynomial::new(ints))
}

/// Rational polynomial used internally for Sturm chains and gcds.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct QPoly {
    pub(crate) coeffs: Vec<Rational>,
}

impl QPoly {
    pub(crate) fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub(crate) fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub(crate) fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Self::new(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![]);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Self::new(out)
    }

    pub(crate) fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Quotient and remainder of Euclidean division by a nonzero `d`.
    pub(crate) fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lead = d.coeffs.last().unwrap().clone();
        if rem.len() < d.coeffs.len() {
            return (Self::new(vec![]), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let coef = &rem[shift + dd] / &lead;
            if !coef.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[shift + j] -= &coef * dc;
                }
            }
            quot[shift] = coef;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub(crate) fn monic(&self) -> Self {
        match self.coeffs.last() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub(crate) fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    // Independent oracle: cofactor expansion of det(xI - L) evaluated at
    // integer points, compared with the recurrence-built polynomial.
    fn det_oracle(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Rational::zero();
        for col in 0..n {
            if m[0][col].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][col] * det_oracle(&minor);
            if col % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn x_minus_l(c: &[i64], a: &[i64], b: &[i64], x: i64) -> Vec<Vec<Rational>> {
        let n = a.len();
        let mut m = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            m[i][i] = int(x - a[i]);
            if i + 1 < n {
                m[i][i + 1] = int(-b[i]);
                m[i + 1][i] = int(-c[i]);
            }
        }
        m
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        let cases: &[(&[i64], &[i64], &[i64])] = &[
            (&[1, 2], &[0, 1, 2], &[4, 2]),
            (&[1], &[0, 0], &[1]),
            (&[1, 3, 15], &[0, 1, 3, 15], &[30, 28, 24]),
            (&[1, 5, 21], &[0, 1, 5, 21], &[42, 40, 32]),
        ];
        for (c, a, b) in cases {
            let p = charpoly_tridiagonal(&ints(c), &ints(a), &ints(b)).unwrap();
            assert!(p.is_monic());
            assert_eq!(p.degree(), Some(a.len()));
            for x in -40..=45 {
                assert_eq!(p.eval(&int(x)), det_oracle(&x_minus_l(c, a, b, x)));
            }
        }
    }

    #[test]
    fn charpoly_known_roots() {
        let p = charpoly_tridiagonal(&ints(&[1, 2]), &ints(&[0, 1, 2]), &ints(&[4, 2])).unwrap();
        for r in [4, 1, -2] {
            assert!(p.eval(&int(r)).is_zero());
        }
        let k2 = charpoly_tridiagonal(&ints(&[1]), &ints(&[0, 0]), &ints(&[1])).unwrap();
        assert_eq!(k2, IntegerPolynomial::from_i64(&[-1, 0, 1]));
        let oct = charpoly_tridiagonal(
            &ints(&[1, 3, 15]),
            &ints(&[0, 1, 3, 15]),
            &ints(&[30, 28, 24]),
        )
        .unwrap();
        for r in [30, 7, -3, -15] {
            assert!(oct.eval(&int(r)).is_zero());
        }
    }

    #[test]
    fn charpoly_dimension_mismatch() {
        assert!(matches!(
            charpoly_tridiagonal(&ints(&[1]), &ints(&[0, 1, 2]), &ints(&[4, 2])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn gcd_and_division() {
        // (x-1)(x+2) and (x-1)(x-3)
        let p = IntegerPolynomial::from_i64(&[-2, 1, 1]).to_rational();
        let q = IntegerPolynomial::from_i64(&[3, -4, 1]).to_rational();
        let g = p.gcd(&q);
        assert_eq!(g, IntegerPolynomial::from_i64(&[-1, 1]).to_rational());
        let (quot, rem) = p.div_rem(&g);
        assert!(rem.is_zero());
        assert_eq!(quot, IntegerPolynomial::from_i64(&[2, 1]).to_rational());
    }

    #[test]
    fn display() {
        assert_eq!(IntegerPolynomial::from_i64(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(IntegerPolynomial::from_i64(&[8, -6, -3, 1]).to_string(), "x^3 - 3x^2 - 6x + 8");
    }
}

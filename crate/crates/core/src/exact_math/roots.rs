use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{IntegerPolynomial, QPoly};
use super::{rational_sign, to_f64, Rational};
use crate::error::{Error, Result};

/// Irrational roots are refined until the isolating interval is at most
/// `10^-BISECTION_WIDTH_EXP` wide.
pub const BISECTION_WIDTH_EXP: u32 = 12;

/// Largest leading coefficient whose divisors are enumerated for the
/// rational-root test.
const MAX_LEAD_FOR_DIVISORS: u64 = 100_000_000_000_000;

/// A real root of a characteristic polynomial: exact when rational, an
/// isolating interval otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Eigenvalue {
    Exact(Rational),
    /// `lo < hi`, exactly one root in `(lo, hi)`, and the polynomial changes
    /// sign across it.
    Interval { lo: Rational, hi: Rational },
}

impl Eigenvalue {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Eigenvalue::Exact(r) => Some(r),
            Eigenvalue::Interval { .. } => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Eigenvalue::Exact(_))
    }

    /// The exact value, or the interval midpoint.
    pub fn midpoint(&self) -> Rational {
        match self {
            Eigenvalue::Exact(r) => r.clone(),
            Eigenvalue::Interval { lo, hi } => (lo + hi) / Rational::from_integer(BigInt::from(2)),
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Exact(r) => write!(f, "{}", r),
            Eigenvalue::Interval { .. } => write!(f, "~{:.12}", self.to_f64()),
        }
    }
}

struct Sturm {
    chain: Vec<QPoly>,
}

impl Sturm {
    fn new(f: &QPoly) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&-Rational::one()));
        }
        Self { chain }
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            let s = rational_sign(&p.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    match n.to_u64() {
        Some(v) if v <= MAX_LEAD_FOR_DIVISORS => {
            let mut small = Vec::new();
            let mut large = Vec::new();
            let mut d = 1u64;
            while d * d <= v {
                if v % d == 0 {
                    small.push(d);
                    if d != v / d {
                        large.push(v / d);
                    }
                }
                d += 1;
            }
            small
                .into_iter()
                .chain(large.into_iter().rev())
                .map(BigInt::from)
                .collect()
        }
        _ => vec![BigInt::one(), n],
    }
}

/// All distinct real roots of `p`, sorted in descending order.
///
/// Roots are isolated with a Sturm chain on the square-free part, refined by
/// sign-change bisection, and every candidate `r/s` with `s` dividing the
/// leading coefficient that falls inside an isolating interval is tested
/// exactly. Rational roots are therefore always reported as
/// [`Eigenvalue::Exact`].
pub fn real_roots(p: &IntegerPolynomial) -> Result<Vec<Eigenvalue>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.to_rational();
    if q.degree() == 0 {
        return Ok(Vec::new());
    }
    let g = q.gcd(&q.derivative());
    let (sqfree, _) = q.div_rem(&g);
    let f_int = IntegerPolynomial::primitive_from_rational(&sqfree.coeffs);
    let f = f_int.to_rational();
    let dens = divisors(f_int.leading().expect("nonzero"));

    let lead = f.coeffs.last().unwrap().abs();
    let max_ratio = f.coeffs[..f.coeffs.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |m, r| if r > m { r } else { m });
    let bound = Rational::from_integer((max_ratio + Rational::one()).ceil().to_integer());

    let sturm = Sturm::new(&f);
    let two = Rational::from_integer(BigInt::from(2));
    let mut stack = vec![(-bound.clone(), bound)];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }

    let width = Rational::new(BigInt::one(), BigInt::from(10u64).pow(BISECTION_WIDTH_EXP));
    let mut roots: Vec<Eigenvalue> = isolated
        .into_iter()
        .map(|(lo, hi)| refine(&f, &dens, lo, hi, &width))
        .collect();
    roots.sort_by(|a, b| b.midpoint().partial_cmp(&a.midpoint()).unwrap_or(Ordering::Equal));
    Ok(roots)
}

fn refine(f: &QPoly, dens: &[BigInt], mut lo: Rational, mut hi: Rational, width: &Rational) -> Eigenvalue {
    // exactly one simple root in (lo, hi]
    let mut f_hi = f.eval(&hi);
    if f_hi.is_zero() {
        return Eigenvalue::Exact(hi);
    }
    let two = Rational::from_integer(BigInt::from(2));
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        let f_mid = f.eval(&mid);
        if f_mid.is_zero() {
            return Eigenvalue::Exact(mid);
        }
        if rational_sign(&f_mid) != rational_sign(&f_hi) {
            lo = mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    for d in dens {
        let dr = Rational::from_integer(d.clone());
        let first = (&lo * &dr).ceil().to_integer();
        let last = (&hi * &dr).floor().to_integer();
        let mut num = first;
        while num <= last {
            let cand = Rational::new(num.clone(), d.clone());
            if f.eval(&cand).is_zero() {
                return Eigenvalue::Exact(cand);
            }
            num += 1;
        }
    }
    Eigenvalue::Interval { lo, hi }
}

/// Multiplicity of `r` as a root of `p` (0 when `p(r) != 0`).
pub fn root_multiplicity(p: &IntegerPolynomial, r: &Rational) -> usize {
    let mut q = p.to_rational();
    let lin = QPoly::new(vec![-r.clone(), Rational::one()]);
    let mut m = 0;
    while !q.is_zero() && q.eval(r).is_zero() {
        let (quot, _) = q.div_rem(&lin);
        q = quot;
        m += 1;
    }
    m
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_math::Rational;

use super::graph::Graph;

/// Symmetric-or-not square rational matrix stored as `entries / scale`
/// with `i64` entries and a positive common denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    scale: i64,
    entries: Vec<i64>,
}

impl ExactMatrix {
    pub fn new(n: usize, scale: i64, entries: Vec<i64>) -> Self {
        assert!(scale > 0 && entries.len() == n * n);
        let mut m = Self { n, scale, entries };
        m.normalize();
        m
    }

    pub fn zero(n: usize) -> Self {
        Self { n, scale: 1, entries: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// `Σ_i coeffs[i] A_i` over the distance matrices of `g`.
    pub fn from_distance_coefficients(g: &Graph, coeffs: &[Rational]) -> Result<Self> {
        let dd = g.distances();
        if coeffs.len() != dd.diameter() + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for diameter {}",
                coeffs.len(),
                dd.diameter()
            )));
        }
        let scale = coeffs.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let ints = coeffs
            .iter()
            .map(|c| (c.numer() * (&scale / c.denom())).to_i64().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        let scale = scale.to_i64().ok_or(Error::Overflow)?;
        let n = g.n();
        let mut entries = vec![0i64; n * n];
        for x in 0..n {
            for (y, &d) in dd.row(x).iter().enumerate() {
                entries[x * n + y] = ints[d as usize];
            }
        }
        Ok(Self::new(n, scale, entries))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn raw(&self, x: usize, y: usize) -> i64 {
        self.entries[x * self.n + y]
    }

    pub fn raw_row(&self, x: usize) -> &[i64] {
        &self.entries[x * self.n..(x + 1) * self.n]
    }

    pub fn get(&self, x: usize, y: usize) -> Rational {
        Rational::new(self.raw(x, y).into(), self.scale.into())
    }

    pub fn trace(&self) -> Rational {
        let t: i128 = (0..self.n).map(|i| self.raw(i, i) as i128).sum();
        Rational::new(t.into(), self.scale.into())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.raw(x, y) == self.raw(y, x)))
    }

    fn normalize(&mut self) {
        let g = self.entries.iter().fold(self.scale, |g, &e| g.gcd(&e));
        if g > 1 {
            self.scale /= g;
            self.entries.iter_mut().for_each(|e| *e /= g);
        }
    }

    fn max_abs(&self) -> i64 {
        self.entries.iter().map(|e| e.abs()).max().unwrap_or(0)
    }

    /// Exact entrywise equality.
    pub fn exact_eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.entries.iter().zip(&other.entries).all(|(&a, &b)| {
                a as i128 * other.scale as i128 == b as i128 * self.scale as i128
            })
    }

    pub fn scaled_by(&self, r: &Rational) -> Result<Self> {
        let num = r.numer().to_i64().ok_or(Error::Overflow)?;
        let den = r.denom().to_i64().ok_or(Error::Overflow)?;
        let scale = self.scale.checked_mul(den).ok_or(Error::Overflow)?;
        let entries = self
            .entries
            .iter()
            .map(|&e| e.checked_mul(num).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(self.n, scale, entries))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let scale = self.scale.lcm(&other.scale);
        let (fa, fb) = (scale / self.scale, scale / other.scale);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| {
                a.checked_mul(fa)
                    .zip(b.checked_mul(fb))
                    .and_then(|(x, y)| x.checked_add(y))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(self.n, scale, entries))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.n, other.n)));
        }
        Ok(())
    }

    /// Exact product. Each row of `self` is bucketed by its distinct values so
    /// the inner loop is pure integer addition of rows of `other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        let bound = (n as i128) * other.max_abs() as i128 * self.max_abs() as i128;
        if bound > i64::MAX as i128 {
            return Err(Error::Overflow);
        }
        let scale = self.scale.checked_mul(other.scale).ok_or(Error::Overflow)?;
        let mut entries = vec![0i64; n * n];
        entries.par_chunks_mut(n).enumerate().for_each(|(x, out)| {
            let row = self.raw_row(x);
            let mut values: Vec<i64> = row.iter().copied().filter(|&v| v != 0).collect();
            values.sort_unstable();
            values.dedup();
            let mut acc = vec![0i64; n];
            for &v in &values {
                acc.iter_mut().for_each(|a| *a = 0);
                for (z, &e) in row.iter().enumerate() {
                    if e == v {
                        for (a, &b) in acc.iter_mut().zip(other.raw_row(z)) {
                            *a += b;
                        }
                    }
                }
                for (o, &a) in out.iter_mut().zip(&acc) {
                    *o += v * a;
                }
            }
        });
        Ok(Self::new(n, scale, entries))
    }

    /// `A · self` for the adjacency matrix `A` of `g`.
    pub fn adjacency_mul(&self, g: &Graph) -> Self {
        let n = self.n;
        let mut entries = vec![0i64; n * n];
        entries.par_chunks_mut(n).enumerate().for_each(|(x, out)| {
            for &z in g.neighbors(x) {
                for (o, &b) in out.iter_mut().zip(self.raw_row(z as usize)) {
                    *o += b;
                }
            }
        });
        Self::new(n, self.scale, entries)
    }

    /// Inner product of columns `x` and `y`.
    pub fn column_dot(&self, x: usize, y: usize) -> Rational {
        let s: i128 = (0..self.n).map(|z| self.raw(z, x) as i128 * self.raw(z, y) as i128).sum();
        Rational::new(s.into(), (self.scale as i128 * self.scale as i128).into())
    }

    /// Sum of columns indexed by `cols`, as raw scaled integers.
    pub fn column_sum_raw(&self, cols: &[usize]) -> Vec<i64> {
        (0..self.n).map(|z| cols.iter().map(|&c| self.raw(z, c)).sum()).collect()
    }

    /// Principal submatrix on `idx`.
    pub fn submatrix(&self, idx: &[usize]) -> Vec<Vec<Rational>> {
        idx.iter().map(|&x| idx.iter().map(|&y| self.get(x, y)).collect()).collect()
    }

    /// Hadamard (entrywise) product, kept exact through `i128`.
    pub fn hadamard_sum3(a: &Self, b: &Self, c: &Self) -> Result<Rational> {
        a.check_dim(b)?;
        a.check_dim(c)?;
        let mut total = BigInt::zero();
        for x in 0..a.n {
            let mut row: i128 = 0;
            for y in 0..a.n {
                let p = a.raw(x, y) as i128 * b.raw(x, y) as i128;
                let term = p.checked_mul(c.raw(x, y) as i128).ok_or(Error::Overflow)?;
                row = row.checked_add(term).ok_or(Error::Overflow)?;
            }
            total += BigInt::from(row);
        }
        let denom = BigInt::from(a.scale) * b.scale * c.scale;
        Ok(Rational::new(total, denom))
    }

    pub fn has_negative_entry(&self) -> bool {
        self.entries.iter().any(|e| e.is_negative())
    }
}

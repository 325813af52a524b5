use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::exact_math::{int, Rational};
use crate::params::{cosine_sequence, multiplicity, spectrum, IntersectionArray, KreinTable};
use crate::theorem::{cauchy_schwarz_quantities, CauchySchwarz};

use super::graph::Graph;
use super::matrix::ExactMatrix;

/// Primitive idempotent `E = (m/n) sum_i sigma_i A_i` of one eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactIdempotent {
    pub theta: Rational,
    pub m: Rational,
    pub cosines: Vec<Rational>,
    pub matrix: ExactMatrix,
}

impl ExactIdempotent {
    /// Builds `E` from the cosine formula without any verification.
    pub fn build(g: &Graph, arr: &IntersectionArray, theta: &Rational) -> Result<Self> {
        let n = g.n();
        if g.distances().diameter() != arr.diameter() || int(n as i64) != Rational::from(arr.vertex_count()) {
            return Err(Error::IdempotencyFailed(format!("graph does not match array {arr}")));
        }
        let cs = cosine_sequence(arr, theta)?;
        let m = multiplicity(arr, theta)?;
        let base = &m / int(n as i64);
        let coeffs: Vec<Rational> = cs.sigma.iter().map(|s| s * &base).collect();
        let matrix = ExactMatrix::from_distance_coefficients(g, &coeffs)?;
        Ok(Self { theta: theta.clone(), m, cosines: cs.sigma, matrix })
    }

    /// Verifies `E^2 = E`, `AE = theta E` and `trace E = m` exactly.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let e = &self.matrix;
        if !e.is_symmetric() {
            return Err(Error::IdempotencyFailed("E is not symmetric".into()));
        }
        if e.trace() != self.m {
            return Err(Error::IdempotencyFailed(format!(
                "trace {} != multiplicity {}",
                e.trace(),
                self.m
            )));
        }
        if !e.adjacency_mul(g).exact_eq(&e.scaled_by(&self.theta)?) {
            return Err(Error::IdempotencyFailed(format!("AE != {} E", self.theta)));
        }
        if !e.mul(e)?.exact_eq(e) {
            return Err(Error::IdempotencyFailed(format!("E^2 != E at theta = {}", self.theta)));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn entry(&self, x: usize, y: usize) -> Rational {
        self.matrix.get(x, y)
    }

    pub fn trace(&self) -> Rational {
        self.matrix.trace()
    }
}

/// Builds the idempotent of `theta` and verifies all of its invariants.
pub fn idempotent(g: &Graph, arr: &IntersectionArray, theta: &Rational) -> Result<ExactIdempotent> {
    let e = ExactIdempotent::build(g, arr, theta)?;
    e.verify(g)?;
    Ok(e)
}

/// Every primitive idempotent, in the descending eigenvalue order of
/// [`spectrum`], each verified individually.
pub fn all_idempotents(g: &Graph, arr: &IntersectionArray) -> Result<Vec<ExactIdempotent>> {
    spectrum(arr)?
        .exact_eigenvalues()?
        .iter()
        .map(|theta| idempotent(g, arr, theta))
        .collect()
}

/// Checks `sum E_i = I` and `E_i E_j = 0` for `i != j`.
pub fn check_completeness(idempotents: &[ExactIdempotent]) -> Result<()> {
    let Some(first) = idempotents.first() else {
        return Err(Error::IdempotencyFailed("no idempotents".into()));
    };
    let n = first.n();
    let mut sum = ExactMatrix::zero(n);
    for e in idempotents {
        sum = sum.add(&e.matrix)?;
    }
    if !sum.exact_eq(&ExactMatrix::identity(n)) {
        return Err(Error::IdempotencyFailed("sum of idempotents is not I".into()));
    }
    for (i, a) in idempotents.iter().enumerate() {
        for b in &idempotents[i + 1..] {
            if !a.matrix.mul(&b.matrix)?.is_zero() {
                return Err(Error::IdempotencyFailed(format!(
                    "E({}) E({}) != 0",
                    a.theta, b.theta
                )));
            }
        }
    }
    Ok(())
}

/// Krein parameters from entrywise products:
/// `q_ij^h = (n / m_h) sum_{x,y} (E_i o E_j o E_h)_{xy}`.
pub fn matrix_krein_table(idempotents: &[ExactIdempotent]) -> Result<KreinTable> {
    let dim = idempotents.len();
    let n = int(idempotents.first().map_or(0, |e| e.n()) as i64);
    let mut sums = vec![Rational::zero(); dim * dim * dim];
    for i in 0..dim {
        for j in i..dim {
            for h in 0..dim {
                let s = ExactMatrix::hadamard_sum3(
                    &idempotents[i].matrix,
                    &idempotents[j].matrix,
                    &idempotents[h].matrix,
                )?;
                let q = &n * s / &idempotents[h].m;
                sums[(i * dim + j) * dim + h] = q.clone();
                sums[(j * dim + i) * dim + h] = q;
            }
        }
    }
    Ok(KreinTable::from_fn(dim, |i, j, h| sums[(i * dim + j) * dim + h].clone()))
}

/// Outcome of comparing `<Ex, Ey>` against `(m/n) sigma_{d(x,y)}` on
/// sampled pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct CosineSpotCheck {
    pub samples: usize,
    /// First pair `(x, y)` whose inner product disagrees.
    pub mismatch: Option<(usize, usize)>,
}

impl CosineSpotCheck {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares column inner products of `E` with the cosine formula on
/// `samples` pseudo-random pairs drawn from `seed`. Since `||Ex||^2 = m/n`
/// for every `x`, equality of `<Ex, Ey>` with `(m/n) sigma_i` is the
/// statement that the cosine of the angle is `sigma_i`.
pub fn cosine_spot_check(g: &Graph, e: &ExactIdempotent, samples: usize, seed: u64) -> CosineSpotCheck {
    let n = g.n();
    let base = &e.m / int(n as i64);
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let expected = &base * &e.cosines[g.dist(x, y)];
        if e.matrix.column_dot(x, y) != expected || e.matrix.column_dot(x, x) != base {
            return CosineSpotCheck { samples, mismatch: Some((x, y)) };
        }
    }
    CosineSpotCheck { samples, mismatch: None }
}

/// Realized inner products for `u = Ex + Ey` and
/// `v = sum_{z in G(x) cap G(y)} Ez` at a pair with `d(x, y) = 2`,
/// alongside the closed forms they should equal.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchySchwarzRealization {
    pub pair: (usize, usize),
    pub c2: usize,
    pub realized: CauchySchwarz,
    pub predicted: CauchySchwarz,
}

impl CauchySchwarzRealization {
    pub fn matches(&self) -> bool {
        self.realized == self.predicted
    }
}

pub fn cauchy_schwarz_realization(g: &Graph, e: &ExactIdempotent) -> Result<CauchySchwarzRealization> {
    let dd = g.distances();
    let n = g.n();
    let y = (0..n)
        .find(|&y| dd.get(0, y) == 2)
        .ok_or_else(|| Error::DiameterOutOfRange(dd.diameter()))?;
    let x = 0;
    let common: Vec<usize> = g
        .neighbors(x)
        .iter()
        .map(|&z| z as usize)
        .filter(|&z| g.has_edge(z, y))
        .collect();
    let mat = &e.matrix;
    let u = mat.column_sum_raw(&[x, y]);
    let v = mat.column_sum_raw(&common);
    let s2 = Rational::from_integer((mat.scale() as i128 * mat.scale() as i128).into());
    let dot = |a: &[i64], b: &[i64]| -> Rational {
        let s: i128 = a.iter().zip(b).map(|(&p, &q)| p as i128 * q as i128).sum();
        Rational::from_integer(s.into()) / &s2
    };
    let (uv, uu, vv) = (dot(&u, &v), dot(&u, &u), dot(&v, &v));
    let slack = &uu * &vv - &uv * &uv;
    let realized = CauchySchwarz { uv, uu, vv, slack };
    let predicted = cauchy_schwarz_quantities(common.len() as i64, &e.m, &int(n as i64));
    Ok(CauchySchwarzRealization { pair: (x, y), c2: common.len(), realized, predicted })
}

/// `true` iff `E` is the all-ones idempotent `J/n`.
pub fn is_trivial(e: &ExactIdempotent) -> bool {
    e.m.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::ratio;
    use crate::params::krein_parameters;

    fn rook() -> (Graph, IntersectionArray) {
        let g = Graph::from_fn(9, |u, v| u / 3 == v / 3 || u % 3 == v % 3).unwrap();
        let arr = "{4,2;1,2}".parse().unwrap();
        (g, arr)
    }

    fn naive_square(e: &ExactIdempotent) -> Vec<Rational> {
        let n = e.n();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                out.push((0..n).map(|z| e.entry(x, z) * e.entry(z, y)).sum());
            }
        }
        out
    }

    #[test]
    fn rook_idempotent_at_minus_two() {
        let (g, arr) = rook();
        let e = idempotent(&g, &arr, &int(-2)).unwrap();
        assert_eq!(e.entry(0, 0), ratio(4, 9));
        assert_eq!(e.entry(0, 1), ratio(-2, 9));
        assert_eq!(e.entry(0, 4), ratio(1, 9));
        let sq = naive_square(&e);
        for x in 0..9 {
            for y in 0..9 {
                assert_eq!(sq[x * 9 + y], e.entry(x, y));
            }
        }
        let j = idempotent(&g, &arr, &int(4)).unwrap();
        assert!(is_trivial(&j));
        assert_eq!(j.entry(3, 7), ratio(1, 9));
    }

    #[test]
    fn wrong_array_is_caught() {
        let (g, _) = rook();
        let other: IntersectionArray = "{3,2;1,1}".parse().unwrap();
        assert!(matches!(idempotent(&g, &other, &int(1)), Err(Error::IdempotencyFailed(_))));
    }

    #[test]
    fn completeness_and_krein_on_rook() {
        let (g, arr) = rook();
        let all = all_idempotents(&g, &arr).unwrap();
        check_completeness(&all).unwrap();
        let from_matrices = matrix_krein_table(&all).unwrap();
        let from_params = krein_parameters(&spectrum(&arr).unwrap(), &arr).unwrap();
        assert_eq!(from_matrices, from_params);
        assert!(from_matrices.is_nonnegative());
    }

    #[test]
    fn spot_check_and_cauchy_schwarz_quantities() {
        let (g, arr) = rook();
        let e = idempotent(&g, &arr, &int(-2)).unwrap();
        assert!(cosine_spot_check(&g, &e, 100, 7).passed());
        let cs = cauchy_schwarz_realization(&g, &e).unwrap();
        assert_eq!(cs.c2, 2);
        assert!(cs.matches(), "{cs:?}");
    }
}

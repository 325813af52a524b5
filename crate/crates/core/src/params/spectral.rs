use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntersectionArray;
use crate::error::{Error, Result};
use crate::exact_math::{charpoly_tridiagonal, real_roots, to_f64, Eigenvalue, Rational};

/// The cosine sequence `sigma_0..sigma_D` of one eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct CosineSequence {
    pub theta: Rational,
    pub sigma: Vec<Rational>,
}

impl CosineSequence {
    pub fn is_alternating_halves(&self) -> bool {
        let mut expected = Rational::one();
        let step = Rational::new(BigInt::from(-1), BigInt::from(2));
        for s in &self.sigma {
            if *s != expected {
                return false;
            }
            expected *= &step;
        }
        true
    }
}

fn r(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Runs the three-term recurrence from `sigma_0 = 1`, `sigma_1 = theta/k` and
/// returns the sequence with the residual of the terminal identity
/// `c_D sigma_{D-1} + a_D sigma_D - theta sigma_D`.
pub(crate) fn cosine_recurrence(arr: &IntersectionArray, theta: &Rational) -> (Vec<Rational>, Rational) {
    let d = arr.diameter();
    let mut sigma = Vec::with_capacity(d + 1);
    sigma.push(Rational::one());
    sigma.push(theta / r(arr.valency()));
    for i in 1..d {
        let next = ((theta - r(arr.a(i))) * &sigma[i] - r(arr.c(i)) * &sigma[i - 1]) / r(arr.b(i));
        sigma.push(next);
    }
    let residual = r(arr.c(d)) * &sigma[d - 1] + r(arr.a(d)) * &sigma[d] - theta * &sigma[d];
    (sigma, residual)
}

pub fn cosine_sequence(arr: &IntersectionArray, theta: &Rational) -> Result<CosineSequence> {
    let (sigma, residual) = cosine_recurrence(arr, theta);
    if !residual.is_zero() {
        return Err(Error::TerminalIdentityFails { theta: Box::new(theta.clone()), residual: Box::new(residual) });
    }
    Ok(CosineSequence { theta: theta.clone(), sigma })
}

fn biggs(arr: &IntersectionArray, sigma: &[Rational]) -> Rational {
    let n = Rational::from_integer(arr.vertex_count());
    let denom: Rational = arr
        .k_seq()
        .iter()
        .zip(sigma)
        .map(|(k, s)| Rational::from_integer(k.clone()) * s * s)
        .sum();
    n / denom
}

/// Multiplicity by Biggs' formula `m = (sum k_i) / (sum k_i sigma_i^2)`.
pub fn multiplicity(arr: &IntersectionArray, theta: &Rational) -> Result<Rational> {
    let cs = cosine_sequence(arr, theta)?;
    Ok(biggs(arr, &cs.sigma))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralEntry {
    pub eigenvalue: Eigenvalue,
    pub multiplicity: Rational,
    /// Set when the eigenvalue is irrational; multiplicity and cosines are
    /// then computed at the interval midpoint.
    pub approximate: bool,
    pub cosines: CosineSequence,
}

impl SpectralEntry {
    pub fn multiplicity_f64(&self) -> f64 {
        to_f64(&self.multiplicity)
    }
}

/// Eigenvalues in descending order with multiplicities and cosine sequences.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    pub entries: Vec<SpectralEntry>,
}

impl SpectralData {
    pub fn eigenvalues(&self) -> Vec<Eigenvalue> {
        self.entries.iter().map(|e| e.eigenvalue.clone()).collect()
    }

    pub fn multiplicities(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| e.multiplicity.clone()).collect()
    }

    pub fn is_fully_rational(&self) -> bool {
        self.entries.iter().all(|e| !e.approximate)
    }

    /// The exact eigenvalues, or the first irrational one as an error.
    pub fn exact_eigenvalues(&self) -> Result<Vec<Rational>> {
        self.entries
            .iter()
            .map(|e| {
                e.eigenvalue
                    .exact()
                    .cloned()
                    .ok_or_else(|| Error::IrrationalEigenvalue(e.eigenvalue.to_string()))
            })
            .collect()
    }

    pub fn index_of(&self, theta: &Rational) -> Option<usize> {
        self.entries.iter().position(|e| e.eigenvalue.exact() == Some(theta))
    }

    pub fn min_eigenvalue(&self) -> &Eigenvalue {
        &self.entries.last().expect("nonempty spectrum").eigenvalue
    }
}

/// Eigenvalues of the tridiagonal intersection matrix, with Biggs
/// multiplicities and cosine sequences.
pub fn spectrum(arr: &IntersectionArray) -> Result<SpectralData> {
    let d = arr.diameter();
    let a: Vec<Rational> = (0..=d).map(|i| r(arr.a(i))).collect();
    let b: Vec<Rational> = (0..d).map(|i| r(arr.b(i))).collect();
    let c: Vec<Rational> = (1..=d).map(|i| r(arr.c(i))).collect();
    let poly = charpoly_tridiagonal(&c, &a, &b)?;
    let roots = real_roots(&poly)?;
    let mut entries = Vec::with_capacity(roots.len());
    for eigenvalue in roots {
        let entry = match &eigenvalue {
            Eigenvalue::Exact(theta) => {
                let cosines = cosine_sequence(arr, theta)?;
                SpectralEntry {
                    multiplicity: biggs(arr, &cosines.sigma),
                    eigenvalue,
                    approximate: false,
                    cosines,
                }
            }
            Eigenvalue::Interval { .. } => {
                let theta = eigenvalue.midpoint();
                let (sigma, _) = cosine_recurrence(arr, &theta);
                SpectralEntry {
                    multiplicity: biggs(arr, &sigma),
                    eigenvalue,
                    approximate: true,
                    cosines: CosineSequence { theta, sigma },
                }
            }
        };
        entries.push(entry);
    }
    Ok(SpectralData { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{int, ratio};

    fn arr(b: &[i64], c: &[i64]) -> IntersectionArray {
        IntersectionArray::validate(b, c).unwrap()
    }

    #[test]
    fn cosine_examples() {
        let grid = arr(&[4, 2], &[1, 2]);
        assert_eq!(
            cosine_sequence(&grid, &int(-2)).unwrap().sigma,
            vec![int(1), ratio(-1, 2), ratio(1, 4)]
        );
        assert_eq!(cosine_sequence(&grid, &int(4)).unwrap().sigma, vec![int(1); 3]);
        let octad = arr(&[30, 28, 24], &[1, 3, 15]);
        let cs = cosine_sequence(&octad, &int(-15)).unwrap();
        assert_eq!(cs.sigma, vec![int(1), ratio(-1, 2), ratio(1, 4), ratio(-1, 8)]);
        assert!(cs.is_alternating_halves());
        assert!(matches!(
            cosine_sequence(&grid, &int(3)),
            Err(Error::TerminalIdentityFails { .. })
        ));
    }

    #[test]
    fn biggs_multiplicities() {
        assert_eq!(multiplicity(&arr(&[36, 34, 28], &[1, 4, 18]), &int(-18)).unwrap(), ratio(112, 5));
        assert_eq!(multiplicity(&arr(&[42, 40, 32], &[1, 5, 21]), &int(-21)).unwrap(), int(22));
        assert_eq!(multiplicity(&arr(&[18, 16, 16], &[1, 1, 9]), &int(18)).unwrap(), int(1));
        // hand evaluation: 819 / (1 + 18/4 + 288/16 + 512/64) = 819 / (63/2)
        assert_eq!(multiplicity(&arr(&[18, 16, 16], &[1, 1, 9]), &int(-9)).unwrap(), int(26));
    }

    #[test]
    fn spectra() {
        let sd = spectrum(&arr(&[4, 2], &[1, 2])).unwrap();
        assert_eq!(sd.exact_eigenvalues().unwrap(), vec![int(4), int(1), int(-2)]);
        assert_eq!(sd.multiplicities(), vec![int(1), int(4), int(4)]);
        let sd = spectrum(&arr(&[6, 4], &[1, 3])).unwrap();
        assert_eq!(sd.exact_eigenvalues().unwrap(), vec![int(6), int(1), int(-3)]);
        assert_eq!(sd.multiplicities(), vec![int(1), int(9), int(5)]);
        let sd = spectrum(&arr(&[18, 16, 16], &[1, 1, 9])).unwrap();
        let total: Rational = sd.multiplicities().into_iter().sum();
        assert_eq!(total, int(819));
        assert_eq!(sd.entries[sd.index_of(&int(-9)).unwrap()].multiplicity, int(26));
    }

    #[test]
    fn irrational_spectrum_is_flagged() {
        // pentagon {2,1;1,1}: eigenvalues 2, (-1 +- sqrt 5)/2
        let sd = spectrum(&arr(&[2, 1], &[1, 1])).unwrap();
        assert_eq!(sd.entries.len(), 3);
        assert!(!sd.is_fully_rational());
        assert!(sd.entries[1].approximate && sd.entries[2].approximate);
        for e in &sd.entries[1..] {
            assert!((e.multiplicity_f64() - 2.0).abs() < 1e-6);
        }
        assert!(sd.exact_eigenvalues().is_err());
    }
}

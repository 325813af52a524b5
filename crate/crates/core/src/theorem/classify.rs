use std::fmt;

use num_bigint::BigInt;

use super::conditions::{dual_polar_parameters, negative_two_sigma};
use super::Family;
use crate::error::{Error, Result};
use crate::exact_math::Rational;
use crate::params::{
    classical_array, feasibility_report, ClassicalParameters, FeasibilityReport, IntersectionArray,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassVerdict {
    ExistsUnique,
    NonexistentIntegrality,
    NonexistentCited,
    DualPolarFamily,
    /// The classical formulas do not give a valid intersection array.
    InvalidArray,
    /// Rejected by a feasibility check other than multiplicity integrality.
    NonexistentFeasibility,
}

impl ClassVerdict {
    pub fn tag(self) -> &'static str {
        match self {
            ClassVerdict::ExistsUnique => "exists-unique",
            ClassVerdict::NonexistentIntegrality => "nonexistent-integrality",
            ClassVerdict::NonexistentCited => "nonexistent-cited",
            ClassVerdict::DualPolarFamily => "dual-polar-family",
            ClassVerdict::InvalidArray => "invalid-array",
            ClassVerdict::NonexistentFeasibility => "nonexistent-feasibility",
        }
    }
}

impl fmt::Display for ClassVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationEntry {
    pub diameter: usize,
    pub c2: i64,
    /// `(D, -2, -1-c_2, 2+alpha-alpha[D])`.
    pub parameters: ClassicalParameters,
    /// `b_0..b_{D-1}` and `c_1..c_D` straight from the classical formulas.
    pub raw_b: Vec<i64>,
    pub raw_c: Vec<i64>,
    pub array: Option<IntersectionArray>,
    pub verdict: ClassVerdict,
    pub family: Option<Family>,
    pub citation: String,
    /// Eigenvalue and non-integral multiplicity for
    /// [`ClassVerdict::NonexistentIntegrality`].
    pub witness: Option<(Rational, Rational)>,
    pub feasibility: Option<FeasibilityReport>,
    pub validation_error: Option<Error>,
}

impl ClassificationEntry {
    /// The array as `{b;c}` text, whether or not it validated.
    pub fn array_text(&self) -> String {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        format!("{{{};{}}}", join(&self.raw_b), join(&self.raw_c))
    }
}

fn raw_lists(cp: &ClassicalParameters) -> Result<(Vec<i64>, Vec<i64>)> {
    let conv = |v: Rational| -> Result<i64> {
        if !v.is_integer() {
            return Err(Error::NonIntegralCoefficient(v));
        }
        i64::try_from(v.to_integer()).map_err(|_| Error::Overflow)
    };
    let b = (0..cp.d).map(|i| conv(cp.b_i(i))).collect::<Result<_>>()?;
    let c = (1..=cp.d).map(|i| conv(cp.c(i))).collect::<Result<_>>()?;
    Ok((b, c))
}

fn cited_existence(d: usize, c2: i64) -> (Family, &'static str) {
    match (d, c2) {
        (2, 2) => (Family::NearPolygon { d: 2, t: 1 }, "Brouwer-Cohen-Neumaier, p. 30"),
        (2, 3) => (Family::NearPolygon { d: 2, t: 2 }, "Brouwer-Cohen-Neumaier, p. 30"),
        (3, 1) => (Family::NearPolygon { d: 3, t: 8 }, "Brouwer-Cohen-Neumaier, p. 427"),
        (3, 2) => (Family::NearPolygon { d: 3, t: 11 }, "Brouwer-Cohen-Neumaier, p. 427"),
        (3, 3) => (Family::NearPolygon { d: 3, t: 14 }, "Brouwer-Cohen-Neumaier, p. 428"),
        _ => unreachable!("no cited existence for D={d}, c2={c2}"),
    }
}

/// Candidate arrays for `c_2 = 1..5` at diameter `D`, each with its
/// verdict.
///
/// Every candidate is screened by [`feasibility_report`]. Cited existence
/// or family membership on an array that fails the screen is reported as
/// [`Error::InternalInconsistency`].
pub fn classify(d: usize) -> Result<Vec<ClassificationEntry>> {
    if !(2..=8).contains(&d) {
        return Err(Error::DiameterOutOfRange(d));
    }
    let mut out = Vec::with_capacity(5);
    for c2 in 1..=5i64 {
        let alpha = Rational::from_integer(BigInt::from(-1 - c2));
        let sigma = negative_two_sigma(d, &alpha);
        let parameters = ClassicalParameters::new(d, -2, alpha, sigma);
        let (raw_b, raw_c) = raw_lists(&parameters)?;
        let mut entry = ClassificationEntry {
            diameter: d,
            c2,
            parameters,
            raw_b,
            raw_c,
            array: None,
            verdict: ClassVerdict::InvalidArray,
            family: None,
            citation: String::new(),
            witness: None,
            feasibility: None,
            validation_error: None,
        };
        let array = match IntersectionArray::validate(&entry.raw_b, &entry.raw_c) {
            Ok(a) => a,
            Err(e) => {
                entry.citation = format!("validation: {e}");
                entry.validation_error = Some(e);
                out.push(entry);
                continue;
            }
        };
        let report = feasibility_report(&array)?;
        let passes = report.all_pass();

        if c2 == 5 {
            entry.verdict = ClassVerdict::DualPolarFamily;
            entry.family = Some(Family::DualPolar { d });
            entry.citation = "Brouwer-Cohen-Neumaier, Thm. 9.4.3".into();
            debug_assert_eq!(classical_array(&dual_polar_parameters(d)).ok(), Some(array.clone()));
        } else if d >= 4 {
            entry.verdict = ClassVerdict::NonexistentCited;
            entry.citation = if c2 == 1 {
                "De Bruyn-Vanhove, Cor. 5.4: classical parameters (D,-2,-2,2[D]) do not occur".into()
            } else {
                "[Weng, Thm. B]: a_1 = 1 forces A_{2D-1}(2), whose alpha = -6 gives c_2 = 5".into()
            };
        } else if !passes {
            let fail = report.first_failure().expect("some check failed");
            if fail.name == "multiplicity integrality" {
                entry.verdict = ClassVerdict::NonexistentIntegrality;
                let half_k = Rational::new(BigInt::from(-array.valency()), BigInt::from(2));
                entry.witness = fail
                    .witnesses
                    .iter()
                    .find(|(theta, _)| *theta == half_k)
                    .or(fail.witnesses.first())
                    .cloned();
            } else {
                entry.verdict = ClassVerdict::NonexistentFeasibility;
            }
            entry.citation = format!("{}: {}", fail.name, fail.detail);
        } else {
            let (family, cite) = cited_existence(d, c2);
            entry.verdict = ClassVerdict::ExistsUnique;
            entry.family = Some(family);
            entry.citation = cite.into();
        }

        if entry.family.is_some() && !passes {
            return Err(Error::InternalInconsistency(format!(
                "{} is cited as existing but fails feasibility",
                array
            )));
        }
        entry.feasibility = Some(report);
        entry.array = Some(array);
        out.push(entry);
    }
    Ok(out)
}

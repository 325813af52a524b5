use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_math::{gaussian_bracket, Rational};
use crate::params::{
    classical_array, classical_fit, cosine_sequence, near_polygon_order,
    spectrum, ClassicalParameters, IntersectionArray, MAX_ORDERING_SEARCH_DIAMETER,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::I,
        Condition::II,
        Condition::III,
        Condition::IV,
        Condition::V,
        Condition::VI,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
            Condition::IV => "iv",
            Condition::V => "v",
            Condition::VI => "vi",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Condition::I => "some 3-clique has linearly dependent idempotent columns",
            Condition::II => "classical parameters (D,-2,alpha,2+alpha-alpha[D]) at theta = b_1/b - 1",
            Condition::III => "regular near 2D-gon of order (2,t) at theta = -t-1",
            Condition::IV => "a_1 = 1 and Ex+Ey+Ez = 0 on every 3-clique",
            Condition::V => "one of the six listed graphs at its minimal eigenvalue",
            Condition::VI => "cosine sequence sigma_i = (-1/2)^i",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.tag())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionVerdict {
    pub condition: Condition,
    pub holds: bool,
    /// Set for (i) and (iv) when only parameter data was available.
    pub graph_level_required: bool,
    pub witness: String,
}

impl ConditionVerdict {
    fn new(condition: Condition, holds: bool, witness: impl Into<String>) -> Self {
        Self { condition, holds, graph_level_required: false, witness: witness.into() }
    }

    pub(crate) fn pending(condition: Condition) -> Self {
        Self {
            condition,
            holds: false,
            graph_level_required: true,
            witness: "graph-level required".into(),
        }
    }

    pub(crate) fn graph(condition: Condition, holds: bool, witness: impl Into<String>) -> Self {
        Self::new(condition, holds, witness)
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn bracket(d: usize) -> Rational {
    Rational::from_integer(gaussian_bracket(d as u32, -2).expect("base -2"))
}

/// Classical `sigma` forced by `b = -2` and `a_1 = 1`.
pub(crate) fn negative_two_sigma(d: usize, alpha: &Rational) -> Rational {
    int(2) + alpha - alpha * bracket(d)
}

pub fn condition_ii(arr: &IntersectionArray, theta: &Rational) -> ConditionVerdict {
    let d = arr.diameter();
    let target_theta = int(arr.b(1)) / int(-2) - Rational::one();
    let fits = classical_fit(arr);
    let hit = fits
        .iter()
        .find(|cp| cp.b == -2 && cp.sigma_cl == negative_two_sigma(d, &cp.alpha));
    match hit {
        Some(cp) if *theta == target_theta => {
            ConditionVerdict::new(Condition::II, true, format!("classical parameters {cp}"))
        }
        Some(cp) => ConditionVerdict::new(
            Condition::II,
            false,
            format!("classical parameters {cp} but theta = {theta} != b_1/b - 1 = {target_theta}"),
        ),
        None => {
            let shown: Vec<String> = fits.iter().map(|f| f.to_string()).collect();
            let witness = match fits.iter().find(|cp| cp.b == -2) {
                Some(cp) => format!(
                    "fit {cp} has sigma = {} != 2+alpha-alpha[D] = {}",
                    cp.sigma_cl,
                    negative_two_sigma(d, &cp.alpha)
                ),
                None if shown.is_empty() => "no classical parameters".to_string(),
                None => format!("no fit with b = -2 among {}", shown.join(", ")),
            };
            ConditionVerdict::new(Condition::II, false, witness)
        }
    }
}

pub fn condition_iii(arr: &IntersectionArray, theta: &Rational) -> ConditionVerdict {
    match near_polygon_order(arr) {
        Some((2, t)) if *theta == int(-t - 1) => {
            ConditionVerdict::new(Condition::III, true, format!("order (2,{t}), theta = -t-1"))
        }
        Some((2, t)) => ConditionVerdict::new(
            Condition::III,
            false,
            format!("order (2,{t}) but theta = {theta} != {}", -t - 1),
        ),
        Some((s, t)) => ConditionVerdict::new(Condition::III, false, format!("order ({s},{t}), s != 2")),
        None => ConditionVerdict::new(Condition::III, false, "a_i = a_1 c_i fails"),
    }
}

pub fn condition_vi(arr: &IntersectionArray, theta: &Rational) -> ConditionVerdict {
    match cosine_sequence(arr, theta) {
        Ok(cs) if cs.is_alternating_halves() => {
            ConditionVerdict::new(Condition::VI, true, "sigma_i = (-1/2)^i")
        }
        Ok(cs) => {
            let shown: Vec<String> = cs.sigma.iter().map(|s| s.to_string()).collect();
            ConditionVerdict::new(Condition::VI, false, format!("sigma = ({})", shown.join(", ")))
        }
        Err(e) => ConditionVerdict::new(Condition::VI, false, e.to_string()),
    }
}

/// The six graph families of the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Sporadic regular near polygon with `s = 2`, identified by `(D, t)`.
    NearPolygon { d: usize, t: i64 },
    DualPolar { d: usize },
}

impl Family {
    pub fn name(&self) -> String {
        match *self {
            Family::NearPolygon { d, t } => format!("regular near {}-gon of order (2,{t})", 2 * d),
            Family::DualPolar { d: 2 } => {
                "dual polar graph A3(2) (= regular near 4-gon of order (2,4))".to_string()
            }
            Family::DualPolar { d } => format!("dual polar graph A{}(2)", 2 * d - 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

const SPORADIC: [(&[i64], &[i64], usize, i64); 5] = [
    (&[4, 2], &[1, 2], 2, 1),
    (&[6, 4], &[1, 3], 2, 2),
    (&[18, 16, 16], &[1, 1, 9], 3, 8),
    (&[24, 22, 20], &[1, 2, 12], 3, 11),
    (&[30, 28, 24], &[1, 3, 15], 3, 14),
];

/// Classical parameters `(D, -2, -6, 6[D] - 4)` of `A_{2D-1}(2)`.
pub(crate) fn dual_polar_parameters(d: usize) -> ClassicalParameters {
    ClassicalParameters::new(d, -2, int(-6), int(6) * bracket(d) - int(4))
}

pub fn recognize_family(arr: &IntersectionArray) -> Option<Family> {
    let d = arr.diameter();
    if d >= 2 {
        if let Ok(dp) = classical_array(&dual_polar_parameters(d)) {
            if &dp == arr {
                return Some(Family::DualPolar { d });
            }
        }
    }
    SPORADIC
        .iter()
        .find(|(b, c, _, _)| arr.b_list() == *b && arr.c_list() == *c)
        .map(|&(_, _, d, t)| Family::NearPolygon { d, t })
}

pub fn condition_v(arr: &IntersectionArray, theta: &Rational) -> ConditionVerdict {
    let Some(family) = recognize_family(arr) else {
        return ConditionVerdict::new(Condition::V, false, "array not in the list");
    };
    let min = spectrum(arr).ok().map(|sd| sd.min_eigenvalue().clone());
    match min.as_ref().and_then(|m| m.exact()) {
        Some(m) if m == theta => ConditionVerdict::new(Condition::V, true, format!("{family}, minimal eigenvalue")),
        Some(m) => ConditionVerdict::new(
            Condition::V,
            false,
            format!("{family} but theta = {theta} is not the minimal eigenvalue {m}"),
        ),
        None => ConditionVerdict::new(Condition::V, false, "minimal eigenvalue unavailable"),
    }
}

/// All six verdicts at parameter level, without checking that `theta` heads
/// a Q-polynomial ordering. (i) and (iv) come back as graph-level pending.
pub fn parameter_conditions(arr: &IntersectionArray, theta: &Rational) -> Vec<ConditionVerdict> {
    vec![
        ConditionVerdict::pending(Condition::I),
        condition_ii(arr, theta),
        condition_iii(arr, theta),
        ConditionVerdict::pending(Condition::IV),
        condition_v(arr, theta),
        condition_vi(arr, theta),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremTable {
    pub theta: Rational,
    /// Q-polynomial orderings (spectrum indices) whose `E_1` is `theta`.
    pub orderings: Vec<Vec<usize>>,
    pub verdicts: Vec<ConditionVerdict>,
}

impl TheoremTable {
    pub fn verdict(&self, c: Condition) -> Option<&ConditionVerdict> {
        self.verdicts.iter().find(|v| v.condition == c)
    }

    /// `Some(v)` when every evaluated condition equals `v`.
    pub fn unanimous(&self) -> Option<bool> {
        unanimity(&self.verdicts)
    }
}

pub(crate) fn unanimity(verdicts: &[ConditionVerdict]) -> Option<bool> {
    let mut evaluated = verdicts.iter().filter(|v| !v.graph_level_required).map(|v| v.holds);
    let first = evaluated.next()?;
    evaluated.all(|h| h == first).then_some(first)
}

pub(crate) fn mixed_message(verdicts: &[ConditionVerdict]) -> String {
    verdicts
        .iter()
        .filter(|v| !v.graph_level_required)
        .map(|v| format!("{}={}", v.condition, v.holds))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Orderings whose `E_1` is `theta`; errors if there are none.
pub(crate) fn orderings_at(arr: &IntersectionArray, theta: &Rational) -> Result<Vec<Vec<usize>>> {
    let d = arr.diameter();
    if d > MAX_ORDERING_SEARCH_DIAMETER {
        return Err(Error::DiameterTooLargeForSearch(d));
    }
    let sd = spectrum(arr)?;
    let Some(idx) = sd.index_of(theta) else {
        return Err(Error::NotQPolynomialAtTheta(theta.clone()));
    };
    let orders: Vec<Vec<usize>> = crate::params::q_polynomial_orderings(arr)?
        .into_iter()
        .filter(|o| o[1] == idx)
        .collect();
    if orders.is_empty() {
        return Err(Error::NotQPolynomialAtTheta(theta.clone()));
    }
    Ok(orders)
}

/// Verdicts for (ii), (iii), (v) and (vi) under the theorem's hypothesis
/// that `theta` is the `E_1` of a Q-polynomial ordering.
///
/// A mixed outcome among the four is an [`Error::InternalInconsistency`].
pub fn theorem_table(arr: &IntersectionArray, theta: &Rational) -> Result<TheoremTable> {
    let orderings = orderings_at(arr, theta)?;
    let verdicts = parameter_conditions(arr, theta);
    if unanimity(&verdicts).is_none() {
        return Err(Error::InternalInconsistency(format!(
            "{} at theta = {theta}: {}",
            arr,
            mixed_message(&verdicts)
        )));
    }
    Ok(TheoremTable { theta: theta.clone(), orderings, verdicts })
}

/// One row of the summary table of classified graphs.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetRow {
    pub family: Family,
    pub array: IntersectionArray,
    pub t: i64,
    pub min_eigenvalue: Rational,
    pub parameters: ClassicalParameters,
}

/// The five sporadic rows followed by the dual polar rows for
/// `2 <= D <= max_d`, with classical parameters, minimal eigenvalue and `t`
/// as computed from each array.
pub fn target_rows(max_d: usize) -> Result<Vec<TargetRow>> {
    let mut arrays: Vec<IntersectionArray> = SPORADIC
        .iter()
        .map(|(b, c, _, _)| IntersectionArray::validate(b, c))
        .collect::<Result<_>>()?;
    for d in 2..=max_d {
        arrays.push(classical_array(&dual_polar_parameters(d))?);
    }
    let mut rows = Vec::new();
    for (i, array) in arrays.into_iter().enumerate() {
        let family = if i < SPORADIC.len() {
            let (_, _, d, t) = SPORADIC[i];
            Family::NearPolygon { d, t }
        } else {
            Family::DualPolar { d: array.diameter() }
        };
        let (_, t) = near_polygon_order(&array)
            .ok_or_else(|| Error::InternalInconsistency(format!("{array} is not a near polygon")))?;
        let sd = spectrum(&array)?;
        let min_eigenvalue = sd
            .min_eigenvalue()
            .exact()
            .cloned()
            .ok_or_else(|| Error::IrrationalEigenvalue(sd.min_eigenvalue().to_string()))?;
        let d = array.diameter();
        let parameters = classical_fit(&array)
            .into_iter()
            .find(|cp| cp.b == -2 && cp.sigma_cl == negative_two_sigma(d, &cp.alpha))
            .ok_or_else(|| Error::InternalInconsistency(format!("{array} has no b = -2 fit")))?;
        rows.push(TargetRow { family, array, t, min_eigenvalue, parameters });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    #[test]
    fn condition_ii_examples() {
        let v = condition_ii(&arr("{4,2;1,2}"), &int(-2));
        assert!(v.holds);
        assert!(v.witness.contains("(2,-2,-3,-4)"));
        let v = condition_ii(&arr("{3,2;1,1}"), &int(-2));
        assert!(!v.holds);
        assert!(v.witness.contains("sigma = -3 != 2+alpha-alpha[D] = -2"), "{}", v.witness);
        let v = condition_ii(&arr("{42,40,32;1,5,21}"), &int(-21));
        assert!(v.holds && v.witness.contains("(3,-2,-6,14)"));
    }

    #[test]
    fn condition_iii_examples() {
        assert!(condition_iii(&arr("{24,22,20;1,2,12}"), &int(-12)).holds);
        assert!(!condition_iii(&arr("{4,2;1,2}"), &int(1)).holds);
        assert!(!condition_iii(&arr("{6,2;1,4}"), &int(-2)).holds);
    }

    #[test]
    fn condition_vi_examples() {
        assert!(condition_vi(&arr("{18,16,16;1,1,9}"), &int(-9)).holds);
        assert!(!condition_vi(&arr("{18,16,16;1,1,9}"), &int(18)).holds);
        let v = condition_vi(&arr("{6,2;1,4}"), &int(-2));
        assert!(!v.holds && v.witness.contains("-1/3"));
    }

    #[test]
    fn theorem_table_targets_and_controls() {
        let t = theorem_table(&arr("{30,28,24;1,3,15}"), &int(-15)).unwrap();
        assert_eq!(t.unanimous(), Some(true));
        let t = theorem_table(&arr("{3,2;1,1}"), &int(-2)).unwrap();
        assert_eq!(t.unanimous(), Some(false));
        let t = theorem_table(&arr("{42,40,32;1,5,21}"), &int(-21)).unwrap();
        assert_eq!(t.unanimous(), Some(true));
        assert!(t.verdict(Condition::V).unwrap().witness.contains("A5(2)"));
        assert!(t.verdict(Condition::I).unwrap().graph_level_required);
        assert_eq!(
            theorem_table(&arr("{24,22,20;1,2,12}"), &int(6)),
            Err(Error::NotQPolynomialAtTheta(int(6)))
        );
    }

    #[test]
    fn family_recognition() {
        assert_eq!(recognize_family(&arr("{10,8;1,5}")), Some(Family::DualPolar { d: 2 }));
        assert_eq!(recognize_family(&arr("{6,4;1,3}")), Some(Family::NearPolygon { d: 2, t: 2 }));
        assert_eq!(recognize_family(&arr("{3,2;1,1}")), None);
        assert_eq!(Family::DualPolar { d: 5 }.name(), "dual polar graph A9(2)");
    }
}

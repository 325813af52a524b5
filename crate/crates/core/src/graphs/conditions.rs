use crate::error::{Error, Result};
use crate::exact_math::Rational;
use crate::params::{near_polygon_order, IntersectionArray};
use crate::theorem::{
    condition_ii, condition_iii, condition_v, condition_vi, Condition, ConditionVerdict,
};

use super::graph::{intersection_numbers, Graph};
use super::idempotent::{idempotent, ExactIdempotent};
use super::structure::{clique_sum_check, find_kite, local_structure, CliqueSumReport, CliqueSumVerdict, Kite, LocalStructure};

/// All six conditions evaluated on an explicit graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphTheoremReport {
    pub array: IntersectionArray,
    pub theta: Rational,
    /// Q-polynomial orderings with `E_1` at `theta`; empty when not checked.
    pub orderings: Vec<Vec<usize>>,
    pub idempotent: ExactIdempotent,
    /// `None` when the graph has no 3-clique.
    pub cliques: Option<CliqueSumReport>,
    pub local: LocalStructure,
    pub kite: Option<Kite>,
    pub verdicts: Vec<ConditionVerdict>,
}

impl GraphTheoremReport {
    pub fn verdict(&self, c: Condition) -> &ConditionVerdict {
        self.verdicts.iter().find(|v| v.condition == c).expect("all six present")
    }

    pub fn unanimous(&self) -> Option<bool> {
        let first = self.verdicts.first()?.holds;
        self.verdicts.iter().all(|v| v.holds == first).then_some(first)
    }
}

fn mixed(verdicts: &[ConditionVerdict]) -> String {
    verdicts.iter().map(|v| format!("{}={}", v.condition, v.holds)).collect::<Vec<_>>().join(" ")
}

/// Evaluates the six conditions without requiring `theta` to head a
/// Q-polynomial ordering and without asserting unanimity. Structural
/// cross-checks (dependent Gram matrix iff zero column sum; local cliques
/// iff kite-free under `a_i = a_1 c_i`) still raise
/// [`Error::InternalInconsistency`].
pub fn graph_conditions(g: &Graph, arr: &IntersectionArray, theta: &Rational) -> Result<GraphTheoremReport> {
    let e = idempotent(g, arr, theta)?;
    let cliques = match clique_sum_check(g, &e) {
        Ok(r) => Some(r),
        Err(Error::NoTriangles) => None,
        Err(err) => return Err(err),
    };
    if let Some(r) = &cliques {
        if r.singular != r.zero_sum {
            return Err(Error::InternalInconsistency(format!(
                "{} singular cliques but {} zero-sum cliques",
                r.singular.len(),
                r.zero_sum.len()
            )));
        }
    }
    let local = local_structure(g);
    let kite = find_kite(g);
    let param_order = near_polygon_order(arr);
    let by_local = param_order.is_some() && local.order == param_order;
    let by_kite = param_order.is_some() && kite.is_none();
    if by_local != by_kite {
        return Err(Error::InternalInconsistency(format!(
            "local clique structure ({by_local}) disagrees with kite-free route ({by_kite})"
        )));
    }

    let v_i = match &cliques {
        None => ConditionVerdict::graph(Condition::I, false, "false (no 3-clique)"),
        Some(r) if r.some_singular() => {
            let [x, y, z] = r.singular[0];
            ConditionVerdict::graph(
                Condition::I,
                true,
                format!("{{{x},{y},{z}}} has singular Gram matrix ({} of {} cliques)", r.singular.len(), r.triangles),
            )
        }
        Some(r) => ConditionVerdict::graph(
            Condition::I,
            false,
            format!("all {} cliques have nonsingular Gram matrix", r.triangles),
        ),
    };
    let a1 = arr.a(1);
    let v_iv = match &cliques {
        None => ConditionVerdict::graph(Condition::IV, false, "a_1 = 0 (clique sum vacuous)"),
        Some(r) if a1 != 1 => {
            ConditionVerdict::graph(Condition::IV, false, format!("a_1 = {a1}; {} of {} cliques sum to zero", r.zero_sum.len(), r.triangles))
        }
        Some(r) if r.verdict == CliqueSumVerdict::AllDependent => ConditionVerdict::graph(
            Condition::IV,
            true,
            format!("a_1 = 1, all {} cliques sum to zero", r.triangles),
        ),
        Some(r) => ConditionVerdict::graph(
            Condition::IV,
            false,
            format!("a_1 = 1, {} of {} cliques sum to zero", r.zero_sum.len(), r.triangles),
        ),
    };
    let param_iii = condition_iii(arr, theta);
    let v_iii = if param_iii.holds && !by_local {
        ConditionVerdict::graph(
            Condition::III,
            false,
            local.reason.clone().unwrap_or_else(|| "local structure differs from parameters".into()),
        )
    } else if param_iii.holds {
        ConditionVerdict::graph(Condition::III, true, format!("{}; neighbourhoods are disjoint cliques", param_iii.witness))
    } else {
        param_iii
    };
    let verdicts = vec![
        v_i,
        condition_ii(arr, theta),
        v_iii,
        v_iv,
        condition_v(arr, theta),
        condition_vi(arr, theta),
    ];
    Ok(GraphTheoremReport {
        array: arr.clone(),
        theta: theta.clone(),
        orderings: Vec::new(),
        idempotent: e,
        cliques,
        local,
        kite,
        verdicts,
    })
}

/// Certifies distance-regularity, requires `theta` to be the `E_1` of some
/// Q-polynomial ordering, evaluates all six conditions and asserts that they
/// agree.
pub fn theorem_conditions_graph(g: &Graph, theta: &Rational) -> Result<GraphTheoremReport> {
    let arr = intersection_numbers(g)?;
    let orderings = crate::theorem::orderings_at(&arr, theta)?;
    let mut report = graph_conditions(g, &arr, theta)?;
    report.orderings = orderings;
    if report.unanimous().is_none() {
        return Err(Error::InternalInconsistency(format!(
            "{arr} at theta = {theta}: {}",
            mixed(&report.verdicts)
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::int;

    fn rook() -> Graph {
        Graph::from_fn(9, |u, v| u / 3 == v / 3 || u % 3 == v % 3).unwrap()
    }

    #[test]
    fn rook_all_hold_at_minimum() {
        let r = theorem_conditions_graph(&rook(), &int(-2)).unwrap();
        assert_eq!(r.unanimous(), Some(true));
        assert_eq!(r.local.order, Some((2, 1)));
        assert!(r.kite.is_none());
    }

    #[test]
    fn rook_all_fail_at_one() {
        let r = theorem_conditions_graph(&rook(), &int(1)).unwrap();
        assert_eq!(r.unanimous(), Some(false));
    }

    #[test]
    fn not_q_polynomial() {
        assert_eq!(
            theorem_conditions_graph(&rook(), &int(3)).unwrap_err(),
            Error::NotQPolynomialAtTheta(int(3))
        );
    }
}

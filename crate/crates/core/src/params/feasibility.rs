use std::fmt;

use super::krein::orderings_from_table;
use super::{krein_parameters, spectrum, IntersectionArray, MAX_ORDERING_SEARCH_DIAMETER};
use crate::error::Result;
use crate::exact_math::{display_with_decimal, Rational};

/// Tolerance for integrality of multiplicities of irrational eigenvalues.
const APPROX_INTEGRALITY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotEvaluated,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotEvaluated => "N/A",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
    /// For a failed multiplicity check: every exact eigenvalue with a
    /// non-integral multiplicity.
    pub witnesses: Vec<(Rational, Rational)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub checks: Vec<FeasibilityCheck>,
}

impl FeasibilityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn first_failure(&self) -> Option<&FeasibilityCheck> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&FeasibilityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_KI: &str = "k_i integrality";
pub const CHECK_AI: &str = "a_i nonnegative";
pub const CHECK_MULT: &str = "multiplicity integrality";
pub const CHECK_KREIN: &str = "Krein nonnegativity";
pub const CHECK_QPOLY: &str = "Q-polynomial ordering exists";

fn check(name: &'static str, status: CheckStatus, detail: impl Into<String>) -> FeasibilityCheck {
    FeasibilityCheck { name, status, detail: detail.into(), witnesses: Vec::new() }
}

/// Runs the standard feasibility screen on a validated array.
pub fn feasibility_report(arr: &IntersectionArray) -> Result<FeasibilityReport> {
    use CheckStatus::*;
    let mut checks = vec![
        check(CHECK_KI, Pass, format!("n = {}", arr.vertex_count())),
        check(CHECK_AI, Pass, format!("a = {:?}", arr.a_list())),
    ];

    let sd = spectrum(arr)?;
    let mut mult = check(CHECK_MULT, Pass, "all multiplicities are integers");
    let mut bad = Vec::new();
    for e in &sd.entries {
        let integral = if e.approximate {
            let m = e.multiplicity_f64();
            (m - m.round()).abs() < APPROX_INTEGRALITY_TOL
        } else {
            e.multiplicity.is_integer()
        };
        if !integral {
            bad.push(format!(
                "theta = {} has multiplicity {}",
                e.eigenvalue,
                display_with_decimal(&e.multiplicity)
            ));
            if let Some(theta) = e.eigenvalue.exact() {
                mult.witnesses.push((theta.clone(), e.multiplicity.clone()));
            }
        }
    }
    if !bad.is_empty() {
        mult.status = Fail;
        mult.detail = bad.join("; ");
    }
    checks.push(mult);

    match krein_parameters(&sd, arr) {
        Ok(table) => {
            let krein = match table.first_negative() {
                None => check(CHECK_KREIN, Pass, format!("min q = {}", table.min_entry())),
                Some((i, j, h)) => check(
                    CHECK_KREIN,
                    Fail,
                    format!("q[{i}][{j}][{h}] = {}", table.get(i, j, h)),
                ),
            };
            checks.push(krein);
            let qpoly = if arr.diameter() > MAX_ORDERING_SEARCH_DIAMETER {
                check(CHECK_QPOLY, NotEvaluated, "diameter too large for exhaustive search")
            } else {
                let orders = orderings_from_table(&table);
                if orders.is_empty() {
                    check(CHECK_QPOLY, Fail, "no ordering satisfies both clauses")
                } else {
                    let e1: Vec<String> = orders
                        .iter()
                        .map(|o| sd.entries[o[1]].eigenvalue.to_string())
                        .collect();
                    check(CHECK_QPOLY, Pass, format!("E_1 candidates: {}", e1.join(", ")))
                }
            };
            checks.push(qpoly);
        }
        Err(_) => {
            checks.push(check(CHECK_KREIN, NotEvaluated, "irrational spectrum"));
            checks.push(check(CHECK_QPOLY, NotEvaluated, "irrational spectrum"));
        }
    }
    Ok(FeasibilityReport { checks })
}

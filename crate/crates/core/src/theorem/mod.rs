//! Parameter-level evaluation of the six equivalent conditions and the
//! classification over diameters.
//!
//! Conditions (i) and (iv) concern actual 3-cliques and are evaluated by
//! [`crate::graphs`]; here they are reported as graph-level pending.

mod classify;
mod conditions;

pub use classify::{classify, ClassVerdict, ClassificationEntry};
pub(crate) use conditions::{orderings_at, unanimity};
pub use conditions::{
    condition_ii, condition_iii, condition_v, condition_vi, parameter_conditions, recognize_family,
    target_rows, theorem_table, Condition, ConditionVerdict, Family, TargetRow, TheoremTable,
};

use crate::exact_math::Rational;

/// Inner products from the Cauchy-Schwarz bound on `c_2`, for
/// `u = Ex + Ey` and `v = sum_{z in G(x) cap G(y)} Ez` with `d(x, y) = 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchySchwarz {
    pub uv: Rational,
    pub uu: Rational,
    pub vv: Rational,
    /// `uu * vv - uv^2`, which equals `(m/n)^2 * 3 c_2 (5 - c_2) / 8`.
    pub slack: Rational,
}

pub fn cauchy_schwarz_quantities(c2: i64, m: &Rational, n: &Rational) -> CauchySchwarz {
    let r = |v: i64| Rational::from_integer(v.into());
    let base = m / n;
    let uv = -r(c2) * &base;
    let uu = r(5) * &base / r(2);
    let vv = r(c2 * c2 + 3 * c2) * &base / r(4);
    let slack = &uu * &vv - &uv * &uv;
    CauchySchwarz { uv, uu, vv, slack }
}

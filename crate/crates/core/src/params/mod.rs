//! Parameter-level analysis of intersection arrays.
//!
//! Everything here is a function of `{b_0,...,b_{D-1}; c_1,...,c_D}` alone:
//! derived counts, the spectrum with multiplicities and cosine sequences,
//! Krein parameters, Q-polynomial orderings, classical parameters and the
//! feasibility screen.

mod array;
mod classical;
mod feasibility;
mod krein;
mod spectral;

pub use array::IntersectionArray;
pub use classical::{classical_array, classical_eigenvalues, classical_fit, ClassicalParameters};
pub use feasibility::{feasibility_report, CheckStatus, FeasibilityCheck, FeasibilityReport};
pub use krein::{
    is_q_polynomial_ordering, krein_parameters, q_polynomial_orderings, KreinTable,
    MAX_ORDERING_SEARCH_DIAMETER,
};
pub use spectral::{
    cosine_sequence, multiplicity, spectrum, CosineSequence, SpectralData, SpectralEntry,
};

/// `(s, t)` with `s = a_1 + 1` and `t = k/(a_1 + 1) - 1` when `a_i = a_1 c_i`
/// for every `1 <= i <= D` and `a_1 + 1` divides `k`.
///
/// This is only the parameter half of the regular near polygon definition;
/// the local clique structure is a graph-level property.
pub fn near_polygon_order(arr: &IntersectionArray) -> Option<(i64, i64)> {
    let a1 = arr.a(1);
    if (1..=arr.diameter()).any(|i| arr.a(i) != a1 * arr.c(i)) {
        return None;
    }
    let s = a1 + 1;
    let k = arr.valency();
    if k % s != 0 {
        return None;
    }
    Some((s, k / s - 1))
}

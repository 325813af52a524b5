//! Explicit graphs: distances, distance-regularity certificates, exact
//! primitive idempotents and the graph-level theorem conditions.

mod conditions;
mod graph;
mod idempotent;
mod matrix;
mod structure;

pub use conditions::{graph_conditions, theorem_conditions_graph, GraphTheoremReport};
pub use graph::{intersection_numbers, DistanceData, Graph};
pub use idempotent::{
    all_idempotents, cauchy_schwarz_realization, check_completeness, cosine_spot_check, idempotent,
    is_trivial, matrix_krein_table, CauchySchwarzRealization, CosineSpotCheck, ExactIdempotent,
};
pub use matrix::ExactMatrix;
pub use structure::{
    clique_sum_check, find_kite, gram_3clique, kite_free, local_structure, CliqueSumReport,
    CliqueSumVerdict, Gram3, Kite, LocalStructure,
};

use qdrg_core::constructions::{maximal_isotropic_subspaces, Construction};
use qdrg_core::exact_math::int;
use qdrg_core::graphs::{
    all_idempotents, check_completeness, cosine_spot_check, intersection_numbers, matrix_krein_table,
    theorem_conditions_graph, Graph,
};
use qdrg_core::params::{krein_parameters, q_polynomial_orderings, spectrum};

fn build(c: Construction) -> Graph {
    let g = c.build().unwrap();
    assert_eq!(intersection_numbers(&g).unwrap(), c.expected_array(), "{c}");
    g
}

#[test]
fn every_builder_matches_its_array() {
    for c in Construction::ALL {
        let g = build(c);
        assert_eq!(num_bigint::BigInt::from(g.n()), c.expected_array().vertex_count());
    }
}

#[test]
fn dual_polar_vertex_counts() {
    // prod_{i=1}^{D} (1 + 2^{2i-1})
    for (d, n) in [(2usize, 27usize), (3, 891)] {
        let product: usize = (1..=d).map(|i| 1 + (1 << (2 * i - 1))).product();
        assert_eq!(product, n);
        assert_eq!(maximal_isotropic_subspaces(d).unwrap().len(), n);
    }
}

#[test]
fn conditions_at_every_q_polynomial_eigenvalue() {
    for c in Construction::ALL {
        let g = build(c);
        let arr = c.expected_array();
        let sd = spectrum(&arr).unwrap();
        let eigen = sd.exact_eigenvalues().unwrap();
        let min = eigen.last().unwrap().clone();
        let mut heads: Vec<usize> = q_polynomial_orderings(&arr).unwrap().iter().map(|o| o[1]).collect();
        heads.sort_unstable();
        heads.dedup();
        for idx in heads {
            let theta = &eigen[idx];
            let report = theorem_conditions_graph(&g, theta).unwrap();
            let expected = c.is_target() && *theta == min;
            assert_eq!(report.unanimous(), Some(expected), "{c} at {theta}");
        }
    }
}

#[test]
fn completeness_krein_and_cosines() {
    for c in Construction::ALL {
        let g = build(c);
        let arr = c.expected_array();
        let all = all_idempotents(&g, &arr).unwrap();
        check_completeness(&all).unwrap();
        let table = matrix_krein_table(&all).unwrap();
        assert_eq!(table, krein_parameters(&spectrum(&arr).unwrap(), &arr).unwrap(), "{c}");
        assert!(table.is_nonnegative());
        for e in &all {
            assert!(cosine_spot_check(&g, e, 100, 0x5eed).passed(), "{c} at {}", e.theta);
        }
        assert_eq!(all[0].m, int(1));
    }
}

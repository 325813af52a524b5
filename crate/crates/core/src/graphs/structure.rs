use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_math::{int, real_roots, root_multiplicity, Eigenvalue, IntegerPolynomial, Rational};

use super::graph::Graph;
use super::idempotent::ExactIdempotent;

/// How many 3-cliques have `Ex + Ey + Ez = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliqueSumVerdict {
    AllDependent,
    SomeDependent,
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliqueSumReport {
    pub triangles: usize,
    pub verdict: CliqueSumVerdict,
    /// Cliques whose three columns sum to zero.
    pub zero_sum: Vec<[usize; 3]>,
    /// Cliques whose 3x3 Gram matrix is singular.
    pub singular: Vec<[usize; 3]>,
}

impl CliqueSumReport {
    /// Theorem condition (i): some 3-clique has dependent columns.
    pub fn some_singular(&self) -> bool {
        !self.singular.is_empty()
    }
}

/// Exhaustively checks every 3-clique, both for `Ex + Ey + Ez = 0` and for a
/// singular Gram matrix of `Ex, Ey, Ez`.
pub fn clique_sum_check(g: &Graph, e: &ExactIdempotent) -> Result<CliqueSumReport> {
    let triangles = g.triangles();
    if triangles.is_empty() {
        return Err(Error::NoTriangles);
    }
    let mat = &e.matrix;
    let n = g.n();
    let mut zero_sum = Vec::new();
    let mut singular = Vec::new();
    for t in &triangles {
        let [x, y, z] = *t;
        if (0..n).all(|w| mat.raw(w, x) + mat.raw(w, y) + mat.raw(w, z) == 0) {
            zero_sum.push(*t);
        }
        // E is symmetric and idempotent, so <Ea, Eb> = E_ab.
        let c = |a: usize, b: usize| mat.raw(a, b) as i128;
        let det = c(x, x) * (c(y, y) * c(z, z) - c(y, z) * c(z, y))
            - c(x, y) * (c(y, x) * c(z, z) - c(y, z) * c(z, x))
            + c(x, z) * (c(y, x) * c(z, y) - c(y, y) * c(z, x));
        if det == 0 {
            singular.push(*t);
        }
    }
    let verdict = if zero_sum.len() == triangles.len() {
        CliqueSumVerdict::AllDependent
    } else if zero_sum.is_empty() {
        CliqueSumVerdict::None
    } else {
        CliqueSumVerdict::SomeDependent
    };
    Ok(CliqueSumReport { triangles: triangles.len(), verdict, zero_sum, singular })
}

/// Gram matrix of the idempotent columns of a 3-clique, scaled by `n/m`.
#[derive(Debug, Clone, PartialEq)]
pub struct Gram3 {
    pub matrix: [[Rational; 3]; 3],
    /// Eigenvalues with multiplicity, descending.
    pub eigenvalues: Vec<Rational>,
}

impl Gram3 {
    pub fn is_singular(&self) -> bool {
        self.eigenvalues.iter().any(Zero::is_zero)
    }
}

/// Unit diagonal, off-diagonal `sigma1`; eigenvalues from the exact
/// characteristic polynomial.
pub fn gram_3clique(sigma1: &Rational) -> Result<Gram3> {
    let one = int(1);
    let m = [
        [one.clone(), sigma1.clone(), sigma1.clone()],
        [sigma1.clone(), one.clone(), sigma1.clone()],
        [sigma1.clone(), sigma1.clone(), one],
    ];
    let tr = &m[0][0] + &m[1][1] + &m[2][2];
    let minor = |i: usize, j: usize| &m[i][i] * &m[j][j] - &m[i][j] * &m[j][i];
    let minors = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = &m[0][0] * minor(1, 2) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    let p = IntegerPolynomial::primitive_from_rational(&[-det, minors, -tr, int(1)]);
    let mut eigenvalues = Vec::with_capacity(3);
    for root in real_roots(&p)? {
        let Eigenvalue::Exact(r) = root else {
            return Err(Error::IrrationalEigenvalue(root.to_string()));
        };
        let mult = root_multiplicity(&p, &r);
        eigenvalues.extend(std::iter::repeat_n(r, mult));
    }
    Ok(Gram3 { matrix: m, eigenvalues })
}

/// A kite `x, y, z` mutually adjacent with `d(x,w) = i` and
/// `d(y,w) = d(z,w) = i - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Kite {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub w: usize,
    pub length: usize,
}

/// Exhaustive search over triangles times vertices; `None` means kite-free.
pub fn find_kite(g: &Graph) -> Option<Kite> {
    let dd = g.distances();
    for [a, b, c] in g.triangles() {
        for w in 0..g.n() {
            let (da, db, dc) = (dd.get(a, w), dd.get(b, w), dd.get(c, w));
            for (x, dx, y, dy, z, dz) in [(a, da, b, db, c, dc), (b, db, a, da, c, dc), (c, dc, a, da, b, db)] {
                if dx >= 2 && dy == dx - 1 && dz == dx - 1 {
                    return Some(Kite { x, y, z, w, length: dx });
                }
            }
        }
    }
    None
}

pub fn kite_free(g: &Graph) -> bool {
    find_kite(g).is_none()
}

/// Result of checking that every neighbourhood is a disjoint union of
/// cliques of one common size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalStructure {
    /// `(s, t)`: cliques of size `s = a_1 + 1`, `t + 1 = k / s` of them.
    pub order: Option<(i64, i64)>,
    pub failing_vertex: Option<usize>,
    pub reason: Option<String>,
}

pub fn local_structure(g: &Graph) -> LocalStructure {
    let fail = |v: usize, reason: String| LocalStructure {
        order: None,
        failing_vertex: Some(v),
        reason: Some(reason),
    };
    let Some(k) = g.valency() else {
        return fail(0, "graph is not regular".into());
    };
    let mut clique_size: Option<usize> = None;
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        let local_degree = |u: usize| super::graph::popcount_and(g.row(u), g.row(v));
        let mut seen = vec![false; nbrs.len()];
        for i in 0..nbrs.len() {
            if seen[i] {
                continue;
            }
            let comp: Vec<usize> = (0..nbrs.len())
                .filter(|&j| j == i || g.has_edge(nbrs[i] as usize, nbrs[j] as usize))
                .collect();
            for &p in &comp {
                let pairwise = comp.iter().all(|&q| p == q || g.has_edge(nbrs[p] as usize, nbrs[q] as usize));
                if !pairwise || local_degree(nbrs[p] as usize) != comp.len() - 1 {
                    return fail(v, format!("neighbourhood of {v} is not a disjoint union of cliques"));
                }
                seen[p] = true;
            }
            match clique_size {
                None => clique_size = Some(comp.len()),
                Some(s) if s != comp.len() => {
                    return fail(v, format!("cliques of sizes {s} and {} in neighbourhoods", comp.len()));
                }
                _ => {}
            }
        }
    }
    let s = clique_size.unwrap_or(0);
    if s == 0 || k % s != 0 {
        return fail(0, format!("clique size {s} does not divide k = {k}"));
    }
    LocalStructure { order: Some((s as i64, (k / s) as i64 - 1)), failing_vertex: None, reason: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::ratio;
    use crate::graphs::idempotent;

    fn rook() -> Graph {
        Graph::from_fn(9, |u, v| u / 3 == v / 3 || u % 3 == v % 3).unwrap()
    }

    fn two_subsets(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    }

    fn triangular5() -> Graph {
        let p = two_subsets(5);
        Graph::from_fn(p.len(), |u, v| {
            let ((a, b), (c, d)) = (p[u], p[v]);
            a == c || a == d || b == c || b == d
        })
        .unwrap()
    }

    #[test]
    fn gram_eigenvalues() {
        assert_eq!(gram_3clique(&ratio(-1, 2)).unwrap().eigenvalues, vec![ratio(3, 2), ratio(3, 2), int(0)]);
        assert_eq!(gram_3clique(&int(0)).unwrap().eigenvalues, vec![int(1); 3]);
        assert_eq!(
            gram_3clique(&ratio(1, 4)).unwrap().eigenvalues,
            vec![ratio(3, 2), ratio(3, 4), ratio(3, 4)]
        );
        assert!(gram_3clique(&ratio(-1, 2)).unwrap().is_singular());
    }

    #[test]
    fn rook_clique_sums() {
        let g = rook();
        let arr = "{4,2;1,2}".parse().unwrap();
        let e = idempotent(&g, &arr, &int(-2)).unwrap();
        let r = clique_sum_check(&g, &e).unwrap();
        assert_eq!((r.triangles, r.verdict), (6, CliqueSumVerdict::AllDependent));
        assert_eq!(r.singular.len(), 6);
        let e = idempotent(&g, &arr, &int(1)).unwrap();
        let r = clique_sum_check(&g, &e).unwrap();
        assert_eq!(r.verdict, CliqueSumVerdict::None);
        assert!(!r.some_singular());
    }

    #[test]
    fn kites_and_local_structure() {
        assert!(kite_free(&rook()));
        assert_eq!(local_structure(&rook()).order, Some((2, 1)));
        let t5 = triangular5();
        let kite = find_kite(&t5).unwrap();
        assert_eq!(kite.length, 2);
        let ls = local_structure(&t5);
        assert_eq!(ls.order, None);
        assert_eq!(ls.failing_vertex, Some(0));
    }
}

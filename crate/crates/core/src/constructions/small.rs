use crate::error::Result;
use crate::graphs::Graph;

fn two_subsets(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn pair_label((a, b): (usize, usize)) -> String {
    format!("{{{},{}}}", a + 1, b + 1)
}

fn disjoint((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    a != c && a != d && b != c && b != d
}

/// 3x3 rook graph: cells `(i, j)`, adjacent in the same row or column.
pub fn grid_3x3() -> Result<Graph> {
    let g = Graph::from_fn(9, |u, v| u / 3 == v / 3 || u % 3 == v % 3)?;
    Ok(g.with_labels((0..9).map(|v| format!("({},{})", v / 3, v % 3)).collect()))
}

/// Complement of T(6): 2-subsets of `{1..6}`, adjacent when disjoint.
pub fn gq22_graph() -> Result<Graph> {
    let p = two_subsets(6);
    let g = Graph::from_fn(p.len(), |u, v| disjoint(p[u], p[v]))?;
    Ok(g.with_labels(p.into_iter().map(pair_label).collect()))
}

/// Petersen graph as the Kneser graph K(5,2).
pub fn petersen() -> Result<Graph> {
    let p = two_subsets(5);
    let g = Graph::from_fn(p.len(), |u, v| disjoint(p[u], p[v]))?;
    Ok(g.with_labels(p.into_iter().map(pair_label).collect()))
}

/// Triangular graph T(n) = J(n,2): 2-subsets meeting in one point.
pub fn triangular(n: usize) -> Result<Graph> {
    let p = two_subsets(n);
    let g = Graph::from_fn(p.len(), |u, v| !disjoint(p[u], p[v]))?;
    Ok(g.with_labels(p.into_iter().map(pair_label).collect()))
}

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::params::IntersectionArray;

/// Connected simple undirected graph with bitset adjacency rows.
#[derive(Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
    distances: OnceLock<DistanceData>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Self {
            n: self.n,
            words: self.words,
            bits: self.bits.clone(),
            adj: self.adj.clone(),
            labels: self.labels.clone(),
            distances: OnceLock::new(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// Builds and validates a graph from an undirected edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let words = words_for(n);
        let mut bits = vec![0u64; n * words];
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::BadIndex { index: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (wu, bu) = (u * words + v / 64, v % 64);
            if bits[wu] >> bu & 1 == 1 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            bits[wu] |= 1 << bu;
            bits[v * words + u / 64] |= 1 << (u % 64);
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let g = Self { n, words, bits, adj, labels: None, distances: OnceLock::new() };
        if n == 0 || !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric adjacency predicate on `0..n`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_edges(n, &edges)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Common valency, if the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let k = self.degree(0);
        self.adj.iter().all(|r| r.len() == k).then_some(k)
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().map(|&v| v as usize).filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Every 3-clique `x < y < z`.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (x, y) in self.edges() {
            let (rx, ry) = (self.row(x), self.row(y));
            for (w, (a, b)) in rx.iter().zip(ry).enumerate() {
                let mut common = a & b;
                while common != 0 {
                    let z = w * 64 + common.trailing_zeros() as usize;
                    common &= common - 1;
                    if z > y {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    queue.push_back(v as usize);
                }
            }
        }
        count == self.n
    }

    /// All-pairs distances by BFS, computed once and cached.
    pub fn distances(&self) -> &DistanceData {
        self.distances.get_or_init(|| DistanceData::compute(self))
    }

    pub fn dist(&self, x: usize, y: usize) -> usize {
        self.distances().get(x, y)
    }

    /// Parses the text format: first line `n`, then one `u v` pair per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty file".into() })?;
        let n: usize = first.trim().parse().map_err(|_| Error::Parse {
            line: ln + 1,
            msg: format!("expected vertex count, found {first:?}"),
        })?;
        let mut edges = Vec::new();
        for (ln, line) in lines {
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.and_then(|t| t.parse().ok()).ok_or_else(|| Error::Parse {
                    line: ln + 1,
                    msg: format!("expected `u v`, found {line:?}"),
                })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::Parse { line: ln + 1, msg: format!("trailing data in {line:?}") });
            }
            edges.push((u, v));
        }
        Self::from_edges(n, &edges)
    }

    /// Serializes to the text format, edges as `u v` with `u < v` in
    /// lexicographic order.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.edge_count() * 8 + 8);
        let _ = writeln!(s, "{}", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

/// All-pairs distances plus the distance-class bitsets `A_0..A_D`.
#[derive(Debug, Clone)]
pub struct DistanceData {
    n: usize,
    words: usize,
    dist: Vec<u8>,
    diameter: usize,
    /// `layers[i][x]` is the bitset of vertices at distance `i` from `x`.
    layers: Vec<Vec<u64>>,
}

impl DistanceData {
    fn compute(g: &Graph) -> Self {
        let n = g.n;
        let mut dist = vec![u8::MAX; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in &g.adj[u] {
                    if row[v as usize] == u8::MAX {
                        row[v as usize] = du + 1;
                        queue.push_back(v as usize);
                    }
                }
            }
        }
        let diameter = *dist.iter().max().unwrap_or(&0) as usize;
        let words = g.words;
        let mut layers = vec![vec![0u64; n * words]; diameter + 1];
        for x in 0..n {
            for y in 0..n {
                let d = dist[x * n + y] as usize;
                layers[d][x * words + y / 64] |= 1 << (y % 64);
            }
        }
        Self { n, words, dist, diameter, layers }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.dist[x * self.n + y] as usize
    }

    pub fn row(&self, x: usize) -> &[u8] {
        &self.dist[x * self.n..(x + 1) * self.n]
    }

    /// Bitset of vertices at distance `i` from `x` (row `x` of `A_i`).
    pub fn layer(&self, i: usize, x: usize) -> &[u64] {
        &self.layers[i][x * self.words..(x + 1) * self.words]
    }

    /// Entry `(x, y)` of the distance-`i` matrix `A_i`.
    pub fn a(&self, i: usize, x: usize, y: usize) -> bool {
        self.get(x, y) == i
    }
}

/// Certifies distance-regularity by counting, for every ordered pair at
/// distance `i`, the neighbours of `y` at distances `i-1`, `i`, `i+1` from
/// `x`. Returns the array, or the first pair whose counts differ from those
/// of vertex 0.
pub fn intersection_numbers(g: &Graph) -> Result<IntersectionArray> {
    let dd = g.distances();
    let d = dd.diameter();
    let count = |i: Option<usize>, x: usize, y: usize| match i {
        Some(i) if i <= d => popcount_and(dd.layer(i, x), g.row(y)),
        _ => 0,
    };
    let triple = |x: usize, y: usize| {
        let i = dd.get(x, y);
        (count(i.checked_sub(1), x, y), count(Some(i), x, y), count(Some(i + 1), x, y))
    };
    let mut expected: Vec<Option<(usize, usize, usize)>> = vec![None; d + 1];
    for y in 0..g.n() {
        expected[dd.get(0, y)].get_or_insert_with(|| triple(0, y));
    }
    for x in 0..g.n() {
        for y in 0..g.n() {
            let i = dd.get(x, y);
            let want = expected[i].expect("every distance occurs from vertex 0");
            let found = triple(x, y);
            if found != want {
                return Err(Error::NotDistanceRegular { x, y, i, expected: want, found });
            }
        }
    }
    let abc: Vec<_> = expected.into_iter().map(|t| t.expect("filled")).collect();
    let b: Vec<i64> = abc[..d].iter().map(|t| t.2 as i64).collect();
    let c: Vec<i64> = abc[1..].iter().map(|t| t.0 as i64).collect();
    IntersectionArray::validate(&b, &c)
}

pub(crate) fn popcount_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn load_errors() {
        assert_eq!(Graph::from_edges(4, &[(0, 1), (2, 3)]), Err(Error::Disconnected));
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::from_edges(2, &[(0, 2)]), Err(Error::BadIndex { index: 2, n: 2 }));
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.valency(), Some(1));
    }

    #[test]
    fn text_round_trip() {
        let g = cycle(6);
        let text = g.to_text();
        assert_eq!(text, "6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
        let back = Graph::parse(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_text(), text);
        assert!(matches!(Graph::parse("3\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn distance_matrices_partition() {
        let g = cycle(7);
        let dd = g.distances();
        assert_eq!(dd.diameter(), 3);
        for x in 0..7 {
            for y in 0..7 {
                let hits = (0..=3).filter(|&i| dd.a(i, x, y)).count();
                assert_eq!(hits, 1);
                assert_eq!(dd.a(0, x, y), x == y);
                assert_eq!(dd.get(x, y), dd.get(y, x));
            }
        }
        assert_eq!(popcount_and(dd.layer(2, 0), dd.layer(2, 0)), 2);
    }

    #[test]
    fn intersection_numbers_of_small_graphs() {
        let petersen = Graph::from_fn(10, |u, v| {
            let pair = |i: usize| {
                let mut k = i;
                for a in 0..5 {
                    for b in a + 1..5 {
                        if k == 0 {
                            return (a, b);
                        }
                        k -= 1;
                    }
                }
                unreachable!()
            };
            let ((a, b), (c, d)) = (pair(u), pair(v));
            a != c && a != d && b != c && b != d
        })
        .unwrap();
        assert_eq!(intersection_numbers(&petersen).unwrap().to_string(), "{3,2;1,1}");
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let chord = Graph::from_edges(6, &edges).unwrap();
        assert!(matches!(intersection_numbers(&chord), Err(Error::NotDistanceRegular { .. })));
        assert_eq!(intersection_numbers(&cycle(7)).unwrap().to_string(), "{2,1,1;1,1,1}");
    }

    #[test]
    fn triangles_of_k4() {
        let g = Graph::from_fn(4, |_, _| true).unwrap();
        assert_eq!(g.triangles().len(), 4);
        assert!(cycle(5).triangles().is_empty());
    }
}

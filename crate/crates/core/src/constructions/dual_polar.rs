use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::gf4::GF4Element;

/// Vector of GF(4)^{2D} packed two bits per coordinate, so that vector
/// addition is xor.
type Vector = u32;

fn coord(v: Vector, i: usize) -> GF4Element {
    GF4Element::new((v >> (2 * i) & 3) as u8)
}

fn scale(v: Vector, s: GF4Element, len: usize) -> Vector {
    (0..len).fold(0, |acc, i| acc | ((coord(v, i) * s).code() as u32) << (2 * i))
}

/// `h(x, y) = sum_i x_i y_i^2`.
fn hermitian(x: Vector, y: Vector, len: usize) -> GF4Element {
    (0..len).fold(GF4Element::ZERO, |acc, i| acc + coord(x, i) * coord(y, i).conj())
}

/// Reduced row echelon form; the sorted nonzero rows are a canonical key
/// for the span.
fn rref(rows: &[Vector], len: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let mut rank = 0;
    for col in 0..len {
        let Some(p) = (rank..m.len()).find(|&r| !coord(m[r], col).is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = coord(m[rank], col).inv().expect("nonzero pivot");
        m[rank] = scale(m[rank], inv, len);
        for r in 0..m.len() {
            let f = coord(m[r], col);
            if r != rank && !f.is_zero() {
                m[r] ^= scale(m[rank], f, len);
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m.sort_unstable();
    m
}

fn in_span(basis: &[Vector], v: Vector, len: usize) -> bool {
    let mut rows = basis.to_vec();
    rows.push(v);
    rref(&rows, len).len() == basis.len()
}

/// Maximal totally isotropic subspaces of GF(4)^{2D} under `h`, as RREF
/// bases, built level by level with canonical deduplication.
pub fn maximal_isotropic_subspaces(d: usize) -> Result<Vec<Vec<Vector>>> {
    if !(2..=3).contains(&d) {
        return Err(Error::DiameterUnsupported(d));
    }
    let len = 2 * d;
    let isotropic: Vec<Vector> = (1..1u32 << (2 * len))
        .filter(|&v| hermitian(v, v, len).is_zero())
        .collect();
    let mut level: BTreeSet<Vec<Vector>> = BTreeSet::from([Vec::new()]);
    for _ in 0..d {
        let mut next = BTreeSet::new();
        for basis in &level {
            for &v in &isotropic {
                if basis.iter().all(|&b| hermitian(b, v, len).is_zero()) && !in_span(basis, v, len) {
                    let mut rows = basis.clone();
                    rows.push(v);
                    next.insert(rref(&rows, len));
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// Dual polar graph on the maximal totally isotropic subspaces of the
/// Hermitian space GF(4)^{2D}; adjacent when meeting in dimension `D - 1`.
pub fn hermitian_dual_polar(d: usize) -> Result<Graph> {
    let subspaces = maximal_isotropic_subspaces(d)?;
    let len = 2 * d;
    Graph::from_fn(subspaces.len(), |u, v| {
        let mut rows = subspaces[u].clone();
        rows.extend_from_slice(&subspaces[v]);
        rref(&rows, len).len() == d + 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_is_canonical() {
        let len = 4;
        let a: Vector = 0b01_00_10_01;
        let b: Vector = 0b00_11_00_01;
        assert_eq!(rref(&[a, b], len), rref(&[b, a ^ b], len));
        assert_eq!(rref(&[a, scale(a, GF4Element::OMEGA, len)], len).len(), 1);
    }

    #[test]
    fn a3_subspace_count() {
        assert_eq!(maximal_isotropic_subspaces(2).unwrap().len(), 27);
        assert_eq!(hermitian_dual_polar(4).unwrap_err(), Error::DiameterUnsupported(4));
    }
}

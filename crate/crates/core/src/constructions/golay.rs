use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::code::LinearCode;

/// Right half `S` of the generator `[I_6 | S]` of the extended ternary
/// Golay code.
const TERNARY_S: [[u8; 6]; 6] = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, 2, 2, 1],
    [1, 1, 0, 1, 2, 2],
    [1, 2, 1, 0, 1, 2],
    [1, 2, 2, 1, 0, 1],
    [1, 1, 2, 2, 1, 0],
];

/// Generator polynomial `x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1` of the
/// binary cyclic Golay code, bit `i` for `x^i`.
const BINARY_GENERATOR_POLY: u32 = 0b1100_0111_0101;

pub fn extended_ternary_golay() -> Result<LinearCode> {
    let generator = (0..6)
        .map(|i| {
            let mut row = vec![0u8; 12];
            row[i] = 1;
            row[6..].copy_from_slice(&TERNARY_S[i]);
            row
        })
        .collect();
    LinearCode::new(3, generator, 6)
}

pub fn extended_binary_golay() -> Result<LinearCode> {
    let generator = (0..12)
        .map(|shift| {
            let word = BINARY_GENERATOR_POLY << shift;
            let mut row: Vec<u8> = (0..23).map(|i| (word >> i & 1) as u8).collect();
            row.push((word.count_ones() % 2) as u8);
            row
        })
        .collect();
    LinearCode::new(2, generator, 8)
}

/// Syndromes `H e` of the parity check `H = [-S^T | I_6]`, as base-3
/// integers.
fn syndrome(e: &[u8; 12]) -> usize {
    let mut s = [0u8; 6];
    for (j, sj) in s.iter_mut().enumerate() {
        let mut acc = e[6 + j] as u32;
        for i in 0..6 {
            acc += 2 * TERNARY_S[i][j] as u32 * e[i] as u32;
        }
        *sj = (acc % 3) as u8;
    }
    s.iter().rev().fold(0, |acc, &d| acc * 3 + d as usize)
}

fn add_mod3(a: usize, b: usize) -> usize {
    let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
    for _ in 0..6 {
        out += ((a % 3 + b % 3) % 3) * place;
        a /= 3;
        b /= 3;
        place *= 3;
    }
    out
}

/// Coset graph of the extended ternary Golay code: the 729 syndromes, with
/// `s ~ s'` when `s - s'` is the syndrome of a weight-one vector.
pub fn ternary_golay_coset_graph() -> Result<Graph> {
    let code = extended_ternary_golay()?;
    // The generator must lie in the kernel of H for the syndromes to be cosets.
    for row in code.generator() {
        let w: [u8; 12] = row.as_slice().try_into().expect("length 12");
        if syndrome(&w) != 0 {
            return Err(Error::CodeVerificationFailed("generator row has nonzero syndrome".into()));
        }
    }
    let mut gens = Vec::with_capacity(24);
    for pos in 0..12 {
        for val in 1..3u8 {
            let mut e = [0u8; 12];
            e[pos] = val;
            gens.push(syndrome(&e));
        }
    }
    let mut sorted = gens.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 24 || sorted[0] == 0 {
        return Err(Error::CodeVerificationFailed("weight-one syndromes are not distinct".into()));
    }
    let mut edges = Vec::new();
    for s in 0..729 {
        for &g in &gens {
            let t = add_mod3(s, g);
            if s < t {
                edges.push((s, t));
            }
        }
    }
    Graph::from_edges(729, &edges)
}

/// The 759 octads (weight-8 supports) of the extended binary Golay code,
/// as 24-bit masks in increasing order.
pub fn octads() -> Result<Vec<u32>> {
    let code = extended_binary_golay()?;
    let mut out: Vec<u32> = code
        .codewords()
        .iter()
        .filter(|w| super::code::weight(w) == 8)
        .map(|w| w.iter().enumerate().fold(0u32, |acc, (i, &b)| acc | (b as u32) << i))
        .collect();
    if out.len() != 759 {
        return Err(Error::CodeVerificationFailed(format!("{} octads, expected 759", out.len())));
    }
    out.sort_unstable();
    Ok(out)
}

/// Octads of the binary Golay code, adjacent when disjoint.
pub fn octad_graph() -> Result<Graph> {
    let o = octads()?;
    Graph::from_fn(o.len(), |u, v| o[u] & o[v] == 0)
}

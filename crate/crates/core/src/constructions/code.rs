use crate::error::{Error, Result};

/// Linear code over GF(q), `q` prime, given by a generator matrix and
/// verified against its declared minimum distance on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    q: u8,
    length: usize,
    generator: Vec<Vec<u8>>,
    min_distance: usize,
}

impl LinearCode {
    pub fn new(q: u8, generator: Vec<Vec<u8>>, declared_distance: usize) -> Result<Self> {
        if !matches!(q, 2 | 3) {
            return Err(Error::CodeVerificationFailed(format!("unsupported field order {q}")));
        }
        let length = generator.first().map_or(0, Vec::len);
        if generator.iter().any(|r| r.len() != length || r.iter().any(|&x| x >= q)) {
            return Err(Error::CodeVerificationFailed("malformed generator matrix".into()));
        }
        if rank_mod_p(&generator, q) != generator.len() {
            return Err(Error::CodeVerificationFailed("generator rows are dependent".into()));
        }
        let mut code = Self { q, length, generator, min_distance: 0 };
        let d = code.codewords().iter().map(|w| weight(w)).filter(|&w| w > 0).min().unwrap_or(0);
        if d != declared_distance {
            return Err(Error::CodeVerificationFailed(format!(
                "minimum distance {d}, expected {declared_distance}"
            )));
        }
        code.min_distance = d;
        Ok(code)
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[Vec<u8>] {
        &self.generator
    }

    pub fn min_distance(&self) -> usize {
        self.min_distance
    }

    /// All `q^k` codewords, enumerated by message in base-`q` order.
    pub fn codewords(&self) -> Vec<Vec<u8>> {
        let k = self.generator.len();
        let total = (self.q as usize).pow(k as u32);
        let mut out = Vec::with_capacity(total);
        let mut msg = vec![0u8; k];
        for _ in 0..total {
            let mut w = vec![0u8; self.length];
            for (coef, row) in msg.iter().zip(&self.generator) {
                for (wi, &ri) in w.iter_mut().zip(row) {
                    *wi = (*wi + coef * ri) % self.q;
                }
            }
            out.push(w);
            for digit in msg.iter_mut() {
                *digit += 1;
                if *digit < self.q {
                    break;
                }
                *digit = 0;
            }
        }
        out
    }

    /// Number of codewords of each weight `0..=length`.
    pub fn weight_distribution(&self) -> Vec<usize> {
        let mut dist = vec![0; self.length + 1];
        for w in self.codewords() {
            dist[weight(&w)] += 1;
        }
        dist
    }
}

pub fn weight(w: &[u8]) -> usize {
    w.iter().filter(|&&x| x != 0).count()
}

fn rank_mod_p(rows: &[Vec<u8>], p: u8) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |a: u8| (1..p).find(|&b| (a as u16 * b as u16) % p as u16 == 1).expect("nonzero");
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let s = inv(m[rank][col]);
        m[rank].iter_mut().for_each(|x| *x = (*x as u16 * s as u16 % p as u16) as u8);
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                let pivot_row = m[rank].clone();
                for (x, &y) in m[r].iter_mut().zip(&pivot_row) {
                    let sub = (f as u16 * y as u16) % p as u16;
                    *x = ((*x as u16 + p as u16 - sub) % p as u16) as u8;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamming_code() {
        let g = vec![
            vec![1, 0, 0, 0, 0, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 1, 1, 1],
        ];
        let c = LinearCode::new(2, g.clone(), 3).unwrap();
        assert_eq!(c.weight_distribution(), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert!(matches!(LinearCode::new(2, g, 4), Err(Error::CodeVerificationFailed(_))));
    }

    #[test]
    fn dependent_rows_rejected() {
        let g = vec![vec![1, 2, 0], vec![2, 1, 0]];
        assert!(matches!(LinearCode::new(3, g, 2), Err(Error::CodeVerificationFailed(_))));
    }
}

use num_traits::{Signed, Zero};

use super::{spectrum, IntersectionArray, SpectralData};
use crate::error::{Error, Result};
use crate::exact_math::Rational;

/// Largest diameter for which Q-polynomial orderings are searched
/// exhaustively. `8! = 40320` permutations with pruning is still instant.
pub const MAX_ORDERING_SEARCH_DIAMETER: usize = 8;

/// Krein parameters `q[i][j][h]`, indexed like the spectrum (descending
/// eigenvalues, index 0 = valency).
#[derive(Debug, Clone, PartialEq)]
pub struct KreinTable {
    dim: usize,
    q: Vec<Rational>,
}

impl KreinTable {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut q = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for h in 0..dim {
                    q.push(f(i, j, h));
                }
            }
        }
        Self { dim, q }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, h: usize) -> &Rational {
        &self.q[(i * self.dim + j) * self.dim + h]
    }

    pub fn min_entry(&self) -> &Rational {
        self.q.iter().min().expect("nonempty table")
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.q.iter().any(|x| x.is_negative())
    }

    /// Indices `(i, j, h)` of the first negative entry.
    pub fn first_negative(&self) -> Option<(usize, usize, usize)> {
        let pos = self.q.iter().position(|x| x.is_negative())?;
        let d = self.dim;
        Some((pos / (d * d), (pos / d) % d, pos % d))
    }
}

/// `q_{ij}^h = (m_i m_j / n) sum_l k_l sigma_l(i) sigma_l(j) sigma_l(h)`.
pub fn krein_parameters(sd: &SpectralData, arr: &IntersectionArray) -> Result<KreinTable> {
    if let Some(e) = sd.entries.iter().find(|e| e.approximate) {
        return Err(Error::IrrationalEigenvalue(e.eigenvalue.to_string()));
    }
    let n = Rational::from_integer(arr.vertex_count());
    let ks: Vec<Rational> = arr.k_seq().iter().map(|k| Rational::from_integer(k.clone())).collect();
    let dim = sd.entries.len();
    let sig = |i: usize| &sd.entries[i].cosines.sigma;
    let mut table = KreinTable::from_fn(dim, |_, _, _| Rational::zero());
    for i in 0..dim {
        for j in i..dim {
            let pref = &sd.entries[i].multiplicity * &sd.entries[j].multiplicity / &n;
            let ij: Vec<Rational> = (0..ks.len()).map(|l| &ks[l] * &sig(i)[l] * &sig(j)[l]).collect();
            for h in 0..dim {
                let s: Rational = ij.iter().zip(sig(h)).map(|(x, y)| x * y).sum();
                let v = &pref * s;
                table.q[(i * dim + j) * dim + h] = v.clone();
                table.q[(j * dim + i) * dim + h] = v;
            }
        }
    }
    Ok(table)
}

fn triple_ok(table: &KreinTable, order: &[usize], x: usize, y: usize, z: usize) -> bool {
    let q = table.get(order[x], order[y], order[z]);
    let (mx, sum) = (x.max(y).max(z), x + y + z);
    let rest = sum - mx;
    if mx > rest {
        q.is_zero()
    } else if mx == rest {
        !q.is_zero()
    } else {
        true
    }
}

/// Checks both Q-polynomial clauses for a full ordering (`order[pos]` is the
/// spectrum index placed at position `pos`).
pub fn is_q_polynomial_ordering(table: &KreinTable, order: &[usize]) -> bool {
    let d = order.len();
    if d != table.dim() || order.first() != Some(&0) {
        return false;
    }
    (0..d).all(|x| (0..d).all(|y| (0..d).all(|z| triple_ok(table, order, x, y, z))))
}

fn extend(table: &KreinTable, order: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let dim = table.dim();
    if order.len() == dim {
        out.push(order.clone());
        return;
    }
    let p = order.len();
    for idx in 1..dim {
        if used[idx] {
            continue;
        }
        order.push(idx);
        // only triples touching the new position are new
        let ok = (0..=p).all(|x| {
            (0..=p).all(|y| {
                triple_ok(table, order, x, y, p)
                    && triple_ok(table, order, x, p, y)
                    && triple_ok(table, order, p, x, y)
            })
        });
        if ok {
            used[idx] = true;
            extend(table, order, used, out);
            used[idx] = false;
        }
        order.pop();
    }
}

/// Every Q-polynomial ordering of the primitive idempotents.
///
/// Each ordering lists spectrum indices by position with position 0 fixed
/// to the trivial idempotent; `ordering[1]` is the index of `E_1`.
pub fn q_polynomial_orderings(arr: &IntersectionArray) -> Result<Vec<Vec<usize>>> {
    let d = arr.diameter();
    if d > MAX_ORDERING_SEARCH_DIAMETER {
        return Err(Error::DiameterTooLargeForSearch(d));
    }
    let sd = spectrum(arr)?;
    let table = krein_parameters(&sd, arr)?;
    Ok(orderings_from_table(&table))
}

pub(crate) fn orderings_from_table(table: &KreinTable) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut used = vec![false; table.dim()];
    used[0] = true;
    extend(table, &mut vec![0], &mut used, &mut out);
    out
}

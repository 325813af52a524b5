use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_math::Rational;

/// A validated intersection array `{b_0,...,b_{D-1}; c_1,...,c_D}`.
///
/// Internally `b` and `c` are stored with the conventional padding
/// `b_D = 0` and `c_0 = 0`, so `a_i = k - b_i - c_i` holds for every
/// `0 <= i <= D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawArray", into = "RawArray")]
pub struct IntersectionArray {
    b: Vec<i64>,
    c: Vec<i64>,
    k_seq: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct RawArray {
    b: Vec<i64>,
    c: Vec<i64>,
}

impl TryFrom<RawArray> for IntersectionArray {
    type Error = Error;
    fn try_from(raw: RawArray) -> Result<Self> {
        IntersectionArray::validate(&raw.b, &raw.c)
    }
}

impl From<IntersectionArray> for RawArray {
    fn from(arr: IntersectionArray) -> Self {
        RawArray { b: arr.b_list().to_vec(), c: arr.c_list().to_vec() }
    }
}

impl IntersectionArray {
    /// Validates `raw_b = b_0..b_{D-1}` and `raw_c = c_1..c_D`.
    ///
    /// Checks run in order: shape, positivity, `c_1 = 1`, `a_i >= 0`, and
    /// finally integrality of every `k_i` from `k_i c_i = k_{i-1} b_{i-1}`.
    pub fn validate(raw_b: &[i64], raw_c: &[i64]) -> Result<Self> {
        if raw_b.is_empty() && raw_c.is_empty() {
            return Err(Error::EmptyArray);
        }
        if raw_b.len() != raw_c.len() {
            return Err(Error::LengthMismatch { b: raw_b.len(), c: raw_c.len() });
        }
        for (index, &value) in raw_b.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositiveEntry { name: "b", index, value });
            }
        }
        for (i, &value) in raw_c.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositiveEntry { name: "c", index: i + 1, value });
            }
        }
        if raw_c[0] != 1 {
            return Err(Error::C1NotOne(raw_c[0]));
        }
        let d = raw_b.len();
        let mut b = raw_b.to_vec();
        b.push(0);
        let mut c = vec![0];
        c.extend_from_slice(raw_c);
        let k = b[0];
        for i in 0..=d {
            let a = k - b[i] - c[i];
            if a < 0 {
                return Err(Error::NegativeAi { index: i, value: a });
            }
        }
        let mut k_seq = vec![BigInt::one()];
        for i in 1..=d {
            let num = &k_seq[i - 1] * BigInt::from(b[i - 1]);
            let den = BigInt::from(c[i]);
            if !(&num % &den).is_zero() {
                return Err(Error::NonIntegralKi { index: i, value: Rational::new(num, den) });
            }
            k_seq.push(num / den);
        }
        Ok(Self { b, c, k_seq })
    }

    pub fn diameter(&self) -> usize {
        self.b.len() - 1
    }

    pub fn valency(&self) -> i64 {
        self.b[0]
    }

    /// `b_i` for `0 <= i <= D` (`b_D = 0`).
    pub fn b(&self, i: usize) -> i64 {
        self.b[i]
    }

    /// `c_i` for `0 <= i <= D` (`c_0 = 0`).
    pub fn c(&self, i: usize) -> i64 {
        self.c[i]
    }

    pub fn a(&self, i: usize) -> i64 {
        self.b[0] - self.b[i] - self.c[i]
    }

    /// `b_0..b_{D-1}` as given.
    pub fn b_list(&self) -> &[i64] {
        &self.b[..self.b.len() - 1]
    }

    /// `c_1..c_D` as given.
    pub fn c_list(&self) -> &[i64] {
        &self.c[1..]
    }

    pub fn a_list(&self) -> Vec<i64> {
        (0..=self.diameter()).map(|i| self.a(i)).collect()
    }

    /// `k_0..k_D`, the sizes of the distance classes.
    pub fn k_seq(&self) -> &[BigInt] {
        &self.k_seq
    }

    /// `n = |X| = sum k_i`.
    pub fn vertex_count(&self) -> BigInt {
        self.k_seq.iter().sum()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(self.b_list()), join(self.c_list()))
    }
}

impl FromStr for IntersectionArray {
    type Err = Error;

    /// Accepts `{b_0,..;c_1,..}` with or without braces.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let (bs, cs) = inner.split_once(';').ok_or_else(|| Error::Parse {
            line: 1,
            msg: format!("expected `b;c` in {s:?}"),
        })?;
        let parse = |part: &str| -> Result<Vec<i64>> {
            part.split(',')
                .map(|t| {
                    t.trim().parse::<i64>().map_err(|_| Error::Parse {
                        line: 1,
                        msg: format!("bad integer {t:?}"),
                    })
                })
                .collect()
        };
        Self::validate(&parse(bs)?, &parse(cs)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_array() {
        let arr = IntersectionArray::validate(&[4, 2], &[1, 2]).unwrap();
        assert_eq!(arr.a_list(), vec![0, 1, 2]);
        assert_eq!(arr.k_seq(), &[BigInt::from(1), BigInt::from(4), BigInt::from(4)]);
        assert_eq!(arr.vertex_count(), BigInt::from(9));
        assert_eq!(arr.to_string(), "{4,2;1,2}");
    }

    #[test]
    fn octad_array() {
        let arr = IntersectionArray::validate(&[30, 28, 24], &[1, 3, 15]).unwrap();
        assert_eq!(arr.vertex_count(), BigInt::from(759));
        assert_eq!(arr.diameter(), 3);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            IntersectionArray::validate(&[3, 3], &[1, 2]),
            Err(Error::NegativeAi { index: 1, value: -1 })
        );
        assert_eq!(IntersectionArray::validate(&[3, 2], &[2, 2]), Err(Error::C1NotOne(2)));
        assert!(matches!(
            IntersectionArray::validate(&[5, 2], &[1, 3]),
            Err(Error::NonIntegralKi { index: 2, .. })
        ));
        assert_eq!(
            IntersectionArray::validate(&[3], &[1, 1]),
            Err(Error::LengthMismatch { b: 1, c: 2 })
        );
        assert_eq!(IntersectionArray::validate(&[], &[]), Err(Error::EmptyArray));
        assert!(matches!(
            IntersectionArray::validate(&[2, 0], &[1, 1]),
            Err(Error::NonPositiveEntry { name: "b", index: 1, .. })
        ));
        // {3,2;1,2}: k_2 = 3*2/2 = 3 is fine
        assert!(IntersectionArray::validate(&[3, 2], &[1, 2]).is_ok());
    }

    #[test]
    fn parse_and_serde() {
        let arr: IntersectionArray = "{42,40,32;1,5,21}".parse().unwrap();
        assert_eq!(arr.b_list(), &[42, 40, 32]);
        let json = serde_json::to_string(&arr).unwrap();
        assert_eq!(json, r#"{"b":[42,40,32],"c":[1,5,21]}"#);
        let back: IntersectionArray = serde_json::from_str(&json).unwrap();
        assert_eq!(back, arr);
        assert!(serde_json::from_str::<IntersectionArray>(r#"{"b":[3,3],"c":[1,2]}"#).is_err());
    }
}

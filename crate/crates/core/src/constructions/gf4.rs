use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of GF(4) = {0, 1, w, w^2} with `w^2 = w + 1`, encoded as
/// `0, 1, 2, 3` so that addition is bitwise xor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GF4Element(u8);

// MUL[a][b] for the encoding 0, 1, w = 2, w^2 = 3.
const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl GF4Element {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);
    pub const OMEGA: Self = Self(2);
    pub const OMEGA2: Self = Self(3);
    pub const ALL: [Self; 4] = [Self::ZERO, Self::ONE, Self::OMEGA, Self::OMEGA2];

    pub fn new(code: u8) -> Self {
        assert!(code < 4, "GF(4) code out of range");
        Self(code)
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Option<Self> {
        match self.0 {
            0 => None,
            1 => Some(Self(1)),
            2 => Some(Self(3)),
            _ => Some(Self(2)),
        }
    }

    /// Frobenius conjugation `x -> x^2`.
    pub fn conj(self) -> Self {
        self * self
    }
}

impl Add for GF4Element {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl Sub for GF4Element {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Self) -> Self {
        self + rhs
    }
}

impl Neg for GF4Element {
    type Output = Self;
    fn neg(self) -> Self {
        self
    }
}

impl Mul for GF4Element {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Display for GF4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "w", "w^2"][self.0 as usize])
    }
}

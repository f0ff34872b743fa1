//! Length-24 vectors over GF(2).
//!
//! A [`Vec24`] is stored as an integer in `[0, 2^24)`. Character position `p`
//! (1-based, leftmost first) of the 24-character string form maps to bit
//! `24 - p`, so the last coordinate is bit 0.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use thiserror::Error;

/// Number of coordinates.
pub const LEN: usize = 24;

const MASK: u32 = (1 << LEN) - 1;

/// A vector of the 24-dimensional space over GF(2).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vec24(u32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseVecError {
    #[error("expected 24 binary digits, found {0} characters")]
    Length(usize),
    #[error("invalid character {found:?} at position {position} (expected '0' or '1')")]
    Char { position: usize, found: char },
}

impl Vec24 {
    pub const ZERO: Vec24 = Vec24(0);
    pub const ALL_ONES: Vec24 = Vec24(MASK);

    /// Returns `None` if `bits` does not fit in 24 bits.
    pub const fn new(bits: u32) -> Option<Vec24> {
        if bits & !MASK == 0 {
            Some(Vec24(bits))
        } else {
            None
        }
    }

    /// Vector with exactly the given bit indices set.
    ///
    /// Panics if an index is 24 or larger.
    pub fn from_support<I: IntoIterator<Item = usize>>(bits: I) -> Vec24 {
        let mut v = 0u32;
        for b in bits {
            assert!(b < LEN, "bit index {b} out of range");
            v |= 1 << b;
        }
        Vec24(v)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Hamming weight.
    #[inline]
    pub const fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Coordinate-wise sum; over GF(2) this is also the difference.
    #[inline]
    pub const fn add(self, other: Vec24) -> Vec24 {
        Vec24(self.0 ^ other.0)
    }

    /// Coordinate-wise product.
    #[inline]
    pub const fn mul(self, other: Vec24) -> Vec24 {
        Vec24(self.0 & other.0)
    }

    #[inline]
    pub const fn bit(self, index: usize) -> bool {
        (self.0 >> index) & 1 == 1
    }

    /// Parity of the inner product `<self, other>`.
    #[inline]
    pub const fn dot(self, other: Vec24) -> bool {
        (self.0 & other.0).count_ones() & 1 == 1
    }

    /// Set bit indices, ascending.
    pub fn support(self) -> impl Iterator<Item = usize> {
        (0..LEN).filter(move |&i| self.bit(i))
    }

    /// Moves bit `i` to bit `p[i]`. `p` must be a permutation.
    pub fn permute(self, p: &[usize; LEN]) -> Vec24 {
        Vec24::from_support(self.support().map(|i| p[i]))
    }
}

impl TryFrom<u32> for Vec24 {
    type Error = u32;

    fn try_from(bits: u32) -> Result<Self, u32> {
        Vec24::new(bits).ok_or(bits)
    }
}

impl Add for Vec24 {
    type Output = Vec24;
    fn add(self, rhs: Vec24) -> Vec24 {
        Vec24::add(self, rhs)
    }
}

impl Sub for Vec24 {
    type Output = Vec24;
    fn sub(self, rhs: Vec24) -> Vec24 {
        Vec24::add(self, rhs)
    }
}

impl Mul for Vec24 {
    type Output = Vec24;
    fn mul(self, rhs: Vec24) -> Vec24 {
        Vec24::mul(self, rhs)
    }
}

impl FromStr for Vec24 {
    type Err = ParseVecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let count = s.chars().count();
        if count != LEN {
            return Err(ParseVecError::Length(count));
        }
        let mut bits = 0u32;
        for (i, c) in s.chars().enumerate() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                found => {
                    return Err(ParseVecError::Char {
                        position: i + 1,
                        found,
                    })
                }
            }
        }
        Ok(Vec24(bits))
    }
}

impl fmt::Display for Vec24 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:024b}", self.0)
    }
}

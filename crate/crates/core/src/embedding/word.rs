use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A point of the Hamming cube `H^N`, position 0 printed leftmost.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeWord {
    len: usize,
    blocks: Vec<u64>,
}

impl CubeWord {
    pub fn zero(len: usize) -> Self {
        Self {
            len,
            blocks: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut word = Self::zero(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                word.set(i);
            }
        }
        word
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, pos: usize) -> bool {
        self.blocks[pos / 64] >> (pos % 64) & 1 == 1
    }

    pub fn set(&mut self, pos: usize) {
        assert!(pos < self.len, "bit {pos} outside word of length {}", self.len);
        self.blocks[pos / 64] |= 1 << (pos % 64);
    }

    pub fn flip(&mut self, pos: usize) {
        assert!(pos < self.len, "bit {pos} outside word of length {}", self.len);
        self.blocks[pos / 64] ^= 1 << (pos % 64);
    }

    /// Number of set bits, i.e. `|supp(w)|`.
    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Positions of the set bits.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::WordLength {
                left: self.len,
                right: other.len,
            });
        }
        Ok(Self {
            len: self.len,
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a ^ b).collect(),
        })
    }

    pub(crate) fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    pub fn hamming(&self, other: &Self) -> Result<usize> {
        Ok(self.xor(other)?.weight())
    }
}

impl fmt::Display for CubeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for CubeWord {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("invalid bit {other:?}")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self::from_bits)
    }
}

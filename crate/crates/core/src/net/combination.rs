use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One assignment of the station variables `S_1..S_n`.
///
/// Bit `i` of the mask is `S_{i+1}`, which is also qubit `i` of the station
/// register in the functional simulator. The text form puts `S_1` leftmost,
/// so `0110100` means stations at nodes 2, 3 and 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StationCombination {
    bits: u64,
    len: u8,
}

impl StationCombination {
    pub const MAX_LEN: usize = 64;

    pub fn empty(len: usize) -> Self {
        assert!(len <= Self::MAX_LEN, "at most 64 station variables");
        Self { bits: 0, len: len as u8 }
    }

    /// Panics if `bits` has a set bit at or above `len`.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= Self::MAX_LEN, "at most 64 station variables");
        assert!(
            len == 64 || bits >> len == 0,
            "bits {bits:#b} do not fit in {len} variables"
        );
        Self { bits, len: len as u8 }
    }

    /// Builds a combination from one-based node labels.
    pub fn from_nodes(nodes: &[usize], len: usize) -> Self {
        let mut bits = 0u64;
        for &node in nodes {
            assert!(node >= 1 && node <= len, "node {node} outside 1..={len}");
            bits |= 1 << (node - 1);
        }
        Self::from_bits(bits, len)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Whether zero-based node `i` hosts a station.
    pub fn has(&self, i: usize) -> bool {
        i < self.len() && self.bits >> i & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn with(mut self, i: usize) -> Self {
        assert!(i < self.len());
        self.bits |= 1 << i;
        self
    }

    /// One-based labels of the nodes with a station.
    pub fn nodes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.has(i)).map(|i| i + 1).collect()
    }
}

impl fmt::Display for StationCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.has(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for StationCombination {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > Self::MAX_LEN {
            return Err(Error::TooLarge {
                what: "station bitstring",
                size: s.len(),
                limit: Self::MAX_LEN,
            });
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                other => {
                    return Err(Error::Document(format!(
                        "invalid character {other:?} in station bitstring"
                    )))
                }
            }
        }
        Ok(Self::from_bits(bits, s.len()))
    }
}

impl Serialize for StationCombination {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for StationCombination {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Network, StationCombination};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_NODES: usize = 25;

/// Exhaustive optimum over all `2^n` station combinations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BruteForce {
    /// `None` when no combination is valid.
    pub minimum: Option<u32>,
    /// All minimum-weight valid combinations, ascending by bitmask.
    pub optimal: Vec<StationCombination>,
    /// `valid_by_weight[w]` counts valid combinations with `w` stations.
    pub valid_by_weight: Vec<u64>,
}

impl BruteForce {
    pub fn total_valid(&self) -> u64 {
        self.valid_by_weight.iter().sum()
    }
}

pub fn brute_force_optimum(net: &Network) -> Result<BruteForce> {
    let n = net.num_nodes();
    if n > MAX_ENUMERATION_NODES {
        return Err(Error::TooLarge {
            what: "instance for enumeration",
            size: n,
            limit: MAX_ENUMERATION_NODES,
        });
    }

    // chunked so the merge order is fixed regardless of scheduling
    const CHUNK: u64 = 1 << 14;
    let total = 1u64 << n;
    let chunks = total.div_ceil(CHUNK);
    let partial: Vec<(Vec<u64>, Option<u32>, Vec<u64>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut counts = vec![0u64; n + 1];
            let mut best: Option<u32> = None;
            let mut argmin = Vec::new();
            for bits in c * CHUNK..((c + 1) * CHUNK).min(total) {
                if !net.is_valid_bits(bits) {
                    continue;
                }
                let w = bits.count_ones();
                counts[w as usize] += 1;
                match best {
                    Some(b) if w > b => {}
                    Some(b) if w == b => argmin.push(bits),
                    _ => {
                        best = Some(w);
                        argmin = vec![bits];
                    }
                }
            }
            (counts, best, argmin)
        })
        .collect();

    let mut valid_by_weight = vec![0u64; n + 1];
    let mut minimum: Option<u32> = None;
    let mut optimal = Vec::new();
    for (counts, best, argmin) in partial {
        for (acc, c) in valid_by_weight.iter_mut().zip(counts) {
            *acc += c;
        }
        let Some(b) = best else { continue };
        match minimum {
            Some(m) if b > m => {}
            Some(m) if b == m => optimal.extend(argmin),
            _ => {
                minimum = Some(b);
                optimal = argmin;
            }
        }
    }

    Ok(BruteForce {
        minimum,
        optimal: optimal
            .into_iter()
            .map(|b| StationCombination::from_bits(b, n))
            .collect(),
        valid_by_weight,
    })
}

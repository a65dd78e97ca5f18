use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Rotation picture of Grover search over `N` items with `M` marked.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroverGeometry {
    pub search_space: u64,
    pub marked: u64,
    /// `sin(theta / 2) = sqrt(M / N)`.
    pub theta: f64,
}

impl GroverGeometry {
    pub fn new(search_space: u64, marked: u64) -> Result<Self> {
        if search_space == 0 || marked > search_space {
            return Err(Error::Config(format!(
                "need 0 <= M <= N and N > 0, got N={search_space}, M={marked}"
            )));
        }
        let theta = 2.0 * (marked as f64 / search_space as f64).sqrt().asin();
        Ok(Self {
            search_space,
            marked,
            theta,
        })
    }

    /// Probability of measuring a marked item after `k` iterations.
    pub fn success_probability(&self, k: u64) -> f64 {
        if self.marked == 0 {
            return 0.0;
        }
        ((2 * k + 1) as f64 * self.theta / 2.0).sin().powi(2)
    }

    /// `ceil(pi/4 * sqrt(N/M))`.
    pub fn iteration_bound(&self) -> Result<u64> {
        iteration_bound(self.search_space, self.marked)
    }
}

/// `sin^2((2k+1) theta / 2)` with `sin(theta/2) = sqrt(M/N)`; zero when `M = 0`.
pub fn success_probability(k: u64, search_space: u64, marked: u64) -> Result<f64> {
    Ok(GroverGeometry::new(search_space, marked)?.success_probability(k))
}

pub fn iteration_bound(search_space: u64, marked: u64) -> Result<u64> {
    if marked == 0 {
        return Err(Error::Config("iteration bound undefined without marked items".into()));
    }
    if marked > search_space {
        return Err(Error::Config(format!("M={marked} exceeds N={search_space}")));
    }
    Ok((PI / 4.0 * (search_space as f64 / marked as f64).sqrt()).ceil() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        assert_eq!(iteration_bound(16, 2).unwrap(), 3);
        assert_eq!(iteration_bound(128, 1).unwrap(), 9);
        assert_eq!(iteration_bound(8, 8).unwrap(), 1);
        assert!(iteration_bound(8, 0).is_err());
    }

    #[test]
    fn zeroth_iteration_is_the_marked_fraction() {
        let p = success_probability(0, 16, 2).unwrap();
        assert!((p - 2.0 / 16.0).abs() < 1e-15);
        assert_eq!(success_probability(3, 16, 0).unwrap(), 0.0);
    }

    #[test]
    fn four_items_one_marked() {
        assert!((success_probability(1, 4, 1).unwrap() - 1.0).abs() < 1e-12);
    }
}

//! The classical placement problem.
//!
//! A [`Network`] is a road graph with mileage edges, a vehicle range and a set
//! of trips. Each trip is expanded into a [`TripPath`] that carries the
//! accessible set of every stop, including the auxiliary origin `O` and
//! destination `D`. A [`StationCombination`] is one assignment of the binary
//! station variables over the network nodes.

mod brute;
mod combination;
mod expr;
mod network;
mod route;

pub use brute::{brute_force_optimum, BruteForce, MAX_ENUMERATION_NODES};
pub use combination::StationCombination;
pub use expr::{build_validity_expression, BoolExpr, Var};
pub use network::{Edge, Network, NetworkDocument, TripSpec, TripsSpec};
pub use route::{accessible_sets, AccessibleSet, TripPath};

use std::fmt;

use serde::{Deserialize, Serialize};

/// A stop along an expanded trip: the auxiliary origin, a network node
/// (zero-based index), or the auxiliary destination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Stop {
    Origin,
    Node(usize),
    Destination,
}

impl fmt::Display for Stop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stop::Origin => f.write_str("O"),
            Stop::Node(i) => write!(f, "{}", i + 1),
            Stop::Destination => f.write_str("D"),
        }
    }
}

/// Compiled form of the validity constraints: one row per checked stop of
/// every trip.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Constraint {
    /// `None` for the auxiliary origin, which is always a station.
    pub trigger: Option<usize>,
    /// Node bitmask of the accessible network nodes.
    pub support: u64,
    /// The destination is in the accessible set, so the row always holds.
    pub reaches_destination: bool,
}

impl Constraint {
    #[inline]
    pub fn holds(&self, bits: u64) -> bool {
        if self.reaches_destination {
            return true;
        }
        match self.trigger {
            Some(i) if bits >> i & 1 == 0 => true,
            _ => bits & self.support != 0,
        }
    }
}

/// The canonical instances shipped with the crate.
pub mod instances {
    use super::Network;

    pub const CORRIDOR: &str = include_str!("../../data/corridor.json");
    pub const ILLINOIS: &str = include_str!("../../data/illinois.json");
    pub const NO_TRIPS: &str = include_str!("../../data/no_trips.json");

    /// Four-node corridor, edges 40/70/30 miles, range 100, one trip 1 -> 4.
    pub fn corridor() -> Network {
        Network::load(CORRIDOR).expect("bundled corridor instance is valid")
    }

    /// Central Illinois: seven cities, range 260, all pairs except the Lincoln hub.
    pub fn illinois() -> Network {
        Network::load(ILLINOIS).expect("bundled Illinois instance is valid")
    }

    pub fn by_name(name: &str) -> Option<Network> {
        match name {
            "corridor" => Some(corridor()),
            "illinois" => Some(illinois()),
            "no-trips" | "no_trips" => Some(Network::load(NO_TRIPS).expect("bundled instance is valid")),
            _ => None,
        }
    }
}

use std::collections::{HashMap, HashSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::route::{shortest_route, TripPath};
use super::{Constraint, StationCombination, Stop};
use crate::error::{Error, Result};

/// On-disk network description (JSON).
///
/// ```json
/// {
///   "range_miles": 100,
///   "nodes": ["1", "2", "3", "4"],
///   "edges": [["1", "2", 40], ["2", "3", 70], ["3", "4", 30]],
///   "trips": [{ "origin": "1", "dest": "4" }]
/// }
/// ```
///
/// `trips` may also be the string `"all_pairs"`, optionally with a top-level
/// `exclude_hubs` list; every unordered pair of non-hub nodes then becomes one
/// trip with the lower-indexed node as origin.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkDocument {
    pub range_miles: f64,
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String, f64)>,
    pub trips: TripsSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exclude_hubs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TripsSpec {
    Generated(String),
    Explicit(Vec<TripSpec>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripSpec {
    pub origin: String,
    pub dest: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub miles: f64,
}

/// A validated road network with preprocessed trips.
///
/// Immutable once built; `Send + Sync`.
#[derive(Clone, Debug)]
pub struct Network {
    names: Vec<String>,
    edges: Vec<Edge>,
    range: f64,
    trips: Vec<TripPath>,
    constraints: Vec<Constraint>,
}

impl Network {
    /// Reads and validates a JSON network document.
    pub fn load(text: &str) -> Result<Self> {
        let doc: NetworkDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        Self::from_document(&doc)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::load(&std::fs::read_to_string(path)?)
    }

    pub fn from_document(doc: &NetworkDocument) -> Result<Self> {
        let index: HashMap<&str, usize> = doc
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        if index.len() != doc.nodes.len() {
            return Err(Error::Document("duplicate node names".into()));
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownNode(name.to_string()))
        };

        let mut edges = Vec::with_capacity(doc.edges.len());
        for (a, b, miles) in &doc.edges {
            edges.push(Edge {
                a: lookup(a)?,
                b: lookup(b)?,
                miles: *miles,
            });
        }

        let trips = match &doc.trips {
            TripsSpec::Generated(kind) if kind == "all_pairs" => {
                let hubs = doc
                    .exclude_hubs
                    .iter()
                    .map(|h| lookup(h))
                    .collect::<Result<HashSet<_>>>()?;
                let keep: Vec<usize> = (0..doc.nodes.len()).filter(|i| !hubs.contains(i)).collect();
                let mut trips = Vec::new();
                for (k, &o) in keep.iter().enumerate() {
                    for &d in &keep[k + 1..] {
                        trips.push((o, d, None));
                    }
                }
                trips
            }
            TripsSpec::Generated(other) => {
                return Err(Error::Document(format!(
                    "unknown trip generator {other:?}, expected \"all_pairs\""
                )))
            }
            TripsSpec::Explicit(list) => {
                if !doc.exclude_hubs.is_empty() {
                    return Err(Error::Document(
                        "exclude_hubs only applies to \"all_pairs\"".into(),
                    ));
                }
                list.iter()
                    .map(|t| {
                        let route = t
                            .route
                            .as_ref()
                            .map(|r| r.iter().map(|n| lookup(n)).collect::<Result<Vec<_>>>())
                            .transpose()?;
                        Ok((lookup(&t.origin)?, lookup(&t.dest)?, route))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };

        Self::new(doc.nodes.clone(), edges, doc.range_miles, trips)
    }

    /// Builds a network from zero-based parts. Trips without an explicit
    /// route use [`Network::shortest_route`].
    pub fn new(
        names: Vec<String>,
        edges: Vec<Edge>,
        range: f64,
        trips: Vec<(usize, usize, Option<Vec<usize>>)>,
    ) -> Result<Self> {
        let n = names.len();
        if n > StationCombination::MAX_LEN {
            return Err(Error::TooLarge {
                what: "network",
                size: n,
                limit: StationCombination::MAX_LEN,
            });
        }
        if !(range.is_finite() && range > 0.0) {
            return Err(Error::InvalidRange(range));
        }

        let mut seen = HashSet::new();
        for e in &edges {
            if e.a >= n || e.b >= n {
                return Err(Error::UnknownNode(format!("#{}", e.a.max(e.b) + 1)));
            }
            if e.a == e.b {
                return Err(Error::SelfLoop(names[e.a].clone()));
            }
            if !(e.miles.is_finite() && e.miles > 0.0) {
                return Err(Error::NonPositiveDistance {
                    a: names[e.a].clone(),
                    b: names[e.b].clone(),
                    miles: e.miles,
                });
            }
            if !seen.insert((e.a.min(e.b), e.a.max(e.b))) {
                return Err(Error::DuplicateEdge(names[e.a].clone(), names[e.b].clone()));
            }
        }

        let mut net = Self {
            names,
            edges,
            range,
            trips: Vec::new(),
            constraints: Vec::new(),
        };

        let mut paths = Vec::with_capacity(trips.len());
        for (o, d, route) in trips {
            if o >= n || d >= n {
                return Err(Error::UnknownNode(format!("#{}", o.max(d) + 1)));
            }
            if o == d {
                return Err(net.route_error(o, d, "origin and destination coincide"));
            }
            let nodes = match route {
                Some(r) => {
                    net.check_route(o, d, &r)?;
                    r
                }
                None => net.shortest_route(o, d)?.0,
            };
            let cumulative = net.cumulative(&nodes);
            paths.push(TripPath::new(nodes, cumulative, range));
        }
        net.constraints = compile(&paths);
        net.trips = paths;
        Ok(net)
    }

    pub fn num_nodes(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn range(&self) -> f64 {
        self.range
    }

    pub fn trips(&self) -> &[TripPath] {
        &self.trips
    }

    pub fn miles_between(&self, a: usize, b: usize) -> Option<f64> {
        self.edges
            .iter()
            .find(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a))
            .map(|e| e.miles)
    }

    /// Minimum-mileage path between two nodes (zero-based), ties broken by the
    /// lexicographically smallest node sequence.
    pub fn shortest_route(&self, origin: usize, destination: usize) -> Result<(Vec<usize>, f64)> {
        let edges: Vec<_> = self.edges.iter().map(|e| (e.a, e.b, e.miles)).collect();
        shortest_route(self.num_nodes(), &edges, origin, destination).ok_or_else(|| {
            Error::Unreachable {
                origin: self.names[origin].clone(),
                destination: self.names[destination].clone(),
            }
        })
    }

    /// Whether every trip is completable with stations at `combo`.
    pub fn is_valid(&self, combo: &StationCombination) -> Result<bool> {
        if combo.len() != self.num_nodes() {
            return Err(Error::LengthMismatch {
                expected: self.num_nodes(),
                actual: combo.len(),
            });
        }
        Ok(self.is_valid_bits(combo.bits()))
    }

    /// Same as [`Network::is_valid`] on a raw node bitmask (bit `i` = node `i+1`).
    #[inline]
    pub fn is_valid_bits(&self, bits: u64) -> bool {
        self.constraints.iter().all(|c| c.holds(bits))
    }

    fn cumulative(&self, nodes: &[usize]) -> Vec<f64> {
        let mut acc = 0.0;
        let mut out = vec![0.0];
        for w in nodes.windows(2) {
            acc += self.miles_between(w[0], w[1]).expect("route follows edges");
            out.push(acc);
        }
        out
    }

    fn check_route(&self, o: usize, d: usize, route: &[usize]) -> Result<()> {
        if route.first() != Some(&o) || route.last() != Some(&d) {
            return Err(self.route_error(o, d, "route must start at the origin and end at the destination"));
        }
        let mut visited = HashSet::new();
        for &v in route {
            if !visited.insert(v) {
                return Err(self.route_error(o, d, "route revisits a node"));
            }
        }
        for w in route.windows(2) {
            if self.miles_between(w[0], w[1]).is_none() {
                return Err(self.route_error(
                    o,
                    d,
                    &format!("no edge {} - {}", self.names[w[0]], self.names[w[1]]),
                ));
            }
        }
        Ok(())
    }

    fn route_error(&self, o: usize, d: usize, reason: &str) -> Error {
        Error::InvalidRoute {
            origin: self.names[o].clone(),
            destination: self.names[d].clone(),
            reason: reason.to_string(),
        }
    }
}

fn compile(paths: &[TripPath]) -> Vec<Constraint> {
    let mut out = Vec::new();
    for path in paths {
        for set in path.checked() {
            let mut support = 0u64;
            let mut reaches_destination = false;
            for s in &set.to {
                match s {
                    Stop::Node(j) => support |= 1 << j,
                    Stop::Destination => reaches_destination = true,
                    Stop::Origin => unreachable!("origin is never accessible"),
                }
            }
            let trigger = match set.from {
                Stop::Node(i) => Some(i),
                _ => None,
            };
            out.push(Constraint {
                trigger,
                support,
                reaches_destination,
            });
        }
    }
    out
}

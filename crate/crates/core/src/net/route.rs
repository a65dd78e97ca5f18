use std::fmt::Write as _;

use petgraph::algo::dijkstra;
use petgraph::graph::{NodeIndex, UnGraph};
use petgraph::visit::EdgeRef;
use serde::{Deserialize, Serialize};

use super::Stop;

/// Thresholds are inclusive; this absorbs float noise in summed mileages.
pub(crate) fn within(distance: f64, limit: f64) -> bool {
    distance <= limit + 1e-9 * limit.abs().max(1.0)
}

/// Nodes reachable from `from` along the trip without recharging.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AccessibleSet {
    pub from: Stop,
    pub to: Vec<Stop>,
}

/// One origin-destination route expanded with the auxiliary `O` and `D`
/// stops and their accessible sets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TripPath {
    /// Zero-based node indices from origin to destination.
    pub nodes: Vec<usize>,
    /// Miles from the origin to each node of `nodes`.
    pub cumulative: Vec<f64>,
    /// `O`, every node in path order, then `D`.
    pub sets: Vec<AccessibleSet>,
}

impl TripPath {
    pub fn new(nodes: Vec<usize>, cumulative: Vec<f64>, range: f64) -> Self {
        let sets = accessible_sets(&nodes, &cumulative, range);
        Self {
            nodes,
            cumulative,
            sets,
        }
    }

    pub fn origin(&self) -> usize {
        self.nodes[0]
    }

    pub fn destination(&self) -> usize {
        *self.nodes.last().expect("non-empty path")
    }

    pub fn total_miles(&self) -> f64 {
        *self.cumulative.last().expect("non-empty path")
    }

    pub fn accessible(&self, stop: Stop) -> Option<&[Stop]> {
        self.sets
            .iter()
            .find(|s| s.from == stop)
            .map(|s| s.to.as_slice())
    }

    /// The stops whose constraint must be checked: `O` and every path node.
    /// The destination is excluded since its set is always empty.
    pub fn checked(&self) -> impl Iterator<Item = &AccessibleSet> {
        self.sets.iter().filter(|s| s.from != Stop::Destination)
    }

    /// Two-column rendering, one stop per line: `2: {3, 4}`.
    pub fn table(&self) -> String {
        let mut out = String::new();
        for set in &self.sets {
            let body = if set.to.is_empty() {
                "∅".to_string()
            } else {
                let items: Vec<String> = set.to.iter().map(Stop::to_string).collect();
                format!("{{{}}}", items.join(", "))
            };
            writeln!(out, "{}: {}", set.from, body).unwrap();
        }
        out
    }
}

/// Accessible sets for a path with cumulative mileages.
///
/// A network node after `i` is accessible when it lies within `range` of `i`;
/// from the auxiliary origin the limit is `range / 2` (half-charged start).
/// The destination joins a set only when it is within `range / 2`, which
/// leaves enough charge for the return leg.
pub fn accessible_sets(nodes: &[usize], cumulative: &[f64], range: f64) -> Vec<AccessibleSet> {
    assert_eq!(nodes.len(), cumulative.len());
    assert!(!nodes.is_empty());
    let total = cumulative[cumulative.len() - 1];
    let half = range / 2.0;

    let mut sets = Vec::with_capacity(nodes.len() + 2);
    let mut from_origin: Vec<Stop> = nodes
        .iter()
        .zip(cumulative)
        .filter(|&(_, &c)| within(c, half))
        .map(|(&v, _)| Stop::Node(v))
        .collect();
    if within(total, half) {
        from_origin.push(Stop::Destination);
    }
    sets.push(AccessibleSet {
        from: Stop::Origin,
        to: from_origin,
    });

    for (k, &node) in nodes.iter().enumerate() {
        let here = cumulative[k];
        let mut to: Vec<Stop> = (k + 1..nodes.len())
            .filter(|&l| within(cumulative[l] - here, range))
            .map(|l| Stop::Node(nodes[l]))
            .collect();
        if within(total - here, half) {
            to.push(Stop::Destination);
        }
        sets.push(AccessibleSet {
            from: Stop::Node(node),
            to,
        });
    }

    sets.push(AccessibleSet {
        from: Stop::Destination,
        to: Vec::new(),
    });
    sets
}

/// Minimum-mileage route, ties broken by the lexicographically smallest
/// node-index sequence. Returns `None` when `destination` is unreachable.
pub(crate) fn shortest_route(
    num_nodes: usize,
    edges: &[(usize, usize, f64)],
    origin: usize,
    destination: usize,
) -> Option<(Vec<usize>, f64)> {
    let mut graph = UnGraph::<(), f64>::with_capacity(num_nodes, edges.len());
    for _ in 0..num_nodes {
        graph.add_node(());
    }
    for &(a, b, miles) in edges {
        graph.add_edge(NodeIndex::new(a), NodeIndex::new(b), miles);
    }

    let to_dest = dijkstra(&graph, NodeIndex::new(destination), None, |e| *e.weight());
    let total = *to_dest.get(&NodeIndex::new(origin))?;
    let eps = 1e-9 * total.max(1.0);

    let mut path = vec![origin];
    let mut u = origin;
    while u != destination {
        let here = to_dest[&NodeIndex::new(u)];
        let next = graph
            .edges(NodeIndex::new(u))
            .filter_map(|e| {
                let v = if e.source().index() == u {
                    e.target()
                } else {
                    e.source()
                };
                let rest = to_dest.get(&v)?;
                ((e.weight() + rest - here).abs() <= eps).then_some(v.index())
            })
            .min()
            .expect("a shortest-path successor exists");
        path.push(next);
        u = next;
    }
    Some((path, total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corridor() -> TripPath {
        TripPath::new(vec![0, 1, 2, 3], vec![0.0, 40.0, 110.0, 140.0], 100.0)
    }

    #[test]
    fn destination_set_is_empty() {
        assert_eq!(corridor().accessible(Stop::Destination), Some(&[][..]));
    }

    #[test]
    fn node_at_exactly_range_is_accessible() {
        // node 4 is exactly 100 miles past node 2
        let t = corridor();
        assert_eq!(
            t.accessible(Stop::Node(1)).unwrap(),
            &[Stop::Node(2), Stop::Node(3)]
        );
    }

    #[test]
    fn adjacent_endpoints_within_half_range_reach_destination_from_origin() {
        let t = TripPath::new(vec![0, 1], vec![0.0, 30.0], 100.0);
        assert!(t.accessible(Stop::Origin).unwrap().contains(&Stop::Destination));
    }

    #[test]
    fn lexicographic_tie_break() {
        // square 0-1-3 and 0-2-3, both 2 miles
        let edges = [(0, 1, 1.0), (1, 3, 1.0), (0, 2, 1.0), (2, 3, 1.0)];
        assert_eq!(shortest_route(4, &edges, 0, 3).unwrap().0, vec![0, 1, 3]);
        assert_eq!(shortest_route(4, &edges, 3, 0).unwrap().0, vec![3, 1, 0]);
    }

    #[test]
    fn unreachable() {
        assert!(shortest_route(3, &[(0, 1, 1.0)], 0, 2).is_none());
    }
}

use std::fmt;

use super::{Network, StationCombination, Stop};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Origin,
    Destination,
    /// Zero-based network node.
    Node(usize),
}

impl From<Stop> for Var {
    fn from(s: Stop) -> Self {
        match s {
            Stop::Origin => Var::Origin,
            Stop::Node(i) => Var::Node(i),
            Stop::Destination => Var::Destination,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Origin => f.write_str("S_O"),
            Var::Destination => f.write_str("S_D"),
            Var::Node(i) => write!(f, "S_{}", i + 1),
        }
    }
}

/// Boolean formula over station variables. `S_O` and `S_D` evaluate to true.
#[derive(Clone, Debug, PartialEq)]
pub enum BoolExpr {
    Var(Var),
    Not(Box<BoolExpr>),
    And(Vec<BoolExpr>),
    Or(Vec<BoolExpr>),
}

impl BoolExpr {
    pub fn eval(&self, combo: &StationCombination) -> bool {
        self.eval_bits(combo.bits())
    }

    pub fn eval_bits(&self, bits: u64) -> bool {
        match self {
            BoolExpr::Var(Var::Origin | Var::Destination) => true,
            BoolExpr::Var(Var::Node(i)) => bits >> i & 1 == 1,
            BoolExpr::Not(e) => !e.eval_bits(bits),
            BoolExpr::And(es) => es.iter().all(|e| e.eval_bits(bits)),
            BoolExpr::Or(es) => es.iter().any(|e| e.eval_bits(bits)),
        }
    }

    /// Number of top-level conjuncts.
    pub fn clause_count(&self) -> usize {
        match self {
            BoolExpr::And(es) => es.len(),
            _ => 1,
        }
    }
}

impl fmt::Display for BoolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, es: &[BoolExpr], op: &str| -> fmt::Result {
            for (k, e) in es.iter().enumerate() {
                if k > 0 {
                    write!(f, " {op} ")?;
                }
                match e {
                    BoolExpr::And(_) | BoolExpr::Or(_) => write!(f, "({e})")?,
                    _ => write!(f, "{e}")?,
                }
            }
            Ok(())
        };
        match self {
            BoolExpr::Var(v) => write!(f, "{v}"),
            BoolExpr::Not(e) => match **e {
                BoolExpr::Var(_) => write!(f, "~{e}"),
                _ => write!(f, "~({e})"),
            },
            BoolExpr::And(es) => join(f, es, "&"),
            BoolExpr::Or(es) => join(f, es, "|"),
        }
    }
}

/// `(S_O & S_D) & AND_q AND_{i in O, N_q} (~S_i | OR_{j in A_i^q} S_j)`.
pub fn build_validity_expression(net: &Network) -> BoolExpr {
    let mut clauses = vec![BoolExpr::And(vec![
        BoolExpr::Var(Var::Origin),
        BoolExpr::Var(Var::Destination),
    ])];
    for trip in net.trips() {
        for set in trip.checked() {
            let mut terms = vec![BoolExpr::Not(Box::new(BoolExpr::Var(set.from.into())))];
            terms.extend(set.to.iter().map(|&s| BoolExpr::Var(s.into())));
            clauses.push(BoolExpr::Or(terms));
        }
    }
    BoolExpr::And(clauses)
}

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{MutationCase, Slot, StPair, TauTilting};
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 10_000;

/// Node budget: `TAUMUTE_CAP` if set and valid, else [`DEFAULT_CAP`].
pub fn default_cap() -> usize {
    std::env::var("TAUMUTE_CAP").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}

/// A mutation edge from the larger pair to the smaller one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub upper: usize,
    pub lower: usize,
    /// Slot of the upper pair that is exchanged.
    pub upper_slot: Slot,
    /// Slot of the lower pair that replaces it.
    pub lower_slot: Slot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangePoset {
    pub nodes: Vec<StPair>,
    pub edges: Vec<Edge>,
    pub complete: bool,
    pub cap: usize,
}

impl ExchangePoset {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, p: &StPair) -> Option<usize> {
        self.nodes.iter().position(|q| q == p)
    }

    pub fn index_map(&self) -> HashMap<StPair, usize> {
        self.nodes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::Truncated(self.cap))
        }
    }

    /// `(upper, lower)` pairs of the mutation edges.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(|e| (e.upper, e.lower)).collect()
    }

    /// Number of edges at each node.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.len()];
        for e in &self.edges {
            d[e.upper] += 1;
            d[e.lower] += 1;
        }
        d
    }

    /// `leq[i][j]` is `nodes[i] ≤ nodes[j]`. Refused on truncated posets.
    pub fn leq_matrix(&self, tt: &TauTilting) -> Result<Vec<Vec<bool>>> {
        self.require_complete()?;
        let n = self.len();
        let mut m = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = i == j || tt.leq(&self.nodes[i], &self.nodes[j])?;
            }
        }
        Ok(m)
    }

    /// Cover relations `(upper, lower)` of a partial order given as a matrix.
    pub fn hasse_from_leq(leq: &[Vec<bool>]) -> BTreeSet<(usize, usize)> {
        let n = leq.len();
        let lt = |a: usize, b: usize| a != b && leq[a][b] && !leq[b][a];
        let mut out = BTreeSet::new();
        for hi in 0..n {
            for lo in 0..n {
                if lt(lo, hi) && !(0..n).any(|k| lt(lo, k) && lt(k, hi)) {
                    out.insert((hi, lo));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("poset serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Breadth-first enumeration from `(Λ, ∅)`, mutating every slot of every
/// node in canonical order. Stops, flagged incomplete, once `cap` nodes exist
/// and another new node is found.
pub fn enumerate(tt: &TauTilting, cap: usize) -> Result<ExchangePoset> {
    let start = tt.top_pair()?;
    let mut nodes = vec![start.clone()];
    let mut index: HashMap<StPair, usize> = HashMap::from([(start, 0)]);
    let mut seen_edges = BTreeSet::new();
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    let mut complete = true;
    'bfs: while let Some(i) = queue.pop_front() {
        let p = nodes[i].clone();
        for slot in p.slots() {
            let m = tt.mutate(&p, slot)?;
            let j = match index.get(&m.result) {
                Some(&j) => j,
                None => {
                    if nodes.len() >= cap {
                        complete = false;
                        break 'bfs;
                    }
                    let j = nodes.len();
                    nodes.push(m.result.clone());
                    index.insert(m.result.clone(), j);
                    queue.push_back(j);
                    j
                }
            };
            let edge = match m.case {
                MutationCase::A => Edge { upper: i, lower: j, upper_slot: slot, lower_slot: m.new_slot },
                MutationCase::B => Edge { upper: j, lower: i, upper_slot: m.new_slot, lower_slot: slot },
            };
            if seen_edges.insert((edge.upper, edge.lower)) {
                edges.push(edge);
            }
        }
    }
    Ok(ExchangePoset { nodes, edges, complete, cap })
}

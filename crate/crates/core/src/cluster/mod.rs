//! Quiver mutation and seed mutation in the coefficient-free skew-symmetric
//! case, with cluster variables as exact rational functions.

mod poly;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::taut::CheckReport;

pub use poly::{gcd, Frac, Monomial, Poly};

/// A quiver without loops or 2-cycles; `b[i][j]` arrows `i → j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExchangeQuiver {
    b: Vec<Vec<u32>>,
}

impl ExchangeQuiver {
    pub fn new(b: Vec<Vec<u32>>) -> Result<Self> {
        let n = b.len();
        for (i, row) in b.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidQuiver("arrow matrix is not square".into()));
            }
            if row[i] != 0 {
                return Err(Error::InvalidQuiver(format!("loop at vertex {}", i + 1)));
            }
            for j in 0..n {
                if row[j] > 0 && b[j][i] > 0 {
                    return Err(Error::InvalidQuiver(format!("2-cycle between {} and {}", i + 1, j + 1)));
                }
            }
        }
        Ok(ExchangeQuiver { b })
    }

    /// From 0-based arrows `(source, target)`; repeated pairs add up.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut b = vec![vec![0; n]; n];
        for &(s, t) in arrows {
            if s >= n || t >= n {
                return Err(Error::InvalidVertex(s.max(t)));
            }
            b[s][t] += 1;
        }
        ExchangeQuiver::new(b)
    }

    /// The quiver of a bound quiver algebra, if it has no loops or 2-cycles.
    pub fn from_algebra(alg: &crate::bqa::Algebra) -> Result<Self> {
        let q = alg.quiver();
        let arrows: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
        ExchangeQuiver::from_arrows(q.vertex_count(), &arrows)
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn arrows(&self, i: usize, j: usize) -> u32 {
        self.b[i][j]
    }

    fn skew(&self, i: usize, j: usize) -> i64 {
        self.b[i][j] as i64 - self.b[j][i] as i64
    }

    /// Compose paths through `k`, reverse the arrows at `k`, cancel 2-cycles.
    pub fn mutate(&self, k: usize) -> Result<ExchangeQuiver> {
        let n = self.n();
        if k >= n {
            return Err(Error::InvalidVertex(k));
        }
        let mut b = vec![vec![0u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                let s = if i == k || j == k {
                    -self.skew(i, j)
                } else {
                    let (bik, bkj) = (self.skew(i, k), self.skew(k, j));
                    self.skew(i, j) + bik.signum() * (bik * bkj).max(0)
                };
                if s > 0 {
                    b[i][j] = s as u32;
                }
            }
        }
        Ok(ExchangeQuiver { b })
    }

    /// Quiver with vertices relabelled: vertex `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> ExchangeQuiver {
        let n = self.n();
        let mut b = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                b[perm[i]][perm[j]] = self.b[i][j];
            }
        }
        ExchangeQuiver { b }
    }

    fn is_acyclic(&self) -> bool {
        let n = self.n();
        let mut indeg: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| self.b[i][j] > 0).count()).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&j| indeg[j] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for j in 0..n {
                if self.b[i][j] > 0 {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        stack.push(j);
                    }
                }
            }
        }
        seen == n
    }
}

impl fmt::Display for ExchangeQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for i in 0..self.n() {
            for j in 0..self.n() {
                match self.b[i][j] {
                    0 => {}
                    1 => parts.push(format!("{}→{}", i + 1, j + 1)),
                    m => parts.push(format!("{}→{} (×{m})", i + 1, j + 1)),
                }
            }
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A quiver together with one cluster variable per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterSeed {
    pub quiver: ExchangeQuiver,
    pub cluster: Vec<Frac>,
}

impl ClusterSeed {
    /// `({x_1, …, x_n}, Q)`.
    pub fn initial(quiver: ExchangeQuiver) -> ClusterSeed {
        let n = quiver.n();
        let cluster = (0..n).map(|i| Frac::from_poly(Poly::var(n, i))).collect();
        ClusterSeed { quiver, cluster }
    }

    /// `x_k* = (m1 + m2)/x_k` with `m1 = ∏_{j→k} x_j^{b_jk}` and
    /// `m2 = ∏_{k→j} x_j^{b_kj}`; the quiver mutates at `k`.
    pub fn mutate(&self, k: usize) -> Result<ClusterSeed> {
        let quiver = self.quiver.mutate(k)?;
        let n = self.quiver.n();
        let one = Frac::from_poly(Poly::one(n));
        let (mut m1, mut m2) = (one.clone(), one);
        for j in 0..n {
            if self.quiver.arrows(j, k) > 0 {
                m1 = m1.mul(&self.cluster[j].pow(self.quiver.arrows(j, k)));
            }
            if self.quiver.arrows(k, j) > 0 {
                m2 = m2.mul(&self.cluster[j].pow(self.quiver.arrows(k, j)));
            }
        }
        let mut cluster = self.cluster.clone();
        cluster[k] = m1.add(&m2).div(&self.cluster[k]);
        Ok(ClusterSeed { quiver, cluster })
    }

    /// The cluster as a sorted list, the hash key of the seed.
    pub fn key(&self) -> Vec<Frac> {
        let mut k = self.cluster.clone();
        k.sort();
        k
    }

    /// Same variables, and the quivers agree under the matching.
    pub fn same_seed(&self, other: &ClusterSeed) -> bool {
        let n = self.cluster.len();
        let mut perm = Vec::with_capacity(n);
        for x in &self.cluster {
            match other.cluster.iter().position(|y| y == x) {
                Some(p) => perm.push(p),
                None => return false,
            }
        }
        self.quiver.permuted(&perm) == other.quiver
    }
}

/// Seeds reachable by mutation, with one edge per mutation.
#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    pub seeds: Vec<ClusterSeed>,
    /// `(a, b, k)` with `a < b`; `k` is the vertex mutated at seed `a` or `b`
    /// when the edge was first found.
    pub edges: Vec<(usize, usize, usize)>,
    pub complete: bool,
    pub cap: usize,
}

impl ExchangeGraph {
    /// Distinct cluster variables over all seeds.
    pub fn variables(&self) -> BTreeSet<Frac> {
        self.seeds.iter().flat_map(|s| s.cluster.iter().cloned()).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.seeds.len()];
        for &(a, b, _) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }
}

/// Breadth-first search over seeds from the initial seed of an acyclic
/// quiver. More than `cap` seeds marks the graph truncated.
pub fn enumerate_seeds(quiver: &ExchangeQuiver, cap: usize) -> Result<ExchangeGraph> {
    if !quiver.is_acyclic() {
        return Err(Error::InvalidQuiver("initial quiver must be acyclic".into()));
    }
    enumerate_from(ClusterSeed::initial(quiver.clone()), cap)
}

fn enumerate_from(start: ClusterSeed, cap: usize) -> Result<ExchangeGraph> {
    let n = start.quiver.n();
    let mut index: HashMap<Vec<Frac>, Vec<usize>> = HashMap::new();
    index.insert(start.key(), vec![0]);
    let mut seeds = vec![start];
    let mut edges = Vec::new();
    let mut seen_edges = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    let mut complete = true;
    'bfs: while let Some(i) = queue.pop_front() {
        for k in 0..n {
            let s = seeds[i].mutate(k)?;
            let key = s.key();
            let found = index.get(&key).and_then(|c| c.iter().copied().find(|&j| seeds[j].same_seed(&s)));
            let j = match found {
                Some(j) => j,
                None => {
                    if seeds.len() >= cap {
                        complete = false;
                        break 'bfs;
                    }
                    let j = seeds.len();
                    index.entry(key).or_default().push(j);
                    seeds.push(s);
                    queue.push_back(j);
                    j
                }
            };
            if seen_edges.insert((i.min(j), i.max(j))) {
                edges.push((i.min(j), i.max(j), k));
            }
        }
    }
    Ok(ExchangeGraph { seeds, edges, complete, cap })
}

/// Every cluster variable has a monomial denominator with coefficient one,
/// and the graph is `n`-regular.
pub fn check_laurent(graph: &ExchangeGraph) -> Result<CheckReport> {
    if !graph.complete {
        return Err(Error::Truncated(graph.cap));
    }
    let mut rep = CheckReport::new("Laurent denominators");
    for x in graph.variables() {
        rep.expect(x.is_laurent(), || format!("non-Laurent variable {x}"));
    }
    let n = graph.seeds.first().map(|s| s.quiver.n()).unwrap_or(0);
    for (i, d) in graph.degrees().into_iter().enumerate() {
        rep.expect(d == n, || format!("seed {i} has {d} neighbours"));
    }
    rep.notes.push(format!("{} clusters, {} variables", graph.seeds.len(), graph.variables().len()));
    Ok(rep)
}

/// Integer coefficient as a polynomial constant, for callers building seeds by hand.
pub fn constant(n: usize, c: i64) -> Frac {
    Frac::from_poly(Poly::constant(n, BigInt::from(c)))
}

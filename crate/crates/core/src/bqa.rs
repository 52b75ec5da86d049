//! Bound quiver algebras `kQ/I` with length-homogeneous relations.
//!
//! Paths are stored in traversal order (first arrow first). The product
//! `p·q` of two paths is "q, then p" and is nonzero only when
//! `target(q) == source(p)`, so for `1 -a-> 2 -b-> 3` we get `b·a = ba`.
//! Vertices are 0-based inside the library; user-facing text is 1-based.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};

/// Default cap on path length while searching for the nilpotency degree.
pub const DEFAULT_LENGTH_CAP: usize = 30;

static NEXT_ALGEBRA_ID: AtomicU64 = AtomicU64::new(2);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {} has an endpoint outside 1..{}",
                    a.name, vertex_count
                )));
            }
            if seen.insert(a.name.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow name {}", a.name)));
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    /// Convenience constructor from `(name, source, target)` triples.
    pub fn from_triples(vertex_count: usize, arrows: &[(&str, usize, usize)]) -> Result<Self> {
        Self::new(
            vertex_count,
            arrows.iter().map(|&(n, s, t)| Arrow { name: n.to_string(), source: s, target: t }).collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed, names kept.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Source and target of a nonempty path, checking composability.
    pub fn path_endpoints(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*path.first()?)?;
        let mut at = first.target;
        for &a in &path[1..] {
            let arr = self.arrows.get(a)?;
            if arr.source != at {
                return None;
            }
            at = arr.target;
        }
        Some((first.source, at))
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.source != v)
    }

    pub fn path_name(&self, path: &[usize]) -> String {
        // written right-to-left like composition: traversal a then b is "ba"
        path.iter().rev().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("")
    }
}

/// A linear combination of parallel paths of equal length ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

impl Relation {
    /// A monomial relation `path = 0`.
    pub fn zero_path(path: Vec<usize>) -> Self {
        Relation { terms: vec![(Scalar::one(), path)] }
    }

    /// Validate against a quiver; returns `(source, target, length)`.
    pub fn shape(&self, q: &Quiver) -> Result<(usize, usize, usize)> {
        let first = self.terms.first().ok_or_else(|| Error::InvalidRelation("empty relation".into()))?;
        let len = first.1.len();
        let mut ends = None;
        for (c, p) in &self.terms {
            if c.is_zero() {
                return Err(Error::InvalidRelation("zero coefficient".into()));
            }
            if p.len() != len {
                return Err(Error::NonHomogeneous(format!("terms of lengths {} and {} in one relation", len, p.len())));
            }
            let e =
                q.path_endpoints(p).ok_or_else(|| Error::InvalidRelation(format!("path {:?} is not composable", p)))?;
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::InvalidRelation("terms do not share source and target".into()))
                }
                _ => {}
            }
        }
        if len < 2 {
            return Err(Error::InvalidRelation("relations must have length at least 2".into()));
        }
        let (s, t) = ends.expect("nonempty");
        Ok((s, t, len))
    }

    pub fn reversed(&self) -> Relation {
        Relation { terms: self.terms.iter().map(|(c, p)| (c.clone(), p.iter().rev().copied().collect())).collect() }
    }
}

/// A basis element: a standard path (or trivial path when `arrows` is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisPath {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl BasisPath {
    pub fn degree(&self) -> usize {
        self.arrows.len()
    }
}

pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Debug)]
struct AlgebraData {
    id: u64,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<BasisPath>,
    /// `blocks[s][t]`: basis indices of paths from `s` to `t`.
    blocks: Vec<Vec<Vec<usize>>>,
    /// `mult[i][j]` = coordinates of `b_i · b_j`.
    mult: Vec<Vec<SparseVec>>,
    degree_dims: Vec<usize>,
    arrow_basis: Vec<usize>,
}

/// A finite-dimensional algebra `kQ/I` with explicit basis and structure
/// constants. Cheap to clone; the opposite algebra is carried alongside so
/// that `a.opposite().opposite()` is the same object.
#[derive(Clone)]
pub struct Algebra {
    fwd: Arc<AlgebraData>,
    bwd: Arc<AlgebraData>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.fwd.id == other.fwd.id
    }
}
impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(#{} n={} dim={})", self.fwd.id, self.vertex_count(), self.dim())
    }
}

/// An element of an algebra as a coordinate vector over its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra_id: u64,
    pub coeffs: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl Algebra {
    /// Build `kQ/I` degree by degree: in each path length and each
    /// (source, target) block, quotient the span of paths by the span of
    /// `p·r·q` for generating relations `r`, stopping at the first length
    /// whose quotient vanishes.
    pub fn build(quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        Self::build_with_cap(quiver, relations, DEFAULT_LENGTH_CAP)
    }

    pub fn build_with_cap(quiver: Quiver, relations: Vec<Relation>, length_cap: usize) -> Result<Self> {
        let n = quiver.vertex_count();
        let mut shapes = Vec::with_capacity(relations.len());
        for r in &relations {
            shapes.push(r.shape(&quiver)?);
        }

        let mut basis: Vec<BasisPath> = (0..n).map(|v| BasisPath { source: v, target: v, arrows: vec![] }).collect();
        let mut nf: HashMap<Vec<usize>, SparseVec> = HashMap::new();
        let mut degree_dims = vec![n];
        // all paths by length, grouped per length
        let mut paths_by_len: Vec<Vec<(usize, usize, Vec<usize>)>> = vec![(0..n).map(|v| (v, v, vec![])).collect()];

        let mut len = 0;
        loop {
            if n == 0 {
                break;
            }
            len += 1;
            if len > length_cap {
                return Err(Error::LengthCap(length_cap));
            }
            let mut paths = Vec::new();
            if len == 1 {
                for (i, a) in quiver.arrows().iter().enumerate() {
                    paths.push((a.source, a.target, vec![i]));
                }
            } else {
                for (s, t, p) in &paths_by_len[len - 1] {
                    for (i, a) in quiver.arrows().iter().enumerate() {
                        if a.source == *t {
                            let mut np = p.clone();
                            np.push(i);
                            paths.push((*s, a.target, np));
                        }
                    }
                }
            }
            let mut by_block: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
            for (k, (s, t, _)) in paths.iter().enumerate() {
                by_block.entry((*s, *t)).or_default().push(k);
            }
            let index_of: HashMap<&[usize], usize> =
                paths.iter().enumerate().map(|(k, (_, _, p))| (p.as_slice(), k)).collect();

            // ideal generators in this degree: q (first), then r, then p
            let mut gens: HashMap<(usize, usize), Vec<Vec<(usize, Scalar)>>> = HashMap::new();
            for (r, &(rs, rt, rl)) in relations.iter().zip(&shapes) {
                if rl > len {
                    continue;
                }
                for a in 0..=len - rl {
                    let b = len - rl - a;
                    for (qs, qt, q) in &paths_by_len[a] {
                        if *qt != rs {
                            continue;
                        }
                        for (ps, pt, p) in &paths_by_len[b] {
                            if *ps != rt {
                                continue;
                            }
                            let mut g = Vec::new();
                            for (c, rp) in &r.terms {
                                let mut full = q.clone();
                                full.extend(rp);
                                full.extend(p);
                                g.push((index_of[full.as_slice()], c.clone()));
                            }
                            gens.entry((*qs, *pt)).or_default().push(g);
                        }
                    }
                }
            }

            let mut keys: Vec<(usize, usize)> = by_block.keys().copied().collect();
            keys.sort_unstable();
            let mut new_basis = Vec::new();
            let mut pending_nf: Vec<(Vec<usize>, Vec<(usize, Scalar)>)> = Vec::new();
            for key in keys {
                let members = &by_block[&key];
                let local: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &k)| (k, i)).collect();
                let rows: Vec<Vec<Scalar>> = gens
                    .get(&key)
                    .map(|gs| {
                        gs.iter()
                            .map(|g| {
                                let mut row = vec![Scalar::zero(); members.len()];
                                for (k, c) in g {
                                    row[local[k]] += c;
                                }
                                row
                            })
                            .collect()
                    })
                    .unwrap_or_default();
                let (rref, pivots) = if rows.is_empty() {
                    (Matrix::zeros(0, members.len()), vec![])
                } else {
                    let r = Matrix::from_rows(rows).rref();
                    (r.matrix, r.pivots)
                };
                let free: Vec<usize> = (0..members.len()).filter(|j| !pivots.contains(j)).collect();
                // local free column -> position among new standard paths
                let mut std_slot = HashMap::new();
                for &f in &free {
                    std_slot.insert(f, new_basis.len());
                    let (s, t, p) = &paths[members[f]];
                    new_basis.push(BasisPath { source: *s, target: *t, arrows: p.clone() });
                }
                for (j, &k) in members.iter().enumerate() {
                    let coords: Vec<(usize, Scalar)> = if let Some(&slot) = std_slot.get(&j) {
                        vec![(slot, Scalar::one())]
                    } else {
                        let row = pivots.iter().position(|&p| p == j).expect("pivot");
                        free.iter()
                            .filter(|&&f| !rref.get(row, f).is_zero())
                            .map(|&f| (std_slot[&f], -rref.get(row, f)))
                            .collect()
                    };
                    pending_nf.push((paths[k].2.clone(), coords));
                }
            }
            if new_basis.is_empty() {
                break;
            }
            let offset = basis.len();
            degree_dims.push(new_basis.len());
            basis.extend(new_basis);
            for (p, coords) in pending_nf {
                nf.insert(p, coords.into_iter().map(|(i, c)| (i + offset, c)).collect());
            }
            paths_by_len.push(paths);
        }
        let dim = basis.len();
        let mut blocks = vec![vec![Vec::new(); n]; n];
        for (i, b) in basis.iter().enumerate() {
            blocks[b.source][b.target].push(i);
        }
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for (i, bi) in basis.iter().enumerate() {
            for (j, bj) in basis.iter().enumerate() {
                if bj.target != bi.source {
                    continue;
                }
                mult[i][j] = if bi.arrows.is_empty() {
                    vec![(j, Scalar::one())]
                } else if bj.arrows.is_empty() {
                    vec![(i, Scalar::one())]
                } else {
                    let mut p = bj.arrows.clone();
                    p.extend(&bi.arrows);
                    nf.get(&p).cloned().unwrap_or_default()
                };
            }
        }
        let arrow_basis = (0..quiver.arrows().len())
            .map(|a| basis.iter().position(|b| b.arrows == [a]).expect("arrows survive in degree 1"))
            .collect();

        let id = NEXT_ALGEBRA_ID.fetch_add(2, Ordering::Relaxed);
        let fwd = AlgebraData { id, quiver, relations, basis, blocks, mult, degree_dims, arrow_basis };
        let bwd = fwd.opposite_data();
        Ok(Algebra { fwd: Arc::new(fwd), bwd: Arc::new(bwd) })
    }

    pub fn id(&self) -> u64 {
        self.fwd.id
    }

    pub fn quiver(&self) -> &Quiver {
        &self.fwd.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.fwd.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.fwd.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.fwd.basis.len()
    }

    pub fn basis(&self) -> &[BasisPath] {
        &self.fwd.basis
    }

    /// Basis indices of paths from `s` to `t`.
    pub fn block(&self, s: usize, t: usize) -> &[usize] {
        &self.fwd.blocks[s][t]
    }

    /// Number of basis elements in each path degree.
    pub fn degree_dims(&self) -> &[usize] {
        &self.fwd.degree_dims
    }

    /// Least length with zero graded quotient.
    pub fn nilpotency_degree(&self) -> usize {
        self.fwd.degree_dims.len()
    }

    pub fn arrow_basis_index(&self, arrow: usize) -> usize {
        self.fwd.arrow_basis[arrow]
    }

    /// Structure constants of `b_i · b_j`.
    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.fwd.mult[i][j]
    }

    pub fn is_path_algebra(&self) -> bool {
        self.fwd.relations.is_empty()
    }

    pub fn opposite(&self) -> Algebra {
        Algebra { fwd: self.bwd.clone(), bwd: self.fwd.clone() }
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<AlgebraElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::Shape(format!("element of length {} for algebra of dim {}", coeffs.len(), self.dim())));
        }
        Ok(AlgebraElement { algebra_id: self.id(), coeffs })
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut coeffs = vec![Scalar::zero(); self.dim()];
        coeffs[i] = Scalar::one();
        AlgebraElement { algebra_id: self.id(), coeffs }
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement { algebra_id: self.id(), coeffs: vec![Scalar::zero(); self.dim()] }
    }

    pub fn idempotent(&self, v: usize) -> AlgebraElement {
        self.basis_element(v)
    }

    pub fn arrow_element(&self, arrow: usize) -> AlgebraElement {
        self.basis_element(self.arrow_basis_index(arrow))
    }

    /// Bilinear product via the structure constants.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.algebra_id != self.id() || y.algebra_id != self.id() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElement { algebra_id: self.id(), coeffs: self.mul_coeffs(&x.coeffs, &y.coeffs) })
    }

    pub(crate) fn mul_coeffs(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, c) in &self.fwd.mult[i][j] {
                    out[*k] += xi * yj * c;
                }
            }
        }
        out
    }

    /// The element represented by a path (traversal order); empty paths are
    /// not accepted here, use [`Algebra::idempotent`].
    pub fn path_element(&self, path: &[usize]) -> Result<AlgebraElement> {
        let q = self.quiver();
        q.path_endpoints(path).ok_or_else(|| Error::InvalidRelation(format!("path {:?} is not composable", path)))?;
        let mut acc = self.arrow_element(path[0]);
        for &a in &path[1..] {
            acc = self.multiply(&self.arrow_element(a), &acc)?;
        }
        Ok(acc)
    }

    pub fn relation_element(&self, r: &Relation) -> Result<AlgebraElement> {
        let mut out = self.zero_element();
        for (c, p) in &r.terms {
            let e = self.path_element(p)?;
            for (o, v) in out.coeffs.iter_mut().zip(e.coeffs) {
                *o += c * v;
            }
        }
        Ok(out)
    }

    /// Human-readable name of a basis element (`e1`, `a`, `ba`, …).
    pub fn basis_name(&self, i: usize) -> String {
        let b = &self.fwd.basis[i];
        if b.arrows.is_empty() {
            format!("e{}", b.source + 1)
        } else {
            self.quiver().path_name(&b.arrows)
        }
    }

    /// The algebra `Λ/⟨Σ_{v ∈ removed} e_v⟩`, presented on the full
    /// subquiver of the remaining vertices. Returns it with the list of
    /// kept vertices (new index → old index).
    pub fn idempotent_quotient(&self, removed: &[usize]) -> Result<(Algebra, Vec<usize>)> {
        let n = self.vertex_count();
        let kept: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
        let new_index: HashMap<usize, usize> = kept.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let q = self.quiver();
        let mut arrow_map = HashMap::new();
        let mut arrows = Vec::new();
        for (i, a) in q.arrows().iter().enumerate() {
            if let (Some(&s), Some(&t)) = (new_index.get(&a.source), new_index.get(&a.target)) {
                arrow_map.insert(i, arrows.len());
                arrows.push(Arrow { name: a.name.clone(), source: s, target: t });
            }
        }
        let mut rels = Vec::new();
        for r in self.relations() {
            let terms: Vec<(Scalar, Vec<usize>)> = r
                .terms
                .iter()
                .filter(|(_, p)| p.iter().all(|a| arrow_map.contains_key(a)))
                .map(|(c, p)| (c.clone(), p.iter().map(|a| arrow_map[a]).collect()))
                .collect();
            if !terms.is_empty() {
                rels.push(Relation { terms });
            }
        }
        let alg = Algebra::build(Quiver::new(kept.len(), arrows)?, rels)?;
        Ok((alg, kept))
    }
}

impl AlgebraData {
    fn opposite_data(&self) -> AlgebraData {
        let n = self.quiver.vertex_count();
        let dim = self.basis.len();
        let basis = self
            .basis
            .iter()
            .map(|b| BasisPath { source: b.target, target: b.source, arrows: b.arrows.iter().rev().copied().collect() })
            .collect();
        let mut blocks = vec![vec![Vec::new(); n]; n];
        for s in 0..n {
            for t in 0..n {
                blocks[s][t] = self.blocks[t][s].clone();
            }
        }
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                mult[i][j] = self.mult[j][i].clone();
            }
        }
        AlgebraData {
            id: self.id ^ 1,
            quiver: self.quiver.reversed(),
            relations: self.relations.iter().map(Relation::reversed).collect(),
            basis,
            blocks,
            mult,
            degree_dims: self.degree_dims.clone(),
            arrow_basis: self.arrow_basis.clone(),
        }
    }
}

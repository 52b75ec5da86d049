//! Finite-dimensional representations of bound quivers and the module
//! category machinery built on them.

mod ar;
mod decompose;
mod hom;
mod presentation;
mod registry;

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::bqa::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};

pub use ar::{apr_tilt, ext1_dim, stable_hom_dim, tau, tau_minus, transpose};
pub use decompose::{end_top_dim, endomorphism_radical, split_indecomposables};
pub use hom::{hom_basis, hom_dim, span_rank};
pub use presentation::{
    element_matrix, hom_from_projective, min_presentation, morphism_from_elements, projective_cover, projective_map,
    radical, star, top, ElementMatrix, MinPresentation, ProjectiveSum,
};
pub use registry::{indecomposables_isomorphic, Decomposition, IndecId, ModCat};

#[derive(Debug)]
struct RepData {
    alg: Algebra,
    dims: Vec<usize>,
    arrows: Vec<Matrix>,
}

/// A representation: one vector space per vertex and one matrix per arrow
/// (shape `dim target × dim source`). Cheap to clone.
#[derive(Clone)]
pub struct Rep(Arc<RepData>);

impl PartialEq for Rep {
    fn eq(&self, other: &Self) -> bool {
        self.0.alg == other.0.alg && self.0.dims == other.0.dims && self.0.arrows == other.0.arrows
    }
}
impl Eq for Rep {}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.0.dims)
    }
}

impl Rep {
    /// Build and validate a representation: matrix shapes and every
    /// generating relation.
    pub fn new(alg: &Algebra, dims: Vec<usize>, arrows: Vec<Matrix>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() || arrows.len() != q.arrows().len() {
            return Err(Error::Shape("dimension vector or arrow list has the wrong length".into()));
        }
        for (a, m) in q.arrows().iter().zip(&arrows) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::Shape(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = Rep(Arc::new(RepData { alg: alg.clone(), dims, arrows }));
        if !rep.satisfies_relations() {
            return Err(Error::InvalidRelation("representation does not satisfy the relations".into()));
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(alg: &Algebra, dims: Vec<usize>, arrows: Vec<Matrix>) -> Self {
        let rep = Rep(Arc::new(RepData { alg: alg.clone(), dims, arrows }));
        debug_assert!(rep.satisfies_relations(), "relation invariant violated");
        rep
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow(&self, a: usize) -> &Matrix {
        &self.0.arrows[a]
    }

    pub fn arrows(&self) -> &[Matrix] {
        &self.0.arrows
    }

    /// Matrix of a path (traversal order) from `M_source` to `M_target`.
    pub fn path_action(&self, source: usize, path: &[usize]) -> Matrix {
        let mut acc = Matrix::identity(self.dim(source));
        for &a in path {
            acc = self.arrow(a).mul(&acc);
        }
        acc
    }

    /// Matrix by which basis element `b` acts, from `M_source(b)` to `M_target(b)`.
    pub fn basis_action(&self, b: usize) -> Matrix {
        let bp = &self.algebra().basis()[b];
        self.path_action(bp.source, &bp.arrows)
    }

    pub fn satisfies_relations(&self) -> bool {
        let alg = self.algebra();
        for r in alg.relations() {
            let (s, t, _) = r.shape(alg.quiver()).expect("validated at build");
            let mut acc = Matrix::zeros(self.dim(t), self.dim(s));
            for (c, p) in &r.terms {
                acc = &acc + &self.path_action(s, p).scale(c);
            }
            if !acc.is_zero() {
                return false;
            }
        }
        true
    }

    pub fn zero(alg: &Algebra) -> Rep {
        let n = alg.vertex_count();
        let arrows = alg.quiver().arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Rep::new_unchecked(alg, vec![0; n], arrows)
    }

    pub fn simple(alg: &Algebra, v: usize) -> Result<Rep> {
        check_vertex(alg, v)?;
        let mut dims = vec![0; alg.vertex_count()];
        dims[v] = 1;
        Ok(Rep::with_zero_arrows(alg, dims))
    }

    /// Semisimple representation with the given dimension vector.
    pub fn with_zero_arrows(alg: &Algebra, dims: Vec<usize>) -> Rep {
        let arrows = alg.quiver().arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        Rep::new_unchecked(alg, dims, arrows)
    }

    /// The indecomposable projective `P_i = Λe_i`: at vertex `j` the paths
    /// `i → j`, arrows acting by left composition.
    pub fn projective(alg: &Algebra, i: usize) -> Result<Rep> {
        check_vertex(alg, i)?;
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|j| alg.block(i, j).len()).collect();
        let arrows = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let rows = alg.block(i, a.target);
                let cols = alg.block(i, a.source);
                let ab = alg.arrow_basis_index(ai);
                let mut m = Matrix::zeros(rows.len(), cols.len());
                for (c, &bc) in cols.iter().enumerate() {
                    for (k, v) in alg.mult_basis(ab, bc) {
                        let r = rows.iter().position(|x| x == k).expect("product stays in block");
                        m.set(r, c, v.clone());
                    }
                }
                m
            })
            .collect();
        Ok(Rep::new_unchecked(alg, dims, arrows))
    }

    /// The indecomposable injective `I_i = D(e_iΛ)`: at vertex `j` the dual
    /// of the paths `j → i`.
    pub fn injective(alg: &Algebra, i: usize) -> Result<Rep> {
        check_vertex(alg, i)?;
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|j| alg.block(j, i).len()).collect();
        let arrows = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let rows = alg.block(a.target, i);
                let cols = alg.block(a.source, i);
                let ab = alg.arrow_basis_index(ai);
                let mut m = Matrix::zeros(rows.len(), cols.len());
                for (r, &x) in rows.iter().enumerate() {
                    for (k, v) in alg.mult_basis(x, ab) {
                        let c = cols.iter().position(|y| y == k).expect("product stays in block");
                        m.set(r, c, v.clone());
                    }
                }
                m
            })
            .collect();
        Ok(Rep::new_unchecked(alg, dims, arrows))
    }

    /// The left regular module `Λ = ⊕ P_i`.
    pub fn regular(alg: &Algebra) -> Rep {
        let ps: Vec<Rep> = (0..alg.vertex_count()).map(|i| Rep::projective(alg, i).expect("valid")).collect();
        Rep::direct_sum(alg, &ps)
    }

    /// `D(Λ_Λ) = ⊕ I_i`.
    pub fn dual_regular(alg: &Algebra) -> Rep {
        let is: Vec<Rep> = (0..alg.vertex_count()).map(|i| Rep::injective(alg, i).expect("valid")).collect();
        Rep::direct_sum(alg, &is)
    }

    pub fn direct_sum(alg: &Algebra, parts: &[Rep]) -> Rep {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dim(v)).sum()).collect();
        let arrows = (0..alg.quiver().arrows().len())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| p.arrow(a)).collect();
                Matrix::block_diag(&blocks)
            })
            .collect();
        Rep::new_unchecked(alg, dims, arrows)
    }

    pub fn power(&self, k: usize) -> Rep {
        Rep::direct_sum(self.algebra(), &vec![self.clone(); k])
    }

    /// `D M = Hom_k(M, k)` as a module over the opposite algebra.
    pub fn dual(&self) -> Rep {
        let op = self.algebra().opposite();
        Rep::new_unchecked(&op, self.dims().to_vec(), self.arrows().iter().map(Matrix::transpose).collect())
    }

    pub fn is_sincere(&self) -> bool {
        self.dims().iter().all(|&d| d > 0)
    }

    /// Annihilator `{x ∈ Λ : xM = 0}` as column vectors over the algebra
    /// basis: the kernel of the action map `Λ → End_k(⊕ M_j)`.
    pub fn annihilator(&self) -> Matrix {
        let alg = self.algebra();
        let mut cols = Vec::with_capacity(alg.dim());
        // each basis element acts block-wise; flatten all blocks into one column
        let n = alg.vertex_count();
        let total: usize =
            (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).map(|(s, t)| self.dim(s) * self.dim(t)).sum();
        for b in 0..alg.dim() {
            let bp = &alg.basis()[b];
            let act = self.basis_action(b);
            let mut col = vec![Scalar::zero(); total];
            let mut off = 0;
            for s in 0..n {
                for t in 0..n {
                    let sz = self.dim(s) * self.dim(t);
                    if s == bp.source && t == bp.target {
                        for (k, v) in act.entries().iter().enumerate() {
                            col[off + k] = v.clone();
                        }
                    }
                    off += sz;
                }
            }
            cols.push(col);
        }
        Matrix::from_columns(total, &cols).kernel_basis()
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator().cols() == 0
    }

    /// Sub-representation spanned per vertex by the given columns, which must
    /// be independent and closed under the arrows.
    pub fn subrep(&self, bases: Vec<Matrix>) -> Result<(Rep, Morphism)> {
        let alg = self.algebra();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let mut arrows = Vec::new();
        for (ai, a) in alg.quiver().arrows().iter().enumerate() {
            let img = self.arrow(ai).mul(&bases[a.source]);
            let x = bases[a.target]
                .solve(&img)?
                .ok_or_else(|| Error::Shape("subspace is not closed under the arrows".into()))?;
            arrows.push(x);
        }
        let sub = Rep::new_unchecked(alg, dims, arrows);
        let incl = Morphism::new_unchecked(sub.clone(), self.clone(), bases);
        Ok((sub, incl))
    }

    /// Quotient by a sub-representation given by spanning columns per vertex
    /// (closed under the arrows; need not be independent).
    pub fn quotient(&self, spans: &[Matrix]) -> Result<(Rep, Morphism)> {
        let alg = self.algebra();
        let n = alg.vertex_count();
        let mut proj = Vec::with_capacity(n);
        let mut sect = Vec::with_capacity(n);
        for v in 0..n {
            let p = if spans[v].cols() == 0 { Matrix::identity(self.dim(v)) } else { spans[v].left_kernel_basis() };
            let s = p.solve(&Matrix::identity(p.rows()))?.expect("projection onto a quotient is surjective");
            proj.push(p);
            sect.push(s);
        }
        let dims: Vec<usize> = proj.iter().map(Matrix::rows).collect();
        let arrows = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| proj[a.target].mul(self.arrow(ai)).mul(&sect[a.source]))
            .collect();
        let q = Rep::new_unchecked(alg, dims, arrows);
        let pi = Morphism::new_unchecked(self.clone(), q.clone(), proj);
        Ok((q, pi))
    }

    /// Restrict a module vanishing on `removed` to the idempotent quotient
    /// `Λ/⟨e⟩` given with its list of kept vertices.
    pub fn restrict_to(&self, quotient: &Algebra, kept: &[usize]) -> Result<Rep> {
        let q = self.algebra().quiver();
        for v in 0..q.vertex_count() {
            if !kept.contains(&v) && self.dim(v) != 0 {
                return Err(Error::InvalidParameter(format!("module is nonzero at removed vertex {}", v + 1)));
            }
        }
        let dims: Vec<usize> = kept.iter().map(|&v| self.dim(v)).collect();
        let arrows = q
            .arrows()
            .iter()
            .enumerate()
            .filter(|(_, a)| kept.contains(&a.source) && kept.contains(&a.target))
            .map(|(i, _)| self.arrow(i).clone())
            .collect();
        Rep::new(quotient, dims, arrows)
    }

    /// Inverse of [`Rep::restrict_to`]: inflate a `Λ/⟨e⟩`-module to `Λ`.
    pub fn inflate_to(&self, alg: &Algebra, kept: &[usize]) -> Result<Rep> {
        let n = alg.vertex_count();
        let mut dims = vec![0; n];
        for (i, &v) in kept.iter().enumerate() {
            dims[v] = self.dim(i);
        }
        let mut sub_arrow = 0;
        let mut arrows = Vec::new();
        for a in alg.quiver().arrows() {
            if kept.contains(&a.source) && kept.contains(&a.target) {
                arrows.push(self.arrow(sub_arrow).clone());
                sub_arrow += 1;
            } else {
                arrows.push(Matrix::zeros(dims[a.target], dims[a.source]));
            }
        }
        Rep::new(alg, dims, arrows)
    }
}

fn check_vertex(alg: &Algebra, v: usize) -> Result<()> {
    if v >= alg.vertex_count() {
        return Err(Error::InvalidVertex(v));
    }
    Ok(())
}

/// A module homomorphism: one matrix per vertex, intertwining the arrows.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    pub source: Rep,
    pub target: Rep,
    pub maps: Vec<Matrix>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({:?} -> {:?}, {:?})", self.source, self.target, self.maps)
    }
}

impl Morphism {
    pub fn new(source: Rep, target: Rep, maps: Vec<Matrix>) -> Result<Self> {
        if source.algebra() != target.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        let n = source.algebra().vertex_count();
        if maps.len() != n {
            return Err(Error::Shape("one matrix per vertex required".into()));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.rows() != target.dim(v) || m.cols() != source.dim(v) {
                return Err(Error::Shape(format!("vertex {} map has the wrong shape", v + 1)));
            }
        }
        let f = Morphism { source, target, maps };
        if !f.intertwines() {
            return Err(Error::Shape("maps do not commute with the arrows".into()));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Rep, target: Rep, maps: Vec<Matrix>) -> Self {
        let f = Morphism { source, target, maps };
        debug_assert!(f.intertwines(), "morphism does not intertwine");
        f
    }

    pub fn intertwines(&self) -> bool {
        self.source.algebra().quiver().arrows().iter().enumerate().all(|(ai, a)| {
            self.maps[a.target].mul(self.source.arrow(ai)) == self.target.arrow(ai).mul(&self.maps[a.source])
        })
    }

    pub fn identity(m: &Rep) -> Morphism {
        let maps = m.dims().iter().map(|&d| Matrix::identity(d)).collect();
        Morphism { source: m.clone(), target: m.clone(), maps }
    }

    pub fn zero(source: &Rep, target: &Rep) -> Morphism {
        let maps = (0..source.dims().len()).map(|v| Matrix::zeros(target.dim(v), source.dim(v))).collect();
        Morphism { source: source.clone(), target: target.clone(), maps }
    }

    /// `self ∘ g` (first `g`, then `self`).
    pub fn after(&self, g: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.mul(b)).collect();
        Morphism { source: g.source.clone(), target: self.target.clone(), maps }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a + b).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        let maps = self.maps.iter().map(|m| m.scale(c)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().zip(self.target.dims()).all(|(m, &d)| m.rank() == d)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().zip(self.source.dims()).all(|(m, &d)| m.rank() == d)
    }

    /// All entries, vertex by vertex, as one coordinate vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// `self^k` for an endomorphism.
    pub fn pow(&self, k: u32) -> Morphism {
        let maps = self.maps.iter().map(|m| m.pow(k)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    /// Trace of an endomorphism as a linear map on `⊕ M_v`.
    pub fn trace(&self) -> Scalar {
        self.maps.iter().map(Matrix::trace).sum()
    }

    pub fn kernel(&self) -> (Rep, Morphism) {
        let bases = self.maps.iter().map(Matrix::kernel_basis).collect();
        self.source.subrep(bases).expect("kernels are submodules")
    }

    pub fn image(&self) -> (Rep, Morphism) {
        let bases = self.maps.iter().map(Matrix::column_space_basis).collect();
        self.target.subrep(bases).expect("images are submodules")
    }

    pub fn cokernel(&self) -> (Rep, Morphism) {
        self.target.quotient(&self.maps).expect("images are submodules")
    }

    /// The dual map `D(target) → D(source)` over the opposite algebra.
    pub fn dual(&self) -> Morphism {
        Morphism {
            source: self.target.dual(),
            target: self.source.dual(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Linear combination `Σ c_i f_i` of parallel morphisms.
    pub fn combination(basis: &[Morphism], coeffs: &[Scalar]) -> Option<Morphism> {
        let first = basis.first()?;
        let mut acc = Morphism::zero(&first.source, &first.target);
        for (f, c) in basis.iter().zip(coeffs) {
            if !c.is_zero() {
                acc = if c.is_one() { acc.add(f) } else { acc.add(&f.scale(c)) };
            }
        }
        Some(acc)
    }
}

#[cfg(test)]
mod tests;

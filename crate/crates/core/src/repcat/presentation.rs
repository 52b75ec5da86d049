use num_traits::Zero;

use super::{Morphism, Rep};
use crate::bqa::Algebra;
use crate::error::Result;
use crate::exactla::{Matrix, Scalar};

/// A direct sum `⊕_k P_{v_k}` of indecomposable projectives, remembering
/// where each summand sits inside each vertex space.
#[derive(Clone, Debug)]
pub struct ProjectiveSum {
    pub vertices: Vec<usize>,
    pub rep: Rep,
    /// `offsets[k][j]`: first row of summand `k` in the space at vertex `j`.
    offsets: Vec<Vec<usize>>,
}

impl ProjectiveSum {
    pub fn new(alg: &Algebra, mut vertices: Vec<usize>) -> ProjectiveSum {
        vertices.sort_unstable();
        let n = alg.vertex_count();
        let mut offsets = Vec::with_capacity(vertices.len());
        let mut acc = vec![0; n];
        for &v in &vertices {
            offsets.push(acc.clone());
            for (j, a) in acc.iter_mut().enumerate() {
                *a += alg.block(v, j).len();
            }
        }
        let parts: Vec<Rep> = vertices.iter().map(|&v| Rep::projective(alg, v).expect("vertex in range")).collect();
        ProjectiveSum { vertices, rep: Rep::direct_sum(alg, &parts), offsets }
    }

    pub fn algebra(&self) -> &Algebra {
        self.rep.algebra()
    }

    /// Multiplicity of each `P_i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.algebra().vertex_count()];
        for &v in &self.vertices {
            m[v] += 1;
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn offset(&self, k: usize, j: usize) -> usize {
        self.offsets[k][j]
    }
}

/// Entry `[l][k]` is the algebra element `x ∈ e_{v_k} Λ e_{w_l}` with
/// `e_{v_k} ↦ x` in the component from summand `k` of the source to
/// summand `l` of the target, as coordinates over the algebra basis.
pub type ElementMatrix = Vec<Vec<Vec<Scalar>>>;

/// Morphism `P_i → M` sending `e_i` to `m ∈ M_i`.
pub fn hom_from_projective(alg: &Algebra, i: usize, target: &Rep, m: &Matrix) -> Morphism {
    let p = Rep::projective(alg, i).expect("vertex in range");
    let maps = (0..alg.vertex_count())
        .map(|j| {
            let cols: Vec<Vec<Scalar>> =
                alg.block(i, j).iter().map(|&b| target.basis_action(b).mul(m).col(0)).collect();
            Matrix::from_columns(target.dim(j), &cols)
        })
        .collect();
    Morphism::new_unchecked(p, target.clone(), maps)
}

fn radical_spans(m: &Rep) -> Vec<Matrix> {
    let alg = m.algebra();
    (0..alg.vertex_count())
        .map(|v| {
            let imgs: Vec<&Matrix> = alg
                .quiver()
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.target == v)
                .map(|(i, _)| m.arrow(i))
                .collect();
            Matrix::hstack(m.dim(v), &imgs)
        })
        .collect()
}

/// `rad M` with its inclusion.
pub fn radical(m: &Rep) -> (Rep, Morphism) {
    let bases = radical_spans(m).iter().map(Matrix::column_space_basis).collect();
    m.subrep(bases).expect("radical is a submodule")
}

/// `top M = M / rad M` with the projection.
pub fn top(m: &Rep) -> (Rep, Morphism) {
    m.quotient(&radical_spans(m)).expect("radical is a submodule")
}

/// Projective cover `P_0 → M`; generators are the first standard basis
/// vectors, in vertex order, completing `rad M` to `M`.
pub fn projective_cover(m: &Rep) -> (ProjectiveSum, Morphism) {
    let alg = m.algebra();
    let spans = radical_spans(m);
    let mut gens: Vec<(usize, Matrix)> = Vec::new();
    for (v, span) in spans.iter().enumerate() {
        let d = m.dim(v);
        let mut cur = span.column_space_basis();
        let mut rank = cur.cols();
        for k in 0..d {
            if rank == d {
                break;
            }
            let e = Matrix::from_fn(d, 1, |r, _| if r == k { Scalar::from_integer(1.into()) } else { Scalar::zero() });
            let next = Matrix::hstack(d, &[&cur, &e]);
            if next.rank() > rank {
                cur = next;
                rank += 1;
                gens.push((v, e));
            }
        }
    }
    let p0 = ProjectiveSum::new(alg, gens.iter().map(|g| g.0).collect());
    // generators are already in vertex order, matching the sorted summands
    let n = alg.vertex_count();
    let maps = (0..n)
        .map(|j| {
            let blocks: Vec<Matrix> =
                gens.iter().map(|(v, e)| hom_from_projective(alg, *v, m, e).maps[j].clone()).collect();
            let refs: Vec<&Matrix> = blocks.iter().collect();
            Matrix::hstack(m.dim(j), &refs)
        })
        .collect();
    let d0 = Morphism::new_unchecked(p0.rep.clone(), m.clone(), maps);
    (p0, d0)
}

/// `P_1 →d1→ P_0 →d0→ M → 0`, with `ΩM = ker d0`.
#[derive(Clone, Debug)]
pub struct MinPresentation {
    pub p1: ProjectiveSum,
    pub p0: ProjectiveSum,
    pub d1: Morphism,
    pub d0: Morphism,
    pub syzygy: Rep,
    pub syzygy_incl: Morphism,
}

pub fn min_presentation(m: &Rep) -> MinPresentation {
    let (p0, d0) = projective_cover(m);
    let (k, incl) = d0.kernel();
    let (p1, e) = projective_cover(&k);
    let d1 = incl.after(&e);
    MinPresentation { p1, p0, d1, d0, syzygy: k, syzygy_incl: incl }
}

impl MinPresentation {
    pub fn d1_elements(&self) -> ElementMatrix {
        element_matrix(&self.p1, &self.p0, &self.d1)
    }
}

/// Read off the element matrix of a map between projective sums.
pub fn element_matrix(src: &ProjectiveSum, tgt: &ProjectiveSum, f: &Morphism) -> ElementMatrix {
    let alg = src.algebra();
    tgt.vertices
        .iter()
        .enumerate()
        .map(|(l, &w)| {
            src.vertices
                .iter()
                .enumerate()
                .map(|(k, &u)| {
                    // e_u is the first basis element of block(u,u)
                    let col = src.offset(k, u);
                    let row0 = tgt.offset(l, u);
                    let mut x = vec![Scalar::zero(); alg.dim()];
                    for (r, &b) in alg.block(w, u).iter().enumerate() {
                        x[b] = f.maps[u].get(row0 + r, col).clone();
                    }
                    x
                })
                .collect()
        })
        .collect()
}

/// Map between projective sums from its element matrix: a path `p` out of
/// `v_k` goes to `p · x_{lk}`.
pub fn morphism_from_elements(src: &ProjectiveSum, tgt: &ProjectiveSum, elems: &ElementMatrix) -> Morphism {
    let alg = src.algebra();
    let n = alg.vertex_count();
    let maps = (0..n)
        .map(|j| {
            let mut m = Matrix::zeros(tgt.rep.dim(j), src.rep.dim(j));
            for (l, &w) in tgt.vertices.iter().enumerate() {
                let rows = alg.block(w, j);
                for (k, &u) in src.vertices.iter().enumerate() {
                    let x = &elems[l][k];
                    for (c, &p) in alg.block(u, j).iter().enumerate() {
                        for (b, xb) in x.iter().enumerate() {
                            if xb.is_zero() {
                                continue;
                            }
                            for (r, v) in alg.mult_basis(p, b) {
                                let ri = rows.iter().position(|y| y == r).expect("product in block");
                                *m.get_mut(tgt.offset(l, j) + ri, src.offset(k, j) + c) += v * xb;
                            }
                        }
                    }
                }
            }
            m
        })
        .collect();
    Morphism::new_unchecked(src.rep.clone(), tgt.rep.clone(), maps)
}

/// `(−)^* = Hom_Λ(−, Λ)` on a map between projective sums: the element
/// matrix transposes and is read in the opposite algebra.
pub fn star(src: &ProjectiveSum, tgt: &ProjectiveSum, f: &Morphism) -> (ProjectiveSum, ProjectiveSum, Morphism) {
    let elems = element_matrix(src, tgt, f);
    let op = src.algebra().opposite();
    let src_star = ProjectiveSum::new(&op, tgt.vertices.clone());
    let tgt_star = ProjectiveSum::new(&op, src.vertices.clone());
    let transposed: ElementMatrix =
        (0..src.vertices.len()).map(|k| (0..tgt.vertices.len()).map(|l| elems[l][k].clone()).collect()).collect();
    let g = morphism_from_elements(&src_star, &tgt_star, &transposed);
    (src_star, tgt_star, g)
}

/// Convenience: a map `P_1 → P_0` given by an element matrix, checked.
pub fn projective_map(src: &ProjectiveSum, tgt: &ProjectiveSum, elems: &ElementMatrix) -> Result<Morphism> {
    let f = morphism_from_elements(src, tgt, elems);
    Morphism::new(f.source, f.target, f.maps)
}

use num_traits::Zero;

use super::{Morphism, Rep};
use crate::error::{Error, Result};
use crate::exactla::{rank_of_vectors, Matrix, Scalar};

/// Unknowns are the entries of `X_v` (row-major, vertex by vertex); each
/// arrow `a: s → t` contributes the block `N_a X_s − X_t M_a = 0`.
fn intertwining_system(m: &Rep, n: &Rep) -> (Matrix, Vec<usize>) {
    let verts = m.dims().len();
    let mut offsets = Vec::with_capacity(verts + 1);
    let mut acc = 0;
    for v in 0..verts {
        offsets.push(acc);
        acc += n.dim(v) * m.dim(v);
    }
    offsets.push(acc);
    let unknowns = acc;
    let q = m.algebra().quiver();
    let rows: usize = q.arrows().iter().map(|a| n.dim(a.target) * m.dim(a.source)).sum();
    let mut sys = Matrix::zeros(rows, unknowns);
    let mut row0 = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (m.arrow(ai), n.arrow(ai));
        let (ms, ns, nt) = (m.dim(s), n.dim(s), n.dim(t));
        for r in 0..nt {
            for c in 0..ms {
                let row = row0 + r * ms + c;
                // + Σ_k N_a[r,k] X_s[k,c]
                for k in 0..ns {
                    let v = na.get(r, k);
                    if !v.is_zero() {
                        *sys.get_mut(row, offsets[s] + k * ms + c) += v;
                    }
                }
                // − Σ_k X_t[r,k] M_a[k,c]
                let mt = m.dim(t);
                for k in 0..mt {
                    let v = ma.get(k, c);
                    if !v.is_zero() {
                        *sys.get_mut(row, offsets[t] + r * mt + k) -= v;
                    }
                }
            }
        }
        row0 += nt * ms;
    }
    (sys, offsets)
}

/// Basis of `Hom(M, N)`.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<Vec<Morphism>> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let (sys, offsets) = intertwining_system(m, n);
    let ker = sys.kernel_basis();
    let verts = m.dims().len();
    let mut out = Vec::with_capacity(ker.cols());
    for j in 0..ker.cols() {
        let col = ker.col(j);
        let maps = (0..verts)
            .map(|v| {
                let (r, c) = (n.dim(v), m.dim(v));
                Matrix::from_fn(r, c, |i, k| col[offsets[v] + i * c + k].clone())
            })
            .collect();
        out.push(Morphism::new_unchecked(m.clone(), n.clone(), maps));
    }
    Ok(out)
}

pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let (sys, offsets) = intertwining_system(m, n);
    Ok(offsets[offsets.len() - 1] - sys.rank())
}

/// Dimension of the span of parallel morphisms.
pub fn span_rank(maps: &[Morphism]) -> usize {
    let Some(first) = maps.first() else { return 0 };
    let len = first.maps.iter().map(|m| m.rows() * m.cols()).sum();
    let vecs: Vec<Vec<Scalar>> = maps.iter().map(Morphism::flatten).collect();
    rank_of_vectors(len, &vecs)
}

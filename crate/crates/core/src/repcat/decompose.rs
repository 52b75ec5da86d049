use num_traits::Zero;

use super::{hom_basis, Morphism, Rep};
use crate::error::{Error, Result};
use crate::exactla::{char_poly, int, rational_roots, Matrix, Scalar};

fn gram(basis: &[Morphism]) -> Matrix {
    let k = basis.len();
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = basis[i].after(&basis[j]).trace();
            g.set(i, j, t.clone());
            g.set(j, i, t);
        }
    }
    g
}

/// `dim End(M)/rad End(M)`, via the rank of the trace form
/// `(φ, ψ) ↦ tr(φψ)` whose kernel is the radical in characteristic 0.
pub fn end_top_dim(m: &Rep) -> Result<usize> {
    Ok(gram(&hom_basis(m, m)?).rank())
}

/// Basis of `rad End(M)` (the trace-form kernel) together with `End(M)`'s basis.
pub fn endomorphism_radical(m: &Rep) -> Result<(Vec<Morphism>, Vec<Morphism>)> {
    let end = hom_basis(m, m)?;
    if end.is_empty() {
        return Ok((end, Vec::new()));
    }
    let ker = gram(&end).kernel_basis();
    let rad = (0..ker.cols()).map(|c| Morphism::combination(&end, &ker.col(c)).expect("nonempty basis")).collect();
    Ok((end, rad))
}

fn is_nilpotent(f: &Morphism) -> bool {
    let n = f.source.dims().iter().copied().max().unwrap_or(0) as u32;
    f.pow(n.max(1)).is_zero()
}

/// Fitting split `M = ker θ^N ⊕ im θ^N`, if both parts are nonzero.
fn fitting(theta: &Morphism) -> Option<(Rep, Rep)> {
    if theta.is_iso() || is_nilpotent(theta) {
        return None;
    }
    let n = theta.source.dims().iter().copied().max().unwrap_or(0) as u32;
    let p = theta.pow(n.max(1));
    let (k, _) = p.kernel();
    let (i, _) = p.image();
    debug_assert_eq!(k.total_dim() + i.total_dim(), theta.source.total_dim());
    Some((k, i))
}

fn eigen_shifts(f: &Morphism) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    for m in &f.maps {
        if m.rows() == 0 {
            continue;
        }
        if let Some(roots) = rational_roots(&char_poly(m)) {
            for r in roots {
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out
}

fn try_split_with(f: &Morphism) -> Option<(Rep, Rep)> {
    if let Some(s) = fitting(f) {
        return Some(s);
    }
    let id = Morphism::identity(&f.source);
    for lambda in eigen_shifts(f) {
        if lambda.is_zero() {
            continue;
        }
        if let Some(s) = fitting(&f.add(&id.scale(&-lambda))) {
            return Some(s);
        }
    }
    None
}

/// One split of `M`, or `None` when `End(M)` is local.
fn split_once(m: &Rep) -> Result<Option<(Rep, Rep)>> {
    let end = hom_basis(m, m)?;
    let top_dim = gram(&end).rank();
    if top_dim <= 1 {
        return Ok(None);
    }
    for f in &end {
        if let Some(s) = try_split_with(f) {
            return Ok(Some(s));
        }
    }
    // small integer combinations of pairs
    for c in [int(1), int(2), int(-1)] {
        for i in 0..end.len() {
            for j in i + 1..end.len() {
                let g = end[i].add(&end[j].scale(&c));
                if let Some(s) = try_split_with(&g) {
                    return Ok(Some(s));
                }
            }
        }
    }
    let all = Morphism::combination(&end, &(1..=end.len()).map(|k| int(k as i64)).collect::<Vec<_>>());
    if let Some(g) = all {
        if let Some(s) = try_split_with(&g) {
            return Ok(Some(s));
        }
    }
    Err(Error::NonSplitEndomorphism { dims: m.dims().to_vec(), quotient_dim: top_dim })
}

/// Indecomposable summands of `M` (with repetition), each certified local.
pub fn split_indecomposables(m: &Rep) -> Result<Vec<Rep>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(&x)? {
            None => out.push(x),
            Some((a, b)) => {
                stack.push(b);
                stack.push(a);
            }
        }
    }
    Ok(out)
}

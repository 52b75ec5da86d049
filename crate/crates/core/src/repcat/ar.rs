use super::presentation::{min_presentation, projective_cover, star};
use super::{hom_basis, span_rank, Rep};
use crate::bqa::Algebra;
use crate::error::{Error, Result};

/// Auslander–Bridger transpose `Tr M = coker(d1^*: P_0^* → P_1^*)`, a module
/// over the opposite algebra. Projective summands of `M` contribute nothing.
pub fn transpose(m: &Rep) -> Result<Rep> {
    let pres = min_presentation(m);
    let (_, _, d1_star) = star(&pres.p1, &pres.p0, &pres.d1);
    Ok(d1_star.cokernel().0)
}

/// `τM = D Tr M`.
pub fn tau(m: &Rep) -> Result<Rep> {
    Ok(transpose(m)?.dual())
}

/// `τ⁻M = Tr D M`.
pub fn tau_minus(m: &Rep) -> Result<Rep> {
    transpose(&m.dual())
}

/// `dim Ext¹(M, N)` as the cokernel of `Hom(P_0, N) → Hom(ΩM, N)`.
pub fn ext1_dim(m: &Rep, n: &Rep) -> Result<usize> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let pres = min_presentation(m);
    let from_syz = hom_basis(&pres.syzygy, n)?;
    if from_syz.is_empty() {
        return Ok(0);
    }
    let restricted: Vec<_> = hom_basis(&pres.p0.rep, n)?.iter().map(|g| g.after(&pres.syzygy_incl)).collect();
    Ok(from_syz.len() - span_rank(&restricted))
}

/// `dim Hom-bar(X, Y)`: Hom modulo maps factoring through the projective
/// cover of `Y`.
pub fn stable_hom_dim(x: &Rep, y: &Rep) -> Result<usize> {
    if x.algebra() != y.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let all = hom_basis(x, y)?;
    if all.is_empty() {
        return Ok(0);
    }
    let (p, cover) = projective_cover(y);
    let through: Vec<_> = hom_basis(x, &p.rep)?.iter().map(|g| cover.after(g)).collect();
    Ok(all.len() - span_rank(&through))
}

/// APR tilting module `(⊕_{j≠i} P_j) ⊕ τ⁻S_i` at a sink `i` of a path algebra.
pub fn apr_tilt(alg: &Algebra, i: usize) -> Result<Rep> {
    if !alg.is_path_algebra() {
        return Err(Error::NotHereditary);
    }
    if i >= alg.vertex_count() {
        return Err(Error::InvalidVertex(i));
    }
    if !alg.quiver().is_sink(i) {
        return Err(Error::NotSink(i));
    }
    let mut parts: Vec<Rep> =
        (0..alg.vertex_count()).filter(|&j| j != i).map(|j| Rep::projective(alg, j)).collect::<Result<_>>()?;
    parts.push(tau_minus(&Rep::simple(alg, i)?)?);
    Ok(Rep::direct_sum(alg, &parts))
}

//! Two-term complexes of projectives and the silting side of the
//! support τ-tilting correspondence.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::bqa::Algebra;
use crate::error::{Error, Result};
use crate::exactla::Scalar;
use crate::repcat::{
    hom_basis, hom_dim, min_presentation, morphism_from_elements, span_rank, star, ElementMatrix, IndecId, ModCat,
    Morphism, ProjectiveSum, Rep,
};
use crate::taut::{CheckReport, ExchangePoset, StPair, TauTilting};

/// `P⁻¹ → P⁰`, concentrated in degrees −1 and 0.
#[derive(Clone, Debug)]
pub struct TwoTermComplex {
    pub minus1: ProjectiveSum,
    pub zero: ProjectiveSum,
    pub d: Morphism,
}

/// Krull-Schmidt data of a two-term complex in the homotopy category:
/// minimal presentations of the indecomposable summands of `H⁰`, shifted
/// projectives `P_i[1]`, and the contractible part `P_i → P_i` that is
/// homotopic to zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoTermSummands {
    pub modules: Vec<(IndecId, usize)>,
    pub shifted: Vec<usize>,
    pub contractible: Vec<usize>,
}

impl TwoTermSummands {
    /// Number of non-isomorphic indecomposable summands, `|P|`.
    pub fn distinct(&self) -> usize {
        self.modules.len() + self.shifted.iter().filter(|&&m| m > 0).count()
    }

    pub fn is_basic(&self) -> bool {
        self.modules.iter().all(|&(_, m)| m == 1) && self.shifted.iter().all(|&m| m <= 1)
    }

    /// The pair `(H⁰, shifted vertices)` read back from the summands.
    pub fn to_pair(&self) -> StPair {
        let module = self.modules.iter().map(|&(id, _)| id).collect();
        let support = (0..self.shifted.len()).filter(|&v| self.shifted[v] > 0).collect();
        StPair::new(module, support)
    }
}

impl TwoTermComplex {
    pub fn new(minus1: ProjectiveSum, zero: ProjectiveSum, d: Morphism) -> Result<Self> {
        if d.source.dims() != minus1.rep.dims() || d.target.dims() != zero.rep.dims() {
            return Err(Error::Shape("differential does not match the terms".into()));
        }
        Ok(TwoTermComplex { minus1, zero, d })
    }

    /// The complex with differential given by an element matrix.
    pub fn from_elements(alg: &Algebra, minus1: Vec<usize>, zero: Vec<usize>, elems: &ElementMatrix) -> Result<Self> {
        let src = ProjectiveSum::new(alg, minus1);
        let tgt = ProjectiveSum::new(alg, zero);
        let d = morphism_from_elements(&src, &tgt, elems);
        let d = Morphism::new(d.source, d.target, d.maps)?;
        TwoTermComplex::new(src, tgt, d)
    }

    /// `⊕ P_v` placed in degree 0 (`shift = false`) or −1.
    pub fn stalk(alg: &Algebra, vertices: Vec<usize>, shift: bool) -> Self {
        let p = ProjectiveSum::new(alg, vertices);
        let z = ProjectiveSum::new(alg, vec![]);
        if shift {
            let d = Morphism::zero(&p.rep, &z.rep);
            TwoTermComplex { minus1: p, zero: z, d }
        } else {
            let d = Morphism::zero(&z.rep, &p.rep);
            TwoTermComplex { minus1: z, zero: p, d }
        }
    }

    pub fn algebra(&self) -> &Algebra {
        self.d.source.algebra()
    }

    pub fn h0(&self) -> Rep {
        self.d.cokernel().0
    }

    /// `Hom_Λ(−, Λ)`: a two-term complex over the opposite algebra.
    pub fn dual(&self) -> TwoTermComplex {
        let (src, tgt, f) = star(&self.minus1, &self.zero, &self.d);
        TwoTermComplex { minus1: src, zero: tgt, d: f }
    }

    /// Split off the minimal presentation of `H⁰`. The remaining terms
    /// are `P_i → P_i` pieces and `P_i[1]` pieces, counted by multiplicity.
    pub fn summands(&self, cat: &ModCat) -> Result<TwoTermSummands> {
        let h = self.h0();
        let modules = cat.decompose(&h)?.parts;
        let pres = min_presentation(&h);
        let n = self.algebra().vertex_count();
        let sub = |a: &[usize], b: &[usize]| -> Result<Vec<usize>> {
            (0..n)
                .map(|v| {
                    a[v].checked_sub(b[v])
                        .ok_or_else(|| Error::Shape("complex is smaller than the presentation of its H⁰".into()))
                })
                .collect()
        };
        let contractible = sub(&self.zero.multiplicities(), &pres.p0.multiplicities())?;
        let rest = sub(&self.minus1.multiplicities(), &pres.p1.multiplicities())?;
        let shifted = sub(&rest, &contractible)?;
        Ok(TwoTermSummands { modules, shifted, contractible })
    }
}

/// `dim Hom_K(P, Q[1])`: maps `P⁻¹ → Q⁰` modulo the homotopies
/// `d_Q∘s + t∘d_P`.
pub fn hom_shift1_dim(p: &TwoTermComplex, q: &TwoTermComplex) -> Result<usize> {
    let total = hom_dim(&p.minus1.rep, &q.zero.rep)?;
    if total == 0 {
        return Ok(0);
    }
    let mut homotopies: Vec<Morphism> = Vec::new();
    for s in hom_basis(&p.minus1.rep, &q.minus1.rep)? {
        homotopies.push(q.d.after(&s));
    }
    for t in hom_basis(&p.zero.rep, &q.zero.rep)? {
        homotopies.push(t.after(&p.d));
    }
    Ok(total - span_rank(&homotopies))
}

/// `P = (P₁ ⊕ P_support → P₀)` from the minimal presentation of the module
/// part, with zero differential on the support block.
pub fn from_pair(tt: &TauTilting, p: &StPair) -> Result<TwoTermComplex> {
    let alg = tt.algebra();
    let m = tt.module(p);
    let pres = min_presentation(&m);
    let elems = pres.d1_elements();
    let mut columns: Vec<(usize, Option<usize>)> =
        pres.p1.vertices.iter().enumerate().map(|(k, &v)| (v, Some(k))).collect();
    columns.extend(p.support.iter().map(|&v| (v, None)));
    columns.sort_by_key(|&(v, _)| v);
    let zero_elem = vec![Scalar::zero(); alg.dim()];
    let merged: ElementMatrix = (0..pres.p0.vertices.len())
        .map(|l| columns.iter().map(|&(_, k)| k.map_or_else(|| zero_elem.clone(), |k| elems[l][k].clone())).collect())
        .collect();
    let minus1 = columns.iter().map(|&(v, _)| v).collect();
    TwoTermComplex::from_elements(alg, minus1, pres.p0.vertices.clone(), &merged)
}

/// Presilting with `n` non-isomorphic indecomposable summands.
pub fn is_two_term_silting(cat: &ModCat, p: &TwoTermComplex) -> Result<bool> {
    if hom_shift1_dim(p, p)? != 0 {
        return Ok(false);
    }
    Ok(p.summands(cat)?.distinct() == p.algebra().vertex_count())
}

/// Over every node: the image of `from_pair` is two-term silting and basic,
/// `H⁰` and the shifted part recover the pair, images are pairwise
/// distinct, and `Hom(−, Λ)` matches the dagger on the opposite side.
pub fn check_silting_bijection(tt: &TauTilting, poset: &ExchangePoset) -> Result<CheckReport> {
    poset.require_complete()?;
    let mut rep = CheckReport::new("two-term silting bijection");
    let op = tt.opposite();
    let mut images = BTreeSet::new();
    for p in &poset.nodes {
        let c = from_pair(tt, p)?;
        let s = c.summands(tt.cat())?;
        rep.expect(hom_shift1_dim(&c, &c)? == 0, || format!("{p}: Hom(P, P[1]) ≠ 0"));
        rep.expect(s.distinct() == tt.n() && s.is_basic(), || format!("{p}: summands {s:?}"));
        rep.expect(s.contractible.iter().all(|&m| m == 0), || format!("{p}: complex is not minimal"));
        rep.expect(&s.to_pair() == p, || format!("{p}: H⁰ and shift give {}", s.to_pair()));
        images.insert(s.clone());
        let dual = c.dual().summands(op.cat())?;
        let d = tt.dagger(p)?;
        rep.expect(dual.to_pair() == d, || format!("{p}: dual complex gives {}, dagger {d}", dual.to_pair()));
    }
    rep.expect(images.len() == poset.len(), || format!("{} complexes for {} nodes", images.len(), poset.len()));
    rep.notes.push(format!("{} two-term silting complexes", images.len()));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{kq_mod_ba, linear_an, preprojective, DynkinType};
    use crate::repcat::tau;
    use crate::taut::enumerate;

    #[test]
    fn stalk_complexes() {
        let alg = kq_mod_ba().unwrap();
        let tt = TauTilting::new(&alg);
        for v in 0..3 {
            let p = TwoTermComplex::stalk(&alg, vec![v], false);
            let p1 = TwoTermComplex::stalk(&alg, vec![v], true);
            assert_eq!(hom_shift1_dim(&p, &p).unwrap(), 0);
            assert_eq!(hom_shift1_dim(&p1, &p).unwrap(), 1);
            assert_eq!(hom_shift1_dim(&p, &p1).unwrap(), 0);
        }
        let top = from_pair(&tt, &tt.top_pair().unwrap()).unwrap();
        assert!(top.minus1.is_zero());
        assert_eq!(top.zero.vertices, vec![0, 1, 2]);
        let bottom = from_pair(&tt, &tt.bottom_pair()).unwrap();
        assert!(bottom.zero.is_zero() && bottom.h0().is_zero());
        assert_eq!(bottom.minus1.vertices, vec![0, 1, 2]);
    }

    #[test]
    fn worked_complex() {
        let tt = TauTilting::new(&kq_mod_ba().unwrap());
        let cat = tt.cat();
        let (p, s) = ((0..3).map(|v| cat.projective_id(v).unwrap()).collect::<Vec<_>>(), cat.simple_id(0).unwrap());
        let t = StPair::new(vec![p[0], s, p[2]], vec![]);
        let c = from_pair(&tt, &t).unwrap();
        assert_eq!(c.minus1.vertices, vec![1]);
        assert_eq!(c.zero.vertices, vec![0, 0, 2]);
        assert!(cat.is_isomorphic(&c.h0(), &tt.module(&t)).unwrap());
        assert!(is_two_term_silting(cat, &c).unwrap());
    }

    #[test]
    fn contractible_pieces_are_split_off() {
        let alg = linear_an(2).unwrap();
        let cat = ModCat::new(&alg);
        let one = vec![vec![alg.idempotent(0).coeffs]];
        let c = TwoTermComplex::from_elements(&alg, vec![0], vec![0], &one).unwrap();
        assert!(c.h0().is_zero());
        let s = c.summands(&cat).unwrap();
        assert_eq!((s.contractible.clone(), s.distinct()), (vec![1, 0], 0));
        assert_eq!(hom_shift1_dim(&c, &c).unwrap(), 0);
        assert!(!is_two_term_silting(&cat, &c).unwrap());
    }

    /// `Hom_K(P_M, P_N[1]) ≅ D Hom(N, τM)` for minimal presentations.
    #[test]
    fn shift_hom_matches_tau() {
        for alg in [kq_mod_ba().unwrap(), linear_an(3).unwrap()] {
            let tt = TauTilting::new(&alg);
            let cat = tt.cat();
            cat.saturate(200).unwrap();
            let ids = cat.ids();
            let cx: Vec<TwoTermComplex> =
                ids.iter().map(|&i| from_pair(&tt, &StPair::new(vec![i], vec![])).unwrap()).collect();
            for (a, &m) in ids.iter().enumerate() {
                let tm = tau(&cat.rep(m)).unwrap();
                for (b, &n) in ids.iter().enumerate() {
                    let expect = hom_dim(&cat.rep(n), &tm).unwrap();
                    assert_eq!(hom_shift1_dim(&cx[a], &cx[b]).unwrap(), expect, "{m} {n}");
                }
            }
        }
    }

    #[test]
    fn bijection_examples() {
        for (alg, count) in [(kq_mod_ba().unwrap(), 12), (preprojective(DynkinType::A(2)).unwrap(), 6)] {
            let tt = TauTilting::new(&alg);
            let poset = enumerate(&tt, 1000).unwrap();
            let r = check_silting_bijection(&tt, &poset).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.notes[0], format!("{count} two-term silting complexes"));
        }
    }
}

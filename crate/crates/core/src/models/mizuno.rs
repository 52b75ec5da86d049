use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::weyl::{all_reduced_words, right_order_leq, weyl_elements, WeylElement};
use super::{preprojective, DynkinType};
use crate::bqa::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::repcat::Rep;
use crate::taut::{enumerate, pd_at_most_one, CheckReport, ExchangePoset, StPair, TauTilting};

/// A two-sided ideal of a bound quiver algebra, kept as one subspace per
/// block `e_t Λ e_s`. Each block subspace is the column span of a matrix in
/// the coordinates of `block(s, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    alg: Algebra,
    blocks: BTreeMap<(usize, usize), Matrix>,
}

impl Ideal {
    fn from_vectors(alg: &Algebra, vectors: Vec<Vec<Scalar>>) -> Ideal {
        let n = alg.vertex_count();
        let mut blocks = BTreeMap::new();
        for s in 0..n {
            for t in 0..n {
                let idx = alg.block(s, t);
                let cols: Vec<Vec<Scalar>> = vectors
                    .iter()
                    .map(|v| idx.iter().map(|&k| v[k].clone()).collect::<Vec<_>>())
                    .filter(|c| c.iter().any(|x| !x.is_zero()))
                    .collect();
                let m = Matrix::from_columns(idx.len(), &cols).column_space_basis();
                blocks.insert((s, t), canonical(&m));
            }
        }
        Ideal { alg: alg.clone(), blocks }
    }

    /// A basis of the ideal as coordinate vectors in `Λ`, block by block.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for (&(s, t), m) in &self.blocks {
            let idx = self.alg.block(s, t);
            for c in 0..m.cols() {
                let mut v = vec![Scalar::zero(); self.alg.dim()];
                for (r, &k) in idx.iter().enumerate() {
                    v[k] = m.get(r, c).clone();
                }
                out.push(v);
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.blocks.values().map(Matrix::cols).sum()
    }

    /// The whole algebra.
    pub fn unit(alg: &Algebra) -> Ideal {
        Ideal::from_vectors(alg, (0..alg.dim()).map(|i| alg.basis_element(i).coeffs).collect())
    }

    /// `Λ(1 − e_i)Λ`.
    pub fn vertex_ideal(alg: &Algebra, i: usize) -> Result<Ideal> {
        if i >= alg.vertex_count() {
            return Err(Error::InvalidVertex(i));
        }
        let mut vectors = Vec::new();
        for x in 0..alg.dim() {
            for j in (0..alg.vertex_count()).filter(|&j| j != i) {
                let xe = alg.mul_coeffs(&alg.basis_element(x).coeffs, &alg.idempotent(j).coeffs);
                if xe.iter().all(Zero::is_zero) {
                    continue;
                }
                for y in 0..alg.dim() {
                    vectors.push(alg.mul_coeffs(&xe, &alg.basis_element(y).coeffs));
                }
            }
        }
        Ok(Ideal::from_vectors(alg, vectors))
    }

    /// The product ideal `self · other`.
    pub fn product(&self, other: &Ideal) -> Ideal {
        let (a, b) = (self.basis(), other.basis());
        let vectors = a.iter().flat_map(|u| b.iter().map(move |v| self.alg.mul_coeffs(u, v))).collect();
        Ideal::from_vectors(&self.alg, vectors)
    }

    /// The ideal as a left module: `⊕_i I e_i`, each a subrepresentation of `P_i`.
    pub fn to_rep(&self) -> Result<Rep> {
        let n = self.alg.vertex_count();
        let mut parts = Vec::new();
        for s in 0..n {
            let bases = (0..n).map(|t| self.blocks[&(s, t)].clone()).collect();
            parts.push(Rep::projective(&self.alg, s)?.subrep(bases)?.0);
        }
        Ok(Rep::direct_sum(&self.alg, &parts))
    }
}

/// Reduced column echelon form, so equal subspaces give equal matrices.
fn canonical(m: &Matrix) -> Matrix {
    let r = m.transpose().rref();
    let rows = r.pivots.len();
    r.matrix.select_rows(&(0..rows).collect::<Vec<_>>()).transpose()
}

/// `I_w = I_{i_1} ⋯ I_{i_ℓ}` for a reduced word of type `A_n`, with `Π`
/// given on the vertices `0..n` in diagram order.
pub fn ideal_iw(pi: &Algebra, word: &[usize]) -> Result<Ideal> {
    WeylElement::from_word(DynkinType::A(pi.vertex_count()), word)?;
    let mut acc = Ideal::unit(pi);
    for &i in word {
        acc = acc.product(&Ideal::vertex_ideal(pi, i)?);
    }
    Ok(acc)
}

/// The sτ-tilting pair whose module part is `m`; the support consists of
/// the vertices where `m` vanishes.
fn pair_of(tt: &TauTilting, m: &Rep) -> Result<StPair> {
    let support = (0..m.dims().len()).filter(|&v| m.dim(v) == 0).collect();
    Ok(StPair::new(tt.summands(m)?, support))
}

/// Outcome of the Weyl-group comparison.
#[derive(Clone, Debug)]
pub struct MizunoReport {
    pub report: CheckReport,
    pub group_order: usize,
    pub nodes: usize,
    pub reduced_words: usize,
}

/// For `Π` of type `A_n`: `I_w` does not depend on the reduced word, `w ↦ I_w`
/// is a bijection onto the sτ-tilting pairs, and `w ≤ w'` in the right order
/// exactly when `I_w ≥ I_{w'}` in the poset. `Π` is also the only faithful
/// node with projective dimension at most one.
pub fn check_mizuno(kind: DynkinType, cap: usize) -> Result<MizunoReport> {
    let elements = weyl_elements(kind)?;
    let pi = preprojective(kind)?;
    let tt = TauTilting::new(&pi);
    let poset: ExchangePoset = enumerate(&tt, cap)?;
    poset.require_complete()?;
    let leq = poset.leq_matrix(&tt)?;
    let index: HashMap<StPair, usize> = poset.index_map();

    let mut report = CheckReport::new("Weyl group bijection");
    let mut words = 0;
    let mut image = Vec::with_capacity(elements.len());
    for w in &elements {
        let ideal = ideal_iw(&pi, &w.word)?;
        for word in all_reduced_words(w) {
            words += 1;
            let other = ideal_iw(&pi, &word)?;
            report.expect(other == ideal, || format!("I_w differs between reduced words {:?} and {:?}", w.word, word));
        }
        let node = pair_of(&tt, &ideal.to_rep()?)?;
        let k = index.get(&node).copied();
        report.expect(k.is_some(), || format!("I_w for {w} is not a node: {node}"));
        image.push(k);
    }
    let mut hit: Vec<usize> = image.iter().flatten().copied().collect();
    hit.sort_unstable();
    hit.dedup();
    report.expect(hit.len() == elements.len() && hit.len() == poset.len(), || {
        format!("{} elements hit {} of {} nodes", elements.len(), hit.len(), poset.len())
    });
    for (a, wa) in elements.iter().enumerate() {
        for (b, wb) in elements.iter().enumerate() {
            if let (Some(x), Some(y)) = (image[a], image[b]) {
                report.expect(right_order_leq(wa, wb) == leq[y][x], || {
                    format!("right order and poset order disagree on ({wa}, {wb})")
                });
            }
        }
    }
    let tilting: Vec<usize> = (0..poset.len())
        .filter(|&k| {
            let m = tt.module(&poset.nodes[k]);
            !m.is_zero() && m.is_faithful() && pd_at_most_one(&m)
        })
        .collect();
    let top = poset.index_of(&tt.top_pair()?);
    report.expect(tilting.len() == 1 && top == Some(tilting[0]), || format!("tilting nodes {tilting:?}"));
    report.notes.push(format!("{kind}: |W| = {}, {} nodes, {words} reduced words", elements.len(), poset.len()));
    Ok(MizunoReport { report, group_order: elements.len(), nodes: poset.len(), reduced_words: words })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taut::DEFAULT_CAP;

    #[test]
    fn unit_and_vertex_ideals() {
        let pi = preprojective(DynkinType::A(2)).unwrap();
        assert_eq!(ideal_iw(&pi, &[]).unwrap(), Ideal::unit(&pi));
        assert_eq!(Ideal::unit(&pi).dim(), 4);
        // Π(1−e1)Π drops only e1
        let i1 = ideal_iw(&pi, &[0]).unwrap();
        assert_eq!(i1.dim(), 3);
        assert_eq!(i1.to_rep().unwrap().dims(), &[1, 2]);
        assert_eq!(ideal_iw(&pi, &[0, 1, 0]).unwrap().dim(), 0);
        assert!(matches!(ideal_iw(&pi, &[0, 0]), Err(Error::NonReducedWord(_))));
    }

    #[test]
    fn braid_moves_give_equal_subspaces() {
        let pi = preprojective(DynkinType::A(3)).unwrap();
        assert_eq!(ideal_iw(&pi, &[0, 1, 0]).unwrap(), ideal_iw(&pi, &[1, 0, 1]).unwrap());
        assert_eq!(ideal_iw(&pi, &[0, 2]).unwrap(), ideal_iw(&pi, &[2, 0]).unwrap());
        assert_ne!(ideal_iw(&pi, &[0, 1]).unwrap(), ideal_iw(&pi, &[1, 0]).unwrap());
    }

    #[test]
    fn mizuno_a2() {
        let r = check_mizuno(DynkinType::A(2), DEFAULT_CAP).unwrap();
        assert!(r.report.passed(), "{}", r.report);
        assert_eq!((r.group_order, r.nodes, r.reduced_words), (6, 6, 7));
    }

    #[test]
    fn mizuno_a3() {
        let r = check_mizuno(DynkinType::A(3), DEFAULT_CAP).unwrap();
        assert!(r.report.passed(), "{}", r.report);
        assert_eq!((r.group_order, r.nodes), (24, 24));
    }
}

//! Support τ-tilting pairs: rigidity, Fac, approximations, the dagger
//! duality, mutation and g-vectors.

mod checks;
mod poset;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::bqa::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::repcat::{ext1_dim, hom_basis, projective_cover, span_rank, transpose, IndecId, ModCat, Morphism, Rep};

pub use checks::{
    bongartz_completion, check_dagger, check_edge_comparability, check_exchange_sequences, check_g_vectors,
    check_hasse_equals_exchange, check_idempotent_quotient, check_sincere_faithful, check_three_conditions,
    check_tilting_complements, check_torsion_pair, check_two_complements, support_tilting_pairs, tilting_subset,
    CheckReport,
};
pub use poset::{default_cap, enumerate, Edge, ExchangePoset, DEFAULT_CAP};

/// A pair `(T, P)`: basic module part as sorted registry ids, support part
/// as sorted vertices. This is also the canonical node key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StPair {
    pub module: Vec<IndecId>,
    pub support: Vec<usize>,
}

impl StPair {
    pub fn new(mut module: Vec<IndecId>, mut support: Vec<usize>) -> StPair {
        module.sort_unstable();
        module.dedup();
        support.sort_unstable();
        support.dedup();
        StPair { module, support }
    }

    pub fn size(&self) -> usize {
        self.module.len() + self.support.len()
    }

    /// Slots in canonical order: summands, then support vertices.
    pub fn slots(&self) -> Vec<Slot> {
        self.module.iter().map(|&x| Slot::Summand(x)).chain(self.support.iter().map(|&v| Slot::Vertex(v))).collect()
    }

    pub fn has_slot(&self, slot: Slot) -> bool {
        match slot {
            Slot::Summand(x) => self.module.contains(&x),
            Slot::Vertex(v) => self.support.contains(&v),
        }
    }

    pub fn without(&self, slot: Slot) -> StPair {
        let mut p = self.clone();
        match slot {
            Slot::Summand(x) => p.module.retain(|&y| y != x),
            Slot::Vertex(v) => p.support.retain(|&w| w != v),
        }
        p
    }

    pub fn with(&self, slot: Slot) -> StPair {
        let (mut m, mut s) = (self.module.clone(), self.support.clone());
        match slot {
            Slot::Summand(x) => m.push(x),
            Slot::Vertex(v) => s.push(v),
        }
        StPair::new(m, s)
    }

    /// `self` is obtained from `other` by adding elements.
    pub fn contains(&self, other: &StPair) -> bool {
        other.module.iter().all(|x| self.module.contains(x)) && other.support.iter().all(|v| self.support.contains(v))
    }
}

impl fmt::Display for StPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.module.iter().map(|x| format!("M{x}")).collect();
        let s: Vec<String> = self.support.iter().map(|v| format!("{}", v + 1)).collect();
        write!(f, "({}; {{{}}})", m.join("+"), s.join(","))
    }
}

/// One removable piece of a pair: an indecomposable summand or a support vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    Summand(IndecId),
    Vertex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    NotTauRigid,
    TauRigid,
    AlmostComplete,
    SupportTauTilting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MutationCase {
    /// The result is smaller: left approximation of the removed summand.
    A,
    /// The result is larger: computed through the dagger on the opposite side.
    B,
}

/// `X →f→ U' →g→ Y^r → 0` for one case-(A) exchange.
#[derive(Clone, Debug)]
pub struct ExchangeSequenceReport {
    pub x: IndecId,
    pub u_prime: Vec<IndecId>,
    pub y: Option<IndecId>,
    pub r: usize,
    pub surjective: bool,
    pub exact: bool,
    pub left_approximation: bool,
    pub left_minimal: bool,
}

impl ExchangeSequenceReport {
    pub fn verified(&self) -> bool {
        self.exact && self.left_approximation && self.left_minimal && (self.surjective || self.r >= 1)
    }
}

#[derive(Clone, Debug)]
pub struct Mutation {
    pub result: StPair,
    pub case: MutationCase,
    /// The slot of `result` that replaced the removed one.
    pub new_slot: Slot,
    /// Case (A) report, taken on the opposite side in case (B).
    pub report: ExchangeSequenceReport,
    /// In case (B): `p†` and the mutated pair on the opposite side.
    pub via_dagger: Option<(StPair, StPair)>,
}

/// Minimal left `add U`-approximation `f: X → U'`.
#[derive(Clone, Debug)]
pub struct LeftApproximation {
    pub source: IndecId,
    pub targets: Vec<IndecId>,
    pub map: Morphism,
}

struct Side {
    cat: ModCat,
    tr: Mutex<HashMap<IndecId, IndecId>>,
    fac: Mutex<HashMap<(IndecId, IndecId), Arc<Vec<Matrix>>>>,
}

impl Side {
    fn new(alg: &Algebra) -> Side {
        Side { cat: ModCat::new(alg), tr: Mutex::default(), fac: Mutex::default() }
    }
}

/// τ-tilting theory over `Λ`, carrying the module category of `Λ^op` for
/// the dagger. [`TauTilting::opposite`] swaps the two sides.
#[derive(Clone)]
pub struct TauTilting {
    here: Arc<Side>,
    there: Arc<Side>,
}

impl TauTilting {
    pub fn new(alg: &Algebra) -> TauTilting {
        TauTilting { here: Arc::new(Side::new(alg)), there: Arc::new(Side::new(&alg.opposite())) }
    }

    pub fn opposite(&self) -> TauTilting {
        TauTilting { here: self.there.clone(), there: self.here.clone() }
    }

    pub fn algebra(&self) -> &Algebra {
        self.here.cat.algebra()
    }

    pub fn cat(&self) -> &ModCat {
        &self.here.cat
    }

    pub fn n(&self) -> usize {
        self.algebra().vertex_count()
    }

    /// `(Λ, ∅)`.
    pub fn top_pair(&self) -> Result<StPair> {
        let ids = (0..self.n()).map(|v| self.cat().projective_id(v)).collect::<Result<Vec<_>>>()?;
        Ok(StPair::new(ids, vec![]))
    }

    /// `(0, Λ)`.
    pub fn bottom_pair(&self) -> StPair {
        StPair::new(vec![], (0..self.n()).collect())
    }

    /// Register a module and return its basic summand ids.
    pub fn summands(&self, m: &Rep) -> Result<Vec<IndecId>> {
        Ok(self.cat().decompose(m)?.ids())
    }

    pub fn module(&self, p: &StPair) -> Rep {
        self.cat().assemble_ids(&p.module)
    }

    /// Vertex `v` with `rep(id) ≅ P_v`, if projective.
    pub fn projective_vertex(&self, id: IndecId) -> Option<usize> {
        let pres = self.cat().presentation(id);
        (pres.p1.is_zero() && pres.p0.vertices.len() == 1).then(|| pres.p0.vertices[0])
    }

    pub fn is_tau_rigid_ids(&self, ids: &[IndecId]) -> Result<bool> {
        for &j in ids {
            if let Some(t) = self.cat().tau_id(j)? {
                for &i in ids {
                    if self.cat().hom_dim(i, t)? != 0 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn is_tau_rigid(&self, m: &Rep) -> Result<bool> {
        let ids = self.summands(m)?;
        self.is_tau_rigid_ids(&ids)
    }

    pub fn classify(&self, p: &StPair) -> Result<Classification> {
        if !self.is_tau_rigid_ids(&p.module)? {
            return Ok(Classification::NotTauRigid);
        }
        for &x in &p.module {
            let d = self.cat().dims(x);
            if p.support.iter().any(|&v| d[v] != 0) {
                return Ok(Classification::NotTauRigid);
            }
        }
        let n = self.n();
        Ok(match p.size() {
            s if s == n => Classification::SupportTauTilting,
            s if s + 1 == n => Classification::AlmostComplete,
            _ => Classification::TauRigid,
        })
    }

    fn require_support_tilting(&self, p: &StPair) -> Result<()> {
        if self.classify(p)? != Classification::SupportTauTilting {
            return Err(Error::NotSupportTauTilting);
        }
        Ok(())
    }

    /// Column spans, per vertex, of the images of all maps `rep u → rep x`.
    fn trace_spans(&self, u: IndecId, x: IndecId) -> Result<Arc<Vec<Matrix>>> {
        if let Some(s) = self.here.fac.lock().unwrap().get(&(u, x)) {
            return Ok(s.clone());
        }
        let xr = self.cat().rep(x);
        let homs = self.cat().hom(u, x)?;
        let spans: Vec<Matrix> = (0..self.n())
            .map(|v| {
                let blocks: Vec<&Matrix> = homs.iter().map(|f| &f.maps[v]).collect();
                Matrix::hstack(xr.dim(v), &blocks).column_space_basis()
            })
            .collect();
        let s = Arc::new(spans);
        Ok(self.here.fac.lock().unwrap().entry((u, x)).or_insert(s).clone())
    }

    /// `X ∈ Fac U` for registry ids.
    pub fn in_fac_ids(&self, x: IndecId, us: &[IndecId]) -> Result<bool> {
        if us.contains(&x) {
            return Ok(true);
        }
        let dims = self.cat().dims(x);
        let spans = us.iter().map(|&u| self.trace_spans(u, x)).collect::<Result<Vec<_>>>()?;
        for (v, &d) in dims.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let blocks: Vec<&Matrix> = spans.iter().map(|s| &s[v]).collect();
            if Matrix::hstack(d, &blocks).rank() < d {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `p ≤ q`: every summand of `p` lies in `Fac` of `q`'s module part.
    pub fn leq(&self, p: &StPair, q: &StPair) -> Result<bool> {
        for &x in &p.module {
            if !self.in_fac_ids(x, &q.module)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Id of `Tr(rep x)` on the opposite side, for non-projective `x`.
    fn tr_id(&self, x: IndecId) -> Result<IndecId> {
        if let Some(&t) = self.here.tr.lock().unwrap().get(&x) {
            return Ok(t);
        }
        let tr = transpose(&self.cat().rep(x))?;
        let d = self.there.cat.decompose(&tr)?;
        if d.parts.len() != 1 || d.parts[0].1 != 1 {
            return Err(Error::Mutation("transpose of an indecomposable is not indecomposable".into()));
        }
        let t = d.parts[0].0;
        self.here.tr.lock().unwrap().insert(x, t);
        self.there.tr.lock().unwrap().insert(t, x);
        Ok(t)
    }

    /// `(T, P)† = (Tr T_np ⊕ P^*, T_pr^*)` over the opposite algebra.
    pub fn dagger(&self, p: &StPair) -> Result<StPair> {
        let op = self.opposite();
        let mut module = Vec::new();
        let mut support = Vec::new();
        for &x in &p.module {
            match self.projective_vertex(x) {
                Some(v) => support.push(v),
                None => module.push(self.tr_id(x)?),
            }
        }
        for &v in &p.support {
            module.push(op.cat().projective_id(v)?);
        }
        Ok(StPair::new(module, support))
    }

    /// The slot of `p†` corresponding to `slot` of `p`.
    fn dagger_slot(&self, slot: Slot) -> Result<Slot> {
        Ok(match slot {
            Slot::Summand(x) => match self.projective_vertex(x) {
                Some(v) => Slot::Vertex(v),
                None => Slot::Summand(self.tr_id(x)?),
            },
            Slot::Vertex(v) => Slot::Summand(self.opposite().cat().projective_id(v)?),
        })
    }

    /// Minimal left `add U`-approximation of `X`, `U` given by distinct ids.
    /// The multiplicity of `U_j` is `dim Hom(X, U_j)` modulo the maps that
    /// factor as `X → U_l → U_j` through a radical map.
    pub fn minimal_left_approximation(&self, x: IndecId, us: &[IndecId]) -> Result<LeftApproximation> {
        let cat = self.cat();
        let xr = cat.rep(x);
        let mut targets = Vec::new();
        let mut comps: Vec<Morphism> = Vec::new();
        for &j in us {
            let homs = cat.hom(x, j)?;
            if homs.is_empty() {
                continue;
            }
            let mut vecs: Vec<Vec<Scalar>> = Vec::new();
            for &l in us {
                let rad = cat.rad_hom(l, j)?;
                if rad.is_empty() {
                    continue;
                }
                for phi in cat.hom(x, l)?.iter() {
                    for psi in rad.iter() {
                        vecs.push(psi.after(phi).flatten());
                    }
                }
            }
            let len = homs[0].flatten().len();
            let mut rank = crate::exactla::rank_of_vectors(len, &vecs);
            for h in homs.iter() {
                vecs.push(h.flatten());
                let r = crate::exactla::rank_of_vectors(len, &vecs);
                if r > rank {
                    rank = r;
                    targets.push(j);
                    comps.push(h.clone());
                } else {
                    vecs.pop();
                }
            }
        }
        let target = cat.assemble_ids(&targets);
        let maps = (0..self.n())
            .map(|v| {
                let blocks: Vec<&Matrix> = comps.iter().map(|c| &c.maps[v]).collect();
                Matrix::vstack(xr.dim(v), &blocks)
            })
            .collect();
        let map = Morphism::new(xr, target, maps)?;
        Ok(LeftApproximation { source: x, targets, map })
    }

    /// `Hom(U', U_j) → Hom(X, U_j)` is onto for every `j`.
    pub fn is_left_approximation(&self, f: &Morphism, us: &[IndecId]) -> Result<bool> {
        for &j in us {
            let uj = self.cat().rep(j);
            let want = hom_basis(&f.source, &uj)?.len();
            if want == 0 {
                continue;
            }
            let through: Vec<Morphism> = hom_basis(&f.target, &uj)?.iter().map(|g| g.after(f)).collect();
            if span_rank(&through) < want {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No component of `f` can be dropped while keeping an approximation.
    pub fn is_left_minimal(&self, approx: &LeftApproximation, us: &[IndecId]) -> Result<bool> {
        let cat = self.cat();
        for k in 0..approx.targets.len() {
            let mut rest = approx.targets.clone();
            rest.remove(k);
            let target = cat.assemble_ids(&rest);
            let xr = cat.rep(approx.source);
            // rows of the dropped component, per vertex
            let maps: Vec<Matrix> = (0..self.n())
                .map(|v| {
                    let before: usize = approx.targets[..k].iter().map(|&t| cat.dims(t)[v]).sum();
                    let width = cat.dims(approx.targets[k])[v];
                    let keep: Vec<usize> =
                        (0..approx.map.maps[v].rows()).filter(|&r| r < before || r >= before + width).collect();
                    approx.map.maps[v].select_rows(&keep)
                })
                .collect();
            let g = Morphism::new(xr, target, maps)?;
            if self.is_left_approximation(&g, us)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn case_a(&self, p: &StPair, x: IndecId) -> Result<Mutation> {
        let u = p.without(Slot::Summand(x));
        let approx = self.minimal_left_approximation(x, &u.module)?;
        let f = &approx.map;
        let surjective = f.is_surjective();
        let left_approximation = self.is_left_approximation(f, &u.module)?;
        let left_minimal = self.is_left_minimal(&approx, &u.module)?;
        let (coker, g) = f.cokernel();
        let exact = g.after(f).is_zero()
            && g.is_surjective()
            && f.image().0.total_dim() + coker.total_dim() == f.target.total_dim();
        let mut report = ExchangeSequenceReport {
            x,
            u_prime: approx.targets.clone(),
            y: None,
            r: 0,
            surjective,
            exact,
            left_approximation,
            left_minimal,
        };
        let (result, new_slot) = if !surjective {
            let d = self.cat().decompose(&coker)?;
            if d.parts.len() != 1 {
                return Err(Error::Mutation(format!("cokernel has {} distinct summands", d.parts.len())));
            }
            let (y, r) = d.parts[0];
            report.y = Some(y);
            report.r = r;
            (u.with(Slot::Summand(y)), Slot::Summand(y))
        } else {
            let candidates: Vec<usize> = (0..self.n())
                .filter(|v| !u.support.contains(v))
                .filter(|&v| u.module.iter().all(|&m| self.cat().dims(m)[v] == 0))
                .collect();
            match candidates.as_slice() {
                [j] => (u.with(Slot::Vertex(*j)), Slot::Vertex(*j)),
                _ => return Err(Error::AmbiguousSupportVertex(candidates.iter().map(|v| v + 1).collect())),
            }
        };
        Ok(Mutation { result, case: MutationCase::A, new_slot, report, via_dagger: None })
    }

    /// Whether removing `slot` from the support τ-tilting pair `p` is case (A).
    pub fn is_case_a(&self, p: &StPair, slot: Slot) -> Result<bool> {
        match slot {
            Slot::Vertex(_) => Ok(false),
            Slot::Summand(x) => Ok(!self.in_fac_ids(x, &p.without(slot).module)?),
        }
    }

    /// Mutate a support τ-tilting pair at one slot.
    pub fn mutate(&self, p: &StPair, slot: Slot) -> Result<Mutation> {
        if !p.has_slot(slot) {
            return Err(Error::SlotNotPresent(format!("{slot:?}")));
        }
        self.require_support_tilting(p)?;
        if let (true, Slot::Summand(x)) = (self.is_case_a(p, slot)?, slot) {
            return self.case_a(p, x);
        }
        let op = self.opposite();
        let q = self.dagger(p)?;
        let op_slot = self.dagger_slot(slot)?;
        let x = match op_slot {
            Slot::Summand(x) if op.is_case_a(&q, op_slot)? => x,
            _ => return Err(Error::Mutation("opposite side is not case (A)".into())),
        };
        let m = op.case_a(&q, x)?;
        let result = op.dagger(&m.result)?;
        let new_slot = op.dagger_slot(m.new_slot)?;
        Ok(Mutation { result, case: MutationCase::B, new_slot, report: m.report, via_dagger: Some((q, m.result)) })
    }

    /// Exchange sequence for a case-(A) slot.
    pub fn exchange_sequence(&self, p: &StPair, slot: Slot) -> Result<ExchangeSequenceReport> {
        self.require_support_tilting(p)?;
        match slot {
            Slot::Summand(x) if p.has_slot(slot) && self.is_case_a(p, slot)? => Ok(self.case_a(p, x)?.report),
            _ if !p.has_slot(slot) => Err(Error::SlotNotPresent(format!("{slot:?}"))),
            _ => Err(Error::NotCaseA),
        }
    }

    /// `g = [P_0] − [P_1]` from the minimal presentation.
    pub fn g_vector_id(&self, x: IndecId) -> Vec<i64> {
        let pres = self.cat().presentation(x);
        let (a, b) = (pres.p0.multiplicities(), pres.p1.multiplicities());
        a.iter().zip(&b).map(|(&x, &y)| x as i64 - y as i64).collect()
    }

    /// g-vectors of the summands, then `−e_v` for each support vertex.
    pub fn g_vectors(&self, p: &StPair) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut cols: Vec<Vec<i64>> = p.module.iter().map(|&x| self.g_vector_id(x)).collect();
        for &v in &p.support {
            let mut e = vec![0; n];
            e[v] = -1;
            cols.push(e);
        }
        cols
    }

    /// The g-vectors as columns of an integer matrix.
    pub fn g_matrix(&self, p: &StPair) -> Matrix {
        let cols: Vec<Vec<Scalar>> =
            self.g_vectors(p).iter().map(|c| c.iter().map(|&v| Scalar::from_integer(v.into())).collect()).collect();
        Matrix::from_columns(self.n(), &cols)
    }
}

/// Projective dimension at most one: the syzygy is projective.
pub fn pd_at_most_one(m: &Rep) -> bool {
    let pres = crate::repcat::min_presentation(m);
    let (cover, _) = projective_cover(&pres.syzygy);
    cover.rep.total_dim() == pres.syzygy.total_dim()
}

/// Classical tilting: `pd ≤ 1`, `Ext¹(T, T) = 0` and `|T| = n`.
pub fn is_tilting(cat: &ModCat, t: &Rep) -> Result<bool> {
    if !pd_at_most_one(t) || ext1_dim(t, t)? != 0 {
        return Ok(false);
    }
    Ok(cat.decompose(t)?.distinct() == t.algebra().vertex_count())
}

/// Trace of `U` in `X`: the sum of images of all maps `U → X`.
pub fn trace(u: &Rep, x: &Rep) -> Result<(Rep, Morphism)> {
    let homs = hom_basis(u, x)?;
    let bases = (0..x.dims().len())
        .map(|v| {
            let blocks: Vec<&Matrix> = homs.iter().map(|f| &f.maps[v]).collect();
            Matrix::hstack(x.dim(v), &blocks).column_space_basis()
        })
        .collect();
    x.subrep(bases)
}

pub fn in_fac(x: &Rep, u: &Rep) -> Result<bool> {
    Ok(trace(u, x)?.0.total_dim() == x.total_dim())
}

#[cfg(test)]
mod tests;

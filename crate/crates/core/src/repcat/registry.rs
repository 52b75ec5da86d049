use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::ar::{tau, tau_minus};
use super::decompose::{endomorphism_radical, split_indecomposables};
use super::presentation::{min_presentation, radical, MinPresentation};
use super::{hom_basis, Morphism, Rep};
use crate::bqa::Algebra;
use crate::error::{Error, Result};

/// Stable integer id of an indecomposable isomorphism class.
pub type IndecId = usize;

/// A module up to isomorphism: registry ids with multiplicities, sorted by id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Decomposition {
    pub parts: Vec<(IndecId, usize)>,
}

impl Decomposition {
    pub fn from_ids(ids: impl IntoIterator<Item = IndecId>) -> Decomposition {
        let mut counts: HashMap<IndecId, usize> = HashMap::new();
        for id in ids {
            *counts.entry(id).or_default() += 1;
        }
        let mut parts: Vec<(IndecId, usize)> = counts.into_iter().collect();
        parts.sort_unstable();
        Decomposition { parts }
    }

    /// Number of pairwise non-isomorphic summands, `|M|`.
    pub fn distinct(&self) -> usize {
        self.parts.len()
    }

    pub fn ids(&self) -> Vec<IndecId> {
        self.parts.iter().map(|p| p.0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_basic(&self) -> bool {
        self.parts.iter().all(|p| p.1 == 1)
    }

    pub fn contains(&self, id: IndecId) -> bool {
        self.parts.iter().any(|p| p.0 == id)
    }
}

/// Two modules with local endomorphism rings are isomorphic iff some
/// `ψ ∘ φ` with basis maps `φ: M → N`, `ψ: N → M` is invertible (the
/// non-units of a local ring form a subspace).
pub fn indecomposables_isomorphic(m: &Rep, n: &Rep) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let fwd = hom_basis(m, n)?;
    if fwd.is_empty() {
        return Ok(false);
    }
    if fwd.iter().any(Morphism::is_iso) {
        return Ok(true);
    }
    let back = hom_basis(n, m)?;
    for f in &fwd {
        for g in &back {
            if g.after(f).is_iso() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[derive(Default)]
struct Registry {
    reps: Vec<Rep>,
    by_dims: HashMap<Vec<usize>, Vec<IndecId>>,
}

type Cache<K, V> = Mutex<HashMap<K, V>>;

/// Registry of indecomposables over one algebra, with cached Hom spaces,
/// presentations and AR translates. Ids are assigned in insertion order.
pub struct ModCat {
    alg: Algebra,
    registry: Mutex<Registry>,
    hom: Cache<(IndecId, IndecId), Arc<Vec<Morphism>>>,
    rad: Cache<(IndecId, IndecId), Arc<Vec<Morphism>>>,
    pres: Cache<IndecId, Arc<MinPresentation>>,
    tau: Cache<IndecId, Option<IndecId>>,
    tau_minus: Cache<IndecId, Option<IndecId>>,
}

impl ModCat {
    pub fn new(alg: &Algebra) -> ModCat {
        ModCat {
            alg: alg.clone(),
            registry: Mutex::new(Registry::default()),
            hom: Mutex::default(),
            rad: Mutex::default(),
            pres: Mutex::default(),
            tau: Mutex::default(),
            tau_minus: Mutex::default(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn len(&self) -> usize {
        self.registry.lock().unwrap().reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rep(&self, id: IndecId) -> Rep {
        self.registry.lock().unwrap().reps[id].clone()
    }

    pub fn dims(&self, id: IndecId) -> Vec<usize> {
        self.rep(id).dims().to_vec()
    }

    /// Id of an indecomposable, registering it if new. The registry lock is
    /// held for the whole comparison so concurrent callers agree on ids.
    pub fn identify(&self, m: &Rep) -> Result<IndecId> {
        if m.algebra() != &self.alg {
            return Err(Error::AlgebraMismatch);
        }
        let mut reg = self.registry.lock().unwrap();
        if let Some(cands) = reg.by_dims.get(m.dims()) {
            for &id in cands {
                if indecomposables_isomorphic(&reg.reps[id], m)? {
                    return Ok(id);
                }
            }
        }
        let id = reg.reps.len();
        reg.reps.push(m.clone());
        reg.by_dims.entry(m.dims().to_vec()).or_default().push(id);
        Ok(id)
    }

    pub fn decompose(&self, m: &Rep) -> Result<Decomposition> {
        let pieces = split_indecomposables(m)?;
        let ids = pieces.iter().map(|p| self.identify(p)).collect::<Result<Vec<_>>>()?;
        Ok(Decomposition::from_ids(ids))
    }

    /// Direct sum of registry representatives.
    pub fn assemble(&self, d: &Decomposition) -> Rep {
        let parts: Vec<Rep> = d.parts.iter().flat_map(|&(id, k)| std::iter::repeat_n(self.rep(id), k)).collect();
        Rep::direct_sum(&self.alg, &parts)
    }

    pub fn assemble_ids(&self, ids: &[IndecId]) -> Rep {
        let parts: Vec<Rep> = ids.iter().map(|&id| self.rep(id)).collect();
        Rep::direct_sum(&self.alg, &parts)
    }

    pub fn is_isomorphic(&self, m: &Rep, n: &Rep) -> Result<bool> {
        if m.algebra() != n.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if m.dims() != n.dims() {
            return Ok(false);
        }
        Ok(self.decompose(m)? == self.decompose(n)?)
    }

    /// Basis of `Hom(rep a, rep b)`.
    pub fn hom(&self, a: IndecId, b: IndecId) -> Result<Arc<Vec<Morphism>>> {
        if let Some(h) = self.hom.lock().unwrap().get(&(a, b)) {
            return Ok(h.clone());
        }
        let h = Arc::new(hom_basis(&self.rep(a), &self.rep(b))?);
        Ok(self.hom.lock().unwrap().entry((a, b)).or_insert(h).clone())
    }

    pub fn hom_dim(&self, a: IndecId, b: IndecId) -> Result<usize> {
        Ok(self.hom(a, b)?.len())
    }

    /// Basis of the radical `rad(rep a, rep b)`: all of Hom between distinct
    /// classes, the non-units of End otherwise.
    pub fn rad_hom(&self, a: IndecId, b: IndecId) -> Result<Arc<Vec<Morphism>>> {
        if a != b {
            return self.hom(a, b);
        }
        if let Some(h) = self.rad.lock().unwrap().get(&(a, b)) {
            return Ok(h.clone());
        }
        let (_, rad) = endomorphism_radical(&self.rep(a))?;
        let r = Arc::new(rad);
        Ok(self.rad.lock().unwrap().entry((a, b)).or_insert(r).clone())
    }

    pub fn presentation(&self, id: IndecId) -> Arc<MinPresentation> {
        if let Some(p) = self.pres.lock().unwrap().get(&id) {
            return p.clone();
        }
        let p = Arc::new(min_presentation(&self.rep(id)));
        self.pres.lock().unwrap().entry(id).or_insert(p).clone()
    }

    pub fn is_projective(&self, id: IndecId) -> bool {
        self.presentation(id).p1.is_zero()
    }

    pub fn is_injective(&self, id: IndecId) -> bool {
        min_presentation(&self.rep(id).dual()).p1.is_zero()
    }

    fn translate(&self, id: IndecId, minus: bool) -> Result<Option<IndecId>> {
        let cache = if minus { &self.tau_minus } else { &self.tau };
        if let Some(t) = cache.lock().unwrap().get(&id) {
            return Ok(*t);
        }
        let m = self.rep(id);
        let t = if minus { tau_minus(&m)? } else { tau(&m)? };
        let out = if t.is_zero() {
            None
        } else {
            let d = self.decompose(&t)?;
            if d.parts.len() != 1 || d.parts[0].1 != 1 {
                return Err(Error::Mutation("translate of an indecomposable is not indecomposable".into()));
            }
            Some(d.parts[0].0)
        };
        cache.lock().unwrap().insert(id, out);
        Ok(out)
    }

    /// `τ` on registry ids (`None` for projectives).
    pub fn tau_id(&self, id: IndecId) -> Result<Option<IndecId>> {
        self.translate(id, false)
    }

    /// `τ⁻` on registry ids (`None` for injectives).
    pub fn tau_minus_id(&self, id: IndecId) -> Result<Option<IndecId>> {
        self.translate(id, true)
    }

    pub fn projective_id(&self, v: usize) -> Result<IndecId> {
        self.identify(&Rep::projective(&self.alg, v)?)
    }

    pub fn injective_id(&self, v: usize) -> Result<IndecId> {
        self.identify(&Rep::injective(&self.alg, v)?)
    }

    pub fn simple_id(&self, v: usize) -> Result<IndecId> {
        self.identify(&Rep::simple(&self.alg, v)?)
    }

    /// Populate the registry with projectives, injectives, simples, the
    /// local truncations `P_i/rad^k P_i`, the colocal `soc^k I_i`, and then
    /// close under `τ` and `τ⁻` until nothing new appears or `cap` ids exist.
    /// Returns the number of registered classes.
    pub fn saturate(&self, cap: usize) -> Result<usize> {
        let n = self.alg.vertex_count();
        for v in 0..n {
            self.projective_id(v)?;
            self.injective_id(v)?;
            self.simple_id(v)?;
        }
        let op = self.alg.opposite();
        for v in 0..n {
            for t in truncations(&Rep::projective(&self.alg, v)?) {
                self.decompose(&t)?;
            }
            for t in truncations(&Rep::projective(&op, v)?) {
                self.decompose(&t.dual())?;
            }
        }
        let mut seen = 0;
        while seen < self.len() && self.len() < cap {
            for minus in [false, true] {
                self.translate(seen, minus)?;
            }
            seen += 1;
        }
        Ok(self.len())
    }

    /// All registered ids in order.
    pub fn ids(&self) -> Vec<IndecId> {
        (0..self.len()).collect()
    }
}

/// `M/rad^k M` for `k = 1, 2, …` until it equals `M`.
fn truncations(m: &Rep) -> Vec<Rep> {
    let mut out = Vec::new();
    let mut cur_incl = Morphism::identity(m);
    loop {
        let (r, incl) = radical(&cur_incl.source);
        let composite = cur_incl.after(&incl);
        if r.is_zero() {
            break;
        }
        let (q, _) = composite.cokernel();
        out.push(q);
        cur_incl = composite;
    }
    out
}

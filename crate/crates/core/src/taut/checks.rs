use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::poset::ExchangePoset;
use super::{is_tilting, pd_at_most_one, trace, Slot, StPair, TauTilting};
use crate::error::Result;
use crate::repcat::{ext1_dim, hom_dim, tau, IndecId, ModCat, Rep};

/// Outcome of one theorem check: how many instances were examined and
/// which failed.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), ..Default::default() }
    }

    pub fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(msg());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: pass ({} checked)", self.name, self.checked)
        } else {
            write!(f, "{}: FAIL ({} of {} violated)", self.name, self.violations.len(), self.checked)?;
            for v in self.violations.iter().take(5) {
                write!(f, "\n  {v}")?;
            }
            Ok(())
        }
    }
}

/// Every almost complete pair obtained by deleting one slot has exactly two
/// completions among the nodes.
pub fn check_two_complements(_tt: &TauTilting, poset: &ExchangePoset) -> Result<CheckReport> {
    poset.require_complete()?;
    let mut rep = CheckReport::new("two complements");
    let mut seen = BTreeSet::new();
    for p in &poset.nodes {
        for slot in p.slots() {
            let q = p.without(slot);
            if !seen.insert(q.clone()) {
                continue;
            }
            let count = poset.nodes.iter().filter(|r| r.contains(&q)).count();
            rep.expect(count == 2, || format!("{q} has {count} completions"));
        }
    }
    rep.notes.push(format!("{} almost complete pairs", seen.len()));
    Ok(rep)
}

/// The Hasse diagram of `leq` equals the set of mutation edges.
pub fn check_hasse_equals_exchange(tt: &TauTilting, poset: &ExchangePoset) -> Result<CheckReport> {
    let leq = poset.leq_matrix(tt)?;
    let mut rep = CheckReport::new("Hasse quiver = exchange quiver");
    let hasse = ExchangePoset::hasse_from_leq(&leq);
    let exch = poset.edge_set();
    for e in hasse.symmetric_difference(&exch) {
        rep.violations.push(format!("edge {e:?} in only one of Hasse/exchange"));
    }
    rep.checked = hasse.len().max(exch.len());
    // antisymmetry: distinct nodes are never mutually below each other
    for i in 0..leq.len() {
        for j in i + 1..leq.len() {
            rep.expect(!(leq[i][j] && leq[j][i]), || format!("nodes {i} and {j} have equal Fac"));
        }
    }
    let n = tt.n();
    for (i, d) in poset.degrees().into_iter().enumerate() {
        rep.expect(d == n, || format!("node {i} has {d} mutation edges"));
    }
    rep.notes.push(format!("{} edges", exch.len()));
    Ok(rep)
}

/// Each mutation edge joins comparable nodes, in the recorded direction.
pub fn check_edge_comparability(tt: &TauTilting, poset: &ExchangePoset) -> Result<CheckReport> {
    poset.require_complete()?;
    let mut rep = CheckReport::new("mutation edges are comparable");
    for e in &poset.edges {
        let (u, l) = (&poset.nodes[e.upper], &poset.nodes[e.lower]);
        let ok = tt.leq(l, u)? && !tt.leq(u, l)?;
        rep.expect(ok, || format!("edge {} -> {} not strictly decreasing", e.upper, e.lower));
    }
    Ok(rep)
}

/// `(−)†` maps the nodes bijectively onto the opposite poset, is an
/// involution, and reverses the order.
pub fn check_dagger(tt: &TauTilting, poset: &ExchangePoset, op_poset: &ExchangePoset) -> Result<CheckReport> {
    poset.require_complete()?;
    op_poset.require_complete()?;
    let op = tt.opposite();
    let mut rep = CheckReport::new("dagger is an order-reversing involution");
    rep.expect(poset.len() == op_poset.len(), || format!("{} nodes vs {} opposite", poset.len(), op_poset.len()));
    let op_index = op_poset.index_map();
    let mut images = Vec::new();
    for p in &poset.nodes {
        let q = tt.dagger(p)?;
        rep.expect(op_index.contains_key(&q), || format!("{p}† = {q} is not an opposite node"));
        let back = op.dagger(&q)?;
        rep.expect(&back == p, || format!("{p}†† = {back}"));
        images.push(q);
    }
    for (i, p) in poset.nodes.iter().enumerate() {
        for (j, q) in poset.nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            let fwd = tt.leq(p, q)?;
            let rev = op.leq(&images[j], &images[i])?;
            rep.expect(fwd == rev, || format!("order not reversed on ({i},{j})"));
        }
    }
    Ok(rep)
}

/// Maximal τ-rigid ⇔ τ-tilting, and `Fac T = ⊥(τT) ∩ P^⊥`, over the
/// registry of indecomposables.
pub fn check_three_conditions(tt: &TauTilting, poset: &ExchangePoset, registry_cap: usize) -> Result<CheckReport> {
    poset.require_complete()?;
    let mut rep = CheckReport::new("three conditions");
    let cat = tt.cat();
    cat.saturate(registry_cap)?;
    let all = cat.ids();
    let rigid: Vec<IndecId> = all.iter().copied().filter(|&m| tt.is_tau_rigid_ids(&[m]).unwrap_or(false)).collect();
    for p in &poset.nodes {
        let extendable = rigid
            .iter()
            .filter(|m| !p.module.contains(m))
            .map(|&m| {
                let mut ids = p.module.clone();
                ids.push(m);
                tt.is_tau_rigid_ids(&ids)
            })
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .any(|b| b);
        let maximal = !extendable;
        let tilting = p.support.is_empty();
        rep.expect(maximal == tilting, || format!("{p}: maximal τ-rigid = {maximal}, τ-tilting = {tilting}"));
        let taus: Vec<IndecId> =
            p.module.iter().map(|&x| cat.tau_id(x)).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
        for &m in &all {
            let in_fac = tt.in_fac_ids(m, &p.module)?;
            let dims = cat.dims(m);
            let mut perp = p.support.iter().all(|&v| dims[v] == 0);
            for &t in &taus {
                perp = perp && cat.hom_dim(m, t)? == 0;
            }
            rep.expect(in_fac == perp, || format!("{p}: M{m} in Fac T = {in_fac}, in ⊥(τT) = {perp}"));
        }
    }
    rep.notes.push(format!("{} registry indecomposables, {} τ-rigid", all.len(), rigid.len()));
    Ok(rep)
}

/// τ-tilting nodes are the sincere ones; tilting nodes are the faithful ones.
pub fn check_sincere_faithful(tt: &TauTilting, poset: &ExchangePoset) -> Result<CheckReport> {
    poset.require_complete()?;
    let mut rep = CheckReport::new("τ-tilting = sincere, tilting = faithful");
    for p in &poset.nodes {
        let m = tt.module(p);
        let sincere = !m.is_zero() && m.is_sincere();
        rep.expect(sincere == p.support.is_empty(), || format!("{p}: sincere = {sincere}"));
        let faithful = !m.is_zero() && m.is_faithful();
        let tilting = !m.is_zero() && is_tilting(tt.cat(), &m)?;
        rep.expect(faithful == tilting, || format!("{p}: faithful = {faithful}, tilting = {tilting}"));
    }
    Ok(rep)
}

/// Node indices whose module part is faithful (the tilting modules).
pub fn tilting_subset(tt: &TauTilting, poset: &ExchangePoset) -> Vec<usize> {
    (0..poset.len())
        .filter(|&i| {
            let m = tt.module(&poset.nodes[i]);
            !m.is_zero() && m.is_faithful()
        })
        .collect()
}

/// Node indices `(T, P)` with `T` partial tilting over `Λ` itself:
/// `pd T ≤ 1` and `Ext¹(T, T) = 0`. The count `|T| + |P| = n` holds on every node.
pub fn support_tilting_pairs(tt: &TauTilting, poset: &ExchangePoset) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, p) in poset.nodes.iter().enumerate() {
        let t = tt.module(p);
        if pd_at_most_one(&t) && ext1_dim(&t, &t)? == 0 {
            out.push(i);
        }
    }
    Ok(out)
}

/// Classical complements: removing a summand from a tilting module leaves
/// one or two completions, two exactly when the remainder is faithful.
pub fn check_tilting_complements(tt: &TauTilting, poset: &ExchangePoset) -> Result<CheckReport> {
    poset.require_complete()?;
    let mut rep = CheckReport::new("tilting complements");
    let tilting: Vec<&StPair> = tilting_subset(tt, poset).into_iter().map(|i| &poset.nodes[i]).collect();
    let mut seen = BTreeSet::new();
    for t in &tilting {
        for &x in &t.module {
            let u = t.without(Slot::Summand(x));
            if !seen.insert(u.clone()) {
                continue;
            }
            let count = tilting.iter().filter(|s| s.contains(&u)).count();
            let um = tt.module(&u);
            let faithful = !um.is_zero() && um.is_faithful();
            rep.expect((count == 1 || count == 2) && (count == 2) == faithful, || {
                format!("{u}: {count} complements, faithful = {faithful}")
            });
        }
    }
    rep.notes.push(format!("{} tilting modules", tilting.len()));
    Ok(rep)
}

fn tau_rigid_rep(m: &Rep) -> Result<bool> {
    Ok(hom_dim(m, &tau(m)?)? == 0)
}

/// `(T, Λe)` is a τ-rigid pair iff `T` is a τ-rigid `Λ/⟨e⟩`-module; node
/// module parts are τ-tilting over the quotient by their support.
pub fn check_idempotent_quotient(tt: &TauTilting, poset: &ExchangePoset, registry_cap: usize) -> Result<CheckReport> {
    poset.require_complete()?;
    let mut rep = CheckReport::new("idempotent quotient");
    let cat = tt.cat();
    cat.saturate(registry_cap)?;
    let alg = tt.algebra();
    for v in 0..tt.n() {
        let (b, kept) = alg.idempotent_quotient(&[v])?;
        for m in cat.ids() {
            let mr = cat.rep(m);
            if mr.dim(v) != 0 {
                continue;
            }
            let here = tt.is_tau_rigid_ids(&[m])?;
            let there = tau_rigid_rep(&mr.restrict_to(&b, &kept)?)?;
            rep.expect(here == there, || format!("M{m} at vertex {}: {here} vs {there}", v + 1));
        }
    }
    for p in &poset.nodes {
        if p.support.len() == tt.n() {
            continue;
        }
        let (b, kept) = alg.idempotent_quotient(&p.support)?;
        let qcat = ModCat::new(&b);
        let t = tt.module(p).restrict_to(&b, &kept)?;
        let d = qcat.decompose(&t)?;
        let mut ok = d.distinct() == b.vertex_count();
        for &x in &d.ids() {
            if let Some(tx) = qcat.tau_id(x)? {
                for &y in &d.ids() {
                    ok = ok && qcat.hom_dim(y, tx)? == 0;
                }
            }
        }
        rep.expect(ok, || format!("{p} is not τ-tilting over the quotient"));
    }
    Ok(rep)
}

/// Torsion pair `(Fac T, T^⊥)` on the registry: torsion parts lie in
/// `Fac T`, quotients by them are torsion-free, and `Hom(Fac T, T^⊥) = 0`.
pub fn check_torsion_pair(tt: &TauTilting, t: &StPair, registry_cap: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("torsion pair");
    let cat = tt.cat();
    cat.saturate(registry_cap)?;
    let tm = tt.module(t);
    let mut torsion = Vec::new();
    let mut free = Vec::new();
    for x in cat.ids() {
        let xr = cat.rep(x);
        let (tx, incl) = trace(&tm, &xr)?;
        rep.expect(super::in_fac(&tx, &tm)?, || format!("t(M{x}) not in Fac T"));
        let (q, _) = incl.cokernel();
        rep.expect(hom_dim(&tm, &q)? == 0, || format!("Hom(T, M{x}/t(M{x})) ≠ 0"));
        if tt.in_fac_ids(x, &t.module)? {
            torsion.push(x);
        }
        let tfree = t.module.iter().map(|&u| cat.hom_dim(u, x)).collect::<Result<Vec<_>>>()?.iter().all(|&d| d == 0);
        if tfree {
            free.push(x);
        }
    }
    for &y in &torsion {
        for &z in &free {
            rep.expect(cat.hom_dim(y, z)? == 0, || format!("Hom(M{y}, M{z}) ≠ 0"));
        }
    }
    rep.notes.push(format!("torsion {torsion:?}, torsion-free {free:?}"));
    Ok(rep)
}

/// The largest node whose module part contains the summands `u`, if the
/// nodes containing `u` have a maximum.
pub fn bongartz_completion(tt: &TauTilting, poset: &ExchangePoset, u: &[IndecId]) -> Result<Option<StPair>> {
    poset.require_complete()?;
    let want = StPair::new(u.to_vec(), vec![]);
    let cands: Vec<&StPair> = poset.nodes.iter().filter(|p| p.contains(&want)).collect();
    for &c in &cands {
        let mut top = true;
        for &d in &cands {
            if !tt.leq(d, c)? {
                top = false;
                break;
            }
        }
        if top {
            return Ok(Some(c.clone()));
        }
    }
    Ok(None)
}

/// g-vectors: unimodular matrices, distinct column sets, and disjoint
/// presentation terms for τ-rigid pairs.
pub fn check_g_vectors(tt: &TauTilting, poset: &ExchangePoset, registry_cap: usize) -> Result<CheckReport> {
    poset.require_complete()?;
    let mut rep = CheckReport::new("g-vectors");
    let mut sets: BTreeMap<BTreeSet<Vec<i64>>, usize> = BTreeMap::new();
    for (i, p) in poset.nodes.iter().enumerate() {
        let det = tt.g_matrix(p).int_det_abs()?;
        rep.expect(det == 1u32.into(), || format!("{p}: |det g| = {det}"));
        let cols: BTreeSet<Vec<i64>> = tt.g_vectors(p).into_iter().collect();
        if let Some(j) = sets.insert(cols, i) {
            rep.violations.push(format!("nodes {j} and {i} share g-vectors"));
        }
        rep.expect(disjoint_terms(tt, &p.module, &p.support), || format!("{p}: P0 and P1+P share a summand"));
    }
    let cat = tt.cat();
    cat.saturate(registry_cap)?;
    for m in cat.ids() {
        if tt.is_tau_rigid_ids(&[m])? {
            rep.expect(disjoint_terms(tt, &[m], &[]), || format!("M{m}: P0 and P1 share a summand"));
        }
    }
    Ok(rep)
}

fn disjoint_terms(tt: &TauTilting, module: &[IndecId], support: &[usize]) -> bool {
    let n = tt.n();
    let (mut p0, mut p1) = (vec![0; n], vec![0; n]);
    for &x in module {
        let pres = tt.cat().presentation(x);
        for (v, k) in pres.p0.multiplicities().into_iter().enumerate() {
            p0[v] += k;
        }
        for (v, k) in pres.p1.multiplicities().into_iter().enumerate() {
            p1[v] += k;
        }
    }
    for &v in support {
        p1[v] += 1;
    }
    (0..n).all(|v| p0[v] == 0 || p1[v] == 0)
}

/// Every case-(A) mutation has a verified exact exchange sequence with a
/// minimal left approximation. Returns the observed `r` values of the
/// non-surjective sequences alongside.
pub fn check_exchange_sequences(tt: &TauTilting, poset: &ExchangePoset) -> Result<(CheckReport, Vec<usize>)> {
    poset.require_complete()?;
    let mut rep = CheckReport::new("exchange sequences");
    let mut rs = Vec::new();
    for p in &poset.nodes {
        for slot in p.slots() {
            if !tt.is_case_a(p, slot)? {
                continue;
            }
            let r = tt.exchange_sequence(p, slot)?;
            rep.expect(r.verified(), || format!("{p} at {slot:?}: {r:?}"));
            if !r.surjective {
                rs.push(r.r);
            }
        }
    }
    let all_one = rs.iter().all(|&r| r == 1);
    rep.notes.push(format!("{} non-surjective sequences, r = 1 throughout: {all_one}", rs.len()));
    Ok((rep, rs))
}

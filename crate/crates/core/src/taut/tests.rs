use super::*;
use crate::models::{cyclic_nakayama, kq_mod_ba, linear_an, preprojective, DynkinType};
use crate::repcat::{apr_tilt, radical};

struct Ids {
    p: Vec<IndecId>,
    s: Vec<IndecId>,
}

fn ids(tt: &TauTilting) -> Ids {
    let n = tt.n();
    Ids {
        p: (0..n).map(|v| tt.cat().projective_id(v).unwrap()).collect(),
        s: (0..n).map(|v| tt.cat().simple_id(v).unwrap()).collect(),
    }
}

fn pair(module: &[IndecId], support: &[usize]) -> StPair {
    StPair::new(module.to_vec(), support.to_vec())
}

#[test]
fn classification_examples() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let i = ids(&tt);
    assert_eq!(tt.classify(&tt.top_pair().unwrap()).unwrap(), Classification::SupportTauTilting);
    let t = pair(&[i.p[0], i.s[0], i.p[2]], &[]);
    assert_eq!(tt.classify(&t).unwrap(), Classification::SupportTauTilting);
    assert!(tt.module(&t).is_sincere());
    assert_eq!(tt.classify(&tt.bottom_pair()).unwrap(), Classification::SupportTauTilting);
    assert_eq!(tt.classify(&pair(&[i.s[0]], &[])).unwrap(), Classification::TauRigid);
    assert_eq!(tt.classify(&pair(&[i.s[0]], &[2])).unwrap(), Classification::AlmostComplete);
    // S1 is not allowed beside support vertex 1
    assert_eq!(tt.classify(&pair(&[i.s[0]], &[0])).unwrap(), Classification::NotTauRigid);
    // over A3, S2 ⊕ S1 is not τ-rigid since τS1 = S2
    let a3 = TauTilting::new(&linear_an(3).unwrap());
    let j = ids(&a3);
    assert!(!a3.is_tau_rigid_ids(&[j.s[0], j.s[1]]).unwrap());
}

#[test]
fn fac_membership() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let i = ids(&tt);
    assert!(tt.in_fac_ids(i.s[0], &[i.p[0]]).unwrap());
    assert!(tt.in_fac_ids(i.p[1], &[i.p[1]]).unwrap());
    assert!(!tt.in_fac_ids(i.p[1], &[i.p[0], i.p[2]]).unwrap());
    let p1 = tt.cat().rep(i.p[0]);
    assert!(in_fac(&tt.cat().rep(i.s[0]), &p1).unwrap());
    assert_eq!(trace(&tt.cat().rep(i.p[1]), &p1).unwrap().0.dims(), &[0, 1, 0]);
}

#[test]
fn left_approximations() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let i = ids(&tt);
    let a = tt.minimal_left_approximation(i.p[1], &[i.p[0], i.p[2]]).unwrap();
    assert_eq!(a.targets, vec![i.p[0]]);
    let (c, _) = a.map.cokernel();
    assert!(tt.cat().is_isomorphic(&c, &tt.cat().rep(i.s[0])).unwrap());
    let a = tt.minimal_left_approximation(i.p[0], &[i.p[1], i.p[2]]).unwrap();
    assert!(a.targets.is_empty());
    assert!(a.map.is_surjective());
    // X ∈ add U: a split inclusion
    let a = tt.minimal_left_approximation(i.p[0], &[i.p[0], i.p[1]]).unwrap();
    assert_eq!(a.targets, vec![i.p[0]]);
    assert!(a.map.cokernel().0.is_zero());
}

#[test]
fn worked_mutations() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let i = ids(&tt);
    let top = tt.top_pair().unwrap();

    let m = tt.mutate(&top, Slot::Summand(i.p[0])).unwrap();
    assert_eq!(m.result, pair(&[i.p[1], i.p[2]], &[0]));
    assert_eq!(m.case, MutationCase::A);
    assert!(m.report.surjective);

    let m = tt.mutate(&top, Slot::Summand(i.p[1])).unwrap();
    assert_eq!(m.result, pair(&[i.p[0], i.s[0], i.p[2]], &[]));
    assert_eq!((m.report.y, m.report.r), (Some(i.s[0]), 1));

    let m = tt.mutate(&top, Slot::Summand(i.p[2])).unwrap();
    assert_eq!(m.result, pair(&[i.p[0], i.p[1], i.s[1]], &[]));

    let start = pair(&[i.p[0], i.s[0]], &[2]);
    let op = tt.opposite();
    let dag = tt.dagger(&start).unwrap();
    let s2_op = op.cat().simple_id(1).unwrap();
    let p3_op = op.cat().projective_id(2).unwrap();
    assert_eq!(dag, pair(&[s2_op, p3_op], &[0]));
    let m = tt.mutate(&start, Slot::Vertex(2)).unwrap();
    assert_eq!(m.case, MutationCase::B);
    assert_eq!(m.result, pair(&[i.p[0], i.s[0], i.p[2]], &[]));
    assert_eq!(m.via_dagger.as_ref().unwrap().0, dag);
    assert_eq!(m.new_slot, Slot::Summand(i.p[2]));
}

#[test]
fn mutation_errors() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let i = ids(&tt);
    let top = tt.top_pair().unwrap();
    assert!(matches!(tt.mutate(&top, Slot::Vertex(0)), Err(Error::SlotNotPresent(_))));
    assert!(matches!(tt.mutate(&pair(&[i.s[0]], &[]), Slot::Summand(i.s[0])), Err(Error::NotSupportTauTilting)));
    let start = pair(&[i.p[0], i.s[0]], &[2]);
    assert!(matches!(tt.exchange_sequence(&start, Slot::Vertex(2)), Err(Error::NotCaseA)));
}

#[test]
fn exchange_sequence_a3() {
    let tt = TauTilting::new(&linear_an(3).unwrap());
    let i = ids(&tt);
    let r = tt.exchange_sequence(&tt.top_pair().unwrap(), Slot::Summand(i.p[2])).unwrap();
    assert_eq!(r.u_prime, vec![i.p[1]]);
    assert_eq!((r.y, r.r), (Some(i.s[1]), 1));
    assert!(r.verified());
}

#[test]
fn dagger_basics() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let op = tt.opposite();
    assert_eq!(tt.dagger(&tt.top_pair().unwrap()).unwrap(), op.bottom_pair());
    assert_eq!(tt.dagger(&tt.bottom_pair()).unwrap(), op.top_pair().unwrap());
}

#[test]
fn g_vectors() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let i = ids(&tt);
    for v in 0..3 {
        let mut e = vec![0; 3];
        e[v] = 1;
        assert_eq!(tt.g_vector_id(i.p[v]), e);
    }
    assert_eq!(tt.g_vector_id(i.s[0]), vec![1, -1, 0]);
    assert_eq!(tt.g_matrix(&tt.bottom_pair()).int_det_abs().unwrap(), 1u32.into());
}

fn count(tt: &TauTilting) -> ExchangePoset {
    let p = enumerate(tt, 1000).unwrap();
    assert!(p.complete);
    p
}

#[test]
fn poset_sizes() {
    let k = crate::bqa::Algebra::build(crate::bqa::Quiver::new(1, vec![]).unwrap(), vec![]).unwrap();
    let one = count(&TauTilting::new(&k));
    assert_eq!((one.len(), one.edges.len()), (2, 1));
    let p = count(&TauTilting::new(&kq_mod_ba().unwrap()));
    assert_eq!((p.len(), p.edges.len()), (12, 18));
    assert_eq!(count(&TauTilting::new(&linear_an(3).unwrap())).len(), 14);
    assert_eq!(count(&TauTilting::new(&cyclic_nakayama(3, 2).unwrap())).len(), 14);
    assert_eq!(count(&TauTilting::new(&preprojective(DynkinType::A(2)).unwrap())).len(), 6);
}

#[test]
fn truncation_refuses_order_queries() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let p = enumerate(&tt, 5).unwrap();
    assert!(!p.complete);
    assert_eq!(p.len(), 5);
    assert!(matches!(p.leq_matrix(&tt), Err(Error::Truncated(5))));
    assert!(check_two_complements(&tt, &p).is_err());
}

#[test]
fn order_examples() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let i = ids(&tt);
    let p = count(&tt);
    let top = tt.top_pair().unwrap();
    let bottom = tt.bottom_pair();
    for q in &p.nodes {
        assert!(tt.leq(&bottom, q).unwrap() && tt.leq(q, &top).unwrap());
    }
    let t = pair(&[i.p[0], i.s[0], i.p[2]], &[]);
    assert!(tt.leq(&t, &top).unwrap() && !tt.leq(&top, &t).unwrap());
    let x = pair(&[i.p[1], i.s[1]], &[0]);
    let y = pair(&[i.p[0], i.s[0]], &[2]);
    assert!(!tt.leq(&x, &y).unwrap() && !tt.leq(&y, &x).unwrap());
}

fn run_suite(tt: &TauTilting) {
    let p = count(tt);
    let op = count(&tt.opposite());
    let reports = vec![
        check_two_complements(tt, &p).unwrap(),
        check_hasse_equals_exchange(tt, &p).unwrap(),
        check_edge_comparability(tt, &p).unwrap(),
        check_dagger(tt, &p, &op).unwrap(),
        check_three_conditions(tt, &p, 500).unwrap(),
        check_sincere_faithful(tt, &p).unwrap(),
        check_idempotent_quotient(tt, &p, 500).unwrap(),
        check_g_vectors(tt, &p, 500).unwrap(),
        check_exchange_sequences(tt, &p).unwrap().0,
    ];
    for r in reports {
        assert!(r.passed(), "{r}");
        assert!(r.checked > 0, "{} checked nothing", r.name);
    }
}

#[test]
fn suites_kq_mod_ba() {
    run_suite(&TauTilting::new(&kq_mod_ba().unwrap()));
}

#[test]
fn suites_a3() {
    run_suite(&TauTilting::new(&linear_an(3).unwrap()));
}

#[test]
fn suites_cyclic() {
    run_suite(&TauTilting::new(&cyclic_nakayama(3, 2).unwrap()));
}

#[test]
fn suites_preprojective_a2() {
    run_suite(&TauTilting::new(&preprojective(DynkinType::A(2)).unwrap()));
}

#[test]
fn tilting_counts() {
    let tt = TauTilting::new(&linear_an(3).unwrap());
    let p = count(&tt);
    assert_eq!(tilting_subset(&tt, &p).len(), 5);
    let r = check_tilting_complements(&tt, &p).unwrap();
    assert!(r.passed(), "{r}");
    let i = ids(&tt);
    let tilting: Vec<StPair> = tilting_subset(&tt, &p).into_iter().map(|k| p.nodes[k].clone()).collect();
    let completions = |u: StPair| tilting.iter().filter(|t| t.contains(&u)).count();
    assert_eq!(completions(pair(&[i.p[1], i.p[2]], &[])), 1);
    assert_eq!(completions(pair(&[i.p[0], i.p[1]], &[])), 2);
    let st = support_tilting_pairs(&tt, &p).unwrap();
    assert_eq!(st.len(), 14);

    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let p = count(&tt);
    let st = support_tilting_pairs(&tt, &p).unwrap();
    assert_eq!(st.len(), 8);
    // (P1 ⊕ P3, ∅) has a single completion among support tilting pairs
    let i = ids(&tt);
    let u = pair(&[i.p[0], i.p[2]], &[]);
    assert_eq!(st.iter().filter(|&&k| p.nodes[k].contains(&u)).count(), 1);
}

#[test]
fn torsion_pairs() {
    let a = linear_an(3).unwrap();
    let tt = TauTilting::new(&a);
    let t = tt.summands(&apr_tilt(&a, 2).unwrap()).unwrap();
    let r = check_torsion_pair(&tt, &pair(&t, &[]), 100).unwrap();
    assert!(r.passed(), "{r}");
    let s3 = tt.cat().simple_id(2).unwrap();
    assert!(r.notes[0].ends_with(&format!("torsion-free [{s3}]")), "{}", r.notes[0]);
    assert!(check_torsion_pair(&tt, &tt.top_pair().unwrap(), 100).unwrap().passed());
    assert!(check_torsion_pair(&tt, &tt.bottom_pair(), 100).unwrap().passed());
}

#[test]
fn bongartz() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let p = count(&tt);
    let i = ids(&tt);
    let c = bongartz_completion(&tt, &p, &[i.s[0]]).unwrap().unwrap();
    assert_eq!(c, pair(&[i.p[0], i.s[0], i.p[2]], &[]));
    assert_eq!(bongartz_completion(&tt, &p, &i.p).unwrap().unwrap(), tt.top_pair().unwrap());
    assert_eq!(bongartz_completion(&tt, &p, &[]).unwrap().unwrap(), tt.top_pair().unwrap());
}

#[test]
fn mutation_is_an_involution() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let p = count(&tt);
    for q in &p.nodes {
        for slot in q.slots() {
            let m = tt.mutate(q, slot).unwrap();
            let back = tt.mutate(&m.result, m.new_slot).unwrap();
            assert_eq!(&back.result, q);
        }
    }
}

#[test]
fn poset_json_round_trip() {
    let tt = TauTilting::new(&kq_mod_ba().unwrap());
    let p = count(&tt);
    assert_eq!(ExchangePoset::from_json(&p.to_json()).unwrap(), p);
}

#[test]
fn registry_radical_helpers() {
    let tt = TauTilting::new(&linear_an(3).unwrap());
    let i = ids(&tt);
    let rad_p1 = radical(&tt.cat().rep(i.p[0])).0;
    assert_eq!(tt.summands(&rad_p1).unwrap(), vec![i.p[1]]);
}
